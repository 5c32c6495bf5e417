#include "lagc/signature.hpp"

#include "lagc/error.hpp"

namespace lagc {

Signature::Signature(int n_, int m_, int r_, int s_) : n(n_), m(m_), r(r_), s(s_) {
  if (n < 0 || m < 0 || r < 0 || s < 0) {
    throw SignatureError("signature counts must be non-negative");
  }
  // indices are stored in a byte
  if (n + m > 255 || r + s > 255) {
    throw SignatureError("signature too large");
  }
}

std::string to_string(const Signature& sig) {
  return std::to_string(sig.n) + "|" + std::to_string(sig.m) + " " + std::to_string(sig.r) + "|" +
         std::to_string(sig.s);
}

std::string coordinate_name(const Signature& sig, int a) {
  if (!sig.valid_coordinate(a)) {
    throw SignatureError("coordinate index " + std::to_string(a) + " outside signature " +
                         to_string(sig));
  }
  return a <= sig.n ? "x" + std::to_string(a) : "th" + std::to_string(a - sig.n);
}

std::string time_name(const Signature& sig, int f) {
  if (!sig.valid_time(f)) {
    throw SignatureError("time index " + std::to_string(f) + " outside signature " +
                         to_string(sig));
  }
  return f <= sig.r ? "t" + std::to_string(f) : "tau" + std::to_string(f - sig.r);
}

}  // namespace lagc
