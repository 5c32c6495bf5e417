#include "lagc/symbol.hpp"

#include <algorithm>

#include "lagc/error.hpp"

namespace lagc {

std::optional<std::pair<int, MultiIndex>> MultiIndex::from_sequence(const Signature& sig,
                                                                    std::span<const int> indices) {
  // x_{,F1..Fk} = D_{F1}(D_{F2}(...D_{Fk} x)): apply the innermost first.
  MultiIndex mu;
  int sign = 1;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    auto next = mu.with_derivative(sig, *it);
    if (!next) return std::nullopt;
    sign *= next->first;
    mu = std::move(next->second);
  }
  return std::make_pair(sign, std::move(mu));
}

std::optional<std::pair<int, MultiIndex>> MultiIndex::with_derivative(const Signature& sig,
                                                                      int f) const {
  if (!sig.valid_time(f)) {
    throw SignatureError("time index " + std::to_string(f) + " outside signature " +
                         to_string(sig));
  }
  MultiIndex out = *this;
  const auto idx = static_cast<std::uint8_t>(f);
  if (sig.time_parity(f).is_even()) {
    out.even_.insert(std::upper_bound(out.even_.begin(), out.even_.end(), idx), idx);
    return std::make_pair(1, std::move(out));
  }
  auto pos = std::lower_bound(out.odd_.begin(), out.odd_.end(), idx);
  if (pos != out.odd_.end() && *pos == idx) return std::nullopt;
  // D_f has to move past every odd D_G with G < f.
  const auto passed = pos - out.odd_.begin();
  out.odd_.insert(pos, idx);
  return std::make_pair(passed % 2 == 0 ? 1 : -1, std::move(out));
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out(even_.begin(), even_.end());
  out.insert(out.end(), odd_.begin(), odd_.end());
  return out;
}

MultiIndex MultiIndex::shifted(int first, int delta) const {
  MultiIndex out = *this;
  auto shift = [&](std::vector<std::uint8_t>& v) {
    for (auto& i : v) {
      if (i >= first) i = static_cast<std::uint8_t>(i + delta);
    }
  };
  shift(out.even_);
  shift(out.odd_);
  return out;
}

bool MultiIndex::contains(int f) const {
  return std::find(even_.begin(), even_.end(), f) != even_.end() ||
         std::find(odd_.begin(), odd_.end(), f) != odd_.end();
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = order() <=> other.order(); c != 0) return c;
  if (auto c = even_ <=> other.even_; c != 0) return c;
  return odd_ <=> other.odd_;
}

Symbol Symbol::time(const Signature& sig, int f) {
  if (!sig.valid_time(f)) {
    throw SignatureError("time index " + std::to_string(f) + " outside signature " +
                         to_string(sig));
  }
  return Symbol(Kind::time, f, MultiIndex{}, sig.time_parity(f).is_odd());
}

Symbol Symbol::jet(const Signature& sig, int coord, MultiIndex mindex) {
  if (!sig.valid_coordinate(coord)) {
    throw SignatureError("coordinate index " + std::to_string(coord) + " outside signature " +
                         to_string(sig));
  }
  for (int f : mindex.indices()) {
    if (!sig.valid_time(f)) {
      throw SignatureError("time index " + std::to_string(f) + " outside signature " +
                           to_string(sig));
    }
  }
  const Parity p = sig.coordinate_parity(coord) + mindex.parity();
  return Symbol(Kind::jet, coord, std::move(mindex), p.is_odd());
}

std::strong_ordering Symbol::operator<=>(const Symbol& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  if (auto c = index_ <=> other.index_; c != 0) return c;
  return mindex_ <=> other.mindex_;
}

bool Symbol::operator==(const Symbol& other) const {
  return kind_ == other.kind_ && index_ == other.index_ && mindex_ == other.mindex_;
}

std::string to_string(const Signature& sig, const Symbol& symbol) {
  if (symbol.is_time()) return time_name(sig, symbol.index());
  std::string out = coordinate_name(sig, symbol.coord());
  if (!symbol.mindex().empty()) {
    out += '[';
    bool first = true;
    for (int f : symbol.mindex().indices()) {
      if (!first) out += ' ';
      out += std::to_string(f);
      first = false;
    }
    out += ']';
  }
  return out;
}

}  // namespace lagc
