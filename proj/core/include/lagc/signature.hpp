#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lagc {

/// Z/2 grading. Addition is mod 2.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(bool odd) : odd_(odd) {}

  static constexpr Parity even() { return Parity(false); }
  static constexpr Parity odd() { return Parity(true); }

  constexpr bool is_odd() const { return odd_; }
  constexpr bool is_even() const { return !odd_; }

  constexpr Parity operator+(Parity other) const { return Parity(odd_ != other.odd_); }
  constexpr Parity& operator+=(Parity other) {
    odd_ = odd_ != other.odd_;
    return *this;
  }
  /// Product of parities, i.e. the exponent of the Koszul sign (-1)^{ab}.
  constexpr Parity operator*(Parity other) const { return Parity(odd_ && other.odd_); }

  constexpr bool operator==(const Parity&) const = default;

 private:
  bool odd_ = false;
};

inline std::string to_string(Parity p) { return p.is_odd() ? "odd" : "even"; }

/// Dimensions n|m of the target (super)space and r|s of the time cube.
///
/// Coordinates are indexed 1..n+m, the first n even. Time variables are
/// indexed 1..r+s, the first r even.
struct Signature {
  int n = 0;
  int m = 0;
  int r = 0;
  int s = 0;

  Signature() = default;
  Signature(int n_, int m_, int r_, int s_);

  int coordinates() const { return n + m; }
  int times() const { return r + s; }

  bool valid_coordinate(int a) const { return a >= 1 && a <= n + m; }
  bool valid_time(int f) const { return f >= 1 && f <= r + s; }

  Parity coordinate_parity(int a) const { return Parity(a > n); }
  Parity time_parity(int f) const { return Parity(f > r); }

  /// Signature of paths of one more even dimension (r -> r + 1).
  Signature lifted() const { return Signature(n, m, r + 1, s); }

  /// Same target, different time cube.
  Signature with_times(int r_, int s_) const { return Signature(n, m, r_, s_); }

  auto operator<=>(const Signature&) const = default;
};

/// Renders as "n|m r|s", the same text the signature header uses.
std::string to_string(const Signature& sig);

/// Coordinate name as it appears in expression text: x1..xn, th1..thm.
std::string coordinate_name(const Signature& sig, int a);

/// Time variable name: t1..tr, tau1..taus.
std::string time_name(const Signature& sig, int f);

}  // namespace lagc
