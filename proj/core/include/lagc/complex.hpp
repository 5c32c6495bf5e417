#pragma once

#include <vector>

#include "lagc/calculus.hpp"
#include "lagc/lagrangian.hpp"

namespace lagc {

/// A polynomial change of coordinates x^A = maps[A-1](y), parity preserving.
/// The maps are written in the coordinate names of the target (y) space and
/// contain order-0 jets only, so the change applies to any time cube.
class CoordinateChange {
 public:
  /// Throws ParityError / DomainError when a map has the wrong parity or
  /// involves derivatives or explicit times.
  CoordinateChange(const Signature& sig, std::vector<Expression> maps);

  static CoordinateChange identity(const Signature& sig);

  const Signature& signature() const { return sig_; }
  const Expression& map(int a) const { return maps_.at(static_cast<std::size_t>(a - 1)); }

  /// The maps rebound to another time cube with the same n|m.
  std::vector<Expression> maps_for(const Signature& sig) const;

  /// Left derivative dx^A / dy^B, in signature `sig`.
  Expression jacobian(int a, int b, const Signature& sig) const;

 private:
  Signature sig_;
  std::vector<Expression> maps_;
};

/// dL = x^A_{,r+1} * dL/dx^A, a Lagrangian of (r+1)|s-paths. Requires L
/// time-independent.
Lagrangian apply_d(const Lagrangian& lagrangian);

/// canonical d(d(L)); zero for every Lagrangian.
Expression d_squared_check(const Lagrangian& lagrangian);

/// Expression-level pullback along x = x(y), prolonged to all jets.
Expression pullback_expr(const Expression& e, const CoordinateChange& change);

Lagrangian pullback(const Lagrangian& lagrangian, const CoordinateChange& change);

/// Per target coordinate B:
///   dL'/dy^B - sum_A (dx^A/dy^B) * pullback(dL/dx^A)
/// with L' the pulled-back Lagrangian. All entries vanish.
std::vector<Expression> covector_check(const Lagrangian& lagrangian,
                                       const CoordinateChange& change);

/// d(pullback(L)) - pullback(d L); zero.
Expression naturality_check(const Lagrangian& lagrangian, const CoordinateChange& change);

/// d of M = x^A_{,r+1} f_A taken in the lifted signature. Zero is necessary for
/// f to be the variational derivative of some Lagrangian; otherwise the
/// result is the obstruction. Throws ParityError when the f_A do not share a
/// parity offset from their coordinates.
Expression helmholtz_check(const Covector& f);

struct FiltrationReport {
  int order = 0;
  int order_of_differential = 0;
  bool preserved = false;
};

/// (order L, order dL, order dL <= order L).
FiltrationReport filtration_check(const Lagrangian& lagrangian);

}  // namespace lagc
