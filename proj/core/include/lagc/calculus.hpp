#pragma once

#include <climits>
#include <span>
#include <vector>

#include "lagc/expression.hpp"
#include "lagc/lagrangian.hpp"

namespace lagc {

/// Tuple of variational derivatives, one component per coordinate.
struct Covector {
  Signature sig;
  std::vector<Expression> components;  // index A - 1

  const Expression& operator[](int a) const { return components.at(static_cast<std::size_t>(a - 1)); }
  bool operator==(const Covector&) const = default;
};

/// Order reported for the zero expression (stands for minus infinity).
inline constexpr int kOrderOfZero = INT_MIN;

/// Left derivative with respect to a generator (jet or time variable).
Expression partial_deriv(const Expression& e, const Symbol& v);

/// Total derivative D_f, a derivation of parity f~ acting on explicit time
/// variables and on jets (x_{,mu} -> x_{,mu+f}).
Expression total_deriv(const Expression& e, int f);

/// D_{F1} D_{F2} ... D_{Fk} e for mu = {F1 <= ... <= Fk}; D_{Fk} acts first.
Expression total_deriv(const Expression& e, const MultiIndex& mu);

/// Higher-order super Euler-Lagrange expression
///   sum_mu (-1)^{|mu|} (-1)^{A~ p(mu)} D_mu (dL / dx^A_{,mu}).
/// Throws DomainError on time-dependent L.
Expression var_deriv(const Lagrangian& lagrangian, int coord);

Covector var_deriv_all(const Lagrangian& lagrangian);

/// Maximal derivative order of a jet variable in e; 0 if jet-free and nonzero,
/// kOrderOfZero for zero.
int order_of(const Expression& e);

/// Views e in the signature with one more even time: the new even index is
/// r+1 and odd indices shift up by one.
Expression lift_times(const Expression& e);

/// Inverse of lift_times: removes the last even time index (which must not
/// occur) and shifts the odd indices down.
Expression drop_last_even_time(const Expression& e);

/// Replaces every jet x^A_{,mu} with D_mu(binding[A - 1]) computed in the
/// target signature (jet prolongation). Explicit time variables of e map to
/// the same-index variable of the target. Bindings must match coordinate
/// parities.
Expression substitute(const Expression& e, std::span<const Expression> binding,
                      const Signature& target);

/// Evaluates the even time variable t^f at a rational value.
Expression set_time(const Expression& e, int f, const Rational& value);

}  // namespace lagc
