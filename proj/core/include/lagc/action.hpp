#pragma once

#include <map>
#include <span>
#include <vector>

#include "lagc/expression.hpp"
#include "lagc/lagrangian.hpp"

namespace lagc {

/// A polynomial r|s-path: one time polynomial per coordinate, with the
/// parity of that coordinate.
class Path {
 public:
  Path(const Signature& sig, std::vector<Expression> components);

  const Signature& signature() const { return sig_; }
  const std::vector<Expression>& components() const { return components_; }
  const Expression& component(int a) const { return components_.at(static_cast<std::size_t>(a - 1)); }

 private:
  Signature sig_;
  std::vector<Expression> components_;
};

/// A family of r|s-paths parametrized by the extra even time t^{r+1}; stored as
/// an (r+1)|s-path.
class Homotopy {
 public:
  /// `base` is the r|s signature of the family members; the components live
  /// in base.lifted().
  Homotopy(const Signature& base, std::vector<Expression> components);

  const Signature& base_signature() const { return base_; }
  /// The whole family viewed as one path of dimension r+1|s.
  const Path& total_path() const { return total_; }
  /// Member at t^{r+1} = value.
  Path at(const Rational& value) const;

  /// Largest K <= cap such that, for every even base time F, the
  /// parameter-dependent part vanishes to order K at t^F = 0 and t^F = 1.
  int boundary_flatness(int cap) const;

 private:
  Signature base_;
  Path total_;
};

/// Berezin integral over the listed odd time indices (ascending): the
/// coefficient of their ascending product, with the listed factors moved to
/// the right end. Terms missing any listed variable integrate to zero.
Expression berezin_integrate(const Expression& e, std::span<const int> odd_times);

/// Berezin integral over all odd times of the signature.
Expression berezin_integrate(const Expression& e);

/// Exact integral of a polynomial in the even times over the unit cube.
/// Throws DomainError if jets or odd times remain.
Rational integrate_unit_cube(const Expression& e);

/// S[path] = integral over the r|s cube of L evaluated on the jet prolongation
/// of the path.
Rational action_eval(const Lagrangian& lagrangian, const Path& path);

struct DivergenceCertificate {
  /// dL - D_{r+1} L, in the lifted signature.
  Expression defect;
  /// Flux components h^F, F != r+1, keyed by time index of the lifted
  /// signature. Not unique.
  std::map<int, Expression> flux;
  /// defect - sum_F D_F h^F; zero when the certificate is valid.
  Expression residual;
};

/// Writes dL - D_{r+1}L as a total divergence sum_F D_F h^F by integrating
/// each term x_{,mu+(r+1)} dL/dx_{,mu} of D_{r+1}L by parts.
DivergenceCertificate divergence_decompose(const Lagrangian& lagrangian);

struct StokesResult {
  Rational lhs;  // S[end] - S[start]
  Rational rhs;  // integral of dL over the family
};

/// Checks S[G1] - S[G0] = integral of dL over the homotopy. Throws DomainError
/// when the homotopy is not boundary-flat to order 2 * order(L).
StokesResult stokes_check(const Lagrangian& lagrangian, const Homotopy& homotopy);

}  // namespace lagc
