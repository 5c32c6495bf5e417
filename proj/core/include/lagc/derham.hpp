#pragma once

#include <map>
#include <vector>

#include "lagc/expression.hpp"
#include "lagc/lagrangian.hpp"
#include "lagc/parse.hpp"

namespace lagc {

/// Differential form with polynomial coefficients on an even n-dimensional
/// space. Keys are strictly increasing coordinate tuples; coefficients are
/// polynomials in x1..xn (signature n|0 0|0).
class PolyForm {
 public:
  /// Zero form. Degree n+1 is allowed (it is always zero).
  PolyForm(int dimension, int degree);

  int dimension() const { return sig_.n; }
  int degree() const { return degree_; }
  const Signature& coefficient_signature() const { return sig_; }
  const std::map<std::vector<int>, Expression>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds coeff * dx^{i1} ^ ... ^ dx^{ik}; indices in any order (the sort sign
  /// is applied, repeated indices contribute nothing).
  void add(std::vector<int> indices, const Expression& coeff);

  bool operator==(const PolyForm& other) const = default;

 private:
  Signature sig_;
  int degree_;
  std::map<std::vector<int>, Expression> coeffs_;
};

/// Sign constant of the form dictionary in degree r: (-1)^{r(r-1)/2}.
int form_sign(int degree);

/// L = form_sign(r) * sum_I w_I(x) det[x^{I_i}_{,j}], a first-order Lagrangian
/// of r|0-paths.
Lagrangian form_to_lagrangian(const PolyForm& form);

/// Inverse of form_to_lagrangian. Throws DomainError naming the offending
/// monomial when L is not multilinear and alternating in the velocities.
PolyForm lagrangian_to_form(const Lagrangian& lagrangian);

/// Classical exterior derivative.
PolyForm exterior_deriv(const PolyForm& form);

/// d(L_w) - L_{dw}; zero. For a top-degree form dw is the zero (n+1)-form and
/// the check reduces to d(L_w) = 0.
Expression bridge_check(const PolyForm& form);

/// Reads the body of a `form` document: lines "A1 A2 ... : coeff" (": coeff"
/// for a 0-form), all of the same degree, on the n of the document signature.
PolyForm read_form(const Document& doc);

/// Dimensions of H^0..H^n of the polynomial de Rham complex truncated so
/// that k-forms have coefficient degree <= degree_bound - k (a subcomplex).
/// Desk scale only: n <= 4, degree_bound <= 4.
std::vector<int> cohomology_dims(int n, int degree_bound);

}  // namespace lagc
