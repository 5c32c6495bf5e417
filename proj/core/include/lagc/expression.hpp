#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lagc/signature.hpp"
#include "lagc/symbol.hpp"

namespace lagc {

using Rational = mpq_class;

/// One power of a generator inside a monomial. Odd generators only ever
/// appear with power 1.
struct Factor {
  Symbol symbol;
  std::uint32_t power = 1;

  std::strong_ordering operator<=>(const Factor& other) const;
  bool operator==(const Factor& other) const = default;
};

/// Variable content of a monomial: factors strictly increasing by symbol.
/// The product is read left to right in that order.
using Term = std::vector<Factor>;

/// A coefficient and factors in the order written, before canonicalization.
struct RawTerm {
  Rational coeff;
  std::vector<Symbol> factors;
};

/// A canonical monomial: nonzero coefficient times a canonical term.
struct Monomial {
  Rational coeff;
  Term factors;
};

/// Multiplies two canonical terms. Returns the Koszul sign of the reordering
/// (+1 or -1) and writes the merged term to `out`, or returns 0 when an odd
/// generator would repeat.
int multiply_terms(const Term& a, const Term& b, Term& out);

/// Parity of a canonical term: number of odd factors mod 2.
Parity term_parity(const Term& term);

/// Canonical formal sum of rational monomials in the jet algebra of a
/// signature. The empty sum is zero. Values are immutable in practice: every
/// operation returns a fresh canonical Expression.
class Expression {
 public:
  using TermMap = std::map<Term, Rational>;

  Expression() = default;
  explicit Expression(const Signature& sig) : sig_(sig) {}

  static Expression constant(const Signature& sig, const Rational& value);
  static Expression from_symbol(const Signature& sig, const Symbol& symbol);
  /// x^coord_{,F1..Fk}, with indices in the order given (sign handled).
  static Expression jet(const Signature& sig, int coord, std::span<const int> indices = {});
  static Expression jet(const Signature& sig, int coord, std::initializer_list<int> indices);
  static Expression time(const Signature& sig, int f);
  /// Sorts factors with odd-transposition signs, merges coefficients and drops
  /// annihilated or zero monomials. Throws SignatureError on foreign symbols.
  static Expression canonicalize(const Signature& sig, std::span<const RawTerm> raw);

  const Signature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a canonical term (0 when absent).
  Rational coefficient(const Term& term) const;
  /// Value of the constant term.
  Rational constant_term() const { return coefficient(Term{}); }
  /// True when the expression is a (possibly zero) constant.
  bool is_constant() const;

  std::vector<Monomial> monomials() const;

  /// Adds c * term in place; the term must already be canonical.
  void add_term(const Term& term, const Rational& c);

  /// Same expression viewed in another signature with identical index layout
  /// for every symbol present (validated).
  Expression rebound(const Signature& sig) const;

  Expression operator-() const;
  Expression& operator+=(const Expression& other);
  Expression& operator-=(const Expression& other);
  Expression& operator*=(const Rational& q);

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(Expression a, const Rational& q) { return a *= q; }
  friend Expression operator*(const Rational& q, Expression a) { return a *= q; }
  friend Expression operator*(const Expression& a, const Expression& b);

  /// Equality of canonical forms; signatures must agree as well.
  bool operator==(const Expression& other) const;

 private:
  void require_same_signature(const Expression& other, const char* op) const;

  Signature sig_;
  TermMap terms_;
};

Expression add(const Expression& a, const Expression& b);
Expression mul(const Expression& a, const Expression& b);
Expression scale(const Rational& q, const Expression& a);
/// Non-negative integer power.
Expression power(const Expression& a, unsigned exponent);

/// Parity of a homogeneous expression, nullopt if inhomogeneous. The zero
/// expression reports even.
std::optional<Parity> parity_of(const Expression& e);

/// True if e is zero or homogeneous of parity p.
bool has_parity(const Expression& e, Parity p);

/// True if no explicit time variable occurs.
bool is_time_independent(const Expression& e);

/// True if no jet variable occurs (a polynomial in time variables only).
bool is_jet_free(const Expression& e);

/// Human-readable rendering of a rational, "p" or "p/q".
std::string to_string(const Rational& q);

}  // namespace lagc
