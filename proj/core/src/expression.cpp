#include "lagc/expression.hpp"

#include <algorithm>

#include "lagc/error.hpp"

namespace lagc {

std::strong_ordering Factor::operator<=>(const Factor& other) const {
  if (auto c = symbol <=> other.symbol; c != 0) return c;
  return power <=> other.power;
}

int multiply_terms(const Term& a, const Term& b, Term& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t odd_left = 0;
  for (const auto& f : a) odd_left += f.symbol.is_odd() ? 1 : 0;

  bool negative = false;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = a[i].symbol <=> b[j].symbol;
    if (c < 0) {
      if (a[i].symbol.is_odd()) --odd_left;
      out.push_back(a[i++]);
    } else if (c > 0) {
      // b[j] moves left past every odd factor of a still to its right
      if (b[j].symbol.is_odd() && odd_left % 2 == 1) negative = !negative;
      out.push_back(b[j++]);
    } else {
      if (a[i].symbol.is_odd()) return 0;
      out.push_back(Factor{a[i].symbol, a[i].power + b[j].power});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return negative ? -1 : 1;
}

Parity term_parity(const Term& term) {
  Parity p;
  for (const auto& f : term) p += f.symbol.parity();
  return p;
}

Expression Expression::constant(const Signature& sig, const Rational& value) {
  Expression e(sig);
  e.add_term(Term{}, value);
  return e;
}

Expression Expression::from_symbol(const Signature& sig, const Symbol& symbol) {
  Expression e(sig);
  e.add_term(Term{Factor{symbol, 1}}, Rational(1));
  return e;
}

Expression Expression::jet(const Signature& sig, int coord, std::span<const int> indices) {
  auto mu = MultiIndex::from_sequence(sig, indices);
  if (!mu) {
    // still validate the coordinate
    (void)Symbol::jet(sig, coord);
    return Expression(sig);
  }
  Expression e(sig);
  e.add_term(Term{Factor{Symbol::jet(sig, coord, std::move(mu->second)), 1}},
             Rational(mu->first));
  return e;
}

Expression Expression::jet(const Signature& sig, int coord, std::initializer_list<int> indices) {
  return jet(sig, coord, std::span<const int>(indices.begin(), indices.size()));
}

Expression Expression::time(const Signature& sig, int f) {
  return from_symbol(sig, Symbol::time(sig, f));
}

Expression Expression::canonicalize(const Signature& sig, std::span<const RawTerm> raw) {
  Expression e(sig);
  Term current;
  Term scratch;
  for (const auto& rt : raw) {
    if (rt.coeff == 0) continue;
    current.clear();
    int sign = 1;
    for (const auto& s : rt.factors) {
      // re-validate against sig
      const Symbol checked = s.is_time() ? Symbol::time(sig, s.index())
                                         : Symbol::jet(sig, s.coord(), s.mindex());
      if (checked.is_odd() != s.is_odd()) {
        throw SignatureError("symbol parity does not match signature " + to_string(sig));
      }
      sign *= multiply_terms(current, Term{Factor{checked, 1}}, scratch);
      if (sign == 0) break;
      current.swap(scratch);
    }
    if (sign == 0) continue;
    e.add_term(current, sign > 0 ? rt.coeff : Rational(-rt.coeff));
  }
  return e;
}

Rational Expression::coefficient(const Term& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Expression::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::vector<Monomial> Expression::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [term, c] : terms_) out.push_back(Monomial{c, term});
  return out;
}

void Expression::add_term(const Term& term, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Expression Expression::rebound(const Signature& sig) const {
  Expression out(sig);
  for (const auto& [term, c] : terms_) {
    Term t;
    t.reserve(term.size());
    for (const auto& f : term) {
      const Symbol s = f.symbol.is_time() ? Symbol::time(sig, f.symbol.index())
                                          : Symbol::jet(sig, f.symbol.coord(), f.symbol.mindex());
      if (s.is_odd() != f.symbol.is_odd()) {
        throw SignatureError("cannot rebind expression to signature " + to_string(sig) +
                             ": parity of a generator changes");
      }
      t.push_back(Factor{s, f.power});
    }
    out.terms_.emplace(std::move(t), c);
  }
  return out;
}

Expression Expression::operator-() const {
  Expression out = *this;
  for (auto& [term, c] : out.terms_) c = -c;
  return out;
}

Expression& Expression::operator+=(const Expression& other) {
  require_same_signature(other, "add");
  for (const auto& [term, c] : other.terms_) add_term(term, c);
  return *this;
}

Expression& Expression::operator-=(const Expression& other) {
  require_same_signature(other, "subtract");
  for (const auto& [term, c] : other.terms_) add_term(term, -c);
  return *this;
}

Expression& Expression::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [term, c] : terms_) c *= q;
  return *this;
}

Expression operator*(const Expression& a, const Expression& b) {
  a.require_same_signature(b, "multiply");
  Expression out(a.sig_);
  Term scratch;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      const int sign = multiply_terms(ta, tb, scratch);
      if (sign == 0) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(scratch, c);
    }
  }
  return out;
}

bool Expression::operator==(const Expression& other) const {
  return sig_ == other.sig_ && terms_ == other.terms_;
}

void Expression::require_same_signature(const Expression& other, const char* op) const {
  if (sig_ != other.sig_) {
    throw SignatureError(std::string("cannot ") + op + " expressions of signatures " +
                         to_string(sig_) + " and " + to_string(other.sig_));
  }
}

Expression add(const Expression& a, const Expression& b) { return a + b; }
Expression mul(const Expression& a, const Expression& b) { return a * b; }
Expression scale(const Rational& q, const Expression& a) { return q * a; }

Expression power(const Expression& a, unsigned exponent) {
  Expression out = Expression::constant(a.signature(), 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * a;
  return out;
}

std::optional<Parity> parity_of(const Expression& e) {
  std::optional<Parity> p;
  for (const auto& [term, c] : e.terms()) {
    const Parity tp = term_parity(term);
    if (!p) {
      p = tp;
    } else if (*p != tp) {
      return std::nullopt;
    }
  }
  return p.value_or(Parity::even());
}

bool has_parity(const Expression& e, Parity p) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [&](const auto& kv) { return term_parity(kv.first) == p; });
}

bool is_time_independent(const Expression& e) {
  for (const auto& [term, c] : e.terms()) {
    for (const auto& f : term) {
      if (f.symbol.is_time()) return false;
    }
  }
  return true;
}

bool is_jet_free(const Expression& e) {
  for (const auto& [term, c] : e.terms()) {
    for (const auto& f : term) {
      if (f.symbol.is_jet()) return false;
    }
  }
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace lagc
