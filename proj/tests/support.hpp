#pragma once

// Shared helpers for the unit and acceptance suites (test-only code).

#include <string>
#include <vector>

#include "lagc/lagc.hpp"

namespace lagc::testing {

inline Expression E(const Signature& sig, const std::string& text) { return parse(text, sig); }
inline Lagrangian L(const Signature& sig, const std::string& text) { return Lagrangian(parse(text, sig)); }

/// Random raw product: symbols with repeats, in arbitrary order.
inline RawTerm random_raw_term(const Signature& sig, CorpusRng& rng, int max_factors, int max_order) {
  RawTerm raw{Rational(rng.uniform(-4, 4), rng.uniform(1, 3)), {}};
  raw.coeff.canonicalize();
  const int k = rng.uniform(0, max_factors);
  for (int i = 0; i < k; ++i) {
    if (sig.times() > 0 && rng.uniform(0, 4) == 0) {
      raw.factors.push_back(Symbol::time(sig, rng.uniform(1, sig.times())));
      continue;
    }
    std::vector<int> idx;
    const int order = sig.times() > 0 ? rng.uniform(0, max_order) : 0;
    for (int j = 0; j < order; ++j) idx.push_back(rng.uniform(1, sig.times()));
    auto mu = MultiIndex::from_sequence(sig, idx);
    if (!mu) continue;
    raw.factors.push_back(Symbol::jet(sig, rng.uniform(1, sig.coordinates()), mu->second));
  }
  return raw;
}

/// Expands a canonical expression back into raw terms (powers unrolled).
inline std::vector<RawTerm> to_raw(const Expression& e) {
  std::vector<RawTerm> out;
  for (const auto& [term, c] : e.terms()) {
    RawTerm raw{c, {}};
    for (const auto& f : term) {
      for (std::uint32_t k = 0; k < f.power; ++k) raw.factors.push_back(f.symbol);
    }
    out.push_back(std::move(raw));
  }
  return out;
}

/// Signatures used by the property suites.
inline std::vector<Signature> property_signatures() {
  return {Signature(1, 0, 1, 0), Signature(2, 1, 1, 1), Signature(1, 2, 2, 1), Signature(0, 2, 1, 2),
          Signature(2, 2, 2, 0)};
}

/// Coordinate changes on 2|2 (x1 x2 even, th1 th2 odd): linear, affine,
/// triangular quadratic and even/odd mixing.
inline std::vector<CoordinateChange> change_matrix(const Signature& sig) {
  const std::vector<std::vector<std::string>> maps = {
      {"x1", "x2", "th1", "th2"},
      {"x1 + 2*x2", "x2", "th1", "th2 + 3*th1"},
      {"x2", "x1", "th2", "-th1"},
      {"x1 + 1", "2*x2 - 3", "th1", "th2"},
      {"x1", "x2 + x1^2", "th1", "th2"},
      {"x1 + x2^2", "x2", "th1 + x1*th2", "th2"},
      {"x1 + th1*th2", "x2", "th1", "th2 + x2*th1"},
      {"3*x1 + x2^2", "x2 - x1*th1*th2", "th1", "th2"},
      {"x1", "x2", "th1 + x1^2*th2", "2*th2 + x2*th1"},
      {"1 + x1 + x2^2", "x2 + 1/2*th1*th2", "th1 - th2", "th2 + x1*th2"},
  };
  std::vector<CoordinateChange> out;
  for (const auto& row : maps) {
    std::vector<Expression> m;
    for (const auto& t : row) m.push_back(parse(t, sig));
    out.emplace_back(sig, std::move(m));
  }
  return out;
}

/// Lagrangians on 2|2 1|1 (index 2 is the odd time) of order <= 2.
inline std::vector<Lagrangian> change_lagrangians(const Signature& sig) {
  const std::vector<std::string> texts = {
      "1/2*x1[1]^2",
      "x1*x2[1]",
      "x1",
      "th1*th1[1]*x1",
      "x1[1]^2*x2 + x2[1]*x1^2",
      "th1[2]*th2[1]",
      "x1[1 1]*x2 - 1/3*x2[1]^2",
      "th1*th2[1 2] + x1[2]*th2[2]",
      "x1*th1*th2 + x2[1]*th1[1]*th2",
      "1/2*x1[1 1]^2 + th1[1]*th2[1 1]",
  };
  std::vector<Lagrangian> out;
  for (const auto& t : texts) out.emplace_back(parse(t, sig));
  return out;
}

/// Every monomial form x^e dx^I on R^n with deg I <= max_degree and
/// coefficient degree <= coeff_degree.
inline std::vector<PolyForm> monomial_forms(int n, int max_degree, int coeff_degree) {
  const Signature sig(n, 0, 0, 0);
  std::vector<Expression> monomials;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      Expression m = Expression::constant(sig, 1);
      for (int a = 0; a < n; ++a) m = m * power(Expression::jet(sig, a + 1), static_cast<unsigned>(exps[static_cast<std::size_t>(a)]));
      monomials.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(i)] = e;
      self(self, i + 1, left - e);
    }
    exps[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, coeff_degree);

  std::vector<PolyForm> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > max_degree) continue;
    std::vector<int> idx;
    for (int a = 0; a < n; ++a) {
      if (mask & (1u << a)) idx.push_back(a + 1);
    }
    for (const auto& m : monomials) {
      PolyForm w(n, k);
      w.add(idx, m);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace lagc::testing
