#include "lagc/calculus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lagc/error.hpp"
#include "lagc/parse.hpp"

namespace lagc {
namespace {

std::size_t count_odd(const Term& term, std::size_t end) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < end; ++i) n += term[i].symbol.is_odd() ? 1 : 0;
  return n;
}

// Rebuilds every generator of e in `target`, renumbering time indices with
// `remap` (which must preserve the relative order of indices).
template <class Remap>
Expression reindex(const Expression& e, const Signature& target, Remap remap) {
  Expression out(target);
  for (const auto& [term, c] : e.terms()) {
    Term t;
    t.reserve(term.size());
    for (const auto& f : term) {
      if (f.symbol.is_time()) {
        t.push_back(Factor{Symbol::time(target, remap(f.symbol.index())), f.power});
      } else {
        std::vector<int> idx = f.symbol.mindex().indices();
        for (auto& i : idx) i = remap(i);
        auto mu = MultiIndex::from_sequence(target, idx);
        t.push_back(Factor{Symbol::jet(target, f.symbol.coord(), std::move(mu->second)), f.power});
      }
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace

Expression partial_deriv(const Expression& e, const Symbol& v) {
  Expression out(e.signature());
  for (const auto& [term, c] : e.terms()) {
    auto it = std::find_if(term.begin(), term.end(), [&](const Factor& f) { return f.symbol == v; });
    if (it == term.end()) continue;
    const auto pos = static_cast<std::size_t>(it - term.begin());
    Term rest = term;
    Rational coeff = c;
    if (v.is_odd()) {
      if (count_odd(term, pos) % 2 == 1) coeff = -coeff;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      coeff *= it->power;
      if (--rest[pos].power == 0) rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Expression total_deriv(const Expression& e, int f) {
  const Signature& sig = e.signature();
  if (!sig.valid_time(f)) {
    throw SignatureError("time index " + std::to_string(f) + " outside signature " +
                         to_string(sig));
  }
  const bool odd_f = sig.time_parity(f).is_odd();
  Expression out(sig);
  Term left;
  Term right;
  Term scratch;
  for (const auto& [term, c] : e.terms()) {
    std::size_t odd_before = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      const Factor& w = term[i];
      int sign = (odd_f && odd_before % 2 == 1) ? -1 : 1;
      if (w.symbol.is_odd()) ++odd_before;

      std::optional<Symbol> derived;
      if (w.symbol.is_time()) {
        if (w.symbol.index() != f) continue;
      } else {
        auto mu = w.symbol.mindex().with_derivative(sig, f);
        if (!mu) continue;
        sign *= mu->first;
        derived = Symbol::jet(sig, w.symbol.coord(), std::move(mu->second));
      }

      // prefix * D_f(w) * (w^{p-1} suffix)
      left.assign(term.begin(), term.begin() + static_cast<std::ptrdiff_t>(i));
      right.clear();
      if (w.power > 1) right.push_back(Factor{w.symbol, w.power - 1});
      right.insert(right.end(), term.begin() + static_cast<std::ptrdiff_t>(i) + 1, term.end());
      if (derived) {
        sign *= multiply_terms(left, Term{Factor{*derived, 1}}, scratch);
        if (sign == 0) continue;
        left.swap(scratch);
      }
      sign *= multiply_terms(left, right, scratch);
      if (sign == 0) continue;
      Rational coeff = c * w.power;
      if (sign < 0) coeff = -coeff;
      out.add_term(scratch, coeff);
    }
  }
  return out;
}

Expression total_deriv(const Expression& e, const MultiIndex& mu) {
  const std::vector<int> idx = mu.indices();
  Expression out = e;
  for (auto it = idx.rbegin(); it != idx.rend() && !out.is_zero(); ++it) out = total_deriv(out, *it);
  return out;
}

Expression var_deriv(const Lagrangian& lagrangian, int coord) {
  lagrangian.require_time_independent("variational derivative");
  const Signature& sig = lagrangian.signature();
  if (!sig.valid_coordinate(coord)) {
    throw SignatureError("coordinate index " + std::to_string(coord) + " outside signature " +
                         to_string(sig));
  }
  std::set<Symbol> jets;
  for (const auto& [term, c] : lagrangian.body().terms()) {
    for (const auto& f : term) {
      if (f.symbol.is_jet() && f.symbol.coord() == coord) jets.insert(f.symbol);
    }
  }
  const Parity coord_parity = sig.coordinate_parity(coord);
  Expression out(sig);
  for (const auto& v : jets) {
    const MultiIndex& mu = v.mindex();
    Expression term = total_deriv(partial_deriv(lagrangian.body(), v), mu);
    const bool negative = (mu.order() % 2 == 1) != (coord_parity * mu.parity()).is_odd();
    if (negative) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out;
}

Covector var_deriv_all(const Lagrangian& lagrangian) {
  Covector out{lagrangian.signature(), {}};
  for (int a = 1; a <= lagrangian.signature().coordinates(); ++a) {
    out.components.push_back(var_deriv(lagrangian, a));
  }
  return out;
}

int order_of(const Expression& e) {
  if (e.is_zero()) return kOrderOfZero;
  int order = 0;
  for (const auto& [term, c] : e.terms()) {
    for (const auto& f : term) {
      if (f.symbol.is_jet()) order = std::max(order, f.symbol.mindex().order());
    }
  }
  return order;
}

Expression lift_times(const Expression& e) {
  const Signature& sig = e.signature();
  const int r = sig.r;
  return reindex(e, sig.lifted(), [r](int f) { return f > r ? f + 1 : f; });
}

Expression drop_last_even_time(const Expression& e) {
  const Signature& sig = e.signature();
  if (sig.r == 0) throw SignatureError("no even time variable to drop");
  const int r = sig.r;
  for (const auto& [term, c] : e.terms()) {
    for (const auto& f : term) {
      const bool uses = f.symbol.is_time() ? f.symbol.index() == r : f.symbol.mindex().contains(r);
      if (uses) {
        throw SignatureError("expression still depends on time index " + std::to_string(r) + ": " +
                             print(e));
      }
    }
  }
  return reindex(e, sig.with_times(sig.r - 1, sig.s), [r](int f) { return f > r ? f - 1 : f; });
}

Expression substitute(const Expression& e, std::span<const Expression> binding,
                      const Signature& target) {
  const Signature& sig = e.signature();
  if (static_cast<int>(binding.size()) != sig.coordinates()) {
    throw SignatureError("binding has " + std::to_string(binding.size()) + " entries for " +
                         std::to_string(sig.coordinates()) + " coordinates");
  }
  for (int a = 1; a <= sig.coordinates(); ++a) {
    const Expression& b = binding[static_cast<std::size_t>(a - 1)];
    if (b.signature() != target) {
      throw SignatureError("binding for " + coordinate_name(sig, a) + " lives in signature " +
                           to_string(b.signature()) + ", expected " + to_string(target));
    }
    if (!has_parity(b, sig.coordinate_parity(a))) {
      throw ParityError("binding for " + coordinate_name(sig, a) + " must be " +
                        to_string(sig.coordinate_parity(a)) + ": " + print(b));
    }
  }

  std::map<Symbol, Expression> images;
  auto image_of = [&](const Symbol& s) -> const Expression& {
    auto it = images.find(s);
    if (it != images.end()) return it->second;
    Expression img = s.is_time()
                         ? Expression::time(target, s.index())
                         : total_deriv(binding[static_cast<std::size_t>(s.coord() - 1)], s.mindex());
    return images.emplace(s, std::move(img)).first->second;
  };

  Expression out(target);
  for (const auto& [term, c] : e.terms()) {
    Expression product = Expression::constant(target, c);
    for (const auto& f : term) {
      const Expression& img = image_of(f.symbol);
      for (std::uint32_t k = 0; k < f.power && !product.is_zero(); ++k) product = product * img;
      if (product.is_zero()) break;
    }
    out += product;
  }
  return out;
}

Expression set_time(const Expression& e, int f, const Rational& value) {
  const Signature& sig = e.signature();
  if (!sig.valid_time(f) || sig.time_parity(f).is_odd()) {
    throw SignatureError("set_time needs an even time index, got " + std::to_string(f));
  }
  Expression out(sig);
  for (const auto& [term, c] : e.terms()) {
    auto it = std::find_if(term.begin(), term.end(), [&](const Factor& x) {
      return x.symbol.is_time() && x.symbol.index() == f;
    });
    if (it == term.end()) {
      out.add_term(term, c);
      continue;
    }
    Rational coeff = c;
    for (std::uint32_t k = 0; k < it->power; ++k) coeff *= value;
    Term rest = term;
    rest.erase(rest.begin() + (it - term.begin()));
    out.add_term(rest, coeff);
  }
  return out;
}

}  // namespace lagc
