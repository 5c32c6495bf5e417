#include "lagc/action.hpp"

#include <algorithm>
#include <set>

#include "lagc/calculus.hpp"
#include "lagc/complex.hpp"
#include "lagc/error.hpp"
#include "lagc/parse.hpp"

namespace lagc {

Path::Path(const Signature& sig, std::vector<Expression> components)
    : sig_(sig), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != sig_.coordinates()) {
    throw SignatureError("path needs " + std::to_string(sig_.coordinates()) + " components, got " +
                         std::to_string(components_.size()));
  }
  for (int a = 1; a <= sig_.coordinates(); ++a) {
    const Expression& e = components_[static_cast<std::size_t>(a - 1)];
    if (e.signature() != sig_) {
      throw SignatureError("path component " + coordinate_name(sig_, a) + " in signature " +
                           to_string(e.signature()) + ", expected " + to_string(sig_));
    }
    if (!is_jet_free(e)) {
      throw DomainError("path component " + coordinate_name(sig_, a) +
                        " must be a polynomial in the time variables: " + print(e));
    }
    if (!has_parity(e, sig_.coordinate_parity(a))) {
      throw ParityError("path component " + coordinate_name(sig_, a) + " must be " +
                        to_string(sig_.coordinate_parity(a)) + ": " + print(e));
    }
  }
}

Homotopy::Homotopy(const Signature& base, std::vector<Expression> components)
    : base_(base), total_(base.lifted(), std::move(components)) {}

Path Homotopy::at(const Rational& value) const {
  std::vector<Expression> out;
  for (const auto& e : total_.components()) {
    out.push_back(drop_last_even_time(set_time(e, total_.signature().r, value)));
  }
  return Path(base_, std::move(out));
}

int Homotopy::boundary_flatness(int cap) const {
  const int param = total_.signature().r;
  int flat = cap;
  for (const auto& comp : total_.components()) {
    const Expression moving = comp - set_time(comp, param, 0);
    for (int f = 1; f <= base_.r; ++f) {
      Expression e = moving;
      for (int j = 0; j < flat; ++j) {
        if (!set_time(e, f, 0).is_zero() || !set_time(e, f, 1).is_zero()) {
          flat = j;
          break;
        }
        e = total_deriv(e, f);
      }
    }
  }
  return flat;
}

Expression berezin_integrate(const Expression& e, std::span<const int> odd_times) {
  const Signature& sig = e.signature();
  if (!is_jet_free(e)) throw DomainError("Berezin integrand contains jet variables: " + print(e));
  for (std::size_t i = 0; i < odd_times.size(); ++i) {
    const int f = odd_times[i];
    if (!sig.valid_time(f) || sig.time_parity(f).is_even()) {
      throw SignatureError("Berezin integration over non-odd time index " + std::to_string(f));
    }
    if (i > 0 && odd_times[i - 1] >= f) {
      throw SignatureError("Berezin integration variables must be ascending and distinct");
    }
  }
  auto listed = [&](const Symbol& s) {
    return s.is_time() && std::binary_search(odd_times.begin(), odd_times.end(), s.index());
  };

  Expression out(sig);
  for (const auto& [term, c] : e.terms()) {
    const auto hits = std::count_if(term.begin(), term.end(), [&](const Factor& f) { return listed(f.symbol); });
    if (hits != static_cast<std::ptrdiff_t>(odd_times.size())) continue;
    // move the listed factors to the right end, keeping their order
    bool negative = false;
    std::size_t unlisted_odd_after = 0;
    Term rest;
    for (auto it = term.rbegin(); it != term.rend(); ++it) {
      if (listed(it->symbol)) {
        if (unlisted_odd_after % 2 == 1) negative = !negative;
      } else if (it->symbol.is_odd()) {
        ++unlisted_odd_after;
      }
    }
    for (const auto& f : term) {
      if (!listed(f.symbol)) rest.push_back(f);
    }
    out.add_term(rest, negative ? Rational(-c) : c);
  }
  return out;
}

Expression berezin_integrate(const Expression& e) {
  const Signature& sig = e.signature();
  std::vector<int> odd;
  for (int f = sig.r + 1; f <= sig.times(); ++f) odd.push_back(f);
  return berezin_integrate(e, odd);
}

Rational integrate_unit_cube(const Expression& e) {
  Rational total = 0;
  for (const auto& [term, c] : e.terms()) {
    Rational value = c;
    for (const auto& f : term) {
      if (f.symbol.is_jet() || f.symbol.is_odd()) {
        throw DomainError("cube integrand must be a polynomial in the even times: " + print(e));
      }
      value /= f.power + 1;
    }
    total += value;
  }
  return total;
}

Rational action_eval(const Lagrangian& lagrangian, const Path& path) {
  if (lagrangian.signature() != path.signature()) {
    throw SignatureError("Lagrangian of signature " + to_string(lagrangian.signature()) +
                         " evaluated on a path of signature " + to_string(path.signature()));
  }
  const Expression density = substitute(lagrangian.body(), path.components(), path.signature());
  return integrate_unit_cube(berezin_integrate(density));
}

DivergenceCertificate divergence_decompose(const Lagrangian& lagrangian) {
  lagrangian.require_time_independent("divergence decomposition");
  const Lagrangian lifted(lift_times(lagrangian.body()));
  const Signature& sig = lifted.signature();
  const int new_time = sig.r;

  std::set<Symbol> jets;
  for (const auto& [term, c] : lifted.body().terms()) {
    for (const auto& f : term) jets.insert(f.symbol);
  }

  // D_{r+1}L = sum_v (D_mu x_{,r+1}) dL/dv; peel D_{F1}, D_{F2}, ... in turn
  //   (D_F w) Q = D_F(w Q) - (-1)^{F~ w~} w D_F Q
  // and collect the total derivatives into `flux`.
  std::map<int, Expression> flux;
  for (const Symbol& v : jets) {
    const std::vector<int> idx = v.mindex().indices();
    Expression q = partial_deriv(lifted.body(), v);
    Parity w_parity = sig.coordinate_parity(v.coord()) + v.mindex().parity();
    bool negative = false;
    for (std::size_t j = 0; j < idx.size() && !q.is_zero(); ++j) {
      const int f = idx[j];
      const Parity f_parity = sig.time_parity(f);
      w_parity += f_parity;
      std::vector<int> rest(idx.begin() + static_cast<std::ptrdiff_t>(j) + 1, idx.end());
      rest.push_back(new_time);
      Expression wq = Expression::jet(sig, v.coord(), rest) * q;
      if (negative) wq = -wq;
      auto [it, inserted] = flux.try_emplace(f, Expression(sig));
      it->second += wq;
      negative = !negative;
      if ((f_parity * w_parity).is_odd()) negative = !negative;
      q = total_deriv(q, f);
    }
  }

  DivergenceCertificate cert;
  cert.defect = apply_d(lagrangian).body() - total_deriv(lifted.body(), new_time);
  cert.residual = cert.defect;
  for (auto& [f, h] : flux) {
    h = -h;
    cert.residual -= total_deriv(h, f);
    if (!h.is_zero()) cert.flux.emplace(f, std::move(h));
  }
  return cert;
}

StokesResult stokes_check(const Lagrangian& lagrangian, const Homotopy& homotopy) {
  if (lagrangian.signature() != homotopy.base_signature()) {
    throw SignatureError("Lagrangian of signature " + to_string(lagrangian.signature()) +
                         " used with a homotopy of " + to_string(homotopy.base_signature()) +
                         "-paths");
  }
  const int required = 2 * std::max(0, order_of(lagrangian.body()));
  const int flat = homotopy.boundary_flatness(required);
  if (flat < required) {
    throw DomainError("homotopy is boundary-flat only to order " + std::to_string(flat) +
                      ", need " + std::to_string(required));
  }
  StokesResult result;
  result.lhs = action_eval(lagrangian, homotopy.at(1)) - action_eval(lagrangian, homotopy.at(0));
  result.rhs = action_eval(apply_d(lagrangian), homotopy.total_path());
  return result;
}

}  // namespace lagc
