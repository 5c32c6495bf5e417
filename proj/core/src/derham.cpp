#include "lagc/derham.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "lagc/calculus.hpp"
#include "lagc/complex.hpp"
#include "lagc/error.hpp"
#include "lagc/parse.hpp"

namespace lagc {
namespace {

// Sign of the permutation that sorts v (v has distinct entries).
int sort_sign(const std::vector<int>& v) {
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) inversions += v[i] > v[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Signature form_signature(int n) { return Signature(n, 0, 0, 0); }

// Row reduction over the rationals.
int exact_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& row) { return row[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

void exponents(int n, int max_degree, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  const int used = std::accumulate(current.begin(), current.end(), 0);
  for (int e = 0; e + used <= max_degree; ++e) {
    current.push_back(e);
    exponents(n, max_degree, current, out);
    current.pop_back();
  }
}

void increasing_tuples(int n, int k, int start, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int a = start; a <= n; ++a) {
    current.push_back(a);
    increasing_tuples(n, k, a + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

PolyForm::PolyForm(int dimension, int degree) : sig_(form_signature(dimension)), degree_(degree) {
  if (degree < 0 || degree > dimension + 1) {
    throw DomainError("form degree " + std::to_string(degree) + " invalid on a " +
                      std::to_string(dimension) + "-dimensional space");
  }
}

void PolyForm::add(std::vector<int> indices, const Expression& coeff) {
  if (static_cast<int>(indices.size()) != degree_) {
    throw DomainError("form component has " + std::to_string(indices.size()) +
                      " indices, expected " + std::to_string(degree_));
  }
  for (int a : indices) {
    if (a < 1 || a > sig_.n) throw SignatureError("form index " + std::to_string(a) + " out of range");
  }
  if (coeff.signature() != sig_) throw SignatureError("form coefficient in wrong signature");
  if (order_of(coeff) > 0 || !is_time_independent(coeff)) {
    throw DomainError("form coefficient must be a polynomial in the coordinates: " + print(coeff));
  }
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
  const int sign = sort_sign(indices);
  auto [it, inserted] = coeffs_.try_emplace(sorted, Expression(sig_));
  it->second += sign > 0 ? coeff : -coeff;
  if (it->second.is_zero()) coeffs_.erase(it);
}

int form_sign(int degree) { return (degree * (degree - 1) / 2) % 2 == 0 ? 1 : -1; }

Lagrangian form_to_lagrangian(const PolyForm& form) {
  const int r = form.degree();
  const Signature sig(form.dimension(), 0, r, 0);
  Expression body(sig);
  for (const auto& [key, coeff] : form.coefficients()) {
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 1);
    Expression det(sig);
    do {
      // row i uses column perm[i]
      Expression product = Expression::constant(sig, sort_sign(perm));
      for (int i = 0; i < r; ++i) {
        product = product * Expression::jet(sig, key[static_cast<std::size_t>(i)],
                                            {perm[static_cast<std::size_t>(i)]});
      }
      det += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    body += coeff.rebound(sig) * det;
  }
  return Lagrangian(body * Rational(form_sign(r)));
}

PolyForm lagrangian_to_form(const Lagrangian& lagrangian) {
  const Signature& sig = lagrangian.signature();
  if (sig.m != 0 || sig.s != 0) throw DomainError("forms are defined for even signatures only");
  lagrangian.require_time_independent("lagrangian_to_form");
  const int r = sig.r;
  PolyForm form(sig.n, r);
  const Signature coeff_sig = form.coefficient_signature();
  long factorial = 1;
  for (int k = 2; k <= r; ++k) factorial *= k;
  for (const auto& [term, c] : lagrangian.body().terms()) {
    auto reject = [&](const std::string& why) {
      Expression mono(sig);
      mono.add_term(term, c);
      throw DomainError("not form-like (" + why + "): " + print(mono));
    };
    std::vector<int> coord_of_time(static_cast<std::size_t>(r), 0);
    Expression coeff = Expression::constant(coeff_sig, c);
    for (const auto& f : term) {
      const int order = f.symbol.mindex().order();
      if (order == 0) {
        coeff = coeff * power(Expression::jet(coeff_sig, f.symbol.coord()), f.power);
        continue;
      }
      if (order > 1) reject("higher derivative");
      if (f.power > 1) reject("non-multilinear");
      const int t = f.symbol.mindex().indices().front();
      auto& slot = coord_of_time[static_cast<std::size_t>(t - 1)];
      if (slot != 0) reject("non-multilinear");
      slot = f.symbol.coord();
    }
    if (std::find(coord_of_time.begin(), coord_of_time.end(), 0) != coord_of_time.end()) {
      reject("missing velocity");
    }
    std::vector<int> sorted = coord_of_time;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) reject("not alternating");
    // the determinant term of sorted rows uses the inverse permutation, same sign;
    // each of the r! terms of the determinant carries the whole coefficient
    Rational weight(sort_sign(coord_of_time) * form_sign(r), factorial);
    weight.canonicalize();
    form.add(sorted, coeff * weight);
  }
  if (!(form_to_lagrangian(form) == lagrangian)) {
    // first monomial that disagrees
    const Expression diff = lagrangian.body() - form_to_lagrangian(form).body();
    Expression mono(sig);
    mono.add_term(diff.terms().begin()->first, diff.terms().begin()->second);
    throw DomainError("not form-like (not alternating): " + print(mono));
  }
  return form;
}

PolyForm exterior_deriv(const PolyForm& form) {
  const int n = form.dimension();
  PolyForm out(n, form.degree() + 1);
  if (form.degree() >= n) return out;
  const Signature& sig = form.coefficient_signature();
  for (const auto& [key, coeff] : form.coefficients()) {
    for (int b = 1; b <= n; ++b) {
      Expression g = partial_deriv(coeff, Symbol::jet(sig, b));
      if (g.is_zero()) continue;
      std::vector<int> idx{b};
      idx.insert(idx.end(), key.begin(), key.end());
      out.add(std::move(idx), g);
    }
  }
  return out;
}

Expression bridge_check(const PolyForm& form) {
  if (form.degree() > form.dimension()) {
    throw DomainError("bridge check needs degree <= dimension");
  }
  return apply_d(form_to_lagrangian(form)).body() - form_to_lagrangian(exterior_deriv(form)).body();
}

PolyForm read_form(const Document& doc) {
  const Signature& sig = *doc.sig;
  if (sig.m != 0 || sig.s != 0) throw DomainError("forms need an even signature n|0");
  std::optional<PolyForm> form;
  const Signature coeff_sig(sig.n, 0, 0, 0);
  for (const auto& line : doc.body) {
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(line.number) + ": expected 'A1 ... Ak : coefficient'",
                       line.number, 1);
    }
    std::vector<int> indices;
    std::istringstream in(line.text.substr(0, colon));
    std::string tok;
    while (in >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6) {
        throw ParseError("line " + std::to_string(line.number) + ": bad form index '" + tok + "'",
                         line.number, 1);
      }
      indices.push_back(std::stoi(tok));
    }
    if (!form) form.emplace(sig.n, static_cast<int>(indices.size()));
    if (static_cast<int>(indices.size()) != form->degree()) {
      throw ParseError("line " + std::to_string(line.number) + ": component of degree " +
                           std::to_string(indices.size()) + " in a " + std::to_string(form->degree()) +
                           "-form",
                       line.number, 1);
    }
    Expression coeff(coeff_sig);
    try {
      coeff = parse(std::string_view(line.text).substr(colon + 1), coeff_sig);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line.number) + ": " + e.what(), line.number,
                       e.column() + colon + 1);
    }
    form->add(indices, coeff);
  }
  if (!form) throw ParseError("form document has no components", 0, 0);
  return *form;
}

std::vector<int> cohomology_dims(int n, int degree_bound) {
  if (n < 0 || n > 4 || degree_bound < 0 || degree_bound > 4) {
    throw DomainError("cohomology_dims supports 0 <= n <= 4 and 0 <= degree_bound <= 4");
  }
  const Signature sig = form_signature(n);

  // basis of the truncated k-forms
  struct Space {
    std::vector<std::pair<std::vector<int>, Term>> basis;
    std::map<std::pair<std::vector<int>, Term>, std::size_t> position;
  };
  std::vector<Space> spaces(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n; ++k) {
    if (degree_bound - k < 0) continue;
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    increasing_tuples(n, k, 1, cur, tuples);
    std::vector<std::vector<int>> exps;
    exponents(n, degree_bound - k, cur, exps);
    auto& space = spaces[static_cast<std::size_t>(k)];
    for (const auto& t : tuples) {
      for (const auto& e : exps) {
        Expression mono = Expression::constant(sig, 1);
        for (int a = 1; a <= n; ++a) {
          mono = mono * power(Expression::jet(sig, a), static_cast<unsigned>(e[static_cast<std::size_t>(a - 1)]));
        }
        const Term term = mono.terms().begin()->first;
        space.position.emplace(std::make_pair(t, term), space.basis.size());
        space.basis.emplace_back(t, term);
      }
    }
  }

  // rank of d_k : C^k -> C^{k+1}
  std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    const auto& from = spaces[static_cast<std::size_t>(k)];
    const auto& to = spaces[static_cast<std::size_t>(k) + 1];
    if (from.basis.empty() || to.basis.empty()) continue;
    std::vector<std::vector<Rational>> columns;
    for (const auto& [tuple, term] : from.basis) {
      PolyForm w(n, k);
      Expression c(sig);
      c.add_term(term, 1);
      w.add(tuple, c);
      const PolyForm dw = exterior_deriv(w);
      std::vector<Rational> col(to.basis.size(), 0);
      for (const auto& [key, coeff] : dw.coefficients()) {
        for (const auto& [t, v] : coeff.terms()) {
          auto it = to.position.find({key, t});
          if (it == to.position.end()) throw Error("exterior derivative left the truncated complex");
          col[it->second] = v;
        }
      }
      columns.push_back(std::move(col));
    }
    ranks[static_cast<std::size_t>(k)] = exact_rank(std::move(columns));
  }

  std::vector<int> dims;
  for (int k = 0; k <= n; ++k) {
    const int dim = static_cast<int>(spaces[static_cast<std::size_t>(k)].basis.size());
    const int incoming = k > 0 ? ranks[static_cast<std::size_t>(k) - 1] : 0;
    dims.push_back(dim - ranks[static_cast<std::size_t>(k)] - incoming);
  }
  return dims;
}

}  // namespace lagc
