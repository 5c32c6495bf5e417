#include "lagc/corpus.hpp"

#include "lagc/calculus.hpp"
#include "lagc/error.hpp"

namespace lagc {
namespace {

Rational random_coefficient(CorpusRng& rng) {
  int num = rng.uniform(-3, 2);
  if (num >= 0) ++num;  // skip zero
  Rational q(num, rng.uniform(1, 3));
  q.canonicalize();
  return q;
}

Expression random_jet(const Signature& sig, CorpusRng& rng, int order) {
  const int coord = rng.uniform(1, sig.coordinates());
  std::vector<int> idx;
  for (int i = 0; i < order; ++i) idx.push_back(rng.uniform(1, sig.times()));
  return Expression::jet(sig, coord, idx);
}

Expression random_lagrangian_term(const CorpusConfig& cfg, CorpusRng& rng, bool force_top) {
  const Signature& sig = cfg.sig;
  Expression e = Expression::constant(sig, random_coefficient(rng));
  const int degree = rng.uniform(0, cfg.coeff_degree);
  for (int i = 0; i < degree; ++i) e = e * random_jet(sig, rng, 0);
  if (cfg.order > 0) {
    int jets = rng.uniform(0, cfg.max_jets);
    if (force_top && jets == 0) jets = 1;
    for (int i = 0; i < jets; ++i) {
      const int order = (force_top && i == 0) ? cfg.order : rng.uniform(1, cfg.order);
      e = e * random_jet(sig, rng, order);
    }
  }
  return e;
}

}  // namespace

Lagrangian random_lagrangian(const CorpusConfig& config, CorpusRng& rng) {
  const Signature& sig = config.sig;
  if (sig.coordinates() == 0) throw DomainError("corpus signature has no coordinates");
  if (config.order > 0 && sig.times() == 0) {
    throw DomainError("derivatives need at least one time variable");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Expression body = random_lagrangian_term(config, rng, true);
    if (body.is_zero()) continue;
    const Parity target = *parity_of(body);
    const int extra = rng.uniform(0, config.max_terms - 1);
    for (int i = 0; i < extra; ++i) {
      for (int tries = 0; tries < 20; ++tries) {
        Expression t = random_lagrangian_term(config, rng, false);
        if (!t.is_zero() && has_parity(t, target)) {
          body += t;
          break;
        }
      }
    }
    if (body.is_zero() || order_of(body) != config.order) continue;
    return Lagrangian(std::move(body));
  }
  throw DomainError("could not generate a Lagrangian of order " + std::to_string(config.order) +
                    " in signature " + to_string(sig));
}

std::vector<Lagrangian> random_corpus(const CorpusConfig& config, std::uint64_t seed, int count) {
  CorpusRng rng(seed);
  std::vector<Lagrangian> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_lagrangian(config, rng));
  return out;
}

Expression random_expression(const Signature& sig, CorpusRng& rng, int max_terms, int max_order,
                             bool with_times, std::optional<Parity> parity) {
  Expression out(sig);
  const int terms = rng.uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    for (int tries = 0; tries < 20; ++tries) {
      Expression t = Expression::constant(sig, random_coefficient(rng));
      const int factors = rng.uniform(0, 3);
      for (int k = 0; k < factors; ++k) {
        if (with_times && sig.times() > 0 && rng.uniform(0, 3) == 0) {
          t = t * Expression::time(sig, rng.uniform(1, sig.times()));
        } else if (sig.coordinates() > 0) {
          const int order = sig.times() > 0 ? rng.uniform(0, max_order) : 0;
          t = t * random_jet(sig, rng, order);
        }
      }
      if (t.is_zero()) continue;
      if (parity && !has_parity(t, *parity)) continue;
      out += t;
      break;
    }
  }
  return out;
}

}  // namespace lagc
