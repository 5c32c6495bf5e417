#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lagc/expression.hpp"
#include "lagc/lagrangian.hpp"

namespace lagc {

/// Deterministic source for randomized corpora.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use `next() % bound` (std distributions are
/// implementation-defined and are not used), so a seed reproduces the same
/// corpus on every platform.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() % 2 == 1; }

 private:
  std::mt19937_64 engine_;
};

struct CorpusConfig {
  Signature sig;
  /// Exact derivative order of every generated Lagrangian (>= 0).
  int order = 1;
  /// Maximal polynomial degree of the order-0 coefficient factor.
  int coeff_degree = 2;
  /// Maximal number of monomials.
  int max_terms = 3;
  /// Maximal number of derivative factors per monomial.
  int max_jets = 2;
};

/// Random nonzero homogeneous time-independent Lagrangian of exactly
/// `config.order`.
Lagrangian random_lagrangian(const CorpusConfig& config, CorpusRng& rng);

/// `count` Lagrangians drawn from one seed.
std::vector<Lagrangian> random_corpus(const CorpusConfig& config, std::uint64_t seed, int count);

/// Random homogeneous expression with up to `max_terms` monomials in the jets
/// (order <= max_order) and, if `with_times`, explicit time variables.
Expression random_expression(const Signature& sig, CorpusRng& rng, int max_terms, int max_order,
                             bool with_times, std::optional<Parity> parity = std::nullopt);

}  // namespace lagc
