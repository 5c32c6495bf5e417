#pragma once

#include "lagc/expression.hpp"

namespace lagc {

/// An element of the space of Lagrangians of r|s-paths: a homogeneous
/// expression in the jet variables of a signature.
class Lagrangian {
 public:
  /// Throws ParityError when `body` is inhomogeneous.
  explicit Lagrangian(Expression body);

  const Signature& signature() const { return body_.signature(); }
  const Expression& body() const { return body_; }
  Parity parity() const { return parity_; }
  bool time_independent() const { return is_time_independent(body_); }

  /// Throws DomainError if explicit time variables occur.
  void require_time_independent(const char* operation) const;

  bool operator==(const Lagrangian& other) const { return body_ == other.body_; }

 private:
  Expression body_;
  Parity parity_;
};

}  // namespace lagc
