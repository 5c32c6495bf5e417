#include "lagc/lagrangian.hpp"

#include "lagc/error.hpp"
#include "lagc/parse.hpp"

namespace lagc {

Lagrangian::Lagrangian(Expression body) : body_(std::move(body)) {
  auto p = parity_of(body_);
  if (!p) throw ParityError("Lagrangian has inhomogeneous parity: " + print(body_));
  parity_ = *p;
}

void Lagrangian::require_time_independent(const char* operation) const {
  if (!time_independent()) {
    throw DomainError(std::string(operation) + " requires a time-independent Lagrangian, got " +
                      print(body_));
  }
}

}  // namespace lagc
