#include "lagc/complex.hpp"

#include "lagc/error.hpp"
#include "lagc/parse.hpp"

namespace lagc {

CoordinateChange::CoordinateChange(const Signature& sig, std::vector<Expression> maps)
    : sig_(sig), maps_(std::move(maps)) {
  if (static_cast<int>(maps_.size()) != sig_.coordinates()) {
    throw SignatureError("coordinate change needs " + std::to_string(sig_.coordinates()) +
                         " maps, got " + std::to_string(maps_.size()));
  }
  for (int a = 1; a <= sig_.coordinates(); ++a) {
    Expression& e = maps_[static_cast<std::size_t>(a - 1)];
    if (e.signature() != sig_) e = e.rebound(sig_);
    if (!is_time_independent(e) || order_of(e) > 0) {
      throw DomainError("coordinate change for " + coordinate_name(sig_, a) +
                        " must be a polynomial in the coordinates: " + print(e));
    }
    if (!has_parity(e, sig_.coordinate_parity(a))) {
      throw ParityError("coordinate change for " + coordinate_name(sig_, a) + " must be " +
                        to_string(sig_.coordinate_parity(a)) + ": " + print(e));
    }
  }
}

CoordinateChange CoordinateChange::identity(const Signature& sig) {
  std::vector<Expression> maps;
  for (int a = 1; a <= sig.coordinates(); ++a) maps.push_back(Expression::jet(sig, a));
  return CoordinateChange(sig, std::move(maps));
}

std::vector<Expression> CoordinateChange::maps_for(const Signature& sig) const {
  if (sig.n != sig_.n || sig.m != sig_.m) {
    throw SignatureError("coordinate change on " + to_string(sig_) +
                         " applied in signature " + to_string(sig));
  }
  std::vector<Expression> out;
  out.reserve(maps_.size());
  for (const auto& e : maps_) out.push_back(e.rebound(sig));
  return out;
}

Expression CoordinateChange::jacobian(int a, int b, const Signature& sig) const {
  return partial_deriv(map(a).rebound(sig), Symbol::jet(sig, b));
}

Lagrangian apply_d(const Lagrangian& lagrangian) {
  lagrangian.require_time_independent("d");
  const Lagrangian lifted(lift_times(lagrangian.body()));
  const Signature& sig = lifted.signature();
  const int new_time = sig.r;
  Expression out(sig);
  for (int a = 1; a <= sig.coordinates(); ++a) {
    Expression ev = var_deriv(lifted, a);
    if (ev.is_zero()) continue;
    out += Expression::jet(sig, a, {new_time}) * ev;
  }
  return Lagrangian(std::move(out));
}

Expression d_squared_check(const Lagrangian& lagrangian) {
  return apply_d(apply_d(lagrangian)).body();
}

Expression pullback_expr(const Expression& e, const CoordinateChange& change) {
  const auto maps = change.maps_for(e.signature());
  return substitute(e, maps, e.signature());
}

Lagrangian pullback(const Lagrangian& lagrangian, const CoordinateChange& change) {
  return Lagrangian(pullback_expr(lagrangian.body(), change));
}

std::vector<Expression> covector_check(const Lagrangian& lagrangian,
                                       const CoordinateChange& change) {
  const Signature& sig = lagrangian.signature();
  const Lagrangian pulled = pullback(lagrangian, change);
  std::vector<Expression> pulled_components;
  for (int a = 1; a <= sig.coordinates(); ++a) {
    pulled_components.push_back(pullback_expr(var_deriv(lagrangian, a), change));
  }
  std::vector<Expression> out;
  for (int b = 1; b <= sig.coordinates(); ++b) {
    Expression entry = var_deriv(pulled, b);
    for (int a = 1; a <= sig.coordinates(); ++a) {
      entry -= change.jacobian(a, b, sig) * pulled_components[static_cast<std::size_t>(a - 1)];
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Expression naturality_check(const Lagrangian& lagrangian, const CoordinateChange& change) {
  return apply_d(pullback(lagrangian, change)).body() -
         pullback_expr(apply_d(lagrangian).body(), change);
}

Expression helmholtz_check(const Covector& f) {
  const Signature& sig = f.sig;
  if (static_cast<int>(f.components.size()) != sig.coordinates()) {
    throw SignatureError("covector needs " + std::to_string(sig.coordinates()) +
                         " components, got " + std::to_string(f.components.size()));
  }
  std::optional<Parity> offset;
  for (int a = 1; a <= sig.coordinates(); ++a) {
    const Expression& fa = f[a];
    if (fa.signature() != sig) throw SignatureError("covector component in wrong signature");
    if (!is_time_independent(fa)) {
      throw DomainError("covector component " + std::to_string(a) + " depends on time");
    }
    if (fa.is_zero()) continue;
    auto p = parity_of(fa);
    if (!p) throw ParityError("covector component " + std::to_string(a) + " is inhomogeneous");
    const Parity o = *p + sig.coordinate_parity(a);
    if (offset && *offset != o) {
      throw ParityError("covector components have inconsistent parities");
    }
    offset = o;
  }
  const Signature lifted = sig.lifted();
  Expression m(lifted);
  for (int a = 1; a <= sig.coordinates(); ++a) {
    m += Expression::jet(lifted, a, {lifted.r}) * lift_times(f[a]);
  }
  return apply_d(Lagrangian(std::move(m))).body();
}

FiltrationReport filtration_check(const Lagrangian& lagrangian) {
  FiltrationReport report;
  report.order = order_of(lagrangian.body());
  report.order_of_differential = order_of(apply_d(lagrangian).body());
  report.preserved = report.order_of_differential <= report.order;
  return report;
}

}  // namespace lagc
