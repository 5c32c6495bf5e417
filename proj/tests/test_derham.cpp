#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "support.hpp"

using namespace lagc;
using lagc::testing::E;
using lagc::testing::L;

namespace {

PolyForm form(int n, int degree, std::vector<int> idx, const std::string& coeff) {
  PolyForm w(n, degree);
  w.add(std::move(idx), E(Signature(n, 0, 0, 0), coeff));
  return w;
}

}  // namespace

TEST_CASE("form_sign") {
  CHECK(form_sign(0) == 1);
  CHECK(form_sign(1) == 1);
  CHECK(form_sign(2) == -1);
  CHECK(form_sign(3) == -1);
  CHECK(form_sign(4) == 1);
}

TEST_CASE("PolyForm::add sorts with sign and drops repeats") {
  PolyForm w(3, 2);
  w.add({2, 1}, E(Signature(3, 0, 0, 0), "x3"));
  CHECK(w == form(3, 2, {1, 2}, "-x3"));
  w.add({3, 3}, E(Signature(3, 0, 0, 0), "1"));
  CHECK(w == form(3, 2, {1, 2}, "-x3"));
  CHECK_THROWS(PolyForm(2, 4));
}

TEST_CASE("form_to_lagrangian") {
  const Lagrangian f = form_to_lagrangian(form(2, 0, {}, "x1^2 + x2"));
  CHECK(f.signature() == Signature(2, 0, 0, 0));
  CHECK(f.body() == E(f.signature(), "x1^2 + x2"));

  const Lagrangian one = form_to_lagrangian(form(2, 1, {2}, "x1"));
  CHECK(one.body() == E(Signature(2, 0, 1, 0), "x1*x2[1]"));

  const Lagrangian two = form_to_lagrangian(form(2, 2, {1, 2}, "1"));
  CHECK(two.body() == E(Signature(2, 0, 2, 0), "-x1[1]*x2[2] + x1[2]*x2[1]"));
}

TEST_CASE("lagrangian_to_form") {
  CHECK(lagrangian_to_form(L(Signature(2, 0, 1, 0), "x1*x2[1]")) == form(2, 1, {2}, "x1"));
  CHECK(lagrangian_to_form(L(Signature(2, 0, 0, 0), "x1*x2")) == form(2, 0, {}, "x1*x2"));
  CHECK_THROWS_AS(lagrangian_to_form(L(Signature(1, 0, 1, 0), "1/2*x1[1]^2")), DomainError);
  CHECK_THROWS_AS(lagrangian_to_form(L(Signature(2, 0, 2, 0), "x1[1]*x2[2]")), DomainError);
  CHECK_THROWS_AS(lagrangian_to_form(L(Signature(1, 0, 1, 0), "x1[1 1]")), DomainError);
  CHECK_THROWS(lagrangian_to_form(L(Signature(1, 1, 1, 0), "th1[1]*th1")));
}

TEST_CASE("exterior_deriv") {
  CHECK(exterior_deriv(form(2, 1, {2}, "x1")) == form(2, 2, {1, 2}, "1"));
  PolyForm df(2, 1);
  df.add({1}, E(Signature(2, 0, 0, 0), "2*x1*x2"));
  df.add({2}, E(Signature(2, 0, 0, 0), "x1^2"));
  CHECK(exterior_deriv(form(2, 0, {}, "x1^2*x2")) == df);
  CHECK(exterior_deriv(form(2, 2, {1, 2}, "x1")).is_zero());
  CHECK(exterior_deriv(form(2, 2, {1, 2}, "x1")).degree() == 3);
}

TEST_CASE("bridge_check examples") {
  CHECK(bridge_check(form(2, 1, {2}, "x1")).is_zero());
  CHECK(bridge_check(form(3, 0, {}, "x1^2*x3 + x2")).is_zero());
  CHECK(apply_d(form_to_lagrangian(form(2, 1, {1}, "1"))).body().is_zero());
}

TEST_CASE("read_form") {
  std::istringstream in("sig 3|0 0|0\nform\n1 2 : x3\n3 1 : 2\n");
  const PolyForm w = read_form(read_document(in));
  PolyForm expected(3, 2);
  expected.add({1, 2}, E(Signature(3, 0, 0, 0), "x3"));
  expected.add({1, 3}, E(Signature(3, 0, 0, 0), "-2"));
  CHECK(w == expected);

  std::istringstream zero("sig 2|0 0|0\nform\n: x1*x2\n");
  CHECK(read_form(read_document(zero)) == form(2, 0, {}, "x1*x2"));

  std::istringstream mixed("sig 2|0 0|0\nform\n1 : x1\n1 2 : x2\n");
  CHECK_THROWS_AS(read_form(read_document(mixed)), ParseError);
}

TEST_CASE("cohomology_dims examples") {
  CHECK(cohomology_dims(2, 2) == std::vector<int>{1, 0, 0});
  CHECK(cohomology_dims(1, 3) == std::vector<int>{1, 0});
  CHECK(cohomology_dims(0, 2) == std::vector<int>{1});
  CHECK_THROWS_AS(cohomology_dims(5, 2), DomainError);
  CHECK_THROWS_AS(cohomology_dims(2, 5), DomainError);
}

TEST_CASE("oracle: cohomology against a brute-force rank computation") {
  for (int n = 0; n <= 3; ++n) {
    for (int bound = 0; bound <= 3; ++bound) {
      CAPTURE(n);
      CAPTURE(bound);
      CHECK(cohomology_dims(n, bound) == oracle::brute_force_cohomology(n, bound));
    }
  }
}

// Exhaustive suites ------------------------------------------------------

TEST_CASE("exhaustive: bridge, round trip and d o d on n = 3") {
  const auto forms = lagc::testing::monomial_forms(3, 3, 2);
  CHECK(forms.size() == 80);
  for (const auto& w : forms) {
    CHECK(bridge_check(w).is_zero());
    CHECK(lagrangian_to_form(form_to_lagrangian(w)) == w);
    if (w.degree() < 3) CHECK(exterior_deriv(exterior_deriv(w)).is_zero());
  }
}

TEST_CASE("property: Lagrangian round trip on sums of forms") {
  CorpusRng rng(51);
  const auto forms = lagc::testing::monomial_forms(3, 2, 2);
  for (int i = 0; i < 200; ++i) {
    const int degree = rng.uniform(0, 2);
    PolyForm w(3, degree);
    for (int k = 0; k < 3; ++k) {
      const auto& pick = forms[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(forms.size()) - 1))];
      if (pick.degree() != degree) continue;
      for (const auto& [idx, c] : pick.coefficients()) w.add(idx, Rational(rng.uniform(-3, 3)) * c);
    }
    const Lagrangian l = form_to_lagrangian(w);
    CHECK(lagrangian_to_form(l) == w);
    CHECK(bridge_check(w).is_zero());
  }
}
