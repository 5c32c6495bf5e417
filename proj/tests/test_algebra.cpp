#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "support.hpp"

using namespace lagc;
using lagc::testing::E;

namespace {

const Signature kEven(1, 0, 1, 0);
const Signature kOdd(0, 2, 1, 0);

Symbol theta(int k) { return Symbol::jet(kOdd, k); }

}  // namespace

TEST_CASE("canonicalize: odd square annihilates") {
  const RawTerm raw{Rational(5), {theta(1), theta(1)}};
  CHECK(Expression::canonicalize(kOdd, std::span(&raw, 1)).is_zero());
}

TEST_CASE("canonicalize: one odd transposition flips the sign") {
  const RawTerm raw{Rational(1), {theta(2), theta(1)}};
  const Expression e = Expression::canonicalize(kOdd, std::span(&raw, 1));
  CHECK(e == -E(kOdd, "th1*th2"));
  CHECK(print(e) == "-th1*th2");
}

TEST_CASE("canonicalize: even factors commute and merge") {
  const Symbol x = Symbol::jet(kEven, 1);
  const Symbol v = Symbol::jet(kEven, 1, MultiIndex::from_sequence(kEven, std::vector{1})->second);
  const std::vector<RawTerm> raw{{Rational(1), {v, x}}, {Rational(1), {x, v}}};
  CHECK(Expression::canonicalize(kEven, raw) == E(kEven, "2*x1*x1[1]"));
}

TEST_CASE("canonicalize rejects symbols outside the signature") {
  const Signature big(3, 0, 1, 0);
  const RawTerm raw{Rational(1), {Symbol::jet(big, 3)}};
  CHECK_THROWS_AS(Expression::canonicalize(kEven, std::span(&raw, 1)), SignatureError);
  CHECK_THROWS_AS(Symbol::jet(kEven, 2), SignatureError);
  CHECK_THROWS_AS(Expression::jet(kEven, 1, {2}), SignatureError);
}

TEST_CASE("add / mul / scale") {
  const Expression t1 = E(kOdd, "th1");
  const Expression t2 = E(kOdd, "th2");
  CHECK(mul(t1, t1).is_zero());
  CHECK((mul(t1, t2) + mul(t2, t1)).is_zero());
  const Expression l = E(kEven, "1/2*x1[1]^2 + 3*x1");
  CHECK(add(l, scale(-1, l)).is_zero());
  CHECK_THROWS_AS(add(l, t1), SignatureError);
  CHECK_THROWS_AS(mul(l, t1), SignatureError);
}

TEST_CASE("parity_of") {
  const Signature sig(1, 1, 1, 0);
  CHECK(parity_of(E(sig, "x1*x1[1]")) == Parity::even());
  CHECK(parity_of(E(sig, "th1")) == Parity::odd());
  CHECK_FALSE(parity_of(E(sig, "x1 + th1")).has_value());
  // odd time index flips the parity of a jet
  const Signature st(1, 1, 1, 1);
  CHECK(parity_of(E(st, "x1[2]")) == Parity::odd());
  CHECK(parity_of(E(st, "th1[2]")) == Parity::even());
}

TEST_CASE("multi-index conventions") {
  const Signature sig(1, 0, 1, 2);  // times: 1 even, 2 and 3 odd
  // x[3 2] = D3 D2 x = -D2 D3 x
  CHECK(E(sig, "x1[3 2]") == -E(sig, "x1[2 3]"));
  CHECK(E(sig, "x1[2 2]").is_zero());
  CHECK(E(sig, "x1[2 1 3]") == E(sig, "x1[1 2 3]"));
  CHECK(E(sig, "x1[3 1 2]") == -E(sig, "x1[1 2 3]"));
  const auto mu = MultiIndex::from_sequence(sig, std::vector{3, 1, 1, 2})->second;
  CHECK(mu.even_part() == std::vector<std::uint8_t>{1, 1});
  CHECK(mu.odd_part() == std::vector<std::uint8_t>{2, 3});
  CHECK(mu.order() == 4);
  CHECK(mu.parity() == Parity::even());
}

TEST_CASE("substitute: jet prolongation of a path") {
  const Signature sig(1, 0, 1, 0);
  const std::vector<Expression> line{E(sig, "t1")};
  CHECK(substitute(E(sig, "x1[1]^2"), line, sig) == E(sig, "1"));
  const std::vector<Expression> cubic{E(sig, "t1^3")};
  CHECK(substitute(E(sig, "x1[1 1]"), cubic, sig) == E(sig, "6*t1"));

  const Signature odd(0, 1, 0, 1);
  const std::vector<Expression> tau{E(odd, "tau1")};
  CHECK(substitute(E(odd, "th1"), tau, odd) == E(odd, "tau1"));
  CHECK(substitute(E(odd, "th1[1]"), tau, odd) == E(odd, "1"));
}

TEST_CASE("substitute errors") {
  const Signature sig(1, 1, 1, 1);
  const std::vector<Expression> wrong_parity{E(sig, "t1"), E(sig, "t1")};
  CHECK_THROWS_AS(substitute(E(sig, "x1"), wrong_parity, sig), ParityError);
  const std::vector<Expression> unbound{E(sig, "t1")};
  CHECK_THROWS_AS(substitute(E(sig, "x1"), unbound, sig), SignatureError);
}

TEST_CASE("parse / print") {
  const Signature sig(1, 0, 1, 0);
  const Expression e = parse("1/2 * x1[1]^2", sig);
  CHECK(e.size() == 1);
  CHECK(e.terms().begin()->second == Rational(1, 2));
  CHECK(print(e) == "1/2*x1[1]^2");
  CHECK(print(parse("x1[1 1]", sig)) == "x1[1 1]");
  CHECK(print(parse("0", sig)) == "0");
  CHECK(print(parse("-(x1 - 2)*3", sig)) == "6 - 3*x1");
  CHECK(print(parse("4/6", sig)) == "2/3");

  try {
    (void)parse("x1[1", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.column() == 5);
  }
  CHECK_THROWS_AS(parse("y1", sig), ParseError);
  CHECK_THROWS_AS(parse("x2", sig), ParseError);
  CHECK_THROWS_AS(parse("x1[2]", sig), ParseError);
  CHECK_THROWS_AS(parse("tau1", sig), ParseError);
  CHECK_THROWS_AS(parse("1/0", sig), ParseError);
  CHECK_THROWS_AS(parse("x1 +", sig), ParseError);
  CHECK_THROWS_AS(parse("", sig), ParseError);
  CHECK_THROWS_AS(parse("(x1", sig), ParseError);
}

TEST_CASE("signature text") {
  CHECK(parse_signature("sig 2|1 1|1") == Signature(2, 1, 1, 1));
  CHECK(parse_signature("3|0 2|0") == Signature(3, 0, 2, 0));
  CHECK_THROWS_AS(parse_signature("sig 2 1"), ParseError);
  CHECK_THROWS_AS(Signature(-1, 0, 0, 0), SignatureError);
  CHECK(to_string(Signature(2, 1, 1, 1)) == "2|1 1|1");
}

TEST_CASE("documents") {
  std::istringstream in("# header comment\nsig 1|1 1|0\nx1 # trailing\n\nth1*x1[1]\n");
  const Document doc = read_document(in);
  REQUIRE(doc.sig);
  CHECK(*doc.sig == Signature(1, 1, 1, 0));
  REQUIRE(doc.body.size() == 2);
  CHECK(doc.body[1].number == 5);
  CHECK(parse_lines(doc).size() == 2);

  std::istringstream bad("sig 1|0 1|0\nx1\nx1 +* x1\n");
  try {
    (void)parse_lines(read_document(bad));
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 3);
    CHECK(err.column() == 5);
  }

  std::istringstream missing("x1\n");
  CHECK_THROWS_AS(read_document(missing), ParseError);

  std::istringstream path("sig 1|1 1|1\npath\nth1 = tau1*t1\nx1 = t1^2\n");
  const Document pdoc = read_document(path);
  CHECK(pdoc.section == "path");
  const auto bindings = parse_bindings(pdoc, *pdoc.sig);
  CHECK(bindings[0] == E(*pdoc.sig, "t1^2"));
  CHECK(bindings[1] == E(*pdoc.sig, "tau1*t1"));
}

// Property suites --------------------------------------------------------

TEST_CASE("property: canonicalize is idempotent") {
  CorpusRng rng(11);
  for (const auto& sig : lagc::testing::property_signatures()) {
    for (int i = 0; i < 60; ++i) {
      std::vector<RawTerm> raw;
      for (int k = 0; k < 4; ++k) raw.push_back(lagc::testing::random_raw_term(sig, rng, 5, 2));
      const Expression once = Expression::canonicalize(sig, raw);
      const auto again_raw = lagc::testing::to_raw(once);
      CHECK(Expression::canonicalize(sig, again_raw) == once);
    }
  }
}

TEST_CASE("property: repeated odd symbols annihilate") {
  CorpusRng rng(12);
  const Signature sig(1, 2, 1, 1);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 200; ++i) {
    RawTerm raw = lagc::testing::random_raw_term(sig, rng, 4, 2);
    auto odd = std::find_if(raw.factors.begin(), raw.factors.end(), [](const Symbol& s) { return s.is_odd(); });
    if (odd == raw.factors.end()) continue;
    const Symbol dup = *odd;
    raw.factors.insert(raw.factors.begin() + rng.uniform(0, static_cast<int>(raw.factors.size())), dup);
    CHECK(Expression::canonicalize(sig, std::span(&raw, 1)).is_zero());
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("property: mul is associative, distributive and super-commutative") {
  CorpusRng rng(13);
  for (const auto& sig : lagc::testing::property_signatures()) {
    for (int i = 0; i < 50; ++i) {
      const Parity pa(rng.coin());
      const Parity pb(rng.coin());
      const Expression a = random_expression(sig, rng, 3, 2, true, pa);
      const Expression b = random_expression(sig, rng, 3, 2, true, pb);
      const Expression c = random_expression(sig, rng, 3, 2, true);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      const Rational sign = (pa * pb).is_odd() ? -1 : 1;
      CHECK(a * b == sign * (b * a));
    }
  }
}

TEST_CASE("property: parse(print(e)) == e") {
  CorpusRng rng(14);
  for (const auto& sig : lagc::testing::property_signatures()) {
    for (int i = 0; i < 60; ++i) {
      const Expression e = random_expression(sig, rng, 4, 3, true);
      CHECK(parse(print(e), sig) == e);
    }
  }
}
