#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/laurent.hpp"

using hecke::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(0, 4), e(-4, 4), c(-5, 5);
  LaurentPoly p;
  for (int k = n(rng); k > 0; --k) p += LaurentPoly::monomial(c(rng), e(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent: bar and evaluation") {
  CHECK(LaurentPoly::v(2).bar() == LaurentPoly::v(-2));
  CHECK(LaurentPoly(3).bar() == LaurentPoly(3));
  const LaurentPoly sym = LaurentPoly::v(1) + LaurentPoly::v(-1);
  CHECK(sym.bar() == sym);
  CHECK((LaurentPoly::v(2) - 1).eval_at_one() == 0);
  CHECK(sym.eval_at_one() == 2);
  CHECK(((LaurentPoly::v(2) - 1) * (LaurentPoly::v(2) + 1)).eval_at_one() == 0);
}

TEST_CASE("laurent: rendering round trip") {
  CHECK((LaurentPoly::v(2) - 1).to_string() == "v^2 - 1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((LaurentPoly::monomial(-3, -1) + LaurentPoly::v(1)).to_string() == "v - 3*v^-1");
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK(LaurentPoly::parse(" v^2 -1 ") == LaurentPoly::v(2) - 1);
  CHECK_THROWS_AS(LaurentPoly::parse("v^"), hecke::InputError);
}

TEST_CASE("laurent: ring axioms and homomorphisms") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
      CHECK(*(a * b).valuation() == *a.valuation() + *b.valuation());
      CHECK((a * b).divide_exact(b) == a);
    }
  }
}

TEST_CASE("laurent: overflow is reported") {
  const LaurentPoly big = LaurentPoly::monomial(INT64_MAX / 2 + 1, 0);
  CHECK_THROWS_AS(big * 4, hecke::InternalError);
}
