#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "hecke/errors.hpp"

using hecke::BernsteinForm;
using hecke::ExtAffElt;
using hecke::HeckeElt;
using hecke::LaurentPoly;
using hecke::Weight;

namespace {

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vinv = LaurentPoly::v(-1);
const LaurentPoly q = LaurentPoly::v(2);

/// Order of g_a g_b in W_ex, or 0 when larger than 12.
int braid_order(const hecke::ExtAffineWeyl& E, int a, int b) {
  const ExtAffElt ab = E.multiply(E.generator(a), E.generator(b));
  ExtAffElt p = ab;
  for (int m = 1; m <= 12; ++m) {
    if (p == E.identity()) return m;
    p = E.multiply(p, ab);
  }
  return 0;
}

}  // namespace

TEST_CASE("hecke: quadratic and braid relations") {
  for (const char* type : {"A1", "A2", "B2", "G2", "GL2"}) {
    CAPTURE(type);
    auto a = fixture::algebra(type);
    const auto& H = *a.H;
    const auto& E = *a.E;
    for (int k = 0; k < E.num_generators(); ++k) {
      const HeckeElt Ts = H.T(E.generator(k));
      CHECK(Ts * Ts == q * H.one() + (q - 1) * Ts);
      for (int l = k + 1; l < E.num_generators(); ++l) {
        const int m = braid_order(E, k, l);
        if (m == 0) continue;
        HeckeElt left = H.one(), right = H.one();
        for (int j = 0; j < m; ++j) {
          left = H.mul_gen_right(left, j % 2 ? l : k);
          right = H.mul_gen_right(right, j % 2 ? k : l);
        }
        CHECK(left == right);
      }
    }
  }
  auto a1 = fixture::algebra("A1");
  const ExtAffElt gamma = a1.E->parse("g:1");
  CHECK(a1.H->T(gamma) * a1.H->T(gamma) == a1.H->one());
  auto a2 = fixture::algebra("A2");
  CHECK(a2.H->T("s1") * a2.H->T("s2") == a2.H->T("s1 s2"));
}

TEST_CASE("hecke: associativity on random triples") {
  for (const char* type : {"A1", "A2", "B2"}) {
    CAPTURE(type);
    auto a = fixture::algebra(type);
    const auto window = a.E->enumerate_window(4);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const HeckeElt x = fixture::random_elt(*a.H, window, rng), y = fixture::random_elt(*a.H, window, rng),
                     z = fixture::random_elt(*a.H, window, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * a.H->one() == x);
      CHECK(a.H->one() * x == x);
    }
  }
}

TEST_CASE("hecke: inverses and bar involution") {
  auto a = fixture::algebra("A1");
  const auto& H = *a.H;
  const ExtAffElt s = a.E->parse("s1");
  CHECK(H.invert_T(a.E->identity()) == H.one());
  CHECK(H.invert_T(s) == LaurentPoly::v(-2) * H.T(s) + (LaurentPoly::v(-2) - 1) * H.one());
  const ExtAffElt gamma = a.E->parse("g:1");
  CHECK(H.invert_T(gamma) == H.T(gamma));
  CHECK(H.bar(H.one()) == H.one());
  CHECK(H.bar(H.T(s)) == H.invert_T(s));
  CHECK(H.bar(v * H.one()) == vinv * H.one());

  for (const char* type : {"A1", "A2", "B2"}) {
    CAPTURE(type);
    auto b = fixture::algebra(type);
    const auto window = b.E->enumerate_window(3);
    for (const auto& x : window) CHECK(b.H->invert_T(x) * b.H->T(x) == b.H->one());
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const HeckeElt x = fixture::random_elt(*b.H, window, rng), y = fixture::random_elt(*b.H, window, rng);
      CHECK(b.H->bar(b.H->bar(x)) == x);
      CHECK(b.H->bar(x * y) == b.H->bar(x) * b.H->bar(y));
    }
  }
}

TEST_CASE("hecke: theta elements in A1") {
  auto a = fixture::algebra("A1");
  const auto& H = *a.H;
  CHECK(H.theta(Weight{0}) == H.one());
  CHECK(H.theta(Weight{1}) == vinv * H.T(a.E->translation(Weight{1})));
  const ExtAffElt gamma = a.E->parse("g:1");
  CHECK(H.theta(Weight{-1}) == vinv * H.T(a.E->translation(Weight{-1})) + (vinv - v) * H.T(gamma));
}

TEST_CASE("hecke: theta is a homomorphism independent of decomposition") {
  for (const char* type : {"A1", "A2", "B2", "GL2"}) {
    CAPTURE(type);
    auto a = fixture::algebra(type);
    const auto& H = *a.H;
    const auto& d = *a.datum;
    std::mt19937 rng(29);
    Weight shift = d.zero();
    for (int i = 0; i < d.semisimple_rank(); ++i) shift += d.dominant_correction(i);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight l = fixture::random_weight(rng, d.rank(), 2), m = fixture::random_weight(rng, d.rank(), 2);
      CHECK(H.theta(l) * H.theta(m) == H.theta(l + m));
      auto [mu, nu] = d.dominant_difference(l);
      CHECK(H.theta_from(mu + shift, nu + shift) == H.theta(l));
    }
  }
}

TEST_CASE("hecke: W-invariant theta sums are central") {
  for (const char* type : {"A1", "A2", "B2"}) {
    CAPTURE(type);
    auto a = fixture::algebra(type);
    const auto& H = *a.H;
    const auto& W = *a.W;
    for (const Weight& lambda : a.E->weight_window(1)) {
      if (!a.datum->is_dominant_for(lambda, a.datum->all_simple())) continue;
      std::set<Weight> orbit;
      for (auto w : W.elements()) orbit.insert(W.act(w, lambda));
      HeckeElt c = H.zero();
      for (const auto& mu : orbit) c += H.theta(mu);
      for (int i = 0; i < a.datum->semisimple_rank(); ++i) {
        const HeckeElt Ts = H.T(W.simple(i));
        CHECK(c * Ts == Ts * c);
      }
    }
  }
}

TEST_CASE("hecke: theta past T_s") {
  auto a = fixture::algebra("A1");
  const auto& H = *a.H;
  auto r0 = H.theta_past_Ts(Weight{0}, 0);
  CHECK(r0.moved == Weight{0});
  CHECK(r0.remainder.empty());
  auto r1 = H.theta_past_Ts(Weight{1}, 0);
  CHECK(r1.moved == Weight{-1});
  CHECK(r1.remainder == std::map<Weight, LaurentPoly>{{Weight{1}, 1}});
  auto rm = H.theta_past_Ts(Weight{-1}, 0);
  CHECK(rm.moved == Weight{1});
  CHECK(rm.remainder == std::map<Weight, LaurentPoly>{{Weight{1}, -1}});

  for (const char* type : {"A1", "A2", "B2", "G2", "GL2"}) {
    CAPTURE(type);
    auto b = fixture::algebra(type);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const Weight l = fixture::random_weight(rng, b.datum->rank(), 3);
      for (int i = 0; i < b.datum->semisimple_rank(); ++i)
        CHECK(b.H->expand(b.H->theta_past_Ts(l, i), i) == b.H->theta(l) * b.H->T(b.W->simple(i)));
    }
  }
}

TEST_CASE("hecke: Bernstein forms") {
  auto a = fixture::algebra("A1");
  const auto& H = *a.H;
  const auto& W = *a.W;
  CHECK(H.to_bernstein(H.one()) == BernsteinForm{{{Weight{0}, W.identity()}, 1}});
  CHECK(H.to_bernstein(H.T(a.E->translation(Weight{1}))) == BernsteinForm{{{Weight{1}, W.identity()}, v}});
  CHECK(H.to_bernstein(H.T(a.E->parse("g:1"))) ==
        BernsteinForm{{{Weight{1}, W.simple(0)}, vinv}, {{Weight{1}, W.identity()}, vinv - v}});

  for (const char* type : {"A1", "A2", "B2", "GL2"}) {
    CAPTURE(type);
    auto b = fixture::algebra(type);
    for (const auto& x : b.E->enumerate_window(type[1] == '2' ? 4 : 6, 1)) {
      const BernsteinForm f = b.H->to_bernstein(b.H->T(x));
      CHECK(b.H->from_bernstein(f) == b.H->T(x));
    }
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const Weight l = fixture::random_weight(rng, b.datum->rank(), 2);
      for (auto w : b.W->elements()) {
        const BernsteinForm single{{{l, w}, 1}};
        const HeckeElt h = b.H->from_bernstein(single);
        CHECK(b.H->to_bernstein(h) == single);
        const LaurentPoly lead = h.coeff({l, w});
        CHECK(lead.is_unit());
      }
    }
  }
}
