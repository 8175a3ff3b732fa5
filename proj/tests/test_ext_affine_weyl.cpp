#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hecke/errors.hpp"
#include "hecke/oracles.hpp"

using hecke::ExtAffElt;
using hecke::SimpleSubset;
using hecke::Weight;

TEST_CASE("ext affine: A1 arithmetic and lengths") {
  auto g = fixture::groups("A1");
  const auto& E = *g.E;
  const ExtAffElt s = E.from_finite(g.W->simple(0));
  const ExtAffElt tw = E.translation(Weight{1});
  const ExtAffElt ta = E.translation(Weight{2});
  CHECK(E.multiply(tw, tw) == ta);
  CHECK(E.multiply(s, tw) == E.multiply(E.translation(Weight{-1}), s));
  const ExtAffElt gamma = E.multiply(tw, s);
  CHECK(E.multiply(gamma, gamma) == E.identity());
  CHECK(E.length(E.identity()) == 0);
  CHECK(E.length(tw) == 1);
  CHECK(E.length(gamma) == 0);
  CHECK(E.length(ta) == 2);

  auto [y, gm] = E.waf_gamma_decompose(tw);
  CHECK(gm == gamma);
  CHECK(E.multiply(y, gm) == tw);
  CHECK(E.waf_gamma_decompose(ta).second == E.identity());
  CHECK(E.waf_gamma_decompose(s).first == s);

  const auto& word = E.reduced_word(ta);
  CHECK(word.letters == std::vector<int>{1, 0});
  CHECK(E.generator_name(1) == "s0");
  CHECK(word.gamma == E.identity());
  CHECK(E.reduced_word(gamma).letters.empty());

  CHECK(E.bruhat_leq(s, ta));
  CHECK_FALSE(E.bruhat_leq(gamma, s));
  CHECK(E.bruhat_leq(ta, ta));
}

TEST_CASE("ext affine: A2 lengths") {
  auto g = fixture::groups("A2");
  const auto& E = *g.E;
  CHECK(E.length(E.translation(Weight{1, 1})) == 4);
  CHECK(E.reduced_word(E.parse("s1 s2")).letters == std::vector<int>{0, 1});
}

TEST_CASE("ext affine: canonical and minimal representatives") {
  auto a1 = fixture::groups("A1");
  const SimpleSubset S1 = SimpleSubset::full(1);
  auto [lam, z] = a1.E->canonical_rep(a1.E->translation(Weight{-1}), S1, S1);
  CHECK(lam == Weight{1});
  CHECK(z == a1.W->identity());
  auto [lam0, z0] = a1.E->canonical_rep(a1.E->identity(), S1, S1);
  CHECK(lam0 == Weight{0});
  CHECK(z0 == a1.W->identity());
  const ExtAffElt s = a1.E->from_finite(a1.W->simple(0));
  CHECK(a1.E->minimal_length_rep(Weight{1}, a1.W->identity(), S1, S1) == a1.E->multiply(a1.E->translation(Weight{1}), s));
  const ExtAffElt m2 = a1.E->minimal_length_rep(Weight{2}, a1.W->identity(), S1, S1);
  CHECK(m2 == a1.E->multiply(a1.E->translation(Weight{2}), s));
  CHECK(a1.E->length(m2) == 1);
  CHECK_THROWS_AS(a1.E->minimal_length_rep(Weight{-1}, a1.W->identity(), S1, S1), hecke::InputError);

  auto a2 = fixture::groups("A2");
  const SimpleSubset I = SimpleSubset::from_indices({0}), J = SimpleSubset::from_indices({1});
  auto [l2, z2] = a2.E->canonical_rep(a2.E->from_finite(a2.W->parse("s1 s2 s1")), I, J);
  CHECK(l2 == Weight{0, 0});
  CHECK(z2 == a2.W->parse("s2 s1"));
  CHECK(a2.E->minimal_length_rep(Weight{0, 0}, z2, I, J) == a2.E->from_finite(z2));
}

TEST_CASE("ext affine: window sizes") {
  auto a1 = fixture::groups("A1");
  CHECK(a1.E->enumerate_window(0).size() == 2);
  CHECK(a1.E->enumerate_window(1).size() == 6);
  CHECK(fixture::groups("A2").E->enumerate_window(0).size() == 3);
  CHECK(fixture::groups("A2adj").E->enumerate_window(0).size() == 1);
  CHECK(fixture::groups("A1adj").E->enumerate_window(0).size() == 1);
}

TEST_CASE("ext affine: length cross-validation") {
  const std::pair<const char*, int> cases[] = {{"A1", 6}, {"A2", 4}, {"B2", 4}, {"G2", 3}, {"A2adj", 4}, {"GL2", 4}};
  for (auto [type, n] : cases) {
    CAPTURE(type);
    auto g = fixture::groups(type);
    const auto& E = *g.E;
    const auto window = E.enumerate_window(n, 1);
    const auto bfs = hecke::oracle::affine_lengths_bfs(E, n, 1);
    CHECK(window.size() == bfs.size());
    for (const auto& x : window) {
      const int len = E.length(x);
      CHECK(len == static_cast<int>(E.reduced_word(x).letters.size()));
      CHECK(bfs.at(x) == len);
      CHECK(E.evaluate(E.reduced_word(x)) == x);
      CHECK(E.parse(E.name(x)) == x);
      CHECK(E.multiply(E.inverse(x), x) == E.identity());
      for (int k = 0; k < E.num_generators(); ++k) CHECK(std::abs(E.length(E.mul_gen_right(x, k)) - len) == 1);
      for (const auto& gm : E.gamma_elements(1)) CHECK(E.length(E.multiply(x, gm)) == len);
    }
  }
}

TEST_CASE("ext affine: Bruhat order agrees with subwords") {
  for (const char* type : {"A1", "A2"}) {
    CAPTURE(type);
    auto g = fixture::groups(type);
    const auto window = g.E->enumerate_window(type[1] == '1' ? 5 : 3);
    for (const auto& x : window)
      for (const auto& y : window) CHECK(g.E->bruhat_leq(x, y) == hecke::oracle::affine_bruhat_subword(*g.E, x, y));
  }
}

TEST_CASE("ext affine: double coset representatives") {
  std::mt19937 rng(5);
  for (const char* type : {"A1", "A2", "B2"}) {
    CAPTURE(type);
    auto g = fixture::groups(type);
    const auto& E = *g.E;
    const auto& W = *g.W;
    const int r = g.datum->semisimple_rank();
    for (std::uint32_t im = 0; im < (1U << r); ++im)
      for (std::uint32_t jm = 0; jm < (1U << r); ++jm) {
        const SimpleSubset I(im), J(jm);
        const auto pi = W.parabolic_elements(I), pj = W.parabolic_elements(J);
        for (const auto& x : E.enumerate_window(3, 1)) {
          const auto rep = E.canonical_rep(x, I, J);
          std::uniform_int_distribution<std::size_t> ui(0, pi.size() - 1), uj(0, pj.size() - 1);
          const ExtAffElt moved = E.multiply(E.multiply(E.from_finite(pi[ui(rng)]), x), E.from_finite(pj[uj(rng)]));
          CHECK(E.canonical_rep(moved, I, J) == rep);
          const auto coset = hecke::oracle::double_coset(E, x, I, J);
          CHECK(coset.count({rep.first, rep.second}) == 1);
          const ExtAffElt m = E.minimal_length_rep(rep.first, rep.second, I, J);
          CHECK(coset.count(m) == 1);
          for (const auto& y : coset) {
            if (y == m) continue;
            CHECK(E.length(y) > E.length(m));
            auto [w1, mm, w2] = E.double_coset_decompose(y, I, J);
            CHECK(mm == m);
            CHECK(E.length(y) == W.length(w1) + E.length(m) + W.length(w2));
          }
        }
      }
  }
}
