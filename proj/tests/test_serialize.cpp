#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hecke/errors.hpp"
#include "hecke/expr.hpp"
#include "hecke/serialize.hpp"

using hecke::Basis;
using hecke::CosetIndex;
using hecke::DoubleCosetModule;
using hecke::HeckeElt;
using hecke::KLTable;
using hecke::LaurentPoly;
using hecke::SimpleSubset;
using hecke::Weight;

namespace {

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vinv = LaurentPoly::v(-1);

struct Setup {
  fixture::Algebra a;
  std::shared_ptr<const KLTable> kl;
};

Setup setup(const std::string& type) {
  Setup s{fixture::algebra(type), nullptr};
  s.kl = std::make_shared<KLTable>(s.a.H);
  return s;
}

}  // namespace

TEST_CASE("serialize: Hecke elements round-trip bit-exactly") {
  for (const char* type : {"A1", "A2", "GL2"}) {
    auto s = setup(type);
    const auto window = s.a.E->enumerate_window(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const HeckeElt h = fixture::random_elt(*s.a.H, window, rng, 4);
      const auto j = hecke::hecke_to_json(h);
      CHECK(hecke::hecke_from_json(*s.a.H, j) == h);
      CHECK(hecke::hecke_to_json(hecke::hecke_from_json(*s.a.H, nlohmann::json::parse(j.dump()))).dump() == j.dump());
    }
  }
}

TEST_CASE("serialize: element JSON shape") {
  auto s = setup("A1");
  const auto j = hecke::element_to_json(*s.a.E, s.a.E->parse("s0 s1"));
  CHECK(j.at("lambda") == nlohmann::json::array({2}));
  CHECK(j.at("w") == "1");
  CHECK_THROWS_AS(hecke::element_from_json(*s.a.E, nlohmann::json{{"lambda", {1, 2}}, {"w", "1"}}), hecke::InputError);
  CHECK_THROWS_AS(hecke::hecke_from_json(*s.a.H, nlohmann::json{{"x", 1}}), hecke::InputError);
}

TEST_CASE("serialize: KL cache save and load") {
  auto s = setup("A2");
  for (const auto& x : s.a.E->enumerate_window(4)) s.kl->c_prime(x);
  const auto cache = hecke::kl_cache_to_json(*s.kl);
  KLTable fresh(s.a.H);
  hecke::kl_cache_load(fresh, nlohmann::json::parse(cache.dump()));
  CHECK(fresh.size() == s.kl->size());
  CHECK(hecke::kl_cache_to_json(fresh).dump() == cache.dump());
  for (const auto& x : s.a.E->enumerate_window(4)) CHECK(fresh.c_prime(x) == s.kl->c_prime(x));

  const std::string tsv = hecke::kl_table_tsv(*s.kl);
  CHECK(tsv.rfind("y\tx\tl(y)\tl(x)\tP\n", 0) == 0);
  CHECK(tsv.find("v^2 + 1") != std::string::npos);
}

TEST_CASE("serialize: basis expansion JSON and transition TSV") {
  auto s = setup("A1");
  const SimpleSubset S = SimpleSubset::full(1);
  const DoubleCosetModule mod(s.kl, S, S);
  const CosetIndex idx{Weight{1}, s.a.W->identity()};
  const auto j = hecke::basis_expansion_json(mod, Basis::KL, idx);
  CHECK(j.at("I") == nlohmann::json::array({1}));
  CHECK(j.at("basis") == "kl");
  CHECK(j.at("index").at("lambda") == nlohmann::json::array({1}));
  CHECK(j.at("index").at("z") == "1");
  CHECK(!j.at("expansion").empty());

  const auto window = mod.index_window(2);
  const std::string tsv = hecke::transition_tsv(mod, Basis::KL, Basis::Standard, window);
  CHECK(tsv.rfind("kl\tstandard\tcoeff\n", 0) == 0);
  // Unitriangular: every source index maps to itself.
  for (const auto& i : window)
    CHECK(tsv.find(mod.index_name(i) + '\t' + mod.index_name(i) + '\t') != std::string::npos);
}

TEST_CASE("expr: grammar") {
  auto s = setup("A1");
  const auto& H = *s.a.H;
  const DoubleCosetModule mod(s.kl, {}, {});
  auto eval = [&](const std::string& t) { return hecke::evaluate_expression(t, mod).value; };
  CHECK(eval("T s1") == H.T("s1"));
  CHECK(eval("T s0 s1 g:1") == H.T("s0 s1 g:1"));
  CHECK(eval("T s1 * T s1") == H.T("s1") * H.T("s1"));
  CHECK(eval("(v^2 - 1) * T s1 + v*T 1") == (v * v - 1) * H.T("s1") + v * H.one());
  CHECK(eval("T s1 - T s0") == H.T("s1") - H.T("s0"));
  CHECK(eval("-T s1") == -H.T("s1"));
  CHECK(eval("theta 1") == H.theta(Weight{1}));
  CHECK(eval("theta omega") == H.theta(Weight{1}));
  CHECK(eval("theta -2") == H.theta(Weight{-2}));
  CHECK(eval("theta 0") == H.one());
  CHECK(eval("Cprime s0 s1") == s.kl->c_prime(s.a.E->parse("s0 s1")));
  CHECK(eval("(T s1 + T s0) * theta 1") == (H.T("s1") + H.T("s0")) * H.theta(Weight{1}));
  CHECK(eval("3") == H.scalar(3));
  CHECK_THROWS_AS(eval("T s7"), hecke::InputError);
  CHECK_THROWS_AS(eval("theta 1,2"), hecke::InputError);
  CHECK_THROWS_AS(eval("T s1 *"), hecke::InputError);
  CHECK_THROWS_AS(eval("(T s1"), hecke::InputError);
  CHECK_THROWS_AS(eval("T s1 )"), hecke::InputError);
}

TEST_CASE("expr: chi keeps the preimage; m(...) uses the module") {
  auto s = setup("A1");
  const auto& H = *s.a.H;
  const SimpleSubset S = SimpleSubset::full(1);
  const DoubleCosetModule mod(s.kl, S, S);
  for (const char* text : {"chi(T 1)", "chi T 1"}) {
    const auto r = hecke::evaluate_expression(text, mod);
    REQUIRE(r.preimage);
    CHECK(*r.preimage == H.one());
    CHECK(r.value == mod.chi(H.one()).carrier);
  }
  const auto sum = hecke::evaluate_expression("chi(theta 1) + v*chi(T s1)", mod);
  REQUIRE(sum.preimage);
  CHECK(*sum.preimage == H.theta(Weight{1}) + v * H.T("s1"));

  // m(omega, 1) for I = J = S is the length-zero element with translation omega.
  const auto cp = hecke::evaluate_expression("Cprime m(omega,1)", mod);
  CHECK(cp.value == H.T(s.a.E->gamma_with_translation(Weight{1})));
  CHECK(hecke::evaluate_expression("Cprime m(1;1)", mod).value == cp.value);
  CHECK_THROWS_AS(hecke::evaluate_expression("Cprime m(-1;1)", mod), hecke::InputError);
  const auto coords = mod.coords(Basis::Standard, mod.chi(cp.value));
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->first == CosetIndex{Weight{1}, s.a.W->identity()});
  CHECK(coords.begin()->second == LaurentPoly(1));
}

TEST_CASE("expr: rendering of Bernstein coordinates") {
  auto s = setup("A1");
  const DoubleCosetModule mod(s.kl, {}, {});
  const auto e = mod.from_carrier(hecke::evaluate_expression("theta 0", mod).value);
  CHECK(hecke::render_coords(mod, Basis::Bernstein, mod.coords(Basis::Bernstein, e)) == "θ_0 T_1: 1\n");
  CHECK(hecke::render_coords(mod, Basis::Standard, {}) == "0\n");
}

TEST_CASE("expr: fundamental weights") {
  auto s = setup("A2");
  CHECK(hecke::fundamental_weight(*s.a.datum, 2) == Weight{0, 1});
  auto adj = setup("A1adj");
  CHECK_THROWS_AS(hecke::fundamental_weight(*adj.a.datum, 1), hecke::InputError);
}
