#include <algorithm>
#include <map>
#include <set>

#include "checks.hpp"
#include "hecke/oracles.hpp"

namespace hecke::verify::detail {

namespace {

Outcome reflection(const Context& c) {
  Probe p;
  const RootDatum& d = *c.datum;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Weight l = random_weight(rng, d.rank(), 5);
    for (int k = 0; k < d.num_positive_roots(); ++k) {
      const Root& rt = d.roots()[static_cast<std::size_t>(k)];
      const Weight r = d.reflect_root(k, l);
      p.expect(r == l - RootDatum::pairing_with(l, rt.coroot) * rt.root && d.reflect_root(k, r) == l,
               [&] { return "lambda = " + l.to_string() + ", root " + rt.root.to_string(); });
    }
  }
  return p.done();
}

Outcome dominant_rep_idempotent(const Context& c) {
  Probe p;
  const RootDatum& d = *c.datum;
  for (const auto& K : all_subsets(d))
    for (const auto& l : weight_box(d.rank(), 3)) {
      const auto [mu, word] = d.dominant_representative(l, K);
      const auto [mu2, word2] = d.dominant_representative(mu, K);
      const bool ok = d.is_dominant_for(mu, K) && mu2 == mu && word2.empty() &&
                      c.W->act(c.W->from_word(word), l) == mu && c.W->in_parabolic(c.W->from_word(word), K);
      p.expect(ok, [&] { return "lambda = " + l.to_string() + ", K = " + K.to_string(); });
    }
  return p.done();
}

Outcome dominant_difference(const Context& c) {
  Probe p;
  const RootDatum& d = *c.datum;
  for (const auto& l : weight_box(d.rank(), 5)) {
    const auto [mu, nu] = d.dominant_difference(l);
    p.expect(d.is_dominant_for(mu, d.all_simple()) && d.is_dominant_for(nu, d.all_simple()) && mu - nu == l,
             [&] { return "lambda = " + l.to_string(); });
  }
  return p.done();
}

Outcome weyl_order(const Context& c) {
  Probe p;
  const WeylGroup& W = *c.W;
  static const std::map<std::string, std::size_t> known{{"A1", 2},  {"A1affine", 2}, {"A2", 6},    {"B2", 8},
                                                        {"G2", 12}, {"GL2", 2},      {"A1adj", 2}, {"A2adj", 6}};
  if (auto it = known.find(c.type); it != known.end())
    p.expect(W.order() == it->second, [&] { return "|W| = " + std::to_string(W.order()); });
  p.expect(oracle::finite_lengths_bfs(W).size() == W.order(), [&] { return "Cayley graph size differs from |W|"; });
  for (const auto& I : all_subsets(*c.datum))
    for (const auto& J : all_subsets(*c.datum)) {
      std::size_t total = 0;
      std::set<WeylElt> seen;
      for (auto z : W.min_double_coset_reps(I, J))
        for (auto a : W.parabolic_elements(I))
          for (auto b : W.parabolic_elements(J))
            if (seen.insert(W.multiply(W.multiply(a, z), b)).second) ++total;
      p.expect(total == W.order() && seen.size() == W.order(),
               [&] { return "I = " + I.to_string() + ", J = " + J.to_string(); });
    }
  return p.done();
}

Outcome weyl_bruhat(const Context& c) {
  Probe p;
  const WeylGroup& W = *c.W;
  for (auto y : W.elements())
    for (auto w : W.elements())
      p.expect(W.bruhat_leq(y, w) == oracle::finite_bruhat_subword(W, y, w),
               [&] { return "y = " + W.name(y) + ", w = " + W.name(w); });
  return p.done();
}

Outcome weyl_double_coset(const Context& c) {
  Probe p;
  const WeylGroup& W = *c.W;
  const auto reps = W.min_double_coset_reps(c.I, c.J);
  for (auto w : W.elements()) {
    const auto [a, z, b] = W.double_coset_decompose(w, c.I, c.J);
    const bool ok = W.in_parabolic(a, c.I) && W.in_parabolic(b, c.J) && W.multiply(W.multiply(a, z), b) == w &&
                    W.length(a) + W.length(z) + W.length(b) == W.length(w) &&
                    std::find(reps.begin(), reps.end(), z) != reps.end();
    p.expect(ok, [&] { return "w = " + W.name(w); });
  }
  return p.done();
}

Outcome weyl_parabolic_intersection(const Context& c) {
  Probe p;
  const WeylGroup& W = *c.W;
  for (auto z : W.min_double_coset_reps(c.I, c.J)) {
    const SimpleSubset K = W.parabolic_intersection(z, c.I, c.J);
    const auto gen = W.parabolic_elements(K);
    std::set<WeylElt> expected;
    for (auto w : W.parabolic_elements(c.I))
      if (W.in_parabolic(W.multiply(W.multiply(W.inverse(z), w), z), c.J)) expected.insert(w);
    p.expect(std::set<WeylElt>(gen.begin(), gen.end()) == expected,
             [&] { return "z = " + W.name(z) + ", K = " + K.to_string(); });
  }
  return p.done();
}

Outcome ext_length_word(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const auto bfs = oracle::affine_lengths_bfs(E, c.window, 1);
  for (const auto& x : E.enumerate_window(c.window, 1)) {
    const AffineWord& w = E.reduced_word(x);
    auto it = bfs.find(x);
    const bool ok = static_cast<int>(w.letters.size()) == E.length(x) && E.evaluate(w) == x && it != bfs.end() &&
                    it->second == E.length(x);
    p.expect(ok, [&] { return "x = " + E.name(x); });
  }
  return p.done();
}

Outcome ext_length_parity(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const auto gammas = E.gamma_elements(1);
  for (const auto& x : E.enumerate_window(c.window, 1)) {
    const int l = E.length(x);
    for (int k = 0; k < E.num_generators(); ++k) {
      const int lk = E.length(E.mul_gen_right(x, k));
      p.expect(lk == l + 1 || lk == l - 1, [&] { return "x = " + E.name(x) + ", s = " + E.generator_name(k); });
    }
    for (const auto& g : gammas)
      p.expect(E.length(E.multiply(x, g)) == l, [&] { return "x = " + E.name(x) + ", gamma = " + E.name(g); });
  }
  return p.done();
}

Outcome ext_canonical_constant(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const WeylGroup& W = *c.W;
  const auto left = W.parabolic_elements(c.I), right = W.parabolic_elements(c.J);
  for (const auto& x : E.enumerate_window(c.window, 1)) {
    const auto rep = E.canonical_rep(x, c.I, c.J);
    for (auto a : left)
      for (auto b : right) {
        const ExtAffElt y = E.multiply(E.multiply(E.from_finite(a), x), E.from_finite(b));
        p.expect(E.canonical_rep(y, c.I, c.J) == rep,
                 [&] { return "x = " + E.name(x) + ", w1 = " + W.name(a) + ", w2 = " + W.name(b); });
      }
  }
  return p.done();
}

Outcome ext_canonical_disjoint(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const DoubleCosetModule& mod = *c.mod;
  std::map<ExtAffElt, CosetIndex> owner;
  for (const auto& idx : mod.index_window(std::min(c.weight_window, 3))) {
    for (const auto& y : oracle::double_coset(E, mod.m(idx), c.I, c.J)) {
      auto [it, fresh] = owner.emplace(y, idx);
      p.expect(fresh, [&] {
        return "cosets of " + mod.index_name(idx) + " and " + mod.index_name(it->second) + " share " + E.name(y);
      });
      const auto [lambda, z] = E.canonical_rep(y, c.I, c.J);
      p.expect(CosetIndex{lambda, z} == idx, [&] { return "y = " + E.name(y) + " in " + mod.index_name(idx); });
    }
  }
  return p.done();
}

Outcome ext_minimal_rep(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const DoubleCosetModule& mod = *c.mod;
  for (const auto& idx : mod.index_window(std::min(c.weight_window, 3))) {
    const ExtAffElt m = E.minimal_length_rep(idx.lambda, idx.z, c.I, c.J);
    const auto coset = oracle::double_coset(E, m, c.I, c.J);
    const auto [lambda, z] = E.canonical_rep(m, c.I, c.J);
    p.expect(coset.count(m) == 1 && CosetIndex{lambda, z} == idx, [&] { return "index " + mod.index_name(idx); });
    for (const auto& y : coset)
      if (!(y == m))
        p.expect(E.length(y) > E.length(m), [&] { return "index " + mod.index_name(idx) + ", y = " + E.name(y); });
  }
  return p.done();
}

Outcome laurent_ring(const Context&) {
  Probe p;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_laurent(rng), b = random_laurent(rng), cc = random_laurent(rng);
    const bool ok = (a * b) * cc == a * (b * cc) && a * b == b * a && a * (b + cc) == a * b + a * cc &&
                    (a + b) + cc == a + (b + cc) && a - a == LaurentPoly() && a.bar().bar() == a &&
                    (a * b).bar() == a.bar() * b.bar() && (a + b).bar() == a.bar() + b.bar() &&
                    (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one() &&
                    (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one() &&
                    LaurentPoly::parse(a.to_string()) == a;
    p.expect(ok, [&] { return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + cc.to_string(); });
  }
  return p.done();
}

Outcome laurent_degree(const Context&) {
  Probe p;
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
    if (a.is_zero() || b.is_zero()) continue;
    const LaurentPoly ab = a * b;
    p.expect(*ab.degree() == *a.degree() + *b.degree() && *ab.valuation() == *a.valuation() + *b.valuation(),
             [&] { return "a = " + a.to_string() + ", b = " + b.to_string(); });
  }
  return p.done();
}

}  // namespace

void add_group_checks(std::vector<Check>& out) {
  auto add = [&](std::string name, std::string module, std::string desc, Scope scope, Outcome (*fn)(const Context&)) {
    out.push_back({std::move(name), std::move(module), std::move(desc), scope, fn});
  };
  add("root_datum.reflection", "root_datum", "reflections in positive roots are involutions given by the pairing",
      Scope::Type, reflection);
  add("root_datum.dominant_representative", "root_datum", "dominant representative is idempotent with empty word",
      Scope::Type, dominant_rep_idempotent);
  add("root_datum.dominant_difference", "root_datum", "lambda = mu - nu with mu, nu dominant, |coords| <= 5",
      Scope::Type, dominant_difference);
  add("finite_weyl.order_and_coset_sizes", "finite_weyl", "|W| by type; double coset sizes sum to |W|", Scope::Type,
      weyl_order);
  add("finite_weyl.bruhat_subword", "finite_weyl", "Bruhat order agrees with the subword criterion", Scope::Type,
      weyl_bruhat);
  add("finite_weyl.double_coset_decompose", "finite_weyl", "w = w1 z w2 with lengths adding and z in W^IJ",
      Scope::Cell, weyl_double_coset);
  add("finite_weyl.parabolic_intersection", "finite_weyl", "W_K = {w in W_I : z^-1 w z in W_J}", Scope::Cell,
      weyl_parabolic_intersection);
  add("ext_affine_weyl.length_vs_reduced_word", "ext_affine_weyl",
      "Iwahori-Matsumoto length = reduced word length = Cayley distance", Scope::Type, ext_length_word);
  add("ext_affine_weyl.length_parity", "ext_affine_weyl", "l(xs) = l(x) +- 1 and l(x gamma) = l(x)", Scope::Type,
      ext_length_parity);
  add("ext_affine_weyl.canonical_rep_constant", "ext_affine_weyl", "canonical_rep is constant on double cosets",
      Scope::Cell, ext_canonical_constant);
  add("ext_affine_weyl.canonical_rep_disjoint", "ext_affine_weyl",
      "distinct canonical reps give disjoint double cosets", Scope::Cell, ext_canonical_disjoint);
  add("ext_affine_weyl.minimal_length_rep", "ext_affine_weyl", "m is the unique shortest element of its coset",
      Scope::Cell, ext_minimal_rep);
  add("laurent_ring.ring_axioms", "laurent_ring", "ring axioms; bar and v -> 1 are homomorphisms", Scope::Type,
      laurent_ring);
  add("laurent_ring.degree_bounds", "laurent_ring", "degree and valuation of products add", Scope::Type,
      laurent_degree);
}

}  // namespace hecke::verify::detail
