#include <set>

#include "checks.hpp"
#include "hecke/oracles.hpp"

namespace hecke::verify::detail {

namespace {

const LaurentPoly q = LaurentPoly::v(2);

std::string weight_pair(const Weight& a, const Weight& b) { return "lambda = " + a.to_string() + ", mu = " + b.to_string(); }

/// Order of g_a g_b, 0 when it exceeds 12 (no braid relation).
int braid_order(const ExtAffineWeyl& E, int a, int b) {
  const ExtAffElt ab = E.multiply(E.generator(a), E.generator(b));
  ExtAffElt p = ab;
  for (int m = 1; m <= 12; ++m) {
    if (p == E.identity()) return m;
    p = E.multiply(p, ab);
  }
  return 0;
}

Outcome associativity(const Context& c) {
  Probe p;
  const auto window = c.E->enumerate_window(std::min(c.window, 4), 1);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const HeckeElt a = random_elt(*c.H, window, rng), b = random_elt(*c.H, window, rng),
                   d = random_elt(*c.H, window, rng);
    p.expect((a * b) * d == a * (b * d),
             [&] { return "a = " + a.to_string() + "; b = " + b.to_string() + "; c = " + d.to_string(); });
  }
  return p.done();
}

Outcome quadratic_braid(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const HeckeAlgebra& H = *c.H;
  for (int k = 0; k < E.num_generators(); ++k) {
    const HeckeElt Ts = H.T(E.generator(k));
    p.expect(Ts * Ts == q * H.one() + (q - 1) * Ts, [&] { return "quadratic, s = " + E.generator_name(k); });
    for (int l = k + 1; l < E.num_generators(); ++l) {
      const int m = braid_order(E, k, l);
      if (m == 0) continue;
      HeckeElt left = H.one(), right = H.one();
      for (int j = 0; j < m; ++j) {
        left = H.mul_gen_right(left, j % 2 ? l : k);
        right = H.mul_gen_right(right, j % 2 ? k : l);
      }
      p.expect(left == right, [&] { return "braid, s = " + E.generator_name(k) + ", t = " + E.generator_name(l); });
    }
  }
  return p.done();
}

Outcome bar_automorphism(const Context& c) {
  Probe p;
  const HeckeAlgebra& H = *c.H;
  const auto window = c.E->enumerate_window(std::min(c.window, 4), 1);
  for (const auto& x : window) {
    const ExtAffElt xi = c.E->inverse(x);
    p.expect(H.bar(H.T(x)) * H.T(xi) == H.one(), [&] { return "bar(T_x) T_{x^-1} != 1, x = " + c.E->name(x); });
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const HeckeElt a = random_elt(H, window, rng), b = random_elt(H, window, rng);
    p.expect(H.bar(H.bar(a)) == a && H.bar(a * b) == H.bar(a) * H.bar(b) && H.bar(a + b) == H.bar(a) + H.bar(b),
             [&] { return "a = " + a.to_string() + "; b = " + b.to_string(); });
  }
  return p.done();
}

Outcome theta_homomorphism(const Context& c) {
  Probe p;
  const HeckeAlgebra& H = *c.H;
  const RootDatum& d = *c.datum;
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const Weight a = random_weight(rng, d.rank(), 2), b = random_weight(rng, d.rank(), 2);
    p.expect(H.theta(a) * H.theta(b) == H.theta(a + b), [&] { return weight_pair(a, b); });
    const auto [mu, nu] = d.dominant_difference(a);
    const Weight shift = d.dominant_correction(trial % d.semisimple_rank());
    p.expect(H.theta_from(mu + shift, nu + shift) == H.theta(a),
             [&] { return "decomposition of " + a.to_string() + " shifted by " + shift.to_string(); });
  }
  return p.done();
}

Outcome centrality(const Context& c) {
  Probe p;
  const HeckeAlgebra& H = *c.H;
  const WeylGroup& W = *c.W;
  for (const Weight& lambda : c.E->weight_window(std::min(c.weight_window, 2))) {
    if (!c.datum->is_dominant_for(lambda, c.datum->all_simple())) continue;
    std::set<Weight> orbit;
    for (auto w : W.elements()) orbit.insert(W.act(w, lambda));
    HeckeElt z = H.zero();
    for (const auto& mu : orbit) z += H.theta(mu);
    for (int i = 0; i < c.datum->semisimple_rank(); ++i) {
      const HeckeElt Ts = H.T(W.simple(i));
      p.expect(z * Ts == Ts * z, [&] { return "orbit of " + lambda.to_string() + ", s" + std::to_string(i + 1); });
    }
  }
  return p.done();
}

Outcome theta_past_Ts(const Context& c) {
  Probe p;
  const HeckeAlgebra& H = *c.H;
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Weight l = random_weight(rng, c.datum->rank(), 3);
    for (int i = 0; i < c.datum->semisimple_rank(); ++i) {
      const HeckeElt direct = H.theta(l) * H.T(c.W->simple(i));
      const auto r = H.theta_past_Ts(l, i);
      BernsteinForm rhs;
      for (const auto& [key, coeff] : H.finite_T_times_theta(c.W->simple(i), r.moved)) add_term(rhs, key, coeff);
      for (const auto& [mu, coeff] : r.remainder) add_term(rhs, {mu, c.W->identity()}, (q - 1) * coeff);
      p.expect(H.expand(r, i) == direct && H.from_bernstein(rhs) == direct &&
                   H.from_bernstein({{{l, c.W->simple(i)}, 1}}) == direct,
               [&] { return "lambda = " + l.to_string() + ", s" + std::to_string(i + 1); });
    }
  }
  return p.done();
}

// The stated support bound (support inside the Bruhat ideal of t_lambda w)
// does not hold; the leading coefficient and the Gamma component do.
Outcome triangularity(const Context& c) {
  Probe p;
  const HeckeAlgebra& H = *c.H;
  const ExtAffineWeyl& E = *c.E;
  for (const auto& l : c.E->weight_window(std::min(c.weight_window, 2)))
    for (auto w : c.W->elements()) {
      const ExtAffElt top{l, w};
      const HeckeElt h = H.theta(l) * H.T(w);
      const ExtAffElt gamma = E.waf_gamma_decompose(top).second;
      bool same_component = true;
      for (const auto& [y, coeff] : h.terms()) same_component = same_component && E.waf_gamma_decompose(y).second == gamma;
      p.expect(h.coeff(top).is_unit() && same_component,
               [&] { return "lambda = " + l.to_string() + ", w = " + c.W->name(w); });
    }
  return p.done();
}

Outcome bernstein_round_trip(const Context& c) {
  Probe p;
  const HeckeAlgebra& H = *c.H;
  const auto window = c.E->enumerate_window(std::min(c.window, 4), 1);
  for (const auto& x : window)
    p.expect(H.from_bernstein(H.to_bernstein(H.T(x))) == H.T(x), [&] { return "x = " + c.E->name(x); });
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const HeckeElt a = random_elt(H, window, rng, 2), b = random_elt(H, window, rng, 2);
    p.expect(H.from_bernstein(H.bernstein_mul(H.to_bernstein(a), H.to_bernstein(b))) == a * b,
             [&] { return "a = " + a.to_string() + "; b = " + b.to_string(); });
  }
  return p.done();
}

/// v-degree bound and diagonal of C'_x = v^{-l(x)} sum P_{y,x} T_y.
bool degree_bound_holds(const ExtAffineWeyl& E, const ExtAffElt& x, const HeckeElt& c) {
  const int lx = E.length(x);
  for (const auto& [y, coeff] : c.terms()) {
    const LaurentPoly P = coeff.shifted(lx);
    if (y == x) {
      if (!(P == LaurentPoly(1))) return false;
      continue;
    }
    if (!E.bruhat_leq(y, x) || *P.valuation() < 0 || *P.degree() > lx - E.length(y) - 1) return false;
  }
  return true;
}

Outcome kl_bar_invariance(const Context& c) {
  Probe p;
  for (const auto& x : c.E->enumerate_window(c.window, 1)) {
    const HeckeElt& cp = c.kl->c_prime(x);
    const HeckeElt cx = c.kl->c_element(x);
    p.expect(c.H->bar(cp) == cp && c.H->bar(cx) == cx && degree_bound_holds(*c.E, x, cp),
             [&] { return "x = " + c.E->name(x); });
  }
  return p.done();
}

Outcome kl_descent(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const HeckeAlgebra& H = *c.H;
  for (const auto& x : E.enumerate_window(c.window, 1)) {
    const HeckeElt& cp = c.kl->c_prime(x);
    const HeckeElt cx = c.kl->c_element(x);
    for (int k = 0; k < E.num_generators(); ++k) {
      if (E.is_left_descent(k, x))
        p.expect(H.mul_gen_left(k, cx) == -cx && H.mul_gen_left(k, cp) == q * cp,
                 [&] { return "left, x = " + E.name(x) + ", t = " + E.generator_name(k); });
      if (E.is_right_descent(x, k))
        p.expect(H.mul_gen_right(cx, k) == -cx && H.mul_gen_right(cp, k) == q * cp,
                 [&] { return "right, x = " + E.name(x) + ", s = " + E.generator_name(k); });
    }
  }
  return p.done();
}

Outcome kl_fixed_point(const Context& c) {
  Probe p;
  for (const auto& x : c.E->enumerate_window(std::min(c.window, 4), 1))
    p.expect(oracle::kl_by_bar_fixed_point(*c.H, x) == c.kl->c_prime(x), [&] { return "x = " + c.E->name(x); });
  return p.done();
}

Outcome kl_gamma(const Context& c) {
  Probe p;
  const ExtAffineWeyl& E = *c.E;
  const auto gammas = E.gamma_elements(1);
  for (const auto& x : E.enumerate_window(std::min(c.window, 4), 1))
    for (const auto& g : gammas) {
      const ExtAffElt xg = E.multiply(x, g);
      p.expect(c.kl->c_prime(xg) == c.kl->c_prime(x) * c.H->T(g),
               [&] { return "x = " + E.name(x) + ", gamma = " + E.name(g); });
      for (const auto& [y, coeff] : c.kl->c_prime(x).terms())
        p.expect(c.kl->kl_polynomial(E.multiply(y, g), xg) == c.kl->kl_polynomial(y, x),
                 [&] { return "y = " + E.name(y) + ", x = " + E.name(x) + ", gamma = " + E.name(g); });
    }
  return p.done();
}

}  // namespace

void add_hecke_checks(std::vector<Check>& out) {
  auto add = [&](std::string name, std::string module, std::string desc, Outcome (*fn)(const Context&)) {
    out.push_back({std::move(name), std::move(module), std::move(desc), Scope::Type, fn});
  };
  add("hecke_algebra.associativity", "hecke_algebra", "(ab)c = a(bc) on 100 random triples", associativity);
  add("hecke_algebra.quadratic_braid", "hecke_algebra", "quadratic and braid relations for all of S_af",
      quadratic_braid);
  add("hecke_algebra.bar_involution", "hecke_algebra", "bar is an involutive ring automorphism", bar_automorphism);
  add("hecke_algebra.theta_homomorphism", "hecke_algebra",
      "theta(a) theta(b) = theta(a+b), independent of the decomposition", theta_homomorphism);
  add("hecke_algebra.centrality", "hecke_algebra", "W-orbit sums of theta commute with every T_s", centrality);
  add("hecke_algebra.theta_past_Ts", "hecke_algebra", "commutation output equals theta_lambda T_s", theta_past_Ts);
  add("hecke_algebra.triangularity", "hecke_algebra",
      "coefficient of theta_lambda T_w at t_lambda w is a signed power of v; support stays in its Gamma component",
      triangularity);
  add("hecke_algebra.bernstein_round_trip", "hecke_algebra",
      "to_bernstein inverts from_bernstein; Bernstein products agree", bernstein_round_trip);
  add("kl_basis.bar_invariance", "kl_basis", "C'_x and C_x are bar-invariant with the degree bound",
      kl_bar_invariance);
  add("kl_basis.descent", "kl_basis", "T_t C_x = -C_x and T_t C'_x = v^2 C'_x for descents", kl_descent);
  add("kl_basis.fixed_point_oracle", "kl_basis", "recursion agrees with the bar-fixed-point solver", kl_fixed_point);
  add("kl_basis.gamma_compatibility", "kl_basis", "C'_{x gamma} = C'_x T_gamma and P is Gamma-invariant", kl_gamma);
}

}  // namespace hecke::verify::detail
