// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hecke/double_coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/oracles.hpp"

using namespace hecke;

namespace {

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vinv = LaurentPoly::v(-1);
const LaurentPoly q = LaurentPoly::v(2);

struct Stack {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const WeylGroup> W;
  std::shared_ptr<const ExtAffineWeyl> E;
  std::shared_ptr<const HeckeAlgebra> H;
  std::shared_ptr<const KLTable> kl;
};

Stack stack(const std::string& type) {
  Stack s;
  s.datum = std::make_shared<RootDatum>(RootDatum::preset(type));
  s.W = std::make_shared<WeylGroup>(s.datum);
  s.E = std::make_shared<ExtAffineWeyl>(s.W);
  s.H = std::make_shared<HeckeAlgebra>(s.E);
  s.kl = std::make_shared<KLTable>(s.H);
  return s;
}

/// Records the first failure; counts checked cases.
struct Tally {
  std::size_t cases = 0;
  std::string first_failure;
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && first_failure.empty()) first_failure = what();
  }
  bool ok() const { return first_failure.empty(); }
};

Weight random_weight(std::mt19937& rng, int rank, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = coord(rng);
  return w;
}

HeckeElt random_elt(const HeckeAlgebra& H, const std::vector<ExtAffElt>& window, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2), exp(-2, 2);
  HeckeElt h = H.zero();
  for (int t = 0; t < 3; ++t) h.add_term(window[pick(rng)], LaurentPoly::monomial(coeff(rng), exp(rng)) + coeff(rng));
  return h;
}

int braid_order(const ExtAffineWeyl& E, int a, int b) {
  const ExtAffElt ab = E.multiply(E.generator(a), E.generator(b));
  ExtAffElt p = ab;
  for (int m = 1; m <= 12; ++m) {
    if (p == E.identity()) return m;
    p = E.multiply(p, ab);
  }
  return 0;
}

std::vector<std::pair<SimpleSubset, SimpleSubset>> ij_cases(const RootDatum& d) {
  const SimpleSubset S = d.all_simple();
  std::vector<std::pair<SimpleSubset, SimpleSubset>> out{{{}, {}}, {{}, S}, {S, {}}, {S, S}};
  if (d.semisimple_rank() == 2) out.emplace_back(SimpleSubset::from_indices({0}), SimpleSubset::from_indices({1}));
  return out;
}

std::string ij(SimpleSubset I, SimpleSubset J) { return "I=" + I.to_string() + " J=" + J.to_string(); }

/// Coefficient-wise degree bound for v^{l(x)} times a column of C'_x.
bool column_ok(const ExtAffineWeyl& E, const ExtAffElt& x, const HeckeElt& c) {
  const int lx = E.length(x);
  for (const auto& [y, coeff] : c.terms()) {
    const LaurentPoly P = coeff.shifted(lx);
    if (y == x) {
      if (!(P == LaurentPoly(1))) return false;
    } else if (!E.bruhat_leq(y, x) || *P.valuation() < 0 || *P.degree() > lx - E.length(y) - 1) {
      return false;
    }
  }
  return true;
}

// 1. Quadratic and braid relations for S_af; associativity on random triples.
Tally presentation() {
  Tally t;
  for (const char* type : {"A1", "A2", "B2"}) {
    const Stack s = stack(type);
    const auto& E = *s.E;
    const auto& H = *s.H;
    for (int k = 0; k < E.num_generators(); ++k) {
      const HeckeElt Ts = H.T(E.generator(k));
      t.expect(Ts * Ts == q * H.one() + (q - 1) * Ts, [&] { return std::string(type) + " quadratic " + E.generator_name(k); });
      for (int l = k + 1; l < E.num_generators(); ++l) {
        const int m = braid_order(E, k, l);
        if (m == 0) continue;
        HeckeElt a = H.one(), b = H.one();
        for (int j = 0; j < m; ++j) {
          a = a * H.T(E.generator(j % 2 ? l : k));
          b = b * H.T(E.generator(j % 2 ? k : l));
        }
        t.expect(a == b, [&] { return std::string(type) + " braid " + E.generator_name(k) + "," + E.generator_name(l); });
      }
    }
    const auto window = E.enumerate_window(4);
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
      const HeckeElt a = random_elt(H, window, rng), b = random_elt(H, window, rng), c = random_elt(H, window, rng);
      t.expect((a * b) * c == a * (b * c), [&] { return std::string(type) + " associativity: " + a.to_string(); });
    }
  }
  return t;
}

// 2. Iwahori-Matsumoto length against reduced words (and Cayley distance).
Tally lengths() {
  Tally t;
  for (auto [type, n] : {std::pair{"A1", 6}, std::pair{"A2", 4}}) {
    const Stack s = stack(type);
    const auto& E = *s.E;
    const auto bfs = oracle::affine_lengths_bfs(E, n);
    for (const auto& x : E.enumerate_window(n)) {
      const AffineWord& w = E.reduced_word(x);
      auto it = bfs.find(x);
      t.expect(static_cast<int>(w.letters.size()) == E.length(x) && E.evaluate(w) == x && it != bfs.end() &&
                   it->second == E.length(x),
               [&] { return std::string(type) + " x = " + E.name(x); });
    }
  }
  return t;
}

// 3. theta additive-to-multiplicative, commutation with T_s, central orbit sums.
Tally bernstein() {
  Tally t;
  for (const char* type : {"A1", "A2", "B2"}) {
    const Stack s = stack(type);
    const auto& H = *s.H;
    const auto& W = *s.W;
    const int r = s.datum->rank();
    std::mt19937 rng(103);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight a = random_weight(rng, r, 3), b = random_weight(rng, r, 3);
      t.expect(H.theta(a) * H.theta(b) == H.theta(a + b),
               [&] { return std::string(type) + " theta " + a.to_string() + " + " + b.to_string(); });
      for (int i = 0; i < s.datum->semisimple_rank(); ++i) {
        const auto c = H.theta_past_Ts(a, i);
        BernsteinForm f;
        for (const auto& [k, coeff] : H.finite_T_times_theta(W.simple(i), c.moved)) add_term(f, k, coeff);
        for (const auto& [mu, coeff] : c.remainder) add_term(f, {mu, W.identity()}, (q - 1) * coeff);
        t.expect(H.from_bernstein(f) == H.theta(a) * H.T(W.simple(i)),
                 [&] { return std::string(type) + " theta_past_Ts " + a.to_string(); });
      }
    }
    for (const auto& lambda : s.E->weight_window(2)) {
      if (!s.datum->is_dominant_for(lambda, s.datum->all_simple())) continue;
      std::set<Weight> orbit;
      for (auto w : W.elements()) orbit.insert(W.act(w, lambda));
      HeckeElt z = H.zero();
      for (const auto& mu : orbit) z += H.theta(mu);
      for (int k = 0; k < s.E->num_generators(); ++k) {
        if (!s.E->is_finite_generator(k)) continue;
        const HeckeElt Ts = H.T(s.E->generator(k));
        t.expect(z * Ts == Ts * z, [&] { return std::string(type) + " center, orbit of " + lambda.to_string(); });
      }
    }
  }
  return t;
}

// 4. KL bases: bar invariance, degree bound, dihedral oracle, fixed-point solver.
Tally kl() {
  Tally t;
  for (auto [type, n] : {std::pair{"A2", 5}, std::pair{"A1affine", 8}}) {
    const Stack s = stack(type);
    const auto& E = *s.E;
    const bool dihedral = std::string(type) == "A1affine";
    for (const auto& x : E.enumerate_window(n)) {
      const HeckeElt& cp = s.kl->c_prime(x);
      const HeckeElt c = s.kl->c_element(x);
      t.expect(s.H->bar(cp) == cp && s.H->bar(c) == c && column_ok(E, x, cp),
               [&] { return std::string(type) + " bar/degree x = " + E.name(x); });
      if (dihedral) {
        const auto ideal = oracle::bruhat_ideal(E, x);
        bool all_one = cp.size() == ideal.size();
        for (const auto& y : ideal) all_one = all_one && s.kl->kl_polynomial(y, x) == LaurentPoly(1);
        t.expect(all_one, [&] { return "affine A1 P != 1 below x = " + E.name(x); });
      } else {
        t.expect(oracle::kl_by_bar_fixed_point(*s.H, x) == cp, [&] { return "A2 fixed point x = " + E.name(x); });
      }
    }
  }
  return t;
}

// 5. Double coset partition against canonical_rep fibers.
Tally coset_partition() {
  Tally t;
  for (auto [type, box] : {std::pair{"A1", 6}, std::pair{"A2", 9}}) {
    const Stack s = stack(type);
    const auto& E = *s.E;
    for (auto [I, J] : ij_cases(*s.datum)) {
      std::vector<ExtAffElt> elements;
      std::vector<CosetIndex> reps;
      for (int c0 = -box; c0 <= box; ++c0)
        for (int c1 = -box; c1 <= (s.datum->rank() == 2 ? box : -box); ++c1) {
          const Weight mu = s.datum->rank() == 2 ? Weight{c0, c1} : Weight{c0};
          for (auto w : s.W->elements()) {
            const auto [lambda, z] = E.canonical_rep({mu, w}, I, J);
            bool small = true;
            for (std::size_t i = 0; i < lambda.size(); ++i) small = small && std::abs(lambda[i]) <= 3;
            if (!small) continue;
            elements.push_back({mu, w});
            reps.push_back({lambda, z});
          }
        }
      std::vector<int> labels;
      try {
        labels = oracle::double_coset_classes(E, elements, I, J);
      } catch (const std::exception& ex) {
        t.expect(false, [&] { return std::string(type) + " " + ij(I, J) + ": " + ex.what(); });
        continue;
      }
      std::map<int, std::set<CosetIndex>> by_class;
      std::map<CosetIndex, std::set<int>> by_rep;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        by_class[labels[i]].insert(reps[i]);
        by_rep[reps[i]].insert(labels[i]);
      }
      bool same = by_class.size() == by_rep.size();
      for (const auto& [l, rs] : by_class) same = same && rs.size() == 1;
      for (const auto& [r, ls] : by_rep) same = same && ls.size() == 1;
      t.expect(same, [&] {
        return std::string(type) + " " + ij(I, J) + ": " + std::to_string(by_class.size()) + " cosets vs " +
               std::to_string(by_rep.size()) + " canonical reps";
      });
    }
  }
  return t;
}

// 6. Bernstein basis of H^{IJ}: straightening, exact re-expansion, rank at v = 1.
Tally hij_basis() {
  Tally t;
  for (const char* type : {"A1", "A2"}) {
    const Stack s = stack(type);
    for (auto [I, J] : ij_cases(*s.datum)) {
      const DoubleCosetModule mod(s.kl, I, J);
      for (const auto& x : s.E->enumerate_window(4)) {
        const HIJElt e = mod.chi(s.H->T(x));
        const Coords c = mod.to_bernstein_coords(e);
        bool valid = true;
        for (const auto& [idx, coeff] : c) {
          try {
            mod.validate(idx);
          } catch (const InputError&) {
            valid = false;
          }
        }
        t.expect(valid && mod.expand(Basis::Bernstein, c).carrier == e.carrier,
                 [&] { return std::string(type) + " " + ij(I, J) + " x = " + s.E->name(x); });
      }
      const auto window = mod.index_window(3);
      std::set<ExtAffElt> support;
      std::vector<SignedGroupAlgebraElt> images;
      for (const auto& idx : window) {
        images.push_back(mod.specialize_v1(mod.standard_basis_elt(idx)));
        for (const auto& [x, k] : images.back()) support.insert(x);
      }
      std::vector<std::vector<std::int64_t>> rows;
      for (const auto& img : images) {
        std::vector<std::int64_t> row;
        for (const auto& x : support) row.push_back(img.count(x) ? img.at(x) : 0);
        rows.push_back(std::move(row));
      }
      t.expect(oracle::rank_mod_p(rows) == static_cast<int>(window.size()),
               [&] { return std::string(type) + " " + ij(I, J) + ": rank deficit over " + std::to_string(window.size()); });
    }
  }
  return t;
}

// 7. KL basis of H^{IJ}: projection, bar invariance, unitriangularity.
Tally hij_kl() {
  Tally t;
  const std::pair<const char*, bool> cases[] = {{"A2", true}, {"A1", false}};
  for (const auto& [type, mixed] : cases) {
    const Stack s = stack(type);
    const auto& E = *s.E;
    const SimpleSubset S = s.datum->all_simple();
    const SimpleSubset I = mixed ? SimpleSubset::from_indices({0}) : S;
    const SimpleSubset J = mixed ? SimpleSubset::from_indices({1}) : S;
    const DoubleCosetModule mod(s.kl, I, J);
    std::set<CosetIndex> indices;
    for (const auto& x : E.enumerate_window(5)) {
      const CosetIndex idx = mod.index_of(x);
      if (x == mod.m(idx)) {
        indices.insert(idx);
        continue;
      }
      t.expect(mod.chi_cprime_vanishing(x).is_zero(), [&] { return std::string(type) + " non-minimal x = " + E.name(x); });
    }
    for (const auto& idx : indices) {
      const HIJElt e = mod.kl_basis_elt(idx);
      t.expect(mod.bar(e).carrier == e.carrier, [&] { return std::string(type) + " bar " + mod.index_name(idx); });
      const Coords c = mod.to_standard_coords(e);
      const ExtAffElt mm = mod.m(idx);
      const int lm = E.length(mm);
      auto lead = c.find(idx);
      bool ok = lead != c.end() && lead->second == LaurentPoly::v(-lm);
      for (const auto& [j, a] : c) {
        if (j == idx) continue;
        const ExtAffElt mj = mod.m(j);
        const LaurentPoly P = a.shifted(lm);
        ok = ok && !(mj == mm) && E.bruhat_leq(mj, mm) && *P.valuation() >= 0 && *P.degree() <= lm - E.length(mj) - 1;
      }
      t.expect(ok, [&] { return std::string(type) + " unitriangularity " + mod.index_name(idx); });
    }
  }
  return t;
}

// 8. Corner cases: empty I, J is the Hecke algebra; A1 with I = J = S indexes by n*omega.
Tally corners() {
  Tally t;
  for (const char* type : {"A1", "A2"}) {
    const Stack s = stack(type);
    const auto& H = *s.H;
    const DoubleCosetModule mod(s.kl, {}, {});
    for (const auto& x : s.E->enumerate_window(4)) {
      const CosetIndex idx = mod.index_of(x);
      const HIJElt e = mod.chi(H.T(x));
      Coords bc;
      for (const auto& [k, c] : H.to_bernstein(H.T(x))) bc.emplace(CosetIndex{k.lambda, k.w}, c);
      const SignedGroupAlgebraElt one{{x, 1}};
      const bool ok = idx == CosetIndex{x.translation, x.finite} && mod.m(idx) == x && e.carrier == H.T(x) &&
                      mod.standard_basis_elt(idx).carrier == H.T(x) &&
                      mod.bernstein_basis_elt(idx).carrier == H.theta(x.translation) * H.T(x.finite) &&
                      mod.kl_basis_elt(idx).carrier == s.kl->c_prime(x) && mod.to_standard_coords(e) == Coords{{idx, 1}} &&
                      mod.to_bernstein_coords(e) == bc && mod.bar(e).carrier == H.bar(H.T(x)) &&
                      mod.straighten(x.translation, x.finite) == std::map<Weight, LaurentPoly>{{x.translation, 1}} &&
                      mod.specialize_v1(e) == one;
      t.expect(ok, [&] { return std::string(type) + " empty I, J at x = " + s.E->name(x); });
    }
  }
  const Stack a1 = stack("A1");
  const SimpleSubset S = a1.datum->all_simple();
  const DoubleCosetModule mod(a1.kl, S, S);
  const int N = 3;
  std::set<CosetIndex> expected;
  for (int n = 0; n <= N; ++n) expected.insert({Weight{n}, a1.W->identity()});
  const auto got = mod.index_window(N);
  t.expect(std::set<CosetIndex>(got.begin(), got.end()) == expected && got.size() == expected.size(),
           [&] { return "A1 I = J = S index set differs from {(n omega, 1)}"; });
  return t;
}

// 9. A1 with I = J = S: chi(theta_{-omega}) = v^2 chi(theta_omega) and C_s C_s = -(v + v^-1) C_s.
Tally derived() {
  Tally t;
  const Stack s = stack("A1");
  const auto& H = *s.H;
  const SimpleSubset S = s.datum->all_simple();
  const DoubleCosetModule mod(s.kl, S, S);
  const HeckeElt lhs = mod.chi(H.theta(Weight{-1})).carrier;
  const HeckeElt rhs = q * mod.chi(H.theta(Weight{1})).carrier;
  t.expect(!lhs.is_zero() && lhs == rhs, [&] { return "chi(theta_-omega) = " + lhs.to_string() + ", v^2 chi(theta_omega) = " + rhs.to_string(); });
  const HeckeElt Cs = mod.c_w(S);
  t.expect(Cs == s.kl->c_element(s.E->parse("s1")) && Cs == -v * H.one() + vinv * H.T("s1"),
           [&] { return "C_s = " + Cs.to_string(); });
  t.expect(Cs * Cs == -(v + vinv) * Cs, [&] { return "C_s C_s = " + (Cs * Cs).to_string(); });
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, Tally (*)()> criteria[] = {
      {"presentation fidelity", presentation},
      {"length cross-validation", lengths},
      {"Bernstein consistency", bernstein},
      {"KL correctness", kl},
      {"double coset partition", coset_partition},
      {"H^IJ Bernstein basis", hij_basis},
      {"H^IJ KL basis", hij_kl},
      {"corner-case collapse", corners},
      {"derived A1 identities", derived},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = fn();
    } catch (const std::exception& ex) {
      t.expect(false, [&] { return std::string("exception: ") + ex.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && t.ok();
    std::ostringstream line;
    line << "CRITERION " << k << ' ' << (t.ok() ? "PASS" : "FAIL") << ": " << name << " (" << t.cases << " cases, "
         << secs << " s)";
    if (!t.ok()) line << " first failure: " << t.first_failure;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
