#include <map>
#include <set>

#include "checks.hpp"
#include "hecke/oracles.hpp"

namespace hecke::verify::detail {

namespace {

int coset_radius(const Context& c) { return std::min(c.weight_window, 3); }

std::string cell_name(const Context& c) { return "I = " + c.I.to_string() + ", J = " + c.J.to_string(); }

/// The W_ex window {t_mu w : mu in weight_window(n)}: closed under W_I and W_J.
std::vector<ExtAffElt> translation_window(const Context& c, int n) {
  std::vector<ExtAffElt> out;
  for (const auto& mu : c.E->weight_window(n))
    for (auto w : c.W->elements()) out.push_back({mu, w});
  return out;
}

Outcome basis_count(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  const int n = coset_radius(c);
  const auto elements = translation_window(c, n);
  const auto labels = oracle::double_coset_classes(*c.E, elements, c.I, c.J);
  std::map<CosetIndex, std::set<int>> fibers;
  std::map<int, std::set<CosetIndex>> classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const CosetIndex idx = mod.index_of(elements[i]);
    fibers[idx].insert(labels[i]);
    classes[labels[i]].insert(idx);
  }
  for (const auto& [idx, ls] : fibers)
    p.expect(ls.size() == 1, [&] { return "fiber of " + mod.index_name(idx) + " meets several double cosets"; });
  for (const auto& [label, ids] : classes)
    p.expect(ids.size() == 1, [&] { return "double coset " + std::to_string(label) + " has several canonical reps"; });
  const auto window = mod.index_window(n);
  std::set<CosetIndex> listed(window.begin(), window.end());
  std::set<CosetIndex> seen;
  for (const auto& [idx, ls] : fibers) seen.insert(idx);
  p.expect(listed == seen && listed.size() == classes.size(), [&] {
    return cell_name(c) + ": " + std::to_string(listed.size()) + " indices, " + std::to_string(classes.size()) +
           " double cosets";
  });
  return p.done();
}

Outcome linear_independence(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  const auto window = mod.index_window(coset_radius(c));
  std::set<ExtAffElt> support;
  std::vector<SignedGroupAlgebraElt> images;
  for (const auto& idx : window) {
    images.push_back(mod.specialize_v1(mod.standard_basis_elt(idx)));
    const auto direct = oracle::signed_coset_sum(*c.E, mod.m(idx), c.I, c.J);
    p.expect(images.back() == SignedGroupAlgebraElt(direct.begin(), direct.end()),
             [&] { return "v = 1 image of " + mod.index_name(idx) + " differs from eps_I m eps_J"; });
    for (const auto& [x, k] : images.back()) support.insert(x);
  }
  const std::vector<ExtAffElt> cols(support.begin(), support.end());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& img : images) {
    std::vector<std::int64_t> row;
    for (const auto& x : cols) row.push_back(img.count(x) ? img.at(x) : 0);
    rows.push_back(std::move(row));
  }
  const int rank = oracle::rank_mod_p(rows);
  p.expect(rank == static_cast<int>(window.size()), [&] {
    return cell_name(c) + ": rank " + std::to_string(rank) + " of " + std::to_string(window.size());
  });
  return p.done();
}

Outcome expansion_identity(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  for (const auto& x : c.E->enumerate_window(std::min(c.window, 4), 1)) {
    const HIJElt e = mod.chi(c.H->T(x));
    const Coords b = mod.to_bernstein_coords(e);
    bool dominant = true;
    for (const auto& [idx, coeff] : b) dominant = dominant && c.datum->is_dominant_for(idx.lambda, mod.K(idx.z));
    p.expect(dominant && mod.expand(Basis::Bernstein, b).carrier == e.carrier,
             [&] { return "Bernstein, x = " + c.E->name(x); });
    p.expect(mod.expand(Basis::Standard, mod.to_standard_coords(e)).carrier == e.carrier,
             [&] { return "standard, x = " + c.E->name(x); });
  }
  return p.done();
}

Outcome annihilation(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  const HeckeAlgebra& H = *c.H;
  std::vector<std::pair<std::string, HIJElt>> built;
  for (const auto& idx : mod.index_window(std::min(c.weight_window, 2)))
    for (Basis b : {Basis::Standard, Basis::Bernstein, Basis::KL})
      built.emplace_back(basis_name(b) + " " + mod.index_name(idx), mod.basis_elt(b, idx));
  for (const auto& x : c.E->enumerate_window(std::min(c.window, 3), 1))
    built.emplace_back("chi(T_x), x = " + c.E->name(x), mod.chi(H.T(x)));
  for (const auto& [label, e] : built) {
    for (int t : c.I.indices())
      p.expect(H.mul_gen_left(t, e.carrier) == -e.carrier, [&] { return label + ", left s" + std::to_string(t + 1); });
    for (int s : c.J.indices())
      p.expect(H.mul_gen_right(e.carrier, s) == -e.carrier, [&] { return label + ", right s" + std::to_string(s + 1); });
  }
  return p.done();
}

Outcome kl_unitriangularity(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  const ExtAffineWeyl& E = *c.E;
  for (const auto& idx : mod.index_window(std::min(c.weight_window, 2))) {
    const HIJElt e = mod.kl_basis_elt(idx);
    p.expect(mod.bar(e).carrier == e.carrier, [&] { return "bar, " + mod.index_name(idx); });
    const Coords coords = mod.to_standard_coords(e);
    const ExtAffElt mm = mod.m(idx);
    const int lm = E.length(mm);
    auto lead = coords.find(idx);
    p.expect(lead != coords.end() && lead->second == LaurentPoly::v(-lm),
             [&] { return "leading term, " + mod.index_name(idx); });
    for (const auto& [j, a] : coords) {
      if (j == idx) continue;
      const ExtAffElt mj = mod.m(j);
      const LaurentPoly P = a.shifted(lm);
      p.expect(!(mj == mm) && E.bruhat_leq(mj, mm) && *P.valuation() >= 0 && *P.degree() <= lm - E.length(mj) - 1,
               [&] { return mod.index_name(idx) + " at " + mod.index_name(j) + ": " + a.to_string(); });
    }
  }
  return p.done();
}

Outcome cprime_projection(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  for (const auto& x : c.E->enumerate_window(c.window, 1)) {
    const ExtAffElt mm = mod.m(mod.index_of(x));
    const HIJElt e = mod.chi_cprime_vanishing(x);
    if (x == mm)
      p.expect(e.carrier == mod.kl_basis_elt(mod.index_of(x)).carrier, [&] { return "minimal x = " + c.E->name(x); });
    else
      p.expect(e.is_zero(), [&] { return "non-minimal x = " + c.E->name(x); });
  }
  return p.done();
}

Outcome degenerate_corners(const Context& c) {
  Probe p;
  const DoubleCosetModule& mod = *c.mod;
  const HeckeAlgebra& H = *c.H;
  const SimpleSubset S = c.datum->all_simple();
  if (c.I.empty() && c.J.empty()) {
    for (const auto& x : c.E->enumerate_window(std::min(c.window, 3), 1)) {
      const CosetIndex idx = mod.index_of(x);
      Coords bc;
      for (const auto& [k, coeff] : H.to_bernstein(H.T(x))) bc.emplace(CosetIndex{k.lambda, k.w}, coeff);
      const bool ok = idx == CosetIndex{x.translation, x.finite} && mod.chi(H.T(x)).carrier == H.T(x) &&
                      mod.standard_basis_elt(idx).carrier == H.T(x) &&
                      mod.kl_basis_elt(idx).carrier == c.kl->c_prime(x) &&
                      mod.bernstein_basis_elt(idx).carrier == H.theta(x.translation) * H.T(x.finite) &&
                      mod.to_bernstein_coords(mod.chi(H.T(x))) == bc &&
                      mod.to_standard_coords(mod.chi(H.T(x))) == Coords{{idx, 1}} &&
                      mod.bar(mod.chi(H.T(x))).carrier == H.bar(H.T(x));
      p.expect(ok, [&] { return "empty I, J: x = " + c.E->name(x); });
    }
  }
  if (c.I == S && c.J == S) {
    const int n = coset_radius(c);
    std::set<CosetIndex> expected;
    for (const auto& l : c.E->weight_window(n))
      if (c.datum->is_dominant_for(l, S)) expected.insert({l, c.W->identity()});
    const auto got = mod.index_window(n);
    p.expect(std::set<CosetIndex>(got.begin(), got.end()) == expected && got.size() == expected.size(),
             [&] { return "I = J = S: index set is not {(lambda, 1) : lambda dominant}"; });
  }
  return p.done();
}

}  // namespace

void add_hij_checks(std::vector<Check>& out) {
  auto add = [&](std::string name, std::string desc, Outcome (*fn)(const Context&)) {
    out.push_back({std::move(name), "double_coset_module", std::move(desc), Scope::Cell, fn});
  };
  add("double_coset_module.basis_count", "canonical_rep fibers match the brute-force double coset partition",
      basis_count);
  add("double_coset_module.linear_independence", "v = 1 images of the standard basis have full rank",
      linear_independence);
  add("double_coset_module.expansion_identity", "Bernstein and standard coordinates of chi(T_x) re-expand exactly",
      expansion_identity);
  add("double_coset_module.annihilation", "T_t e = -e for t in I and e T_s = -e for s in J", annihilation);
  add("double_coset_module.kl_unitriangularity", "KL basis is bar-invariant and unitriangular with degree bounds",
      kl_unitriangularity);
  add("double_coset_module.cprime_projection", "chi(C'_x) vanishes unless x is minimal in its double coset",
      cprime_projection);
  add("double_coset_module.degenerate_corners", "empty I, J is the Hecke algebra; I = J = S indexes by X(T)^+",
      degenerate_corners);
}

}  // namespace hecke::verify::detail
