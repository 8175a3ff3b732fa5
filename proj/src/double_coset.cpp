#include "hecke/double_coset.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr int kStraightenCap = 10000;

void add_to(std::map<Weight, LaurentPoly>& m, const Weight& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

void add_to(Coords& m, const CosetIndex& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

// ---------------------------------------------------------------- HIJElt

HIJElt& HIJElt::operator+=(const HIJElt& o) {
  if (!(I == o.I) || !(J == o.J)) throw InputError("adding elements of different modules H^{IJ}");
  carrier += o.carrier;
  if (preimage && o.preimage) {
    *preimage += *o.preimage;
  } else {
    preimage.reset();
  }
  return *this;
}

HIJElt& HIJElt::operator-=(const HIJElt& o) {
  if (!(I == o.I) || !(J == o.J)) throw InputError("subtracting elements of different modules H^{IJ}");
  carrier -= o.carrier;
  if (preimage && o.preimage) {
    *preimage -= *o.preimage;
  } else {
    preimage.reset();
  }
  return *this;
}

HIJElt& HIJElt::operator*=(const LaurentPoly& c) {
  carrier *= c;
  if (preimage) *preimage *= c;
  return *this;
}

Basis parse_basis(const std::string& name) {
  if (name == "standard") return Basis::Standard;
  if (name == "bernstein") return Basis::Bernstein;
  if (name == "kl") return Basis::KL;
  throw InputError("unknown basis '" + name + "' (expected standard, bernstein or kl)");
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Standard:
      return "standard";
    case Basis::Bernstein:
      return "bernstein";
    case Basis::KL:
      return "kl";
  }
  return "";
}

// ---------------------------------------------------------------- module

DoubleCosetModule::DoubleCosetModule(std::shared_ptr<const KLTable> kl, SimpleSubset I, SimpleSubset J)
    : kl_(std::move(kl)), I_(I), J_(J), cI_(algebra().zero()), cJ_(algebra().zero()) {
  const int r = algebra().datum().semisimple_rank();
  if (!I.subset_of(SimpleSubset::full(r)) || !J.subset_of(SimpleSubset::full(r)))
    throw InputError("I and J must be subsets of the simple reflections");
  cI_ = c_w(I);
  cJ_ = c_w(J);
  reps_ = algebra().finite().min_double_coset_reps(I, J);
}

HeckeElt DoubleCosetModule::c_w(SimpleSubset K) const {
  const WeylGroup& W = algebra().finite();
  const int l = W.length(W.longest_element(K));
  const LaurentPoly lead = LaurentPoly::monomial(l % 2 ? -1 : 1, l);
  HeckeElt out = algebra().zero();
  for (auto y : W.parabolic_elements(K)) out.add_term(group().from_finite(y), lead * LaurentPoly::monomial(W.sign(y), -2 * W.length(y)));
  return out;
}

LaurentPoly DoubleCosetModule::r(SimpleSubset K) const {
  const HeckeElt c = c_w(K);
  const HeckeElt sq = algebra().mul(c, c);
  const ExtAffElt e = group().identity();
  auto q = sq.coeff(e).divide_exact(c.coeff(e));
  if (!q || !(sq == *q * c)) throw InternalError("C_{w_K}^2 is not a multiple of C_{w_K}");
  return *q;
}

HIJElt DoubleCosetModule::chi(const HeckeElt& h) const {
  const HeckeAlgebra& H = algebra();
  return {H.mul(H.mul(cI_, h), cJ_), I_, J_, h};
}

bool DoubleCosetModule::in_module(const HeckeElt& e) const {
  const HeckeAlgebra& H = algebra();
  const HeckeElt neg = -e;
  for (int t : I_.indices())
    if (!(H.mul_gen_left(t, e) == neg)) return false;
  for (int s : J_.indices())
    if (!(H.mul_gen_right(e, s) == neg)) return false;
  return true;
}

HIJElt DoubleCosetModule::from_carrier(const HeckeElt& e) const {
  if (!in_module(e)) throw InputError("element is not in H^{IJ} (descent conditions fail): " + e.to_string());
  return {e, I_, J_, std::nullopt};
}

SimpleSubset DoubleCosetModule::K(WeylElt z) const { return algebra().finite().parabolic_intersection(z, I_, J_); }

void DoubleCosetModule::validate(const CosetIndex& idx) const {
  const WeylGroup& W = algebra().finite();
  if (static_cast<int>(idx.lambda.size()) != algebra().datum().rank())
    throw InputError("index weight " + idx.lambda.to_string() + " has the wrong rank");
  if (idx.z.id >= W.order() || !W.is_min_double_coset_rep(idx.z, I_, J_))
    throw InputError("z = " + W.name(idx.z) + " is not a minimal double coset representative");
  if (!algebra().datum().is_dominant_for(idx.lambda, K(idx.z)))
    throw InputError("weight " + idx.lambda.to_string() + " is not dominant for " + K(idx.z).to_string());
}

ExtAffElt DoubleCosetModule::m(const CosetIndex& idx) const {
  validate(idx);
  return group().minimal_length_rep(idx.lambda, idx.z, I_, J_);
}

CosetIndex DoubleCosetModule::index_of(const ExtAffElt& x) const {
  auto [lambda, z] = group().canonical_rep(x, I_, J_);
  return {lambda, z};
}

std::vector<CosetIndex> DoubleCosetModule::index_window(int n) const {
  std::vector<std::pair<int, CosetIndex>> keyed;
  const auto weights = group().weight_window(n);
  for (auto z : reps_) {
    const SimpleSubset k = K(z);
    for (const auto& lambda : weights)
      if (algebra().datum().is_dominant_for(lambda, k)) {
        const CosetIndex idx{lambda, z};
        keyed.emplace_back(group().length(m(idx)), idx);
      }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<CosetIndex> out;
  for (auto& [l, idx] : keyed) out.push_back(idx);
  return out;
}

HIJElt DoubleCosetModule::standard_basis_elt(const CosetIndex& idx) const { return chi(algebra().T(m(idx))); }

HIJElt DoubleCosetModule::bernstein_basis_elt(const CosetIndex& idx) const {
  validate(idx);
  return chi(algebra().mul(algebra().theta(idx.lambda), algebra().T(idx.z)));
}

HIJElt DoubleCosetModule::kl_basis_elt(const CosetIndex& idx) const { return chi(kl_->c_prime(m(idx))); }

HIJElt DoubleCosetModule::basis_elt(Basis b, const CosetIndex& idx) const {
  switch (b) {
    case Basis::Standard:
      return standard_basis_elt(idx);
    case Basis::Bernstein:
      return bernstein_basis_elt(idx);
    case Basis::KL:
      return kl_basis_elt(idx);
  }
  throw InputError("unknown basis");
}

HIJElt DoubleCosetModule::chi_cprime_vanishing(const ExtAffElt& x) const { return chi(kl_->c_prime(x)); }

std::map<Weight, LaurentPoly> DoubleCosetModule::straighten(const Weight& mu, WeylElt z) const {
  const auto key = std::make_pair(mu, z.id);
  {
    std::shared_lock lock(mutex_);
    auto it = straight_.find(key);
    if (it != straight_.end()) return it->second;
  }
  const RootDatum& d = algebra().datum();
  const WeylGroup& W = algebra().finite();
  if (!W.is_min_double_coset_rep(z, I_, J_)) throw InputError("straighten: z = " + W.name(z) + " is not in W^{IJ}");
  const SimpleSubset k = K(z);
  std::vector<int> k_roots;  // positive roots of the parabolic subsystem Phi_K
  for (int b = 0; b < d.num_positive_roots(); ++b) {
    const auto& sc = d.roots()[static_cast<std::size_t>(b)].simple_coords;
    bool inside = true;
    for (std::size_t i = 0; i < sc.size(); ++i)
      if (sc[i] != 0 && !k.contains(static_cast<int>(i))) inside = false;
    if (inside) k_roots.push_back(b);
  }
  // Rewrites replace a weight by its reflection (same norm, one fewer
  // K-inversion) and by weights strictly inside the alpha-string (smaller
  // norm), so processing in decreasing (norm, inversions) order terminates.
  using Key = std::tuple<long, int, Weight>;
  auto key_of = [&](const Weight& w) {
    int inv = 0;
    for (int b : k_roots)
      if (RootDatum::pairing_with(w, d.roots()[static_cast<std::size_t>(b)].coroot) < 0) ++inv;
    return Key{d.invariant_form(w, w), inv, w};
  };
  const LaurentPoly q = LaurentPoly::v(2), q1 = LaurentPoly::v(2) - 1;
  std::map<Key, LaurentPoly> work;
  std::map<Weight, LaurentPoly> out;
  auto push = [&](const Weight& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = work.try_emplace(key_of(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  push(mu, 1);
  int steps = 0;
  while (!work.empty()) {
    if (++steps > kStraightenCap) throw InternalError("straighten: iteration cap exceeded at " + mu.to_string());
    auto last = std::prev(work.end());
    const Weight w = std::get<2>(last->first);
    const LaurentPoly c = last->second;
    work.erase(last);
    int i = -1;
    for (int j : k.indices())
      if (d.pairing(w, j) < 0) {
        i = j;
        break;
      }
    if (i < 0) {
      add_to(out, w, c);
      continue;
    }
    // F(s lambda) = v^2 F(lambda) + (v^2 - 1) sum_{0<j<d} F(lambda - j alpha), d = <lambda, alpha^vee> > 0.
    const int dd = -d.pairing(w, i);
    const Weight lambda = d.reflect(i, w);
    const Weight& alpha = d.simple_roots()[static_cast<std::size_t>(i)];
    push(lambda, q * c);
    for (int j = 1; j < dd; ++j) push(lambda - j * alpha, q1 * c);
  }
  std::unique_lock lock(mutex_);
  return straight_.try_emplace(key, std::move(out)).first->second;
}

std::map<int, LaurentPoly> straightening_string(int d) {
  if (d < 0) throw InputError("straightening_string: d must be nonnegative");
  const LaurentPoly q = LaurentPoly::v(2), q1 = LaurentPoly::v(2) - 1;
  std::map<int, LaurentPoly> work{{-d, LaurentPoly(1)}};
  std::map<int, LaurentPoly> out;
  while (!work.empty()) {
    auto [k, c] = *work.begin();
    work.erase(work.begin());
    if (c.is_zero()) continue;
    if (k >= 0) {
      out[k] += c;
      continue;
    }
    const int e = -k;
    work[e] += q * c;
    for (int j = 1; j < e; ++j) work[e - 2 * j] += q1 * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

const std::map<Weight, LaurentPoly>& DoubleCosetModule::absorb_left(const Weight& mu, WeylElt w) const {
  const auto key = std::make_pair(mu, w.id);
  {
    std::shared_lock lock(mutex_);
    auto it = absorb_.find(key);
    if (it != absorb_.end()) return it->second;
  }
  const WeylGroup& W = algebra().finite();
  std::map<Weight, LaurentPoly> out;
  if (w == W.identity()) {
    out.emplace(mu, 1);
  } else {
    // C_I theta_nu T_s = C_I (T_s theta_{s nu} + (v^2-1) G) = -C_I theta_{s nu} + (v^2-1) C_I G.
    const int i = W.reduced_word(w).back();
    const LaurentPoly q1 = LaurentPoly::v(2) - 1;
    for (const auto& [nu, c] : absorb_left(mu, W.mul_simple_right(w, i))) {
      const ThetaPastTs r = algebra().theta_past_Ts(nu, i);
      add_to(out, r.moved, -c);
      for (const auto& [kappa, g] : r.remainder) add_to(out, kappa, q1 * g * c);
    }
  }
  std::unique_lock lock(mutex_);
  return absorb_.try_emplace(key, std::move(out)).first->second;
}

Coords DoubleCosetModule::bernstein_from_preimage(const HeckeElt& h) const {
  const WeylGroup& W = algebra().finite();
  Coords out;
  for (const auto& [k, c] : algebra().to_bernstein(h)) {
    auto [w1, z, w2] = W.double_coset_decompose(k.w, I_, J_);
    const LaurentPoly signed_c = W.sign(w2) * c;
    for (const auto& [nu, a] : absorb_left(k.lambda, w1)) {
      const LaurentPoly ca = signed_c * a;
      for (const auto& [lambda, b] : straighten(nu, z)) add_to(out, CosetIndex{lambda, z}, ca * b);
    }
  }
  return out;
}

Coords DoubleCosetModule::standard_from_preimage(const HeckeElt& h) const {
  const WeylGroup& W = algebra().finite();
  Coords out;
  for (const auto& [y, c] : h.terms()) {
    auto [w1, mm, w2] = group().double_coset_decompose(y, I_, J_);
    add_to(out, index_of(mm), (W.sign(w1) * W.sign(w2)) * c);
  }
  return out;
}

Coords DoubleCosetModule::divide_coords(const Coords& c) const {
  const LaurentPoly r = r_IJ();
  Coords out;
  for (const auto& [idx, a] : c) {
    auto qt = a.divide_exact(r);
    if (!qt) throw InputError("element is not in H^{IJ}: coordinate " + a.to_string() + " not divisible by r_IJ");
    out.emplace(idx, *qt);
  }
  return out;
}

Coords DoubleCosetModule::to_bernstein_coords(const HIJElt& e) const {
  if (e.preimage) return bernstein_from_preimage(*e.preimage);
  return divide_coords(bernstein_from_preimage(e.carrier));
}

Coords DoubleCosetModule::to_standard_coords(const HIJElt& e) const {
  if (e.preimage) return standard_from_preimage(*e.preimage);
  return divide_coords(standard_from_preimage(e.carrier));
}

Coords DoubleCosetModule::to_kl_coords(const HIJElt& e) const {
  Coords rest = to_standard_coords(e);
  Coords out;
  const std::size_t cap = 4 * rest.size() + 1000;
  for (std::size_t step = 0; !rest.empty(); ++step) {
    if (step > cap) throw InternalError("to_kl_coords: triangular peeling did not terminate");
    const CosetIndex* top = nullptr;
    int top_len = -1;
    for (const auto& [idx, a] : rest) {
      const int l = group().length(m(idx));
      if (l > top_len) {
        top_len = l;
        top = &idx;
      }
    }
    const CosetIndex idx = *top;
    const Coords col = to_standard_coords(kl_basis_elt(idx));
    if (col.at(idx) != LaurentPoly::v(-top_len))
      throw InternalError("KL basis element " + index_name(idx) + " is not unitriangular");
    const LaurentPoly c = rest.at(idx).shifted(top_len);
    add_to(out, idx, c);
    for (const auto& [j, b] : col) add_to(rest, j, -(c * b));
  }
  return out;
}

Coords DoubleCosetModule::coords(Basis b, const HIJElt& e) const {
  switch (b) {
    case Basis::Standard:
      return to_standard_coords(e);
    case Basis::Bernstein:
      return to_bernstein_coords(e);
    case Basis::KL:
      return to_kl_coords(e);
  }
  throw InputError("unknown basis");
}

HIJElt DoubleCosetModule::expand(Basis b, const Coords& c) const {
  HIJElt out{algebra().zero(), I_, J_, algebra().zero()};
  for (const auto& [idx, a] : c) out += a * basis_elt(b, idx);
  return out;
}

HIJElt DoubleCosetModule::bar(const HIJElt& e) const {
  HIJElt out{algebra().bar(e.carrier), e.I, e.J, std::nullopt};
  if (e.preimage) out.preimage = algebra().bar(*e.preimage);
  return out;
}

std::map<WeylElt, std::map<Weight, LaurentPoly>> DoubleCosetModule::filtration_coords(const HIJElt& e) const {
  std::map<WeylElt, std::map<Weight, LaurentPoly>> out;
  for (const auto& [idx, c] : to_bernstein_coords(e)) out[idx.z].emplace(idx.lambda, c);
  return out;
}

bool DoubleCosetModule::in_filtration(const HIJElt& e, WeylElt z) const {
  for (const auto& [zz, group] : filtration_coords(e))
    if (!algebra().finite().bruhat_leq(zz, z)) return false;
  return true;
}

SignedGroupAlgebraElt DoubleCosetModule::specialize_v1_raw(const HIJElt& e) const {
  SignedGroupAlgebraElt out;
  for (const auto& [x, c] : e.carrier.terms())
    if (auto n = c.eval_at_one(); n != 0) out.emplace(x, n);
  return out;
}

SignedGroupAlgebraElt DoubleCosetModule::specialize_v1(const HIJElt& e) const {
  const WeylGroup& W = algebra().finite();
  const int sign = W.sign(W.longest_element(I_)) * W.sign(W.longest_element(J_));
  SignedGroupAlgebraElt out = specialize_v1_raw(e);
  for (auto& [x, n] : out) n *= sign;
  return out;
}

std::string DoubleCosetModule::index_name(const CosetIndex& idx) const {
  std::ostringstream os;
  os << '(' << idx.lambda.to_string() << "; " << algebra().finite().name(idx.z) << ')';
  return os.str();
}

}  // namespace hecke
