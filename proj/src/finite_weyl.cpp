#include "hecke/finite_weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr std::size_t kMaxOrder = 1U << 20;
constexpr std::size_t kFullTableOrder = 2048;

}  // namespace

WeylGroup::WeylGroup(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {
  const RootDatum& d = *datum_;
  const int r = d.semisimple_rank();
  const int n = d.rank();
  rank_s_ = static_cast<std::size_t>(r);
  const auto& roots = d.roots();
  const int npos = d.num_positive_roots();
  if (npos > 64) throw InputError("root systems with more than 64 positive roots are not supported");

  std::map<std::vector<int>, int> root_by_coords;
  for (std::size_t k = 0; k < roots.size(); ++k) root_by_coords.emplace(roots[k].simple_coords, static_cast<int>(k));

  // Root permutations and lattice matrices of the simple reflections.
  std::vector<std::vector<std::uint16_t>> simple_perm(rank_s_);
  std::vector<std::vector<int>> simple_mat(rank_s_);
  for (int i = 0; i < r; ++i) {
    auto& p = simple_perm[static_cast<std::size_t>(i)];
    for (const auto& rt : roots) {
      int pb = 0;
      for (int k = 0; k < r; ++k) pb += rt.simple_coords[static_cast<std::size_t>(k)] * d.cartan()[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      auto b = rt.simple_coords;
      b[static_cast<std::size_t>(i)] -= pb;
      p.push_back(static_cast<std::uint16_t>(root_by_coords.at(b)));
    }
    auto& m = simple_mat[static_cast<std::size_t>(i)];
    m.assign(static_cast<std::size_t>(n * n), 0);
    const Weight& a = d.simple_roots()[static_cast<std::size_t>(i)];
    const Weight& c = d.simple_coroots()[static_cast<std::size_t>(i)];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        m[static_cast<std::size_t>(x * n + y)] = (x == y ? 1 : 0) - a[static_cast<std::size_t>(x)] * c[static_cast<std::size_t>(y)];
  }

  auto matmul = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(static_cast<std::size_t>(n * n), 0);
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        const int axz = a[static_cast<std::size_t>(x * n + z)];
        if (axz == 0) continue;
        for (int y = 0; y < n; ++y) out[static_cast<std::size_t>(x * n + y)] += axz * b[static_cast<std::size_t>(z * n + y)];
      }
    return out;
  };

  std::map<std::vector<std::uint16_t>, std::uint32_t> index;
  std::vector<std::uint16_t> id_perm(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) id_perm[k] = static_cast<std::uint16_t>(k);
  std::vector<int> id_mat(static_cast<std::size_t>(n * n), 0);
  for (int x = 0; x < n; ++x) id_mat[static_cast<std::size_t>(x * n + x)] = 1;

  perms_.push_back(id_perm);
  matrices_.push_back(id_mat);
  words_.push_back({});
  index.emplace(id_perm, 0);
  // Breadth-first by right multiplication: depth equals length.
  for (std::size_t cur = 0; cur < perms_.size(); ++cur) {
    for (int i = 0; i < r; ++i) {
      std::vector<std::uint16_t> p(roots.size());
      const auto& sp = simple_perm[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < roots.size(); ++k) p[k] = perms_[cur][sp[k]];
      auto [it, inserted] = index.emplace(p, static_cast<std::uint32_t>(perms_.size()));
      if (inserted) {
        if (perms_.size() >= kMaxOrder) throw InputError("Weyl group too large to tabulate");
        matrices_.push_back(matmul(matrices_[cur], simple_mat[static_cast<std::size_t>(i)]));
        auto w = words_[cur];
        w.push_back(i);
        words_.push_back(std::move(w));
        perms_.push_back(std::move(p));
      }
    }
  }

  const std::size_t N = perms_.size();
  auto lookup = [&](const std::vector<std::uint16_t>& p) { return index.at(p); };
  length_.resize(N);
  inverse_.resize(N);
  right_.resize(N * rank_s_);
  left_.resize(N * rank_s_);
  inv_inversions_.resize(N);
  for (std::size_t w = 0; w < N; ++w) {
    const auto& p = perms_[w];
    int len = 0;
    for (int k = 0; k < npos; ++k)
      if (p[static_cast<std::size_t>(k)] >= npos) ++len;
    length_[w] = len;
    if (static_cast<std::size_t>(len) != words_[w].size())
      throw InternalError("Weyl group: inversion count disagrees with breadth-first depth");
    std::vector<std::uint16_t> inv(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<std::uint16_t>(k);
    inverse_[w] = lookup(inv);
    std::uint64_t mask = 0;
    for (int k = 0; k < npos; ++k)
      if (inv[static_cast<std::size_t>(k)] >= npos) mask |= (1ULL << k);
    inv_inversions_[w] = mask;
    for (int i = 0; i < r; ++i) {
      const auto& sp = simple_perm[static_cast<std::size_t>(i)];
      std::vector<std::uint16_t> rp(p.size()), lp(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        rp[k] = p[sp[k]];
        lp[k] = sp[p[k]];
      }
      right_[w * rank_s_ + static_cast<std::size_t>(i)] = lookup(rp);
      left_[w * rank_s_ + static_cast<std::size_t>(i)] = lookup(lp);
    }
  }
  if (N <= kFullTableOrder) {
    table_.resize(N * N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        std::vector<std::uint16_t> p(perms_[a].size());
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = perms_[a][perms_[b][k]];
        table_[a * N + b] = lookup(p);
      }
  }
}

WeylElt WeylGroup::simple(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= rank_s_) throw InputError("simple reflection index out of range");
  return mul_simple_right(identity(), i);
}

std::vector<WeylElt> WeylGroup::elements() const {
  std::vector<WeylElt> out(order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {static_cast<std::uint32_t>(i)};
  return out;
}

WeylElt WeylGroup::multiply(WeylElt a, WeylElt b) const {
  if (!table_.empty()) return {table_[a.id * order() + b.id]};
  for (int i : words_[b.id]) a = mul_simple_right(a, i);
  return a;
}

WeylElt WeylGroup::from_word(std::span<const int> word) const {
  WeylElt w = identity();
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank_s_) throw InputError("simple reflection index out of range");
    w = mul_simple_right(w, i);
  }
  return w;
}

std::string WeylGroup::name(WeylElt w) const {
  const auto& word = reduced_word(w);
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << datum_->simple_name(word[k]);
  }
  return os.str();
}

WeylElt WeylGroup::parse(const std::string& word) const {
  std::istringstream is(word);
  std::string tok;
  WeylElt w = identity();
  while (is >> tok) {
    if (tok == "1") continue;
    const int i = datum_->simple_index(tok);
    if (i < 0) throw InputError("unknown simple reflection '" + tok + "'");
    w = mul_simple_right(w, i);
  }
  return w;
}

Weight WeylGroup::act(WeylElt w, const Weight& lambda) const {
  const std::size_t n = lambda.size();
  const auto& m = matrices_[w.id];
  Weight out(n);
  for (std::size_t x = 0; x < n; ++x) {
    int s = 0;
    for (std::size_t y = 0; y < n; ++y) s += m[x * n + y] * lambda[y];
    out[x] = s;
  }
  return out;
}

bool WeylGroup::inverse_inverts(WeylElt w, int positive_root) const {
  return (inv_inversions_[w.id] >> positive_root) & 1ULL;
}

bool WeylGroup::bruhat_leq(WeylElt y, WeylElt w) const {
  // Lifting property: for a left descent s of w, y <= w iff min(y, sy) <= sw.
  for (;;) {
    if (length(y) > length(w)) return false;
    if (length(w) == 0) return y == w;
    const int s = reduced_word(w).front();
    if (is_left_descent(y, s)) y = mul_simple_left(s, y);
    w = mul_simple_left(s, w);
  }
}

bool WeylGroup::in_parabolic(WeylElt w, SimpleSubset I) const {
  for (int i : reduced_word(w))
    if (!I.contains(i)) return false;
  return true;
}

std::vector<WeylElt> WeylGroup::parabolic_elements(SimpleSubset I) const {
  std::vector<WeylElt> out;
  for (auto w : elements())
    if (in_parabolic(w, I)) out.push_back(w);
  return out;
}

WeylElt WeylGroup::longest_element(SimpleSubset I) const {
  WeylElt w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : I.indices())
      if (!is_right_descent(w, i)) {
        w = mul_simple_right(w, i);
        grew = true;
      }
  }
  return w;
}

WeylElt WeylGroup::reflection(int root_index) const {
  const RootDatum& d = *datum_;
  const auto& beta = d.roots().at(static_cast<std::size_t>(root_index));
  const int r = d.semisimple_rank();
  std::vector<int> targets;
  for (int j = 0; j < r; ++j) {
    const int p = RootDatum::pairing_with(d.simple_roots()[static_cast<std::size_t>(j)], beta.coroot);
    std::vector<int> b(static_cast<std::size_t>(r), 0);
    b[static_cast<std::size_t>(j)] = 1;
    for (int k = 0; k < r; ++k) b[static_cast<std::size_t>(k)] -= p * beta.simple_coords[static_cast<std::size_t>(k)];
    targets.push_back(d.root_index(Weight(b)));
  }
  for (auto w : elements()) {
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      Weight e(static_cast<std::size_t>(r));
      e[static_cast<std::size_t>(j)] = 1;
      ok = act_on_root(w, d.root_index(e)) == targets[static_cast<std::size_t>(j)];
    }
    if (ok) return w;
  }
  throw InternalError("reflection not found in Weyl group");
}

bool WeylGroup::is_min_double_coset_rep(WeylElt w, SimpleSubset I, SimpleSubset J) const {
  for (int i : I.indices())
    if (is_left_descent(w, i)) return false;
  for (int j : J.indices())
    if (is_right_descent(w, j)) return false;
  return true;
}

std::vector<WeylElt> WeylGroup::min_double_coset_reps(SimpleSubset I, SimpleSubset J) const {
  std::vector<WeylElt> out;
  for (auto w : elements())
    if (is_min_double_coset_rep(w, I, J)) out.push_back(w);
  return out;  // element indices are already sorted by length
}

std::tuple<WeylElt, WeylElt, WeylElt> WeylGroup::double_coset_decompose(WeylElt w, SimpleSubset I,
                                                                        SimpleSubset J) const {
  WeylElt w1 = identity(), w2 = identity();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : I.indices())
      if (is_left_descent(w, i)) {
        w = mul_simple_left(i, w);
        w1 = mul_simple_right(w1, i);
        moved = true;
      }
    for (int j : J.indices())
      if (is_right_descent(w, j)) {
        w = mul_simple_right(w, j);
        w2 = mul_simple_left(j, w2);
        moved = true;
      }
  }
  return {w1, w, w2};
}

SimpleSubset WeylGroup::parabolic_intersection(WeylElt z, SimpleSubset I, SimpleSubset J) const {
  if (!is_min_double_coset_rep(z, I, J))
    throw InputError("parabolic_intersection: " + name(z) + " is not a minimal (W_I, W_J) double coset representative");
  const RootDatum& d = *datum_;
  const int r = d.semisimple_rank();
  // Simple roots sit at positions 0..r-1 only if ordered by height; look them up.
  std::vector<int> simple_idx(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    Weight e(static_cast<std::size_t>(r));
    e[static_cast<std::size_t>(j)] = 1;
    simple_idx[static_cast<std::size_t>(j)] = d.root_index(e);
  }
  const WeylElt zi = inverse(z);
  std::vector<int> K;
  for (int i : I.indices()) {
    const int img = act_on_root(zi, simple_idx[static_cast<std::size_t>(i)]);
    for (int j : J.indices())
      if (img == simple_idx[static_cast<std::size_t>(j)]) K.push_back(i);
  }
  return SimpleSubset::from_indices(K);
}

}  // namespace hecke
