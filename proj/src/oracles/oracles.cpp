#include "hecke/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke::oracle {

int inversion_count(const WeylGroup& W, WeylElt w) {
  const int npos = W.datum().num_positive_roots();
  int n = 0;
  for (int k = 0; k < npos; ++k)
    if (W.act_on_root(w, k) >= npos) ++n;
  return n;
}

std::vector<int> finite_lengths_bfs(const WeylGroup& W) {
  std::vector<int> dist(W.order(), -1);
  dist[0] = 0;
  std::deque<WeylElt> queue{W.identity()};
  while (!queue.empty()) {
    const WeylElt x = queue.front();
    queue.pop_front();
    for (int i = 0; i < W.datum().semisimple_rank(); ++i) {
      const WeylElt y = W.multiply(x, W.simple(i));
      if (dist[y.id] < 0) {
        dist[y.id] = dist[x.id] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::set<WeylElt> finite_subword_products(const WeylGroup& W, const std::vector<int>& word) {
  std::set<WeylElt> cur{W.identity()};
  for (int letter : word) {
    std::set<WeylElt> next = cur;
    for (auto x : cur) next.insert(W.multiply(x, W.simple(letter)));
    cur = std::move(next);
  }
  return cur;
}

bool finite_bruhat_subword(const WeylGroup& W, WeylElt y, WeylElt w) {
  return finite_subword_products(W, W.reduced_word(w)).count(y) > 0;
}

std::unordered_map<ExtAffElt, int, ExtAffHash> affine_lengths_bfs(const ExtAffineWeyl& E, int max_len, int box) {
  std::unordered_map<ExtAffElt, int, ExtAffHash> dist;
  std::deque<ExtAffElt> queue;
  for (const auto& g : E.gamma_elements(box)) {
    dist.emplace(g, 0);
    queue.push_back(g);
  }
  while (!queue.empty()) {
    const ExtAffElt x = queue.front();
    queue.pop_front();
    const int d = dist.at(x);
    if (d == max_len) continue;
    for (int k = 0; k < E.num_generators(); ++k) {
      const ExtAffElt y = E.multiply(E.generator(k), x);
      if (dist.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

bool affine_bruhat_subword(const ExtAffineWeyl& E, const ExtAffElt& x, const ExtAffElt& y) {
  const AffineWord& wx = E.reduced_word(x);
  const AffineWord& wy = E.reduced_word(y);
  if (!(wx.gamma == wy.gamma)) return false;
  std::set<ExtAffElt> cur{E.identity()};
  for (int letter : wy.letters) {
    std::set<ExtAffElt> next = cur;
    for (const auto& z : cur) next.insert(E.multiply(z, E.generator(letter)));
    cur = std::move(next);
  }
  return cur.count(E.multiply(x, E.inverse(wx.gamma))) > 0;
}

std::vector<int> double_coset_classes(const ExtAffineWeyl& E, const std::vector<ExtAffElt>& elements,
                                      SimpleSubset I, SimpleSubset J) {
  std::map<ExtAffElt, std::size_t> pos;
  for (std::size_t i = 0; i < elements.size(); ++i) pos.emplace(elements[i], i);
  std::vector<std::size_t> parent(elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](std::size_t a, const ExtAffElt& other) {
    auto it = pos.find(other);
    if (it == pos.end()) throw InputError("double_coset_classes: element set is not closed under W_I x W_J");
    parent[find(a)] = find(it->second);
  };
  const WeylGroup& W = E.finite();
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (int i : I.indices()) join(a, E.multiply(E.from_finite(W.simple(i)), elements[a]));
    for (int j : J.indices()) join(a, E.multiply(elements[a], E.from_finite(W.simple(j))));
  }
  std::vector<int> label(elements.size());
  std::map<std::size_t, int> names;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    auto [it, _] = names.emplace(find(a), static_cast<int>(names.size()));
    label[a] = it->second;
  }
  return label;
}

std::set<ExtAffElt> double_coset(const ExtAffineWeyl& E, const ExtAffElt& x, SimpleSubset I, SimpleSubset J) {
  const WeylGroup& W = E.finite();
  std::set<ExtAffElt> out;
  for (auto a : W.parabolic_elements(I))
    for (auto b : W.parabolic_elements(J)) out.insert(E.multiply(E.multiply(E.from_finite(a), x), E.from_finite(b)));
  return out;
}

std::vector<ExtAffElt> bruhat_ideal(const ExtAffineWeyl& E, const ExtAffElt& x) {
  const AffineWord& w = E.reduced_word(x);
  std::set<ExtAffElt> cur{E.identity()};
  for (int letter : w.letters) {
    std::set<ExtAffElt> next = cur;
    for (const auto& z : cur) next.insert(E.multiply(z, E.generator(letter)));
    cur = std::move(next);
  }
  std::vector<ExtAffElt> out;
  for (const auto& z : cur) out.push_back(E.multiply(z, w.gamma));
  return out;
}

HeckeElt kl_by_bar_fixed_point(const HeckeAlgebra& H, const ExtAffElt& x) {
  const ExtAffineWeyl& E = H.group();
  std::vector<ExtAffElt> ideal = bruhat_ideal(E, x);
  std::sort(ideal.begin(), ideal.end(), [&E](const ExtAffElt& a, const ExtAffElt& b) {
    const int la = E.length(a), lb = E.length(b);
    return la != lb ? la > lb : a < b;
  });
  // bar(v^{-l(z)} T_z) = v^{l(z)} T_{z^-1}^{-1} = sum_y r_{y,z} v^{-l(y)} T_y.
  std::map<ExtAffElt, HeckeElt> bar_normalized;
  for (const auto& z : ideal) bar_normalized.emplace(z, LaurentPoly::v(E.length(z)) * H.invert_T(E.inverse(z)));
  auto r = [&](const ExtAffElt& y, const ExtAffElt& z) {
    return bar_normalized.at(z).coeff(y).shifted(E.length(y));
  };
  // C'_x = sum p_y v^{-l(y)} T_y with p_x = 1, p_y in v^-1 Z[v^-1].
  std::map<ExtAffElt, LaurentPoly> p;
  p.emplace(x, 1);
  for (const auto& y : ideal) {
    if (y == x) continue;
    LaurentPoly rhs;
    for (const auto& [z, pz] : p) rhs.add_scaled(r(y, z), pz.bar());
    const LaurentPoly py = rhs.negative_part();
    if (py - py.bar() != rhs) throw InternalError("bar fixed point: inconsistent system at " + E.name(y));
    p.emplace(y, py);
  }
  HeckeElt out = H.zero();
  for (const auto& [y, py] : p) out.add_term(y, py.shifted(-E.length(y)));
  return out;
}

std::map<ExtAffElt, std::int64_t> signed_coset_sum(const ExtAffineWeyl& E, const ExtAffElt& x, SimpleSubset I,
                                                   SimpleSubset J) {
  const WeylGroup& W = E.finite();
  std::map<ExtAffElt, std::int64_t> out;
  for (auto a : W.parabolic_elements(I))
    for (auto b : W.parabolic_elements(J))
      out[E.multiply(E.multiply(E.from_finite(a), x), E.from_finite(b))] += W.sign(a) * W.sign(b);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  constexpr std::int64_t p = 2147483647;
  auto norm = [](std::int64_t a) { return ((a % p) + p) % p; };
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b = norm(b);
    for (; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (auto& row : rows)
    for (auto& a : row) a = norm(a);
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    const std::int64_t inv = power(pr[c], p - 2);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::int64_t f = rows[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = norm(rows[r][k] - f * pr[k] % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace hecke::oracle
