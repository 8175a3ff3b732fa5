#pragma once

#include <random>
#include <string>
#include <vector>

#include "hecke/verify.hpp"

namespace hecke::verify::detail {

void add_group_checks(std::vector<Check>& out);
void add_hecke_checks(std::vector<Check>& out);
void add_hij_checks(std::vector<Check>& out);

inline Weight random_weight(std::mt19937& rng, int rank, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = coord(rng);
  return w;
}

inline LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-3, 3), n(0, 3);
  LaurentPoly p;
  for (int k = n(rng); k > 0; --k) p += LaurentPoly::monomial(c(rng), e(rng));
  return p;
}

inline HeckeElt random_elt(const HeckeAlgebra& H, const std::vector<ExtAffElt>& window, std::mt19937& rng,
                           int terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2), exp(-2, 2);
  HeckeElt h = H.zero();
  for (int t = 0; t < terms; ++t) h.add_term(window[pick(rng)], LaurentPoly::monomial(coeff(rng), exp(rng)) + coeff(rng));
  return h;
}

/// Every subset of the simple reflections.
inline std::vector<SimpleSubset> all_subsets(const RootDatum& d) {
  std::vector<SimpleSubset> out;
  for (std::uint32_t m = 0; m < (1U << d.semisimple_rank()); ++m) out.emplace_back(m);
  return out;
}

/// All weights with |coords| <= n.
inline std::vector<Weight> weight_box(int rank, int n) {
  std::vector<Weight> out;
  std::vector<int> v(static_cast<std::size_t>(rank), -n);
  for (;;) {
    out.emplace_back(v);
    int k = 0;
    while (k < rank && ++v[static_cast<std::size_t>(k)] > n) v[static_cast<std::size_t>(k++)] = -n;
    if (k == rank) break;
  }
  return out;
}

}  // namespace hecke::verify::detail
