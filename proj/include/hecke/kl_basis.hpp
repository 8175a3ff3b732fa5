#pragma once

#include <memory>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hecke/hecke_algebra.hpp"

namespace hecke {

/// Kazhdan-Lusztig data on W_ex: the bases C'_x = v^{-l(x)} sum_{y<=x} P_{y,x} T_y
/// and C_x, with the polynomials P_{y,x} memoized per x.
///
/// C'_x is built by the recursion C'_x = C'_s C'_{sx} - sum mu(y,sx) C'_y
/// (s a left descent of x in S_af, y < sx with sy < y) and
/// C'_{y gamma} = C'_y T_gamma. Every computed P_{y,x} is checked against
/// the degree bound deg P_{y,x} <= l(x) - l(y) - 1 (InternalError otherwise).
/// Thread-safe.
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const HeckeAlgebra> algebra);

  const HeckeAlgebra& algebra() const { return *H_; }
  std::shared_ptr<const HeckeAlgebra> algebra_ptr() const { return H_; }

  const HeckeElt& c_prime(const ExtAffElt& x) const;
  HeckeElt c_element(const ExtAffElt& x) const;
  LaurentPoly kl_polynomial(const ExtAffElt& y, const ExtAffElt& x) const;
  /// Coefficient of v^{l(x)-l(y)-1} in P_{y,x}. Requires y < x.
  LaurentPoly::Coeff mu_coefficient(const ExtAffElt& y, const ExtAffElt& x) const;

  /// All stored (y, x, P_{y,x}) with P nonzero, sorted by (l(x), x, l(y), y).
  std::vector<std::tuple<ExtAffElt, ExtAffElt, LaurentPoly>> entries() const;
  /// Whether every stored polynomial has only even exponents.
  bool all_in_v_squared() const;
  std::size_t size() const;

  /// Seed the memo with P_{y,x} for one x (from a cache file). The diagonal
  /// entry must be 1 and the degree bound must hold.
  void insert_column(const ExtAffElt& x, const std::vector<std::pair<ExtAffElt, LaurentPoly>>& column);

 private:
  HeckeElt compute(const ExtAffElt& x) const;
  void check_column(const ExtAffElt& x, const HeckeElt& c) const;

  std::shared_ptr<const HeckeAlgebra> H_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<ExtAffElt, HeckeElt, ExtAffHash> cprime_;
};

}  // namespace hecke
