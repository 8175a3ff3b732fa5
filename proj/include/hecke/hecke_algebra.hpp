#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke/ext_affine_weyl.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

class HeckeAlgebra;

/// h = sum c_x T_x, a finitely supported element of the extended affine
/// Hecke algebra. Zero coefficients are never stored.
class HeckeElt {
 public:
  using Map = std::unordered_map<ExtAffElt, LaurentPoly, ExtAffHash>;

  explicit HeckeElt(const HeckeAlgebra* parent) : parent_(parent) {}

  const HeckeAlgebra& parent() const { return *parent_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const ExtAffElt& x) const;

  void add_term(const ExtAffElt& x, const LaurentPoly& c);
  /// this += factor * other
  void add_scaled(const HeckeElt& other, const LaurentPoly& factor);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& operator*=(const LaurentPoly& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, HeckeElt h) { return h *= c; }
  HeckeElt operator-() const;
  /// Hecke product; see HeckeAlgebra::mul.
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }

  /// Terms sorted by (length, element): the deterministic rendering order.
  std::vector<std::pair<ExtAffElt, LaurentPoly>> sorted_terms() const;
  /// "c1*T[s0 s1] + ..." style rendering, "0" for zero.
  std::string to_string() const;

 private:
  const HeckeAlgebra* parent_;
  Map terms_;
};

/// Index of a Bernstein basis element theta_lambda T_w.
struct BernsteinKey {
  Weight lambda;
  WeylElt w;
  friend bool operator==(const BernsteinKey&, const BernsteinKey&) = default;
  friend std::strong_ordering operator<=>(const BernsteinKey&, const BernsteinKey&) = default;
};

/// sum c_{lambda,w} theta_lambda T_w
using BernsteinForm = std::map<BernsteinKey, LaurentPoly>;

void add_term(BernsteinForm& b, const BernsteinKey& k, const LaurentPoly& c);

/// theta_lambda T_s = T_s theta_moved + (v^2 - 1) * sum remainder[mu] theta_mu.
struct ThetaPastTs {
  Weight moved;
  std::map<Weight, LaurentPoly> remainder;
};

/// The extended affine Hecke algebra of a root datum over A = Z[v, v^-1],
/// with T_s^2 = v^2 + (v^2 - 1) T_s for s in S_af and T_x T_gamma = T_{x gamma}.
///
/// All methods are const and thread-safe; internal memo tables (inverses,
/// theta elements, Bernstein forms) are guarded by shared mutexes.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const ExtAffineWeyl> group);

  const ExtAffineWeyl& group() const { return *group_; }
  std::shared_ptr<const ExtAffineWeyl> group_ptr() const { return group_; }
  const WeylGroup& finite() const { return group_->finite(); }
  const RootDatum& datum() const { return group_->datum(); }

  HeckeElt zero() const { return HeckeElt(this); }
  HeckeElt one() const { return T(group_->identity()); }
  HeckeElt scalar(const LaurentPoly& c) const;
  HeckeElt T(const ExtAffElt& x) const;
  HeckeElt T(WeylElt w) const { return T(group_->from_finite(w)); }
  /// T_x for x parsed from a word (see ExtAffineWeyl::parse).
  HeckeElt T(const std::string& word) const { return T(group_->parse(word)); }

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  /// h * T_{s_k} and T_{s_k} * h for a generator k of S_af.
  HeckeElt mul_gen_right(const HeckeElt& h, int k) const;
  HeckeElt mul_gen_left(int k, const HeckeElt& h) const;

  /// T_x^{-1}.
  const HeckeElt& invert_T(const ExtAffElt& x) const;
  HeckeElt bar(const HeckeElt& h) const;

  /// theta_lambda = v^{l(t_nu) - l(t_mu)} T_{t_mu} T_{t_nu}^{-1} for the
  /// dominant decomposition lambda = mu - nu of the root datum.
  const HeckeElt& theta(const Weight& lambda) const;
  /// The same element from an arbitrary decomposition lambda = mu - nu with
  /// mu, nu dominant. Throws InputError when mu or nu is not dominant.
  HeckeElt theta_from(const Weight& mu, const Weight& nu) const;

  /// The finite geometric sum G with theta_lambda T_s - T_s theta_{s lambda}
  /// = (v^2 - 1) G, as coefficients of theta elements.
  ThetaPastTs theta_past_Ts(const Weight& lambda, int i) const;
  /// Expand a ThetaPastTs result in the standard basis.
  HeckeElt expand(const ThetaPastTs& r, int i) const;

  HeckeElt from_bernstein(const BernsteinForm& b) const;
  BernsteinForm to_bernstein(const HeckeElt& h) const;
  /// Bernstein form of T_x alone (memoized).
  const BernsteinForm& bernstein_of_T(const ExtAffElt& x) const;
  /// Product computed entirely in the Bernstein presentation.
  BernsteinForm bernstein_mul(const BernsteinForm& a, const BernsteinForm& b) const;
  /// T_w theta_mu rewritten as sum c theta_nu T_u (memoized).
  const BernsteinForm& finite_T_times_theta(WeylElt w, const Weight& mu) const;

 private:
  HeckeElt mul_word_right(const HeckeElt& h, const AffineWord& word) const;
  HeckeElt mul_word_left(const AffineWord& word, const HeckeElt& h) const;
  BernsteinForm bernstein_of_generator(const ExtAffElt& x) const;
  /// T_a T_b inside the finite Hecke algebra, as w -> coefficient.
  std::map<WeylElt, LaurentPoly> finite_product(WeylElt a, WeylElt b) const;

  std::shared_ptr<const ExtAffineWeyl> group_;
  LaurentPoly q_;         // v^2
  LaurentPoly q_minus_1_; // v^2 - 1

  mutable std::shared_mutex inv_mutex_;
  mutable std::unordered_map<ExtAffElt, HeckeElt, ExtAffHash> inverses_;
  mutable std::shared_mutex theta_mutex_;
  mutable std::unordered_map<Weight, HeckeElt, WeightHash> thetas_;
  mutable std::shared_mutex bern_mutex_;
  mutable std::unordered_map<ExtAffElt, BernsteinForm, ExtAffHash> bernstein_T_;
  mutable std::map<std::pair<std::uint32_t, Weight>, BernsteinForm> T_theta_;
};

}  // namespace hecke
