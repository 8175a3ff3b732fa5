#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke/finite_weyl.hpp"

namespace hecke {

/// t_lambda * w in W_ex = X(T) x| W, with (t_l w)(t_m u) = t_{l + w(m)} wu.
struct ExtAffElt {
  Weight translation;
  WeylElt finite;

  friend bool operator==(const ExtAffElt&, const ExtAffElt&) = default;
  friend std::strong_ordering operator<=>(const ExtAffElt&, const ExtAffElt&) = default;
};

struct ExtAffHash {
  std::size_t operator()(const ExtAffElt& x) const {
    return x.translation.hash() * 1000003ULL ^ static_cast<std::size_t>(x.finite.id);
  }
};

/// A reduced expression: letters over S_af (indices into the generator list
/// of ExtAffineWeyl) followed by a length-zero element.
struct AffineWord {
  std::vector<int> letters;
  ExtAffElt gamma;
};

/// The extended affine Weyl group of a root datum.
///
/// S_af is S together with one affine reflection t_theta s_theta per
/// irreducible component, theta the root whose coroot is the highest coroot.
/// Generator k < r is the finite simple reflection s_{k+1}; generator r + c
/// is the affine reflection of component c. Length is the Iwahori-Matsumoto
/// formula; reduced words are obtained by peeling left descents.
class ExtAffineWeyl {
 public:
  explicit ExtAffineWeyl(std::shared_ptr<const WeylGroup> finite);

  const WeylGroup& finite() const { return *finite_; }
  std::shared_ptr<const WeylGroup> finite_ptr() const { return finite_; }
  const RootDatum& datum() const { return finite_->datum(); }

  ExtAffElt identity() const { return {datum().zero(), finite_->identity()}; }
  ExtAffElt translation(const Weight& lambda) const { return {lambda, finite_->identity()}; }
  ExtAffElt from_finite(WeylElt w) const { return {datum().zero(), w}; }

  ExtAffElt multiply(const ExtAffElt& x, const ExtAffElt& y) const;
  ExtAffElt inverse(const ExtAffElt& x) const;

  int length(const ExtAffElt& x) const;
  int sign(const ExtAffElt& x) const { return (length(x) % 2) ? -1 : 1; }
  bool is_length_zero(const ExtAffElt& x) const { return length(x) == 0; }

  int num_generators() const { return static_cast<int>(generators_.size()); }
  const ExtAffElt& generator(int k) const { return generators_.at(static_cast<std::size_t>(k)); }
  bool is_finite_generator(int k) const { return k < datum().semisimple_rank(); }
  const std::string& generator_name(int k) const { return generator_names_.at(static_cast<std::size_t>(k)); }
  ExtAffElt mul_gen_right(const ExtAffElt& x, int k) const;
  ExtAffElt mul_gen_left(int k, const ExtAffElt& x) const;
  bool is_left_descent(int k, const ExtAffElt& x) const { return length(mul_gen_left(k, x)) < length(x); }
  bool is_right_descent(const ExtAffElt& x, int k) const { return length(mul_gen_right(x, k)) < length(x); }

  /// x = y * gamma with y in W_af and length(gamma) = 0.
  std::pair<ExtAffElt, ExtAffElt> waf_gamma_decompose(const ExtAffElt& x) const;
  const AffineWord& reduced_word(const ExtAffElt& x) const;
  ExtAffElt evaluate(const AffineWord& w) const;

  bool bruhat_leq(const ExtAffElt& x, const ExtAffElt& y) const;

  /// (lambda, z) with t_lambda z in W_I x W_J, z in W^{IJ}, lambda dominant
  /// for parabolic_intersection(z, I, J).
  std::pair<Weight, WeylElt> canonical_rep(const ExtAffElt& x, SimpleSubset I, SimpleSubset J) const;
  /// m_{lambda,z}: the minimal-length element of W_I t_lambda z W_J.
  ExtAffElt minimal_length_rep(const Weight& lambda, WeylElt z, SimpleSubset I, SimpleSubset J) const;
  /// x = w1 * m * w2 with w1 in W_I, w2 in W_J, m minimal, lengths adding.
  std::tuple<WeylElt, ExtAffElt, WeylElt> double_coset_decompose(const ExtAffElt& x, SimpleSubset I,
                                                                SimpleSubset J) const;

  /// Length-zero elements whose translation lies in the box
  /// |coords| <= box. For semisimple data this is all of Gamma whenever
  /// box >= 1 in weight coordinates; with central torus directions Gamma is
  /// infinite and the box truncates it.
  std::vector<ExtAffElt> gamma_elements(int box = 2) const;
  /// All x with length(x) <= max_len and Gamma-component in gamma_elements(box),
  /// sorted by (length, element).
  std::vector<ExtAffElt> enumerate_window(int max_len, int box = 2) const;
  /// W-stable weight window: W-orbits of dominant weights with |coords| <= n.
  std::vector<Weight> weight_window(int n) const;

  /// "s0 s1 g:1" style word, "1" for the identity.
  std::string name(const ExtAffElt& x) const;
  /// Parse a word over S_af with optional "g:<coords>" Gamma factors
  /// (or "t:<coords>" translations), multiplied left to right.
  ExtAffElt parse(const std::string& word) const;
  /// The unique length-zero element with the given translation part.
  ExtAffElt gamma_with_translation(const Weight& lambda) const;

 private:
  std::shared_ptr<const WeylGroup> finite_;
  std::vector<ExtAffElt> generators_;
  std::vector<std::string> generator_names_;

  mutable std::shared_mutex word_mutex_;
  mutable std::unordered_map<ExtAffElt, AffineWord, ExtAffHash> words_;
};

}  // namespace hecke
