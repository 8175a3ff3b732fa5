#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hecke/root_datum.hpp"

namespace hecke {

/// Element of the finite Weyl group W, as an index into the group table of
/// its parent WeylGroup. Index 0 is the identity; indices follow a
/// breadth-first enumeration, so they are sorted by length.
struct WeylElt {
  std::uint32_t id = 0;
  friend bool operator==(WeylElt, WeylElt) = default;
  friend std::strong_ordering operator<=>(WeylElt, WeylElt) = default;
};

/// The finite Weyl group of a root datum, fully tabulated at construction.
///
/// Elements are identified by their permutation of the root system, which
/// is canonical. Tables: root permutation, lattice matrix, length, inverse,
/// reduced word, simple multiplication on both sides. All const methods are
/// safe to call concurrently.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }

  std::size_t order() const { return perms_.size(); }
  WeylElt identity() const { return {0}; }
  WeylElt simple(int i) const;
  std::vector<WeylElt> elements() const;

  WeylElt multiply(WeylElt a, WeylElt b) const;
  WeylElt inverse(WeylElt a) const { return {inverse_[a.id]}; }
  WeylElt mul_simple_right(WeylElt a, int i) const { return {right_[a.id * rank_s_ + static_cast<std::size_t>(i)]}; }
  WeylElt mul_simple_left(int i, WeylElt a) const { return {left_[a.id * rank_s_ + static_cast<std::size_t>(i)]}; }
  WeylElt from_word(std::span<const int> word) const;

  int length(WeylElt w) const { return length_[w.id]; }
  int sign(WeylElt w) const { return (length(w) % 2) ? -1 : 1; }
  const std::vector<int>& reduced_word(WeylElt w) const { return words_[w.id]; }
  /// Word like "s1 s2", or "1" for the identity.
  std::string name(WeylElt w) const;
  /// Parse a space-separated word of simple names ("1" or "" for identity).
  WeylElt parse(const std::string& word) const;

  /// w(lambda) for lambda in X(T).
  Weight act(WeylElt w, const Weight& lambda) const;
  /// Index (into datum().roots()) of w(root k).
  int act_on_root(WeylElt w, int root_index) const { return perms_[w.id][static_cast<std::size_t>(root_index)]; }
  /// True iff w^{-1}(alpha_k) < 0 for the positive root k.
  bool inverse_inverts(WeylElt w, int positive_root) const;

  bool is_left_descent(WeylElt w, int i) const { return length(mul_simple_left(i, w)) < length(w); }
  bool is_right_descent(WeylElt w, int i) const { return length(mul_simple_right(w, i)) < length(w); }

  bool bruhat_leq(WeylElt y, WeylElt w) const;

  bool in_parabolic(WeylElt w, SimpleSubset I) const;
  std::vector<WeylElt> parabolic_elements(SimpleSubset I) const;
  WeylElt longest_element(SimpleSubset I) const;
  /// The reflection s_beta for the root with the given index.
  WeylElt reflection(int root_index) const;

  bool is_min_double_coset_rep(WeylElt w, SimpleSubset I, SimpleSubset J) const;
  /// W^{IJ}, sorted by (length, index): a linear extension of Bruhat order.
  std::vector<WeylElt> min_double_coset_reps(SimpleSubset I, SimpleSubset J) const;
  /// w = w1 * z * w2 with w1 in W_I, z in W^{IJ}, w2 in W_J, lengths adding.
  std::tuple<WeylElt, WeylElt, WeylElt> double_coset_decompose(WeylElt w, SimpleSubset I, SimpleSubset J) const;
  /// K with Pi_K = Pi_I intersect z(Pi_J). Throws InputError unless z is in W^{IJ}.
  SimpleSubset parabolic_intersection(WeylElt z, SimpleSubset I, SimpleSubset J) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::size_t rank_s_ = 0;
  std::vector<std::vector<std::uint16_t>> perms_;
  std::vector<std::vector<int>> matrices_;  // rank x rank, row-major
  std::vector<int> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> right_, left_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint64_t> inv_inversions_;  // bitmask over positive roots
  std::vector<std::uint32_t> table_;           // full product table when small
};

}  // namespace hecke
