#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Largest supported lattice rank.
inline constexpr std::size_t kMaxRank = 8;

/// An element of the character lattice X(T), in the coordinates of the
/// lattice basis the root datum was built with. Also used for covectors
/// (coroots) in the dual basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<int> coords);
  explicit Weight(const std::vector<int>& coords);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  bool is_zero() const;
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + n_}; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight w);

  /// Euclidean dot product of coordinate vectors (lattice against dual basis).
  long dot(const Weight& o) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight&, const Weight&) = default;

  std::size_t hash() const;
  /// "1,-2" ; the zero weight renders as all zeros.
  std::string to_string() const;

 private:
  std::array<std::int32_t, kMaxRank> c_{};
  std::uint8_t n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

/// A subset I of the finite simple reflections S, stored as a bitmask over
/// 0-based simple indices.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  explicit SimpleSubset(std::uint32_t mask) : mask_(mask) {}
  static SimpleSubset from_indices(std::initializer_list<int> idx);
  static SimpleSubset from_indices(const std::vector<int>& idx);
  static SimpleSubset full(int semisimple_rank);

  bool contains(int i) const { return (mask_ >> i) & 1U; }
  bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> indices() const;
  bool subset_of(SimpleSubset o) const { return (mask_ & ~o.mask_) == 0; }

  friend SimpleSubset operator&(SimpleSubset a, SimpleSubset b) { return SimpleSubset(a.mask_ & b.mask_); }
  friend SimpleSubset operator|(SimpleSubset a, SimpleSubset b) { return SimpleSubset(a.mask_ | b.mask_); }
  friend bool operator==(SimpleSubset, SimpleSubset) = default;

  /// "{}" or "{1,2}" with 1-based labels.
  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

/// A root with its coroot, in lattice coordinates, plus its expansion in
/// simple roots (which decides positivity).
struct Root {
  Weight root;
  Weight coroot;               ///< covector: <lambda, coroot> = lambda . coroot
  std::vector<int> simple_coords;
  std::vector<int> simple_coroot_coords;
  bool positive() const;
  int height() const;
  int coroot_height() const;
};

/// A based root datum (X(T), Pi, Pi-check) with derived root system.
///
/// Immutable after construction. The constructor validates the Cartan
/// matrix and closes the simple roots under simple reflections; it throws
/// InputError on inconsistent or infinite input.
class RootDatum {
 public:
  /// `cartan[i][j] = <alpha_i, alpha_j^vee>`. Simple roots and coroots
  /// are given in lattice coordinates (coroots as covectors).
  RootDatum(std::string name, std::vector<std::vector<int>> cartan, std::vector<Weight> simple_roots,
            std::vector<Weight> simple_coroots);

  /// Simply connected datum: X(T) is the weight lattice in the
  /// fundamental-weight basis, so alpha_i is row i of the Cartan matrix.
  static RootDatum weight_lattice(std::string name, std::vector<std::vector<int>> cartan);
  /// Adjoint datum: X(T) is the root lattice in the simple-root basis.
  static RootDatum root_lattice(std::string name, std::vector<std::vector<int>> cartan);

  /// Built-in presets: A1, A2, B2, G2, GL2, plus A1adj, A2adj (adjoint
  /// lattices). "A1affine" is accepted as an alias of A1.
  static RootDatum preset(const std::string& name);
  static std::vector<std::string> preset_names();
  /// Parse the JSON document described in the README.
  static RootDatum from_json_text(const std::string& text);

  const std::string& name() const { return name_; }
  /// Rank of the lattice X(T).
  int rank() const { return rank_; }
  /// Number of simple roots.
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::string& simple_name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  int simple_index(const std::string& name) const;  ///< -1 when unknown

  /// All roots: positive roots first (ordered by height), then their negatives
  /// in the same order, so root k + |Phi+| is -root k.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive_roots() const { return num_positive_; }
  int root_index(const Weight& simple_coords_as_weight) const;

  /// <lambda, alpha_j^vee>
  int pairing(const Weight& lambda, int j) const;
  /// <lambda, c> for a general covector c.
  static int pairing_with(const Weight& lambda, const Weight& covector);

  Weight reflect(int i, const Weight& lambda) const;
  /// Reflection in an arbitrary root (index into roots()).
  Weight reflect_root(int root_index, const Weight& lambda) const;

  bool is_dominant_for(const Weight& lambda, SimpleSubset I) const;
  /// (mu, word) with mu = w(lambda) dominant for I, w in W_I the product of
  /// the word's letters taken left to right.
  std::pair<Weight, std::vector<int>> dominant_representative(const Weight& lambda, SimpleSubset I) const;
  /// (mu, nu) dominant with lambda = mu - nu.
  std::pair<Weight, Weight> dominant_difference(const Weight& lambda) const;
  /// The dominant weight added once per unit of deficiency at coordinate i.
  const Weight& dominant_correction(int i) const { return corrections_.at(static_cast<std::size_t>(i)); }

  /// Sum over positive roots of <lambda, a^vee><mu, a^vee>: a W-invariant form.
  long invariant_form(const Weight& lambda, const Weight& mu) const;

  /// Connected components of the Dynkin diagram.
  const std::vector<SimpleSubset>& components() const { return components_; }
  /// For component c: index (into roots()) of the root whose coroot is the
  /// highest coroot of the component.
  int affine_root_index(int component) const { return affine_roots_.at(static_cast<std::size_t>(component)); }

  Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }
  SimpleSubset all_simple() const { return SimpleSubset::full(semisimple_rank()); }
  /// Parse "S", "", "1,2", "1 2", "s1,s2".
  SimpleSubset parse_subset(const std::string& text) const;

 private:
  void validate() const;
  void build_roots();
  void build_components();
  void build_corrections();

  std::string name_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> simple_coroots_;
  std::vector<std::string> names_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::vector<SimpleSubset> components_;
  std::vector<int> affine_roots_;
  std::vector<Weight> corrections_;
};

}  // namespace hecke
