#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hecke/kl_basis.hpp"

namespace hecke {

/// (lambda, z) with z in W^{IJ} and lambda dominant for
/// parabolic_intersection(z, I, J): the index set of all three bases of H^{IJ}.
struct CosetIndex {
  Weight lambda;
  WeylElt z;
  friend bool operator==(const CosetIndex&, const CosetIndex&) = default;
  friend std::strong_ordering operator<=>(const CosetIndex&, const CosetIndex&) = default;
};

using Coords = std::map<CosetIndex, LaurentPoly>;
/// Finitely supported Z-valued function on W_ex.
using SignedGroupAlgebraElt = std::map<ExtAffElt, std::int64_t>;

/// An element of H^{IJ} = C_{w_I} H C_{w_J}, carried inside H. When built by
/// chi the preimage h with carrier = chi(h) is kept; coordinate extraction
/// uses it.
struct HIJElt {
  HeckeElt carrier;
  SimpleSubset I, J;
  std::optional<HeckeElt> preimage;

  HIJElt& operator+=(const HIJElt& o);
  HIJElt& operator-=(const HIJElt& o);
  HIJElt& operator*=(const LaurentPoly& c);
  friend HIJElt operator+(HIJElt a, const HIJElt& b) { return a += b; }
  friend HIJElt operator-(HIJElt a, const HIJElt& b) { return a -= b; }
  friend HIJElt operator*(const LaurentPoly& c, HIJElt e) { return e *= c; }
  bool is_zero() const { return carrier.is_zero(); }
};

enum class Basis { Standard, Bernstein, KL };
Basis parse_basis(const std::string& name);
std::string basis_name(Basis b);

/// The module H^{IJ} for fixed I, J: the projection chi(h) = C_{w_I} h C_{w_J},
/// the standard basis T_{lambda,z} = chi(T_{m_{lambda,z}}), the Bernstein basis
/// chi(theta_lambda T_z), the KL basis C'_{lambda,z} = chi(C'_{m_{lambda,z}}),
/// straightening, coordinates in each basis, the filtration by z, and the
/// specialization v -> 1. Thread-safe.
class DoubleCosetModule {
 public:
  DoubleCosetModule(std::shared_ptr<const KLTable> kl, SimpleSubset I, SimpleSubset J);

  const HeckeAlgebra& algebra() const { return kl_->algebra(); }
  const ExtAffineWeyl& group() const { return algebra().group(); }
  const KLTable& kl() const { return *kl_; }
  SimpleSubset I() const { return I_; }
  SimpleSubset J() const { return J_; }

  /// C_{w_K} = (-v)^{l(w_K)} sum_{y in W_K} eps_y v^{-2 l(y)} T_y.
  HeckeElt c_w(SimpleSubset K) const;
  /// C_{w_K}^2 = r_K C_{w_K}.
  LaurentPoly r(SimpleSubset K) const;
  /// chi(chi(h)) = r_IJ chi(h), r_IJ = r_I r_J.
  LaurentPoly r_IJ() const { return r(I_) * r(J_); }

  HIJElt chi(const HeckeElt& h) const;
  /// Wrap an element already in H^{IJ}; throws InputError if the descent
  /// conditions T_t e = -e (t in I), e T_s = -e (s in J) fail.
  HIJElt from_carrier(const HeckeElt& e) const;
  bool in_module(const HeckeElt& e) const;

  /// Throws InputError unless z is in W^{IJ} and lambda in X(T)_z^+.
  void validate(const CosetIndex& idx) const;
  SimpleSubset K(WeylElt z) const;
  ExtAffElt m(const CosetIndex& idx) const;
  CosetIndex index_of(const ExtAffElt& x) const;
  /// All indices with lambda in the W-stable weight window of radius n,
  /// sorted by (l(m), index).
  std::vector<CosetIndex> index_window(int n) const;

  HIJElt standard_basis_elt(const CosetIndex& idx) const;
  HIJElt bernstein_basis_elt(const CosetIndex& idx) const;
  HIJElt kl_basis_elt(const CosetIndex& idx) const;
  HIJElt basis_elt(Basis b, const CosetIndex& idx) const;
  /// chi(C'_x); zero unless x is minimal in its double coset.
  HIJElt chi_cprime_vanishing(const ExtAffElt& x) const;

  /// Coordinates c with chi(theta_mu T_z) = sum c_lambda chi(theta_lambda T_z),
  /// every lambda in X(T)_z^+.
  std::map<Weight, LaurentPoly> straighten(const Weight& mu, WeylElt z) const;

  Coords to_bernstein_coords(const HIJElt& e) const;
  Coords to_standard_coords(const HIJElt& e) const;
  Coords to_kl_coords(const HIJElt& e) const;
  Coords coords(Basis b, const HIJElt& e) const;
  HIJElt expand(Basis b, const Coords& c) const;

  HIJElt bar(const HIJElt& e) const;

  /// Bernstein coordinates grouped by z.
  std::map<WeylElt, std::map<Weight, LaurentPoly>> filtration_coords(const HIJElt& e) const;
  /// Membership in H^{IJ}_{<=z}: every z' carrying a coordinate has z' <= z.
  bool in_filtration(const HIJElt& e, WeylElt z) const;

  /// Coefficients at v = 1.
  SignedGroupAlgebraElt specialize_v1_raw(const HIJElt& e) const;
  /// Raw image times (-1)^{l(w_I)+l(w_J)}, so chi(T_x) maps to eps_I x eps_J.
  SignedGroupAlgebraElt specialize_v1(const HIJElt& e) const;

  std::string index_name(const CosetIndex& idx) const;

 private:
  /// C_I theta_mu T_w = sum c_nu C_I theta_nu for w in W_I.
  const std::map<Weight, LaurentPoly>& absorb_left(const Weight& mu, WeylElt w) const;
  Coords standard_from_preimage(const HeckeElt& h) const;
  Coords bernstein_from_preimage(const HeckeElt& h) const;
  /// Coordinates of an element without preimage: coordinates of chi(e)
  /// computed through the preimage e, divided by r_IJ.
  Coords divide_coords(const Coords& c) const;

  std::shared_ptr<const KLTable> kl_;
  SimpleSubset I_, J_;
  HeckeElt cI_, cJ_;
  std::vector<WeylElt> reps_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Weight, std::uint32_t>, std::map<Weight, LaurentPoly>> absorb_;
  mutable std::map<std::pair<Weight, std::uint32_t>, std::map<Weight, LaurentPoly>> straight_;
};

/// Coefficients of the rank-one straightening string: with F(k) standing for
/// chi(theta_lambda T_z) at pairing <lambda, alpha^vee> = k along one alpha,
/// F(-d) = sum_k p[k] F(k) over k >= 0. Computed by the same rewriting rule
/// as DoubleCosetModule::straighten.
std::map<int, LaurentPoly> straightening_string(int d);

}  // namespace hecke
