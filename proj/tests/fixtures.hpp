#pragma once

#include <memory>
#include <string>

#include <random>
#include <vector>

#include "hecke/hecke_algebra.hpp"

namespace fixture {

struct Groups {
  std::shared_ptr<const hecke::RootDatum> datum;
  std::shared_ptr<const hecke::WeylGroup> W;
  std::shared_ptr<const hecke::ExtAffineWeyl> E;
};

inline Groups groups(const std::string& type) {
  Groups g;
  g.datum = std::make_shared<hecke::RootDatum>(hecke::RootDatum::preset(type));
  g.W = std::make_shared<hecke::WeylGroup>(g.datum);
  g.E = std::make_shared<hecke::ExtAffineWeyl>(g.W);
  return g;
}

struct Algebra : Groups {
  std::shared_ptr<const hecke::HeckeAlgebra> H;
};

inline Algebra algebra(const std::string& type) {
  Algebra a;
  static_cast<Groups&>(a) = groups(type);
  a.H = std::make_shared<hecke::HeckeAlgebra>(a.E);
  return a;
}

inline hecke::Weight random_weight(std::mt19937& rng, int rank, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  hecke::Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = coord(rng);
  return w;
}

/// Random element with up to `terms` terms supported on `window` and small
/// Laurent coefficients.
inline hecke::HeckeElt random_elt(const hecke::HeckeAlgebra& H, const std::vector<hecke::ExtAffElt>& window,
                                  std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2), exp(-2, 2);
  hecke::HeckeElt h = H.zero();
  for (int t = 0; t < terms; ++t)
    h.add_term(window[pick(rng)], hecke::LaurentPoly::monomial(coeff(rng), exp(rng)) + coeff(rng));
  return h;
}

}  // namespace fixture
