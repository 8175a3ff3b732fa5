#pragma once

// Brute-force reference implementations used by the tests and the verify
// suite. Each avoids the fast path it checks: lengths come from Cayley-graph
// search, Bruhat order from subwords, cosets from union-find over explicit
// group multiplication.

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "hecke/ext_affine_weyl.hpp"
#include "hecke/finite_weyl.hpp"
#include "hecke/hecke_algebra.hpp"

namespace hecke::oracle {

/// Number of positive roots sent to negative roots.
int inversion_count(const WeylGroup& W, WeylElt w);

/// Length of every element of W by breadth-first search of the Cayley graph
/// using only group multiplication.
std::vector<int> finite_lengths_bfs(const WeylGroup& W);

/// All products of subwords of the given word.
std::set<WeylElt> finite_subword_products(const WeylGroup& W, const std::vector<int>& word);
bool finite_bruhat_subword(const WeylGroup& W, WeylElt y, WeylElt w);

/// Distance from Gamma in the Cayley graph of W_ex over S_af, for every
/// element within distance max_len of gamma_elements(box).
std::unordered_map<ExtAffElt, int, ExtAffHash> affine_lengths_bfs(const ExtAffineWeyl& E, int max_len, int box = 2);

/// Subword criterion in W_af, extended by equality of Gamma components.
bool affine_bruhat_subword(const ExtAffineWeyl& E, const ExtAffElt& x, const ExtAffElt& y);

/// Partition of a finite set closed under left W_I and right W_J
/// multiplication into double cosets, by union-find. Returns a class label
/// per element, labels numbered in order of first appearance.
std::vector<int> double_coset_classes(const ExtAffineWeyl& E, const std::vector<ExtAffElt>& elements,
                                      SimpleSubset I, SimpleSubset J);

/// Explicit double coset W_I x W_J.
std::set<ExtAffElt> double_coset(const ExtAffineWeyl& E, const ExtAffElt& x, SimpleSubset I, SimpleSubset J);

/// Elements y <= x, from the subword products of a reduced word of x.
std::vector<ExtAffElt> bruhat_ideal(const ExtAffineWeyl& E, const ExtAffElt& x);

/// C'_x obtained from its characterization alone: the unique bar-invariant
/// element v^{-l(x)} (T_x + sum_{y<x} P_{y,x} T_y) with deg P_{y,x} <= l(x)-l(y)-1.
/// Solved top-down over the Bruhat ideal; throws InternalError if the
/// triangular system is inconsistent.
HeckeElt kl_by_bar_fixed_point(const HeckeAlgebra& H, const ExtAffElt& x);

/// eps_I x eps_J = sum_{a in W_I, b in W_J} eps_a eps_b a x b in Z[W_ex].
std::map<ExtAffElt, std::int64_t> signed_coset_sum(const ExtAffineWeyl& E, const ExtAffElt& x, SimpleSubset I,
                                                   SimpleSubset J);

/// Rank of an integer matrix modulo the prime 2^31 - 1. Full rank modulo a
/// prime implies full rank over Q.
int rank_mod_p(std::vector<std::vector<std::int64_t>> rows);

}  // namespace hecke::oracle
