#pragma once

#include <string>

#include <json.hpp>

#include "hecke/double_coset.hpp"

namespace hecke {

using json = nlohmann::json;

/// {"lambda": [ints], "w": "s1 s2"}
json element_to_json(const ExtAffineWeyl& E, const ExtAffElt& x);
ExtAffElt element_from_json(const ExtAffineWeyl& E, const json& j);

/// [{"element": {...}, "coeff": "v^2 - 1"}, ...] in (length, element) order.
json hecke_to_json(const HeckeElt& h);
HeckeElt hecke_from_json(const HeckeAlgebra& H, const json& j);

/// [{"y": element, "x": element, "P": "..."}, ...]
json kl_cache_to_json(const KLTable& kl);
/// Seed the table from a cache produced by kl_cache_to_json.
void kl_cache_load(KLTable& kl, const json& j);
/// Header plus rows "y  x  l(y)  l(x)  P", tab separated.
std::string kl_table_tsv(const KLTable& kl);

json subset_to_json(SimpleSubset s);
json index_to_json(const DoubleCosetModule& mod, const CosetIndex& idx);

/// "θ_λ T_z", "T_(λ; z)" or "C'_(λ; z)".
std::string render_basis_term(const DoubleCosetModule& mod, Basis basis, const CosetIndex& idx);
/// One "term: coeff" line per nonzero coordinate, "0" for none.
std::string render_coords(const DoubleCosetModule& mod, Basis basis, const Coords& c);
/// [{"index": {...}, "coeff": "..."}]
json coords_to_json(const DoubleCosetModule& mod, const Coords& c);

/// {"I", "J", "basis", "index", "expansion": [{"x": element, "coeff"}]}:
/// the standard-basis carrier of one basis element.
json basis_expansion_json(const DoubleCosetModule& mod, Basis basis, const CosetIndex& idx);
/// Long-form transition matrix: one row "source  target  coeff" per nonzero
/// entry expressing each source-basis element of the window in the target basis.
std::string transition_tsv(const DoubleCosetModule& mod, Basis from, Basis to, const std::vector<CosetIndex>& window);

}  // namespace hecke
