#include "hecke/serialize.hpp"

#include <map>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

json element_to_json(const ExtAffineWeyl& E, const ExtAffElt& x) {
  return {{"lambda", x.translation.to_vector()}, {"w", E.finite().name(x.finite)}};
}

ExtAffElt element_from_json(const ExtAffineWeyl& E, const json& j) {
  try {
    const auto coords = j.at("lambda").get<std::vector<int>>();
    if (static_cast<int>(coords.size()) != E.datum().rank()) throw InputError("element has a weight of the wrong rank");
    return {Weight(coords), E.finite().parse(j.at("w").get<std::string>())};
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed element: ") + ex.what());
  }
}

json hecke_to_json(const HeckeElt& h) {
  json out = json::array();
  for (const auto& [x, c] : h.sorted_terms())
    out.push_back({{"element", element_to_json(h.parent().group(), x)}, {"coeff", c.to_string()}});
  return out;
}

HeckeElt hecke_from_json(const HeckeAlgebra& H, const json& j) {
  if (!j.is_array()) throw InputError("Hecke element JSON must be an array");
  HeckeElt out = H.zero();
  for (const auto& term : j) {
    try {
      out.add_term(element_from_json(H.group(), term.at("element")), LaurentPoly::parse(term.at("coeff").get<std::string>()));
    } catch (const json::exception& ex) {
      throw InputError(std::string("malformed Hecke term: ") + ex.what());
    }
  }
  return out;
}

json kl_cache_to_json(const KLTable& kl) {
  const ExtAffineWeyl& E = kl.algebra().group();
  json out = json::array();
  for (const auto& [y, x, P] : kl.entries())
    out.push_back({{"y", element_to_json(E, y)}, {"x", element_to_json(E, x)}, {"P", P.to_string()}});
  return out;
}

void kl_cache_load(KLTable& kl, const json& j) {
  if (!j.is_array()) throw InputError("KL cache must be a JSON array");
  const ExtAffineWeyl& E = kl.algebra().group();
  std::map<ExtAffElt, std::vector<std::pair<ExtAffElt, LaurentPoly>>> columns;
  for (const auto& row : j) {
    try {
      columns[element_from_json(E, row.at("x"))].emplace_back(element_from_json(E, row.at("y")),
                                                              LaurentPoly::parse(row.at("P").get<std::string>()));
    } catch (const json::exception& ex) {
      throw InputError(std::string("malformed KL cache row: ") + ex.what());
    }
  }
  for (const auto& [x, col] : columns) kl.insert_column(x, col);
}

std::string kl_table_tsv(const KLTable& kl) {
  const ExtAffineWeyl& E = kl.algebra().group();
  std::ostringstream os;
  os << "y\tx\tl(y)\tl(x)\tP\n";
  for (const auto& [y, x, P] : kl.entries())
    os << E.name(y) << '\t' << E.name(x) << '\t' << E.length(y) << '\t' << E.length(x) << '\t' << P.to_string() << '\n';
  return os.str();
}

json subset_to_json(SimpleSubset s) {
  json out = json::array();
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

json index_to_json(const DoubleCosetModule& mod, const CosetIndex& idx) {
  return {{"lambda", idx.lambda.to_vector()}, {"z", mod.algebra().finite().name(idx.z)}};
}

std::string render_basis_term(const DoubleCosetModule& mod, Basis basis, const CosetIndex& idx) {
  switch (basis) {
    case Basis::Bernstein:
      return "θ_" + idx.lambda.to_string() + " T_" + mod.algebra().finite().name(idx.z);
    case Basis::Standard:
      return "T_" + mod.index_name(idx);
    case Basis::KL:
      return "C'_" + mod.index_name(idx);
  }
  return {};
}

std::string render_coords(const DoubleCosetModule& mod, Basis basis, const Coords& c) {
  if (c.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [idx, coeff] : c) os << render_basis_term(mod, basis, idx) << ": " << coeff.to_string() << '\n';
  return os.str();
}

json coords_to_json(const DoubleCosetModule& mod, const Coords& c) {
  json out = json::array();
  for (const auto& [idx, coeff] : c) out.push_back({{"index", index_to_json(mod, idx)}, {"coeff", coeff.to_string()}});
  return out;
}

json basis_expansion_json(const DoubleCosetModule& mod, Basis basis, const CosetIndex& idx) {
  const HIJElt e = mod.basis_elt(basis, idx);
  json expansion = json::array();
  for (const auto& [x, c] : e.carrier.sorted_terms())
    expansion.push_back({{"x", element_to_json(mod.group(), x)}, {"coeff", c.to_string()}});
  return {{"I", subset_to_json(mod.I())},
          {"J", subset_to_json(mod.J())},
          {"basis", basis_name(basis)},
          {"index", index_to_json(mod, idx)},
          {"expansion", expansion}};
}

std::string transition_tsv(const DoubleCosetModule& mod, Basis from, Basis to, const std::vector<CosetIndex>& window) {
  std::ostringstream os;
  os << basis_name(from) << '\t' << basis_name(to) << "\tcoeff\n";
  for (const auto& idx : window)
    for (const auto& [j, c] : mod.coords(to, mod.basis_elt(from, idx)))
      os << mod.index_name(idx) << '\t' << mod.index_name(j) << '\t' << c.to_string() << '\n';
  return os.str();
}

}  // namespace hecke
