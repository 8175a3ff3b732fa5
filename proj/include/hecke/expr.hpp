#pragma once

#include <optional>
#include <string>

#include "hecke/double_coset.hpp"

namespace hecke {

/// Value of an element expression. When the expression is a combination of
/// chi(...) terms, `preimage` holds h with value = chi(h).
struct ExprValue {
  HeckeElt value;
  std::optional<HeckeElt> preimage;
};

/// Evaluate an element expression:
///
///   EXPR   := TERM (("+" | "-") TERM)*
///   TERM   := FACTOR ("*" FACTOR)*
///   FACTOR := "T" WORD | "theta" WEIGHT | "Cprime" ELT
///           | "chi(" EXPR ")" | "chi" FACTOR | "(" EXPR ")" | "(" LAURENT ")"
///           | LAURENT-MONOMIAL | "-" FACTOR
///   WEIGHT := comma-separated integers | "0" | "omega" | "omegaK"
///   ELT    := WORD | "m(" WEIGHT ";" Z ")" | "m(" WEIGHT "," Z ")"
///
/// WORD is a space-separated word over S_af and Gamma ("s0 s1 g:1", "1").
/// m(lambda; z) is the minimal double coset representative for the module's
/// I and J; with a comma separator the last field is z. chi uses the module.
ExprValue evaluate_expression(const std::string& text, const DoubleCosetModule& mod);

/// The fundamental weight omega_k (1-based k) when it lies in X(T): the
/// lattice vector pairing to delta_{jk} with the simple coroots.
Weight fundamental_weight(const RootDatum& d, int k);

}  // namespace hecke
