#include "hecke/kl_basis.hpp"

#include <algorithm>
#include <mutex>

#include "hecke/errors.hpp"

namespace hecke {

KLTable::KLTable(std::shared_ptr<const HeckeAlgebra> algebra) : H_(std::move(algebra)) {}

void KLTable::check_column(const ExtAffElt& x, const HeckeElt& c) const {
  const ExtAffineWeyl& E = H_->group();
  const int lx = E.length(x);
  if (c.coeff(x) != LaurentPoly::v(-lx))
    throw InternalError("C'_" + E.name(x) + " has leading coefficient " + c.coeff(x).to_string());
  for (const auto& [y, a] : c.terms()) {
    if (y == x) continue;
    const LaurentPoly P = a.shifted(lx);
    const int bound = lx - E.length(y) - 1;
    if (*P.valuation() < 0 || *P.degree() > bound)
      throw InternalError("P_{" + E.name(y) + "," + E.name(x) + "} = " + P.to_string() + " violates the degree bound " +
                          std::to_string(bound));
  }
}

HeckeElt KLTable::compute(const ExtAffElt& x) const {
  const ExtAffineWeyl& E = H_->group();
  const AffineWord& word = E.reduced_word(x);
  if (word.letters.empty()) return H_->T(x);
  if (!(word.gamma == E.identity())) {
    const ExtAffElt y = E.multiply(x, E.inverse(word.gamma));
    return H_->mul(c_prime(y), H_->T(word.gamma));
  }
  const int k = word.letters.front();
  const ExtAffElt sx = E.mul_gen_left(k, x);
  const HeckeElt& prev = c_prime(sx);
  // C'_s C'_{sx} with C'_s = v^-1 (T_s + 1).
  HeckeElt out = H_->mul_gen_left(k, prev);
  out += prev;
  out *= LaurentPoly::v(-1);
  for (const auto& [y, a] : prev.terms()) {
    if (y == sx || !E.is_left_descent(k, y)) continue;
    // mu(y, sx) is the coefficient of v^{l(sx)-l(y)-1} in P = v^{l(sx)} a.
    const LaurentPoly::Coeff mu = a.coeff(-E.length(y) - 1);
    if (mu != 0) out.add_scaled(c_prime(y), -LaurentPoly(mu));
  }
  return out;
}

const HeckeElt& KLTable::c_prime(const ExtAffElt& x) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cprime_.find(x);
    if (it != cprime_.end()) return it->second;
  }
  HeckeElt c = compute(x);
  check_column(x, c);
  std::unique_lock lock(mutex_);
  return cprime_.try_emplace(x, std::move(c)).first->second;
}

HeckeElt KLTable::c_element(const ExtAffElt& x) const {
  const ExtAffineWeyl& E = H_->group();
  const int lx = E.length(x);
  HeckeElt out = H_->zero();
  for (const auto& [y, a] : c_prime(x).terms()) {
    const int ly = E.length(y);
    const LaurentPoly P = a.shifted(lx);
    const LaurentPoly sign = ((lx + ly) % 2) ? -1 : 1;
    out.add_term(y, sign * P.bar().shifted(lx - 2 * ly));
  }
  return out;
}

LaurentPoly KLTable::kl_polynomial(const ExtAffElt& y, const ExtAffElt& x) const {
  return c_prime(x).coeff(y).shifted(H_->group().length(x));
}

LaurentPoly::Coeff KLTable::mu_coefficient(const ExtAffElt& y, const ExtAffElt& x) const {
  const ExtAffineWeyl& E = H_->group();
  if (!E.bruhat_leq(y, x) || y == x)
    throw InputError("mu_coefficient: " + E.name(y) + " is not strictly below " + E.name(x));
  return kl_polynomial(y, x).coeff(E.length(x) - E.length(y) - 1);
}

std::vector<std::tuple<ExtAffElt, ExtAffElt, LaurentPoly>> KLTable::entries() const {
  const ExtAffineWeyl& E = H_->group();
  std::vector<std::tuple<ExtAffElt, ExtAffElt, LaurentPoly>> out;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [x, c] : cprime_)
      for (const auto& [y, a] : c.terms()) out.emplace_back(y, x, a.shifted(E.length(x)));
  }
  auto key = [&E](const auto& t) {
    return std::make_tuple(E.length(std::get<1>(t)), std::get<1>(t), E.length(std::get<0>(t)), std::get<0>(t));
  };
  std::sort(out.begin(), out.end(), [&key](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

bool KLTable::all_in_v_squared() const {
  std::shared_lock lock(mutex_);
  const ExtAffineWeyl& E = H_->group();
  for (const auto& [x, c] : cprime_)
    for (const auto& [y, a] : c.terms())
      if (!a.shifted(E.length(x)).in_v_squared()) return false;
  return true;
}

std::size_t KLTable::size() const {
  std::shared_lock lock(mutex_);
  return cprime_.size();
}

void KLTable::insert_column(const ExtAffElt& x, const std::vector<std::pair<ExtAffElt, LaurentPoly>>& column) {
  const int lx = H_->group().length(x);
  HeckeElt c = H_->zero();
  for (const auto& [y, P] : column) c.add_term(y, P.shifted(-lx));
  check_column(x, c);
  std::unique_lock lock(mutex_);
  cprime_.insert_or_assign(x, std::move(c));
}

}  // namespace hecke
