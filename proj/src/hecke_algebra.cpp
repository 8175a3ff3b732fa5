#include "hecke/hecke_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

// ---------------------------------------------------------------- HeckeElt

LaurentPoly HeckeElt::coeff(const ExtAffElt& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add_term(const ExtAffElt& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElt::add_scaled(const HeckeElt& other, const LaurentPoly& factor) {
  if (factor.is_zero()) return;
  for (const auto& [x, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(x);
    it->second.add_scaled(c, factor);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, a] : terms_) a *= c;
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r = *this;
  for (auto& [x, a] : r.terms_) a = -a;
  return r;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return a.parent().mul(a, b); }

std::vector<std::pair<ExtAffElt, LaurentPoly>> HeckeElt::sorted_terms() const {
  std::vector<std::pair<ExtAffElt, LaurentPoly>> out(terms_.begin(), terms_.end());
  const ExtAffineWeyl& E = parent_->group();
  std::sort(out.begin(), out.end(), [&E](const auto& a, const auto& b) {
    const int la = E.length(a.first), lb = E.length(b.first);
    return la != lb ? la < lb : a.first < b.first;
  });
  return out;
}

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : sorted_terms()) {
    const std::string name = "T[" + parent_->group().name(x) + ']';
    if (c.terms().size() > 1) {
      os << (first ? "" : " + ") << '(' << c.to_string() << ")*" << name;
    } else {
      const LaurentPoly abs = c.terms()[0].coeff < 0 ? -c : c;
      os << (first ? (c == abs ? "" : "-") : (c == abs ? " + " : " - "));
      if (!(abs == LaurentPoly(1))) os << abs.to_string() << '*';
      os << name;
    }
    first = false;
  }
  return os.str();
}

void add_term(BernsteinForm& b, const BernsteinKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = b.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) b.erase(it);
}

// ---------------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const ExtAffineWeyl> group)
    : group_(std::move(group)), q_(LaurentPoly::v(2)), q_minus_1_(LaurentPoly::v(2) - 1) {}

HeckeElt HeckeAlgebra::scalar(const LaurentPoly& c) const {
  HeckeElt h(this);
  h.add_term(group_->identity(), c);
  return h;
}

HeckeElt HeckeAlgebra::T(const ExtAffElt& x) const {
  HeckeElt h(this);
  h.add_term(x, 1);
  return h;
}

HeckeElt HeckeAlgebra::mul_gen_right(const HeckeElt& h, int k) const {
  HeckeElt out(this);
  for (const auto& [x, c] : h.terms()) {
    const ExtAffElt y = group_->mul_gen_right(x, k);
    if (group_->length(y) > group_->length(x)) {
      out.add_term(y, c);
    } else {
      out.add_term(y, q_ * c);
      out.add_term(x, q_minus_1_ * c);
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_gen_left(int k, const HeckeElt& h) const {
  HeckeElt out(this);
  for (const auto& [x, c] : h.terms()) {
    const ExtAffElt y = group_->mul_gen_left(k, x);
    if (group_->length(y) > group_->length(x)) {
      out.add_term(y, c);
    } else {
      out.add_term(y, q_ * c);
      out.add_term(x, q_minus_1_ * c);
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_word_right(const HeckeElt& h, const AffineWord& word) const {
  HeckeElt cur = h;
  for (int k : word.letters) cur = mul_gen_right(cur, k);
  if (word.gamma == group_->identity()) return cur;
  HeckeElt out(this);
  for (const auto& [x, c] : cur.terms()) out.add_term(group_->multiply(x, word.gamma), c);
  return out;
}

HeckeElt HeckeAlgebra::mul_word_left(const AffineWord& word, const HeckeElt& h) const {
  HeckeElt cur(this);
  if (word.gamma == group_->identity()) {
    cur = h;
  } else {
    for (const auto& [x, c] : h.terms()) cur.add_term(group_->multiply(word.gamma, x), c);
  }
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) cur = mul_gen_left(*it, cur);
  return cur;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  if (&a.parent() != this || &b.parent() != this) throw InputError("mul: operands belong to a different Hecke algebra");
  if (a.is_zero() || b.is_zero()) return zero();
  // Right multiplication costs |a| per letter of each term of b, and
  // symmetrically on the left; take the cheaper side.
  std::size_t letters_a = 0, letters_b = 0;
  for (const auto& [x, c] : a.terms()) letters_a += 1 + static_cast<std::size_t>(group_->length(x));
  for (const auto& [y, c] : b.terms()) letters_b += 1 + static_cast<std::size_t>(group_->length(y));
  HeckeElt out(this);
  if (a.size() * letters_b <= b.size() * letters_a) {
    for (const auto& [y, c] : b.terms()) out.add_scaled(mul_word_right(a, group_->reduced_word(y)), c);
  } else {
    for (const auto& [x, c] : a.terms()) out.add_scaled(mul_word_left(group_->reduced_word(x), b), c);
  }
  return out;
}

const HeckeElt& HeckeAlgebra::invert_T(const ExtAffElt& x) const {
  {
    std::shared_lock lock(inv_mutex_);
    auto it = inverses_.find(x);
    if (it != inverses_.end()) return it->second;
  }
  HeckeElt result(this);
  const AffineWord& word = group_->reduced_word(x);
  if (word.letters.empty()) {
    result = T(group_->inverse(x));
  } else {
    // T_x = T_s T_{sx}, so T_x^{-1} = T_{sx}^{-1} (v^-2 T_s + v^-2 - 1).
    const int k = word.letters.front();
    const HeckeElt& rest = invert_T(group_->mul_gen_left(k, x));
    result = LaurentPoly::v(-2) * mul_gen_right(rest, k);
    result.add_scaled(rest, LaurentPoly::v(-2) - 1);
  }
  std::unique_lock lock(inv_mutex_);
  return inverses_.try_emplace(x, std::move(result)).first->second;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt out(this);
  for (const auto& [x, c] : h.terms()) out.add_scaled(invert_T(group_->inverse(x)), c.bar());
  return out;
}

HeckeElt HeckeAlgebra::theta_from(const Weight& mu, const Weight& nu) const {
  const SimpleSubset S = datum().all_simple();
  if (!datum().is_dominant_for(mu, S) || !datum().is_dominant_for(nu, S))
    throw InputError("theta_from: " + mu.to_string() + " and " + nu.to_string() + " must both be dominant");
  const ExtAffElt tm = group_->translation(mu), tn = group_->translation(nu);
  return LaurentPoly::v(group_->length(tn) - group_->length(tm)) * mul(T(tm), invert_T(tn));
}

const HeckeElt& HeckeAlgebra::theta(const Weight& lambda) const {
  {
    std::shared_lock lock(theta_mutex_);
    auto it = thetas_.find(lambda);
    if (it != thetas_.end()) return it->second;
  }
  auto [mu, nu] = datum().dominant_difference(lambda);
  HeckeElt h = theta_from(mu, nu);
  std::unique_lock lock(theta_mutex_);
  return thetas_.try_emplace(lambda, std::move(h)).first->second;
}

ThetaPastTs HeckeAlgebra::theta_past_Ts(const Weight& lambda, int i) const {
  const RootDatum& d = datum();
  const int pairing = d.pairing(lambda, i);
  const Weight& alpha = d.simple_roots().at(static_cast<std::size_t>(i));
  ThetaPastTs r{d.reflect(i, lambda), {}};
  if (pairing > 0) {
    for (int j = 0; j < pairing; ++j) r.remainder[lambda - j * alpha] += 1;
  } else if (pairing < 0) {
    for (int j = 0; j < -pairing; ++j) r.remainder[r.moved - j * alpha] -= 1;
  }
  return r;
}

HeckeElt HeckeAlgebra::expand(const ThetaPastTs& r, int i) const {
  HeckeElt out = mul(T(finite().simple(i)), theta(r.moved));
  for (const auto& [mu, c] : r.remainder) out.add_scaled(theta(mu), q_minus_1_ * c);
  return out;
}

HeckeElt HeckeAlgebra::from_bernstein(const BernsteinForm& b) const {
  HeckeElt out(this);
  for (const auto& [k, c] : b) out.add_scaled(mul(theta(k.lambda), T(k.w)), c);
  return out;
}

std::map<WeylElt, LaurentPoly> HeckeAlgebra::finite_product(WeylElt a, WeylElt b) const {
  const WeylGroup& W = finite();
  std::map<WeylElt, LaurentPoly> cur{{b, LaurentPoly(1)}};
  const auto& word = W.reduced_word(a);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::map<WeylElt, LaurentPoly> next;
    for (const auto& [u, c] : cur) {
      const WeylElt su = W.mul_simple_left(*it, u);
      if (W.length(su) > W.length(u)) {
        next[su] += c;
      } else {
        next[su] += q_ * c;
        next[u] += q_minus_1_ * c;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return cur;
}

const BernsteinForm& HeckeAlgebra::finite_T_times_theta(WeylElt w, const Weight& mu) const {
  const auto key = std::make_pair(w.id, mu);
  {
    std::shared_lock lock(bern_mutex_);
    auto it = T_theta_.find(key);
    if (it != T_theta_.end()) return it->second;
  }
  const WeylGroup& W = finite();
  BernsteinForm out;
  if (w == W.identity()) {
    out.emplace(BernsteinKey{mu, W.identity()}, 1);
  } else {
    // T_w = T_s T_{sw};  T_s theta_nu = theta_{s nu} T_s - (v^2 - 1) G(s nu).
    const int i = W.reduced_word(w).front();
    const WeylElt sw = W.mul_simple_left(i, w);
    const BernsteinForm& inner = finite_T_times_theta(sw, mu);
    for (const auto& [k, e] : inner) {
      const Weight snu = datum().reflect(i, k.lambda);
      const WeylElt su = W.mul_simple_left(i, k.w);
      if (W.length(su) > W.length(k.w)) {
        add_term(out, {snu, su}, e);
      } else {
        add_term(out, {snu, su}, q_ * e);
        add_term(out, {snu, k.w}, q_minus_1_ * e);
      }
      for (const auto& [kappa, g] : theta_past_Ts(snu, i).remainder)
        add_term(out, {kappa, k.w}, -(q_minus_1_ * g * e));
    }
  }
  std::unique_lock lock(bern_mutex_);
  return T_theta_.try_emplace(key, std::move(out)).first->second;
}

BernsteinForm HeckeAlgebra::bernstein_mul(const BernsteinForm& a, const BernsteinForm& b) const {
  BernsteinForm out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const LaurentPoly cab = ca * cb;
      for (const auto& [kt, ct] : finite_T_times_theta(ka.w, kb.lambda)) {
        const LaurentPoly c = cab * ct;
        for (const auto& [y, cf] : finite_product(kt.w, kb.w)) add_term(out, {ka.lambda + kt.lambda, y}, c * cf);
      }
    }
  return out;
}

BernsteinForm HeckeAlgebra::bernstein_of_generator(const ExtAffElt& x) const {
  const WeylGroup& W = finite();
  if (x.translation.is_zero()) {
    BernsteinForm out;
    out.emplace(BernsteinKey{x.translation, x.finite}, 1);
    return out;
  }
  // x = t_lambda w with lambda dominant and l(t_lambda) = l(x) + l(w^-1):
  // T_x = T_{t_lambda} T_{w^-1}^{-1} = v^{l(t_lambda)} theta_lambda T_{w^-1}^{-1}.
  const Weight& lambda = x.translation;
  const ExtAffElt t = group_->translation(lambda);
  const WeylElt winv = W.inverse(x.finite);
  if (!datum().is_dominant_for(lambda, datum().all_simple()) ||
      group_->length(t) != group_->length(x) + W.length(winv))
    throw InternalError("bernstein_of_generator: " + group_->name(x) + " is not of the form t_lambda w with lengths adding");
  const LaurentPoly scale = LaurentPoly::v(group_->length(t));
  BernsteinForm out;
  for (const auto& [u, c] : invert_T(group_->from_finite(winv)).terms()) add_term(out, {lambda, u.finite}, scale * c);
  return out;
}

const BernsteinForm& HeckeAlgebra::bernstein_of_T(const ExtAffElt& x) const {
  {
    std::shared_lock lock(bern_mutex_);
    auto it = bernstein_T_.find(x);
    if (it != bernstein_T_.end()) return it->second;
  }
  BernsteinForm out;
  const AffineWord& word = group_->reduced_word(x);
  if (word.letters.empty()) {
    out = bernstein_of_generator(x);
  } else {
    const int k = word.letters.front();
    out = bernstein_mul(bernstein_of_generator(group_->generator(k)), bernstein_of_T(group_->mul_gen_left(k, x)));
  }
  std::unique_lock lock(bern_mutex_);
  return bernstein_T_.try_emplace(x, std::move(out)).first->second;
}

BernsteinForm HeckeAlgebra::to_bernstein(const HeckeElt& h) const {
  BernsteinForm out;
  for (const auto& [x, c] : h.terms())
    for (const auto& [k, b] : bernstein_of_T(x)) add_term(out, k, c * b);
  return out;
}

}  // namespace hecke
