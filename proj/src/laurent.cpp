#include "hecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace detail {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("Laurent coefficient overflow (add)");
  return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("Laurent coefficient overflow (mul)");
  return r;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(Coeff coeff, int exp) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{exp, coeff}});
}

LaurentPoly::Coeff LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  return (it != terms_.end() && it->exp == exp) ? it->coeff : 0;
}

std::optional<int> LaurentPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exp;
}

std::optional<int> LaurentPoly::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool LaurentPoly::in_v_squared() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp % 2 == 0; });
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.exp = -t.exp;
  return LaurentPoly(std::move(out));
}

LaurentPoly::Coeff LaurentPoly::eval_at_one() const {
  Coeff s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.coeff);
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp += k;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::negative_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp < 0) out.push_back(t);
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      Coeff c = checked_add(a->coeff, b->coeff);
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = checked_mul(t.coeff, -1);
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    std::vector<LaurentPoly::Term> out = other.terms_;
    for (auto& t : out) {
      t.exp += mono.exp;
      t.coeff = checked_mul(t.coeff, mono.coeff);
    }
    return LaurentPoly(std::move(out));
  }
  // Dense accumulation over the exponent range.
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<LaurentPoly::Coeff> acc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(x.exp + y.exp - lo)];
      slot = checked_add(slot, checked_mul(x.coeff, y.coeff));
    }
  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.push_back({lo + static_cast<int>(i), acc[i]});
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

void LaurentPoly::add_scaled(const LaurentPoly& rhs, const LaurentPoly& factor) {
  if (factor.is_zero() || rhs.is_zero()) return;
  *this += rhs * factor;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // Long division from the top degree down; both sides are finite so the
  // quotient exponent range is bounded by the valuations.
  const Term lead = divisor.terms_.back();
  const int min_q = terms_.front().exp - divisor.terms_.front().exp;
  LaurentPoly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term top = rem.terms_.back();
    const int qe = top.exp - lead.exp;
    if (qe < min_q || top.coeff % lead.coeff != 0) return std::nullopt;
    const Coeff qc = top.coeff / lead.coeff;
    quot.push_back({qe, qc});
    rem -= divisor * monomial(qc, qe);
  }
  std::reverse(quot.begin(), quot.end());
  return LaurentPoly(std::move(quot));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Coeff c = it->coeff;
    const bool neg = c < 0;
    const Coeff mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (it->exp == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (it->exp != 1) os << '^' << it->exp;
  }
  return os.str();
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    std::map<int, LaurentPoly::Coeff> acc;
    skip();
    if (eof()) fail("empty polynomial");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      acc[e] = checked_add(acc[e], checked_mul(sign, c));
      skip();
    }
    LaurentPoly out;
    for (auto [e, c] : acc) out += LaurentPoly::monomial(c, e);
    return out;
  }

 private:
  std::pair<int, LaurentPoly::Coeff> term() {
    LaurentPoly::Coeff c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        get();
        skip();
      } else {
        return {0, c};
      }
    }
    if (peek() != 'v') {
      if (have_coeff) fail("expected 'v' after '*'");
      fail("expected coefficient or 'v'");
    }
    get();
    int e = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      int sign = 1;
      if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      e = sign * static_cast<int>(number());
    }
    return {e, c};
  }

  LaurentPoly::Coeff number() {
    LaurentPoly::Coeff n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      n = checked_add(checked_mul(n, 10), get() - '0');
    return n;
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse Laurent polynomial '" + std::string(s_) + "': " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return LaurentParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace hecke
