#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Element of A = Z[v, v^-1], stored sparsely as (exponent, coefficient)
/// pairs sorted by ascending exponent with no zero coefficients.
///
/// Arithmetic is exact; coefficient overflow of int64 raises InternalError
/// rather than wrapping.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  struct Term {
    int exp;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Coeff coeff, int exp);
  /// v^exp
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Coeff coeff(int exp) const;

  /// Highest / lowest exponent present. Undefined (nullopt) for zero.
  std::optional<int> degree() const;
  std::optional<int> valuation() const;

  /// True iff this is c*v^k with c = +-1.
  bool is_unit() const;
  /// True iff every exponent is even.
  bool in_v_squared() const;

  /// v -> v^-1
  LaurentPoly bar() const;
  /// Sum of coefficients (v -> 1).
  Coeff eval_at_one() const;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// Terms with negative exponent only.
  LaurentPoly negative_part() const;

  /// Exact division; nullopt when the divisor does not divide this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// this += factor * rhs, without a temporary.
  void add_scaled(const LaurentPoly& rhs, const LaurentPoly& factor);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Rendering "a_k*v^k + ..." with exponents descending, e.g.
  /// "v^2 - 1", "-3*v^-1 + v", "0". Parsed back losslessly by parse().
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

namespace detail {
LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
}  // namespace detail

}  // namespace hecke
