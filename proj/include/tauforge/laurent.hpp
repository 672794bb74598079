#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tauforge {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
std::string to_string(const Rational& r);

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest nonzero exponent upwards; both ends of the
/// coefficient vector are nonzero, and the empty vector is the zero polynomial.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentQ(long constant) : LaurentQ(Rational(constant)) {}  // NOLINT

  static LaurentQ monomial(const Rational& coefficient, int exponent);
  static LaurentQ q_power(int exponent) { return monomial(Rational(1), exponent); }
  static LaurentQ from_terms(const std::map<int, Rational>& terms);
  static LaurentQ from_dense(int low, std::vector<Rational> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  // Preconditions: nonzero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lowest_coefficient() const { return coeffs_.front(); }
  const Rational& leading_coefficient() const { return coeffs_.back(); }

  Rational coefficient(int exponent) const;
  const std::vector<Rational>& dense() const { return coeffs_; }
  std::map<int, Rational> terms() const;
  std::size_t term_count() const;

  /// Multiplies by q^k.
  LaurentQ shifted(int k) const;
  /// Replaces q by q^k (k nonzero).
  LaurentQ substitute_power(int k) const;
  /// Exact value at a rational point; q must be nonzero when negative powers are present.
  Rational evaluate(const Rational& q) const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& rhs);
  LaurentQ& operator-=(const LaurentQ& rhs);
  LaurentQ& operator*=(const Rational& rhs);
  friend LaurentQ operator+(LaurentQ lhs, const LaurentQ& rhs) { return lhs += rhs; }
  friend LaurentQ operator-(LaurentQ lhs, const LaurentQ& rhs) { return lhs -= rhs; }
  friend LaurentQ operator*(const LaurentQ& lhs, const LaurentQ& rhs);
  friend LaurentQ operator*(LaurentQ lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const LaurentQ& lhs, const LaurentQ& rhs) {
    return lhs.low_ == rhs.low_ && lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const LaurentQ& lhs, const LaurentQ& rhs) { return !(lhs == rhs); }

  /// Polynomial rendering in descending powers, e.g. `q^2-3/2*q+1` or `q^-1+q`.
  std::string str() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

// Univariate polynomial helpers; arguments must have no negative powers.
std::pair<LaurentQ, LaurentQ> poly_divmod(const LaurentQ& dividend, const LaurentQ& divisor);
/// Monic greatest common divisor over Q[q].
LaurentQ poly_gcd(LaurentQ a, LaurentQ b);

}  // namespace tauforge
