#pragma once

#include <string>
#include <string_view>

#include "tauforge/laurent.hpp"

namespace tauforge {

/// Exact rational function of q over Q, held in canonical form.
///
/// The denominator is a polynomial with constant term 1, coprime to the
/// numerator; every q-power unit lives in the numerator. Two values are equal
/// exactly when their stored numerators and denominators are equal.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long value) : num_(value) {}                 // NOLINT(google-explicit-constructor)
  QScalar(const Rational& value) : num_(value) {}      // NOLINT(google-explicit-constructor)
  QScalar(LaurentQ value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static QScalar q() { return QScalar(LaurentQ::q_power(1)); }
  static QScalar q_power(int exponent) { return QScalar(LaurentQ::q_power(exponent)); }
  /// Throws DivisionByZero for a zero denominator.
  static QScalar fraction(const LaurentQ& numerator, const LaurentQ& denominator);
  /// Parses the rendering grammar: integers, `q`, `+ - * /`, `^` with integer exponents, parentheses.
  static QScalar parse(std::string_view text);

  const LaurentQ& numerator() const { return num_; }
  const LaurentQ& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  /// Precondition: is_rational().
  Rational rational_value() const { return num_.coefficient(0); }

  QScalar inverse() const;
  QScalar pow(int exponent) const;
  QScalar substitute_power(int k) const;
  /// Exact value at q = 1; throws PoleError when the denominator vanishes there.
  Rational eval_q1() const;
  /// Exact value at a rational point; throws PoleError on a pole.
  Rational evaluate(const Rational& q) const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& rhs);
  QScalar& operator-=(const QScalar& rhs);
  QScalar& operator*=(const QScalar& rhs);
  QScalar& operator/=(const QScalar& rhs);
  friend QScalar operator+(QScalar lhs, const QScalar& rhs) { return lhs += rhs; }
  friend QScalar operator-(QScalar lhs, const QScalar& rhs) { return lhs -= rhs; }
  friend QScalar operator*(QScalar lhs, const QScalar& rhs) { return lhs *= rhs; }
  friend QScalar operator/(QScalar lhs, const QScalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const QScalar& lhs, const QScalar& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend bool operator!=(const QScalar& lhs, const QScalar& rhs) { return !(lhs == rhs); }

  /// Canonical text, e.g. `q+1`, `-3/2`, `(q^2+1)/(q)`.
  std::string str() const;
  /// Rendering safe to use as a factor in a product.
  std::string factor_str() const;

  /// Largest absolute q-exponent appearing in numerator or denominator; a pivot-size measure.
  int degree_span() const;

 private:
  void canonicalize();

  LaurentQ num_;
  LaurentQ den_{Rational(1)};
};

inline bool is_zero(const QScalar& x) { return x.is_zero(); }
inline std::string to_string(const QScalar& x) { return x.str(); }

enum class QNumberKind { paren, bracket, paren_factorial, bracket_factorial };

/// (n)_{q^k}, [n]_{q^k} and their factorials.
QScalar q_number(QNumberKind kind, int n, int base_power = 1);
inline QScalar q_paren(int n, int base_power = 1) { return q_number(QNumberKind::paren, n, base_power); }
inline QScalar q_bracket(int n, int base_power = 1) { return q_number(QNumberKind::bracket, n, base_power); }
inline QScalar q_paren_factorial(int n, int base_power = 1) {
  return q_number(QNumberKind::paren_factorial, n, base_power);
}

}  // namespace tauforge
