#include "tauforge/qscalar.hpp"

#include <algorithm>
#include <cstdlib>

#include "tauforge/error.hpp"
#include "tauforge/expr.hpp"

namespace tauforge {

QScalar QScalar::fraction(const LaurentQ& numerator, const LaurentQ& denominator) {
  if (denominator.is_zero()) throw DivisionByZero();
  QScalar out;
  out.num_ = numerator;
  out.den_ = denominator;
  out.canonicalize();
  return out;
}

void QScalar::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentQ(Rational(1));
    return;
  }
  // Move the q-power unit of the denominator into the numerator.
  const int s = den_.low();
  if (s != 0) {
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (den_.high() > 0) {
    const int nl = num_.low();
    LaurentQ g = poly_gcd(num_.shifted(-nl), den_);
    if (g.high() > 0) {
      num_ = poly_divmod(num_.shifted(-nl), g).first.shifted(nl);
      den_ = poly_divmod(den_, g).first;
    }
  }
  const Rational c0 = den_.coefficient(0);
  if (c0 != 1) {
    const Rational inv = 1 / c0;
    num_ *= inv;
    den_ *= inv;
  }
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return fraction(den_, num_);
}

QScalar QScalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QScalar result(1L);
  QScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QScalar QScalar::substitute_power(int k) const {
  if (k == 1) return *this;
  return fraction(num_.substitute_power(k), den_.substitute_power(k));
}

Rational QScalar::evaluate(const Rational& q) const {
  if (sgn(q) == 0 && (num_.low() < 0 || den_.low() < 0)) throw PoleError(den_.str(), q.get_str());
  const Rational d = den_.evaluate(q);
  if (sgn(d) == 0) throw PoleError(den_.str(), q.get_str());
  return Rational(num_.evaluate(q) / d);
}

Rational QScalar::eval_q1() const { return evaluate(Rational(1)); }

QScalar QScalar::operator-() const {
  QScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

QScalar& QScalar::operator+=(const QScalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  canonicalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) { return *this += -rhs; }

QScalar& QScalar::operator*=(const QScalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = QScalar();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  if (rhs.is_rational()) {
    num_ *= rhs.rational_value();
    return *this;
  }
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& rhs) { return *this *= rhs.inverse(); }

int QScalar::degree_span() const {
  int span = 0;
  if (!num_.is_zero()) span = std::max({span, std::abs(num_.low()), std::abs(num_.high())});
  span = std::max({span, std::abs(den_.low()), std::abs(den_.high())});
  return span;
}

std::string QScalar::str() const {
  if (is_zero()) return "0";
  const int l = num_.low();
  if (den_.is_one() && (l >= 0 || num_.is_monomial())) return num_.str();
  // Split q-powers so that both sides render as plain polynomials.
  LaurentQ top = l >= 0 ? num_ : num_.shifted(-l);
  LaurentQ bottom = l >= 0 ? den_ : den_.shifted(-l);
  if (sgn(bottom.leading_coefficient()) < 0) {
    top = -top;
    bottom = -bottom;
  }
  return "(" + top.str() + ")/(" + bottom.str() + ")";
}

std::string QScalar::factor_str() const {
  const std::string s = str();
  if (s.front() == '(') return s;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^') return "(" + s + ")";
  return s;
}

namespace {

struct ScalarOps {
  QScalar number(const Rational& r) { return QScalar(r); }
  QScalar symbol(const std::string& name, std::size_t pos) {
    if (name != "q") throw ParseError("unknown symbol '" + name + "'", pos);
    return QScalar::q();
  }
  QScalar divide(const QScalar& a, const QScalar& b, std::size_t pos) {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a / b;
  }
  QScalar power(const QScalar& a, int e, std::size_t pos) {
    if (e < 0 && a.is_zero()) throw ParseError("zero raised to a negative power", pos);
    return a.pow(e);
  }
};

}  // namespace

QScalar QScalar::parse(std::string_view text) {
  auto tree = parse_expr(text);
  ScalarOps ops;
  return evaluate_expr<QScalar>(*tree, ops);
}

QScalar q_number(QNumberKind kind, int n, int base_power) {
  if (n < 0) throw PreconditionError("q_number requires n >= 0");
  if (base_power == 0) throw PreconditionError("q_number requires a nonzero base power");
  auto single = [&](int m) -> QScalar {
    std::map<int, Rational> terms;
    if (kind == QNumberKind::paren || kind == QNumberKind::paren_factorial) {
      // 1 + q^k + ... + q^{k(m-1)}
      for (int i = 0; i < m; ++i) terms[i * base_power] = 1;
    } else {
      // q^{k(m-1)} + q^{k(m-3)} + ... + q^{-k(m-1)}
      for (int i = 0; i < m; ++i) terms[base_power * (m - 1 - 2 * i)] += 1;
    }
    return QScalar(LaurentQ::from_terms(terms));
  };
  if (kind == QNumberKind::paren || kind == QNumberKind::bracket) return single(n);
  QScalar out(1L);
  for (int m = 1; m <= n; ++m) out *= single(m);
  return out;
}

}  // namespace tauforge
