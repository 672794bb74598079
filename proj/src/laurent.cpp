#include "tauforge/laurent.hpp"

#include <cassert>
#include <sstream>

#include "tauforge/error.hpp"

namespace tauforge {

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentQ::LaurentQ(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

LaurentQ LaurentQ::monomial(const Rational& coefficient, int exponent) {
  LaurentQ out;
  if (sgn(coefficient) != 0) {
    out.low_ = exponent;
    out.coeffs_.push_back(coefficient);
  }
  return out;
}

LaurentQ LaurentQ::from_terms(const std::map<int, Rational>& terms) {
  if (terms.empty()) return {};
  const int low = terms.begin()->first;
  std::vector<Rational> dense(static_cast<std::size_t>(terms.rbegin()->first - low + 1));
  for (const auto& [e, c] : terms) dense[static_cast<std::size_t>(e - low)] = c;
  return from_dense(low, std::move(dense));
}

LaurentQ LaurentQ::from_dense(int low, std::vector<Rational> coefficients) {
  LaurentQ out;
  out.low_ = low;
  out.coeffs_ = std::move(coefficients);
  out.trim();
  return out;
}

void LaurentQ::trim() {
  std::size_t end = coeffs_.size();
  while (end > 0 && sgn(coeffs_[end - 1]) == 0) --end;
  coeffs_.resize(end);
  std::size_t begin = 0;
  while (begin < coeffs_.size() && sgn(coeffs_[begin]) == 0) ++begin;
  if (begin > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(begin));
    low_ += static_cast<int>(begin);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentQ::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational LaurentQ::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Rational> LaurentQ::terms() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentQ::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += sgn(c) != 0;
  return n;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentQ LaurentQ::substitute_power(int k) const {
  if (k == 0) throw PreconditionError("substitute_power requires a nonzero exponent");
  if (k == 1 || is_zero()) return *this;
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace((low_ + static_cast<int>(i)) * k, coeffs_[i]);
  return from_terms(out);
}

Rational LaurentQ::evaluate(const Rational& q) const {
  if (is_zero()) return Rational(0);
  if (sgn(q) == 0) {
    if (low_ < 0) throw DivisionByZero();
    return coefficient(0);
  }
  // Horner on the polynomial part, then scale by q^low.
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  Rational scale(1);
  const int n = low_ < 0 ? -low_ : low_;
  for (int i = 0; i < n; ++i) scale *= q;
  if (low_ < 0) return Rational(acc / scale);
  return Rational(acc * scale);
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int low = std::min(low_, rhs.low_);
  const int high = std::max(this->high(), rhs.high());
  if (low < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - low), Rational(0));
    low_ = low;
  }
  coeffs_.resize(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs) { return *this += -rhs; }

LaurentQ& LaurentQ::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

LaurentQ operator*(const LaurentQ& lhs, const LaurentQ& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) out[i + k] += lhs.coeffs_[i] * rhs.coeffs_[k];
  }
  return LaurentQ::from_dense(lhs.low_ + rhs.low_, std::move(out));
}

namespace {

void append_power(std::ostringstream& os, int e) {
  if (e == 0) return;
  os << 'q';
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      append_power(os, e);
    }
  }
  return os.str();
}

std::pair<LaurentQ, LaurentQ> poly_divmod(const LaurentQ& dividend, const LaurentQ& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  assert(divisor.low() >= 0 && (dividend.is_zero() || dividend.low() >= 0));
  const int db = divisor.high();
  if (dividend.is_zero() || dividend.high() < db) return {LaurentQ(), dividend};
  // Work on dense vectors indexed from exponent 0.
  std::vector<Rational> rem(static_cast<std::size_t>(dividend.high() + 1));
  for (const auto& [e, c] : dividend.terms()) rem[static_cast<std::size_t>(e)] = c;
  std::vector<Rational> den(static_cast<std::size_t>(db + 1));
  for (const auto& [e, c] : divisor.terms()) den[static_cast<std::size_t>(e)] = c;
  const Rational lead_inv = 1 / den.back();
  std::vector<Rational> quot(rem.size() - den.size() + 1);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (sgn(rem[ui]) == 0) continue;
    Rational f = rem[ui] * lead_inv;
    quot[ui - static_cast<std::size_t>(db)] = f;
    for (int k = 0; k <= db; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (sgn(den[uk]) != 0) rem[ui - static_cast<std::size_t>(db) + uk] -= f * den[uk];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {LaurentQ::from_dense(0, std::move(quot)), LaurentQ::from_dense(0, std::move(rem))};
}

LaurentQ poly_gcd(LaurentQ a, LaurentQ b) {
  while (!b.is_zero()) {
    LaurentQ r = poly_divmod(a, b).second;
    a = std::move(b);
    // Keep remainders monic to limit coefficient growth.
    if (!r.is_zero()) r *= Rational(1 / r.leading_coefficient());
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  a *= Rational(1 / a.leading_coefficient());
  return a;
}

}  // namespace tauforge
