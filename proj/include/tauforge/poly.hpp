#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tauforge/error.hpp"
#include "tauforge/qscalar.hpp"

namespace tauforge {

/// Interned name of a commuting time variable.
class Var {
 public:
  Var() = default;
  explicit Var(std::string_view name);
  static Var indexed(std::string_view stem, int index) { return Var(std::string(stem) + std::to_string(index)); }

  std::uint32_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend bool operator!=(Var a, Var b) { return a.id_ != b.id_; }
  friend bool operator<(Var a, Var b) { return a.id_ < b.id_; }

 private:
  std::uint32_t id_ = 0;
};

/// Product of variable powers, sorted by variable id with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, int power = 1);

  bool is_one() const { return factors_.empty(); }
  int degree(Var v) const;
  int total_degree() const;
  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
  /// Removes v entirely.
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

  /// Graded order on names, used for deterministic rendering.
  static bool render_less(const Monomial& a, const Monomial& b);
  std::string str() const;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

namespace detail {
inline std::string coeff_factor_str(const Rational& c) { return c.get_str(); }
inline std::string coeff_factor_str(const QScalar& c) { return c.factor_str(); }
inline std::string coeff_str(const Rational& c) { return c.get_str(); }
inline std::string coeff_str(const QScalar& c) { return c.str(); }
}  // namespace detail

/// Commutative polynomial in time variables with coefficients in a field.
template <class Coeff>
class basic_poly {
 public:
  using coeff_type = Coeff;
  using term_map = std::map<Monomial, Coeff>;

  basic_poly() = default;
  basic_poly(const Coeff& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero_coeff(c)) terms_.emplace(Monomial(), c);
  }
  basic_poly(long c) : basic_poly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static basic_poly variable(Var v) { return term(Coeff(1L), Monomial::of(v)); }
  static basic_poly term(const Coeff& c, const Monomial& m) {
    basic_poly out;
    if (!is_zero_coeff(c)) out.terms_.emplace(m, c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Coeff constant_term() const { return coefficient(Monomial()); }
  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  int degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  basic_poly operator-() const {
    basic_poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  basic_poly& operator+=(const basic_poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  basic_poly& operator-=(const basic_poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  basic_poly& operator*=(const Coeff& rhs) {
    if (is_zero_coeff(rhs)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= rhs;
    return *this;
  }
  friend basic_poly operator+(basic_poly a, const basic_poly& b) { return a += b; }
  friend basic_poly operator-(basic_poly a, const basic_poly& b) { return a -= b; }
  friend basic_poly operator*(basic_poly a, const Coeff& b) { return a *= b; }
  friend basic_poly operator*(const Coeff& b, basic_poly a) { return a *= b; }
  friend basic_poly operator*(const basic_poly& a, const basic_poly& b) {
    if (a.is_constant() && !a.is_zero()) return b * a.constant_term();
    if (b.is_constant() && !b.is_zero()) return a * b.constant_term();
    basic_poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  basic_poly& operator*=(const basic_poly& rhs) { return *this = *this * rhs; }
  friend bool operator==(const basic_poly& a, const basic_poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const basic_poly& a, const basic_poly& b) { return !(a == b); }

  basic_poly pow(int n) const {
    basic_poly out(1L);
    for (int i = 0; i < n; ++i) out *= *this;
    return out;
  }

  /// Adds c·m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coeff& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// Replaces v by factor·v.
  basic_poly scale_variable(Var v, const Coeff& factor) const {
    basic_poly out;
    for (const auto& [m, c] : terms_) {
      const int d = m.degree(v);
      Coeff scaled = c;
      for (int i = 0; i < d; ++i) scaled *= factor;
      out.add_term(m, scaled);
    }
    return out;
  }

  /// Replaces v by an arbitrary polynomial.
  basic_poly substitute(Var v, const basic_poly& image) const {
    basic_poly out;
    std::vector<basic_poly> powers{basic_poly(1L)};
    for (const auto& [m, c] : terms_) {
      const int d = m.degree(v);
      while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * image);
      out += powers[static_cast<std::size_t>(d)] * basic_poly::term(c, m.without(v));
    }
    return out;
  }

  /// Simultaneous substitution of several variables.
  basic_poly substitute(const std::map<Var, basic_poly>& images) const {
    basic_poly out;
    for (const auto& [m, c] : terms_) {
      basic_poly t = basic_poly::term(c, Monomial());
      Monomial rest;
      for (const auto& [v, e] : m.factors()) {
        auto it = images.find(v);
        if (it == images.end())
          rest = rest * Monomial::of(v, e);
        else
          t *= it->second.pow(e);
      }
      out += t * basic_poly::term(Coeff(1L), rest);
    }
    return out;
  }

  /// Ordinary partial derivative.
  basic_poly derivative(Var v) const {
    basic_poly out;
    for (const auto& [m, c] : terms_) {
      const int d = m.degree(v);
      if (d == 0) continue;
      Monomial lowered = m.without(v) * (d > 1 ? Monomial::of(v, d - 1) : Monomial());
      out.add_term(lowered, c * Coeff(static_cast<long>(d)));
    }
    return out;
  }

  /// Keeps the terms whose monomial satisfies the predicate.
  basic_poly filter(const std::function<bool(const Monomial&)>& keep) const {
    basic_poly out;
    for (const auto& [m, c] : terms_)
      if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map_coefficients(F f) const -> basic_poly<decltype(f(std::declval<const Coeff&>()))> {
    basic_poly<decltype(f(std::declval<const Coeff&>()))> out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const typename term_map::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return Monomial::render_less(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
      std::string piece;
      if (t->first.is_one()) {
        piece = detail::coeff_str(t->second);
      } else {
        const Coeff& c = t->second;
        if (c == Coeff(1L))
          piece = t->first.str();
        else if (c == Coeff(-1L))
          piece = "-" + t->first.str();
        else
          piece = detail::coeff_factor_str(c) + "*" + t->first.str();
      }
      if (!first && piece.front() != '-') os << '+';
      os << piece;
      first = false;
    }
    return os.str();
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return tauforge::is_zero(c); }

  term_map terms_;
};

using TimesPoly = basic_poly<QScalar>;
using RatPoly = basic_poly<Rational>;

/// Maps each coefficient to q = 1; throws PoleError on a pole.
RatPoly eval_q1(const TimesPoly& p);
TimesPoly to_times(const RatPoly& p);

/// Parses a time polynomial over QScalar; every identifier other than `q` is a time variable.
TimesPoly parse_times_poly(std::string_view text);

}  // namespace tauforge
