#pragma once

#include <cstdint>
#include <random>

#include "tauforge/poly.hpp"
#include "tauforge/qscalar.hpp"

namespace tftest {

using namespace tauforge;

/// Seeded generator that only uses raw engine output, so values are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint32_t seed = 0) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint32_t>(hi - lo + 1)); }

  Rational rational(int span = 5) {
    int num = range(-span, span);
    int den = range(1, span);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  LaurentQ laurent(int max_terms = 3, int max_exp = 3) {
    std::map<int, Rational> terms;
    const int n = range(0, max_terms);
    for (int i = 0; i < n; ++i) terms[range(-max_exp, max_exp)] = rational();
    for (auto it = terms.begin(); it != terms.end();)
      it = sgn(it->second) == 0 ? terms.erase(it) : std::next(it);
    return LaurentQ::from_terms(terms);
  }

  QScalar scalar() {
    LaurentQ den;
    while (den.is_zero()) den = laurent(2, 2);
    return QScalar::fraction(laurent(), den);
  }

  TimesPoly times_poly(const std::vector<Var>& vars, int max_terms = 4, int max_deg = 3, bool q_coeffs = true) {
    TimesPoly out;
    const int n = range(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (Var v : vars) m = m * Monomial::of(v, range(0, max_deg));
      out.add_term(m, q_coeffs ? QScalar(laurent(2, 2)) : QScalar(rational()));
    }
    return out;
  }

 private:
  std::mt19937 engine_;
};

}  // namespace tftest

#include "doctest.h"
#include "tauforge/ncalg.hpp"

namespace doctest {
template <>
struct StringMaker<tauforge::QScalar> {
  static String convert(const tauforge::QScalar& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<tauforge::TimesPoly> {
  static String convert(const tauforge::TimesPoly& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<tauforge::NCPoly> {
  static String convert(const tauforge::NCPoly& x) { return x.str().c_str(); }
};
}  // namespace doctest
