#include "doctest.h"
#include "support.hpp"
#include "tauforge/error.hpp"
#include "tauforge/qhirota.hpp"

using namespace tauforge;

namespace {

TimesPoly T(const char* s) { return parse_times_poly(s); }
NCPoly F(const char* s) { return NCPoly::parse(funq_sl2(), s); }

}  // namespace

TEST_CASE("q-derivative examples") {
  const Var x("x");
  CHECK(q_derivative(T("x^2"), x, 1) == T("(1+q)*x"));
  CHECK(q_derivative(F("c*x"), x, -2) == F("c"));
  CHECK(q_derivative(T("7/3"), x, 3).is_zero());
}

TEST_CASE("q-derivative properties") {
  const Var x("x"), y("y");
  tftest::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const int k = rng.range(1, 3) * (rng.range(0, 1) ? 1 : -1);
    const TimesPoly f = rng.times_poly({x, y}, 4, 3);
    const TimesPoly g = rng.times_poly({x, y}, 4, 3);
    // q-Leibniz rule.
    CHECK(q_derivative(f * g, x, k) == q_derivative(f, x, k) * q_shift(g, x, k) + f * q_derivative(g, x, k));
    // q = 1 gives the ordinary derivative.
    const TimesPoly h = rng.times_poly({x, y}, 4, 3, false);
    CHECK(eval_q1(q_derivative(h, x, k)) == eval_q1(h).derivative(x));
  }
}

TEST_CASE("q-Taylor examples") {
  const Var x("x"), a("a");
  const TimesPoly center = TimesPoly::variable(a);
  const auto lin = q_taylor(T("x"), x, center, 5, 1);
  CHECK(lin[0] == center);
  CHECK(lin[1] == T("1"));
  const auto sq = q_taylor(T("x^2"), x, center, 1, 2);
  CHECK(sq[0] == T("a^2"));
  CHECK(sq[1] == T("(1+q)*a"));
  CHECK(sq[2] == T("1"));
  CHECK(T("a^2") + T("(1+q)*a") * q_pochhammer(x, center, 1, 1) + q_pochhammer(x, center, 1, 2) == T("x^2"));

  const auto& vars = hirota_vars();
  const auto tau = q_taylor(tau_q(1, vars.u, vars.x), vars.x, T("q*w"), -2, 3);
  int nonzero = 0;
  for (const auto& c : tau) nonzero += c.is_zero() ? 0 : 1;
  CHECK(nonzero == 2);
  CHECK_THROWS_AS(q_taylor(T("x"), x, T("x"), 1, 1), PreconditionError);
}

TEST_CASE("q-Taylor reconstruction") {
  const Var x("x"), y("y"), c("c");
  tftest::Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    const TimesPoly f = rng.times_poly({x, y}, 5, 6);
    const int k = rng.range(-3, 3) == 0 ? 2 : rng.range(1, 3);
    const TimesPoly center = TimesPoly::variable(c) * TimesPoly(QScalar::q_power(rng.range(-2, 2)));
    const auto coeffs = q_taylor(f, x, center, k, 6);
    TimesPoly sum;
    for (int m = 0; m <= 6; ++m) sum += coeffs[static_cast<std::size_t>(m)] * q_pochhammer(x, center, k, m);
    CHECK(sum == f);
  }
}

TEST_CASE("bilinear identity for small spins") {
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto report = verify_hirota_identity(a, b);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
  CHECK_THROWS_AS(verify_hirota_identity(0, 1), PreconditionError);
}

TEST_CASE("bilinear identity detects the wrong variable slots") {
  const auto& [u, x, v, y] = hirota_vars();
  const NCPoly one = F("1");
  // Swapping the e- and f-side variables of the spin-1 factor breaks the identity.
  const auto sides = hirota_sides(2, 1, tau_q(2, x, u), tau_q(1, v, y), tau_q(1, x, u), one);
  CHECK_FALSE((sides.lhs - sides.rhs).is_zero());
}

TEST_CASE("spin-1/2 suite") {
  const auto report = spin_half_suite();
  CHECK_MESSAGE(report.passed(), report.residual());
  CHECK(report.items.size() == 17);
}

TEST_CASE("classical Liouville residual of the unit element") {
  const auto& vars = hirota_vars();
  RatPoly tau = RatPoly(Rational(1)) + RatPoly::variable(vars.u) * RatPoly::variable(vars.x);
  CHECK(classical_liouville_residual(tau).is_zero());
  // 1 + u + ux: τ τ_ux - τ_u τ_x = 1 + u + ux - (1 + x)u = 1.
  CHECK(classical_liouville_residual(tau + RatPoly::variable(vars.u)).is_zero());
  CHECK_FALSE(classical_liouville_residual(tau + RatPoly::variable(vars.u) * RatPoly::variable(vars.u)).is_zero());
}

TEST_CASE("hierarchy expansion") {
  const auto p = funq_sl2();
  for (const auto& c : expand_hierarchy(NCPoly(p), 1, -1, 3, 3)) CHECK(c.value.is_zero());
  const HirotaSides sides = hirota_sides(1, 1);
  for (const NCPoly& side : {sides.lhs, sides.rhs}) {
    const auto coeffs = expand_hierarchy(side, 1, -1, 3, 3);
    CHECK(coeffs.size() == 16);
    CHECK(resum_hierarchy(coeffs, 1, -1, p) == side);
  }
  for (const auto& c : expand_hierarchy(sides.lhs - sides.rhs, 1, -1, 3, 3)) CHECK(c.value.is_zero());
}
