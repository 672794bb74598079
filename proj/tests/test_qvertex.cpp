#include "doctest.h"
#include "support.hpp"
#include "tauforge/error.hpp"
#include "tauforge/qcalc.hpp"
#include "tauforge/qvertex.hpp"

using namespace tauforge;

namespace {

QScalar Q(const char* s) { return QScalar::parse(s); }

}  // namespace

TEST_CASE("spin-1/2 vertex components") {
  const auto vc = solve_vertex_components(1);
  // Columns are indexed by the one-dimensional V_0.
  CHECK(vc.phi_plus(0, 0) == QScalar(1L));
  CHECK(vc.phi_plus(1, 0).is_zero());
  CHECK(vc.phi_minus(0, 0).is_zero());
  CHECK(vc.phi_minus(1, 0) == QScalar(1L));
  CHECK(vc.psi_plus(0, 0).is_zero());
  CHECK(vc.psi_plus(1, 0) == Q("-q"));
  CHECK(vc.psi_minus(0, 0) == QScalar(1L));
  CHECK(vc.psi_minus(1, 0).is_zero());
}

TEST_CASE("spin-1 Phi- on the vacuum") {
  const auto vc = solve_vertex_components(2);
  CHECK(vc.phi_minus(1, 0) == Q("q^-1/(q+q^-1)"));
  CHECK(vc.phi_minus(0, 0).is_zero());
  CHECK(vc.phi_minus(2, 0).is_zero());
}

TEST_CASE("vacuum normalisations for j <= 5/2") {
  for (int two_j = 1; two_j <= 5; ++two_j) {
    CAPTURE(two_j);
    const auto vc = solve_vertex_components(two_j);
    CHECK(vc.phi_plus.rows() == static_cast<std::size_t>(two_j + 1));
    CHECK(vc.phi_plus.cols() == static_cast<std::size_t>(two_j));
    const auto report = verify_vacuum_actions(vc);
    CHECK(report.items.size() == 8);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
  CHECK_THROWS_AS(solve_vertex_components(0), PreconditionError);
}

TEST_CASE("intertwiners are unique and intertwine") {
  for (int two_j = 1; two_j <= 4; ++two_j) {
    const Rep src = make_rep(two_j - 1), tgt = make_rep(two_j), w = make_rep(1);
    const QMatrix phi = solve_intertwiner(tensor(src, w), tgt);
    const Rep sw = tensor(src, w);
    CHECK(tgt.E * phi == phi * sw.E);
    CHECK(tgt.F * phi == phi * sw.F);
    CHECK(tgt.K * phi == phi * sw.K);
  }
  // V_1/2 ⊗ V_1/2 → V_1/2 has no nonzero intertwiner.
  CHECK_THROWS_AS(solve_intertwiner(tensor(make_rep(1), make_rep(1)), make_rep(1)), ConventionError);
  // V_1 ⊗ V_1 → V_1 exists and is unique, V_0 → V_0 ⊕ ... trivially fine.
  CHECK_NOTHROW(solve_intertwiner(tensor(make_rep(2), make_rep(2)), make_rep(2)));
}

TEST_CASE("component relations for j <= 2") {
  for (int two_j = 1; two_j <= 4; ++two_j) {
    CAPTURE(two_j);
    const auto report = verify_component_relations(two_j);
    CHECK(report.items.size() == 2 + 4 * 3 * 2);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("q-exponential commutation relations for j <= 2") {
  for (int two_j = 1; two_j <= 4; ++two_j) {
    CAPTURE(two_j);
    const auto report = verify_qexp_commutation(two_j);
    CHECK(report.items.size() == 8);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("a perturbed component breaks the commutation relations") {
  auto vc = solve_vertex_components(2);
  const Rep src = make_rep(1), tgt = make_rep(2);
  const Var t("t");
  const TPMatrix et = q_exp_nilpotent(tgt.E, t, 2), es = q_exp_nilpotent(src.E, t, 2);
  vc.phi_plus(1, 1) += QScalar(1L);
  CHECK_FALSE((et * to_tp(vc.phi_plus) - to_tp(vc.phi_plus) * es).is_zero());
}

TEST_CASE("q-exponentials are eigenfunctions of q-derivatives") {
  for (int two_j = 0; two_j <= 5; ++two_j) {
    const auto report = verify_qexp_derivatives(two_j);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("q-derivative on monomials") {
  const Var x("x");
  const TimesPoly p = parse_times_poly("x^3+2*x");
  CHECK(q_derivative(p, x, 2) == parse_times_poly("(1+q^2+q^4)*x^2+2"));
  CHECK(q_derivative(p, x, 2).substitute(x, TimesPoly(1L)) ==
        TimesPoly(q_paren(3, 2) + QScalar(2L)));
  CHECK(eval_q1(q_derivative(p, x, -2)) == eval_q1(parse_times_poly("3*x^2+2")));
  // Definition check: (f(q²x) - f(x)) / ((q²-1)x).
  tftest::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const TimesPoly f = rng.times_poly({x, Var("y")});
    const TimesPoly lhs = q_derivative(f, x, 2) * TimesPoly::variable(x) * TimesPoly(Q("q^2-1"));
    CHECK(lhs == q_shift(f, x, 2) - f);
  }
}
