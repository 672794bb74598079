#include "doctest.h"
#include "tauforge/error.hpp"
#include "tauforge/kpfock.hpp"

using namespace tauforge;

namespace {

RatPoly var(const char* name) { return RatPoly::variable(Var(name)); }
RatPoly num(long n, long d = 1) { return RatPoly(Rational(n, d)); }

bool all_passed(const VerificationReport& r) {
  if (!r.passed()) MESSAGE(r.id << ": " << r.residual());
  return r.passed();
}

}  // namespace

TEST_CASE("fermion examples") {
  const FockSpace space;
  const RatVector vac{{space.vacuum(0), Rational(1)}};
  const RatVector a = space.apply(Fermion::psi_star, -1, vac);
  REQUIRE(a.size() == 1);
  CHECK(space.charge(a.begin()->first) == -1);
  CHECK(a.begin()->second == 1);
  CHECK(space.partition(a.begin()->first).empty());

  const RatVector b = space.apply(Fermion::psi, 0, a);
  REQUIRE(b.size() == 1);
  CHECK(space.partition(b.begin()->first) == std::vector<int>{1});
  CHECK(space.charge(b.begin()->first) == 0);
  CHECK(b.begin()->first == space.state(0, {1}));

  CHECK(space.apply(Fermion::psi, 0, space.apply(Fermion::psi, 0, vac)).empty());
  CHECK(space.apply(Fermion::psi, -1, vac).empty());
  CHECK(space.apply(Fermion::psi_star, 0, vac).empty());
  // ψ_1 on |v_0> passes no particle, ψ_1 ψ_0 |v_0> passes one.
  const RatVector c = space.apply(Fermion::psi, 0, space.apply(Fermion::psi, 1, vac));
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->second == -1);
  CHECK(space.state_str(c.begin()->first) == "|2;>");
}

TEST_CASE("states and partitions round trip") {
  const FockSpace space(6);
  for (int charge = -2; charge <= 2; ++charge)
    for (FockMask s : space.states(charge, 5)) {
      CHECK(space.charge(s) == charge);
      CHECK(space.state(charge, space.partition(s)) == s);
      CHECK(space.energy(s) <= 5);
    }
  CHECK(space.states(0, 4).size() == 12);  // 1 + 1 + 2 + 3 + 5
  CHECK(space.energy(space.state(1, {3, 1})) == 4);
}

TEST_CASE("heisenberg examples") {
  const FockSpace space;
  const RatVector vac{{space.vacuum(0), Rational(1)}};
  CHECK(space.heisenberg(1, vac).empty());
  CHECK(space.heisenberg(3, vac).empty());
  const RatVector up = space.heisenberg(-1, vac);
  REQUIRE(up.size() == 1);
  CHECK(space.partition(up.begin()->first) == std::vector<int>{1});
  CHECK(up.begin()->second == 1);
  // a_{-2}|v_0> = |(2)> - |(1,1)>.
  const RatVector two = space.heisenberg(-2, vac);
  REQUIRE(two.size() == 2);
  CHECK(two.at(space.state(0, {2})) == 1);
  CHECK(two.at(space.state(0, {1, 1})) == -1);
  const RatVector back = space.heisenberg(1, up);
  REQUIRE(back.size() == 1);
  CHECK(back.begin()->first == space.vacuum(0));
}

TEST_CASE("heisenberg relations on safe states") {
  CHECK(all_passed(verify_heisenberg(4, 4)));
  CHECK(all_passed(verify_anticommutators(3, 40)));
}

TEST_CASE("boundary errors") {
  const FockSpace space(4);
  const RatVector top{{space.state(0, {3}), Rational(1)}};
  CHECK_THROWS_AS(space.heisenberg(-2, top), BoundaryError);
  CHECK_THROWS_AS(space.apply(Fermion::psi, 4, top), BoundaryError);
  CHECK_THROWS_AS(space.vacuum(3), BoundaryError);
  // A particle landing in the guard mode is reported.
  CHECK_THROWS_AS(space.heisenberg(-1, RatVector{{space.state(0, {3}), Rational(1)}}), BoundaryError);
  // Too small a window for the requested degree fails instead of truncating silently.
  CHECK_THROWS_AS(tau_kp(FockSpace(3), {}, 0, 0, 6), BoundaryError);
  const VerificationReport r = verify_cauchy(6, 3);
  CHECK_FALSE(r.passed());
}

TEST_CASE("schur polynomials") {
  const auto t = time_vars("t", 3);
  CHECK(schur_polynomial(0, t) == num(1));
  CHECK(schur_polynomial(1, t) == var("t1"));
  CHECK(schur_polynomial(2, t) == var("t2") + var("t1") * var("t1") * num(1, 2));
  CHECK(schur_polynomial(3, t) ==
        var("t3") + var("t1") * var("t2") + var("t1") * var("t1") * var("t1") * num(1, 6));
  CHECK(schur_polynomial(2, t, Rational(2)) == var("t2") * num(2) + var("t1") * var("t1") * num(2));
  CHECK(schur_polynomial(-1, t).is_zero());

  const auto y = time_vars("y", 2);
  const RatPoly y1sq = var("y1") * var("y1");
  CHECK(schur_operator(2, y, -1, y1sq) == num(1));
  CHECK(schur_operator(2, y, 1, var("y2")) == num(1, 2));
  CHECK(schur_operator(1, y, -1, var("y1") * var("y2")) == var("y2") * num(-1));
  CHECK(schur_operator(0, y, -1, y1sq) == y1sq);
}

TEST_CASE("weight-truncated products") {
  const auto x = time_vars("x", 3);
  WeightGroups wg;
  wg.add(x, 3);
  const RatPoly a = var("x1") + var("x2");
  CHECK(wg.product(a, a) == var("x1") * var("x1") + var("x1") * var("x2") * num(2));
  CHECK(wg.truncate(var("x3") + var("x1") * var("x3")) == var("x3"));
}

TEST_CASE("flows") {
  const FockSpace space;
  const auto x = time_vars("x", 4);
  const PolyVector vac{{space.vacuum(0), num(1)}};
  // e^{H(x)} kills nothing on the vacuum.
  CHECK(space.flow(FlowDirection::positive, x, vac, 4) == vac);
  // <(1)| e^{H'(u)} |v_0> = u1, <(2)| ... = S_2(u), <(1,1)| ... = u1^2/2 - u2.
  const auto u = time_vars("u", 2);
  const PolyVector up = space.flow(FlowDirection::negative, u, vac, 2);
  CHECK(up.at(space.state(0, {1})) == var("u1"));
  CHECK(up.at(space.state(0, {2})) == schur_polynomial(2, u));
  CHECK(up.at(space.state(0, {1, 1})) == var("u1") * var("u1") * num(1, 2) - var("u2"));
}

TEST_CASE("tau examples") {
  const FockSpace space;
  CHECK(tau_kp(space, {}, 0, 5, 0) == num(1));
  const GroupElementSpec g{{Rational(3, 2), 0, -1}};
  CHECK(tau_kp(space, g, 0, 5, 0) == num(1) + var("x1") * num(3, 2));
  // exp(ψ_1 ψ*_{-2}) creates -|(2, 1)>, whose Schur function is x1^3/3 - x3.
  const GroupElementSpec hook{{Rational(1), 1, -2}};
  const auto x = time_vars("x", 3);
  const RatPoly s21 = var("x1") * var("x1") * var("x1") * num(1, 3) - var("x3");
  CHECK(tau_kp(space, hook, 0, 3, 0) == num(1) - s21);
  CHECK(group_str(g) == "exp(3/2 psi_0 psi*_-1)");
  CHECK(random_group_element(1, 3).size() == 3);
  CHECK(group_str(random_group_element(1, 3)) == group_str(random_group_element(1, 3)));
}

TEST_CASE("two-sided tau at the identity is the Cauchy kernel") {
  const VerificationReport r = verify_cauchy(5);
  CHECK(all_passed(r));
  const RatPoly c = cauchy_series(2);
  CHECK(c == num(1) + var("x1") * var("u1") + var("x1") * var("x1") * var("u1") * var("u1") * num(1, 2) +
                 var("x2") * var("u2") * num(2));
}

TEST_CASE("charge is conserved by the group action and flows") {
  const FockSpace space;
  const auto g = random_group_element(9, 4);
  const PolyVector v = space.apply_group(g, PolyVector{{space.vacuum(1), num(1)}});
  for (const auto& [s, c] : space.flow(FlowDirection::negative, time_vars("u", 3), v, 3))
    CHECK(space.charge(s) == 1);
}

TEST_CASE("bilinear identities") {
  const GroupElementSpec theta{{Rational(3, 2), 0, -1}};
  const GroupElementSpec g{{Rational(1, 2), 1, -1}, {Rational(-2, 3), 0, -2}};
  CHECK(all_passed(verify_hirota_kp(KpIdentity::hirota, {}, 0, 0, 4)));
  CHECK(all_passed(verify_hirota_kp(KpIdentity::hirota, theta, 0, 0, 6)));
  CHECK(all_passed(verify_hirota_kp(KpIdentity::hirota, g, 0, 0, 4)));
  CHECK(all_passed(verify_hirota_kp(KpIdentity::fermionic, g, 0, 0, 4)));
  CHECK(all_passed(verify_hirota_kp(KpIdentity::fermionic, random_group_element(4, 3), 0, 0, 3)));
  CHECK(all_passed(verify_hirota_kp(KpIdentity::two_sided, {}, 0, 0, 3)));
  CHECK(all_passed(verify_hirota_kp(KpIdentity::two_sided, g, 1, 0, 3)));
}

TEST_CASE("bilinear identities detect a wrong tau") {
  // 1 + x1^2 = 1 + s_(2) + s_(1,1) violates the weight-4 Plücker relation.
  const auto x = time_vars("x", 5), y = time_vars("y", 5);
  const RatPoly tau = num(1) + var("x1") * var("x1");
  WeightGroups wg;
  const int group = wg.add(x, 5);
  for (std::size_t k = 0; k < y.size(); ++k) wg.grade[y[k]] = {group, static_cast<int>(k) + 1};
  std::map<Var, RatPoly> plus, minus;
  for (std::size_t k = 0; k < x.size(); ++k) {
    plus[x[k]] = RatPoly::variable(x[k]) + RatPoly::variable(y[k]);
    minus[x[k]] = RatPoly::variable(x[k]) - RatPoly::variable(y[k]);
  }
  const RatPoly f = wg.product(tau.substitute(plus), tau.substitute(minus));
  WeightGroups out = wg;
  out.caps = {4};
  RatPoly residual;
  for (int j = 0; j <= 4; ++j) residual += out.product(schur_polynomial(j, y, Rational(2)), schur_operator(j + 1, y, -1, f));
  CHECK_FALSE(residual.is_zero());
}
