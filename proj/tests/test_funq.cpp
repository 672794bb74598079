#include "doctest.h"
#include "support.hpp"
#include "tauforge/error.hpp"
#include "tauforge/funq.hpp"

using namespace tauforge;

namespace {

NCPoly F(const char* s) { return NCPoly::parse(funq_sl2(), s); }
NCPoly G(const char* s) { return NCPoly::parse(gauss_param(), s); }

}  // namespace

TEST_CASE("tensor embeddings") {
  const Embedding half = tensor_embedding(1);
  CHECK(half.iota == QMatrix::identity(2));
  CHECK(half.pi == QMatrix::identity(2));
  for (int two_j = 2; two_j <= 4; ++two_j) {
    CAPTURE(two_j);
    const Embedding emb = tensor_embedding(two_j);
    const Rep v = spin_half_power(two_j);
    const Rep r = make_rep(two_j);
    CHECK(emb.iota.rows() == (std::size_t{1} << two_j));
    CHECK(emb.iota(0, 0) == QScalar(1L));
    CHECK(emb.pi * emb.iota == QMatrix::identity(r.dim()));
    for (auto [big, small] : {std::pair{v.E, r.E}, {v.F, r.F}, {v.K, r.K}}) {
      CHECK(big * emb.iota == emb.iota * small);
      CHECK(small * emb.pi == emb.pi * big);
    }
  }
  // j=1: ι v_1 = Δ(f)(w_+⊗w_+) = w_+⊗w_- q + w_-⊗w_+ with Δf = 1⊗f + f⊗k.
  const Embedding one = tensor_embedding(2);
  CHECK(one.iota(1, 1) == QScalar(1L));
  CHECK(one.iota(2, 1) == QScalar::q());
  CHECK_THROWS_AS(tensor_embedding(0), PreconditionError);
  CHECK_THROWS_AS(highest_embedding(make_rep(2), 1), ConventionError);
}

TEST_CASE("spin-1/2 and spin-0 T-matrices") {
  const NCMatrix t = t_matrix(1);
  CHECK(t(0, 0) == F("a"));
  CHECK(t(0, 1) == F("b"));
  CHECK(t(1, 0) == F("c"));
  CHECK(t(1, 1) == F("d"));
  CHECK(t_matrix(0)(0, 0) == F("1"));
}

TEST_CASE("spin-1 T-matrix entries") {
  const NCMatrix t = t_matrix(2);
  // Oracle by hand: ι v_1 = +- + q -+, ι v_2 = [2] --, π v_0 = <++|, π v_2 = <--|/[2].
  CHECK(t(0, 0) == F("a^2"));
  CHECK(t(2, 2) == F("d^2"));
  CHECK(t(0, 2) == F("(q+q^-1)*b^2"));
  CHECK(t(2, 0) == F("c^2/(q+q^-1)"));
  CHECK(t(0, 1) == F("a*b+q*b*a"));
  CHECK(t(0, 1) == F("(1+q^2)*a*b"));
}

TEST_CASE("T-matrix structure for j <= 5/2") {
  for (int two_j = 0; two_j <= 5; ++two_j) {
    CAPTURE(two_j);
    const auto report = verify_t_matrix_structure(two_j);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("Gauss model entries") {
  const GaussModel g = gauss_model();
  CHECK(g.d == G("Qinv"));
  CHECK(g.b == G("(q-q^-1)*s*Qinv"));
  CHECK(g.c == G("-(q-q^-1)*Qinv*sbar"));
  CHECK(g.a == G("Q-(q-q^-1)^2*s*Qinv*sbar"));
}

TEST_CASE("Gauss model satisfies the relations on exactly one convention") {
  const auto report = verify_gauss_relations();
  CHECK(report.items.size() == 7);
  CHECK_MESSAGE(report.passed(), report.residual());
  CHECK(passing_gauss_conventions() == std::vector<int>{-1});
  CHECK_FALSE(verify_gauss_relations(gauss_param(1)).passed());
}

TEST_CASE("corepresentation property") {
  for (auto [a, b] : {std::pair{1, 1}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {0, 0}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto report = verify_corep(a, b);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("abstract and Gauss routes agree for j <= 3/2") {
  for (int two_j = 0; two_j <= 3; ++two_j) {
    CAPTURE(two_j);
    const auto report = verify_dual_route(two_j);
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("tau functions") {
  const Var u("u"), x("x");
  CHECK(tau_q(0, u, x) == F("1"));
  // The e-side variable multiplies the lower row: τ = T00 + u T10 + x T01 + u x T11.
  CHECK(tau_q(1, u, x) == F("a+u*c+x*b+u*x*d"));
  CHECK_THROWS_AS(tau_q(1, u, u), PreconditionError);
  for (int two_j = 0; two_j <= 4; ++two_j) {
    CAPTURE(two_j);
    const NCPoly tau = tau_q(two_j, u, x);
    NCPoly constant(tau.presentation());
    for (const auto& [w, c] : tau.terms()) constant.add_normal(w, TimesPoly(c.constant_term()));
    CHECK(constant == t_matrix(two_j)(0, 0));
  }
  for (int two_j = 0; two_j <= 2; ++two_j) {
    CAPTURE(two_j);
    CHECK(to_gauss(tau_q(two_j, u, x)) == tau_q(two_j, u, x, TRoute::gauss));
  }
}
