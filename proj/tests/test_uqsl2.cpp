#include "doctest.h"
#include "support.hpp"
#include "tauforge/error.hpp"
#include "tauforge/uqsl2.hpp"

using namespace tauforge;

namespace {

QScalar Q(const char* s) { return QScalar::parse(s); }

QMatrix diag(std::initializer_list<QScalar> xs) {
  QMatrix m(xs.size(), xs.size());
  std::size_t i = 0;
  for (const auto& x : xs) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("spin-1/2 and spin-0 matrices") {
  const Rep half = make_rep(1);
  QMatrix e(2, 2);
  e(0, 1) = QScalar(1L);
  CHECK(half.E == e);
  CHECK(half.F == e.transpose());
  CHECK(half.K == diag({Q("q"), Q("q^-1")}));
  CHECK(half.Kinv == diag({Q("q^-1"), Q("q")}));

  const Rep zero = make_rep(0);
  CHECK(zero.dim() == 1);
  CHECK(zero.E.is_zero());
  CHECK(zero.F.is_zero());
  CHECK(zero.K == QMatrix::identity(1));
  CHECK_THROWS_AS(make_rep(-1), PreconditionError);
}

TEST_CASE("spin-1 raising coefficient is [2]") {
  const Rep one = make_rep(2);
  CHECK(one.E(0, 1) == Q("q+q^-1"));
  CHECK(one.E(1, 2) == Q("q+q^-1"));
  CHECK(one.K == diag({Q("q^2"), QScalar(1L), Q("q^-2")}));
  // [e,f] on v_1 by hand: E F v_1 - F E v_1 = [2] v_1 - [2] v_1 = 0 = (K-K^-1)/(q-q^-1) v_1.
  const QMatrix comm = one.E * one.F - one.F * one.E;
  CHECK(comm(1, 1).is_zero());
  CHECK(comm(0, 0) == Q("q+q^-1"));
}

TEST_CASE("representation relations for j <= 3") {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    CAPTURE(two_j);
    const Rep r = make_rep(two_j);
    const auto report = check_rep_relations(r);
    CHECK_MESSAGE(report.passed(), report.residual());
    CHECK(r.E.pow(two_j + 1).is_zero());
    CHECK(r.F.pow(two_j + 1).is_zero());
    if (two_j > 0) CHECK_FALSE(r.E.pow(two_j).is_zero());
  }
}

TEST_CASE("q-exponential examples") {
  const Var t("t"), s("s");
  const Rep half = make_rep(1);
  CHECK(q_exp_nilpotent(half.E, t, 2) == to_tp(QMatrix::identity(2)) + to_tp(half.E).scaled(TimesPoly::variable(t)));

  const Rep one = make_rep(2);
  const TimesPoly sp = TimesPoly::variable(s);
  const TPMatrix expected = to_tp(QMatrix::identity(3)) + to_tp(one.F).scaled(sp) +
                            to_tp(one.F * one.F).scaled(sp * sp * TimesPoly(q_paren(2, -2).inverse()));
  CHECK(q_exp_nilpotent(one.F, s, -2) == expected);
  // (2)_{q^-2} = 1 + q^-2
  CHECK(q_paren(2, -2) == Q("1+q^-2"));

  CHECK_THROWS_AS(q_exp_nilpotent(one.K, t, 2), PreconditionError);
  CHECK_THROWS_AS(q_exp_nilpotent(to_tp(one.E).scaled(TimesPoly::variable(t)), t, 2), PreconditionError);
}

TEST_CASE("q-exponential at t = 0 and under K-conjugation") {
  const Var t("t");
  for (int two_j = 0; two_j <= 6; ++two_j) {
    CAPTURE(two_j);
    const Rep r = make_rep(two_j);
    const TPMatrix ex = q_exp_nilpotent(r.E, t, 2);
    const TPMatrix sq = (ex * ex).map([&](const TimesPoly& x) { return x.substitute(t, TimesPoly()); });
    CHECK(sq == to_tp(QMatrix::identity(r.dim())));
    const TPMatrix conj = to_tp(r.K) * ex * to_tp(r.Kinv);
    const TPMatrix shifted = ex.map([&](const TimesPoly& x) { return x.scale_variable(t, Q("q^2")); });
    CHECK(conj == shifted);
  }
}

TEST_CASE("antipode and its inverse") {
  for (UGen g : {UGen::e, UGen::f, UGen::k, UGen::kinv}) {
    const UqElement x = UqElement::gen(g);
    for (int two_j = 0; two_j <= 3; ++two_j) {
      const Rep r = make_rep(two_j);
      CHECK(represent(antipode_inverse(antipode(x)), r) == represent(x, r));
      CHECK(represent(antipode(antipode_inverse(x)), r) == represent(x, r));
    }
  }
  const Rep half = make_rep(1);
  CHECK(represent(antipode(UqElement::gen(UGen::e)), half) == -(half.K * half.E));
  CHECK(represent(antipode(UqElement::gen(UGen::f)), half) == -(half.F * half.Kinv));
  // Antihomomorphism: S(ef) = S(f) S(e).
  const UqElement ef = UqElement::gen(UGen::e) * UqElement::gen(UGen::f);
  const Rep one = make_rep(2);
  CHECK(represent(antipode(ef), one) ==
        represent(antipode(UqElement::gen(UGen::f)), one) * represent(antipode(UqElement::gen(UGen::e)), one));
}

TEST_CASE("dual module satisfies the relations") {
  for (int two_j = 0; two_j <= 4; ++two_j) {
    const auto report = check_rep_relations(dual_rep(make_rep(two_j)));
    CHECK_MESSAGE(report.passed(), report.residual());
  }
}

TEST_CASE("Hopf structure in tensor products") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{0, 0}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto report = verify_hopf_matrices(a, b);
    CHECK_MESSAGE(report.passed(), report.residual());
    CHECK(report.items.size() >= 4);
  }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const auto report = verify_hopf_matrices(a, b);
      CHECK_MESSAGE(report.passed(), report.residual());
    }
}

TEST_CASE("a wrong coproduct is detected") {
  // Δe = e⊗1 + k⊗e is not compatible with KE = q²EK and [E,F] together with Δf = 1⊗f + f⊗k.
  const Rep v = make_rep(1);
  Rep bad = tensor(v, v);
  bad.E = kron(v.E, QMatrix::identity(2)) + kron(v.K, v.E);
  CHECK_FALSE(check_rep_relations(bad).passed());
}
