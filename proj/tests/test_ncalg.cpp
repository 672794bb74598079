#include "doctest.h"
#include "support.hpp"
#include "tauforge/error.hpp"
#include "tauforge/ncalg.hpp"

using namespace tauforge;

namespace {

NCPoly F(const char* s) { return NCPoly::parse(funq_sl2(), s); }

// Random FunqSL2 element: short random words with small time-polynomial coefficients.
NCPoly random_element(tftest::Rng& rng, const PresentationPtr& p, int max_len = 3) {
  NCPoly out(p);
  const std::vector<Var> vars{Var("u"), Var("v")};
  const int n = rng.range(1, 3);
  for (int i = 0; i < n; ++i) {
    Word w(static_cast<std::size_t>(rng.range(0, max_len)));
    for (auto& g : w) g = static_cast<Gen>(rng.range(0, static_cast<int>(p->generators().size()) - 1));
    out += NCPoly::from_word(p, w, rng.times_poly(vars, 2, 1));
  }
  return out;
}

NCPoly exp_q(const NCPoly& x, int order) {
  NCPoly out(x.presentation(), TimesPoly(1L));
  NCPoly power = out;
  for (int n = 1; n <= order; ++n) {
    power = power * x;
    out += power * TimesPoly(q_paren_factorial(n).inverse());
  }
  return out;
}

// Drops words longer than `degree`.
NCPoly truncate_words(const NCPoly& p, std::size_t degree) {
  NCPoly out(p.presentation());
  for (const auto& [w, c] : p.terms())
    if (w.size() <= degree) out.add_normal(w, c);
  return out;
}

}  // namespace

TEST_CASE("ncalg: worked normal forms") {
  CHECK(F("b*a") == F("q*a*b"));
  CHECK(F("d*a").str() == "1+q*b*c");
  CHECK(F("a*1") == F("a"));
  CHECK(F("c*a*d") == F("q*a*c*d"));
  CHECK(F("c*a*d").str() == "c+q^-1*b*c^2");
}

TEST_CASE("ncalg: the quantum SL2 relations reduce to zero") {
  for (const char* rel : {"a*b-q^-1*b*a", "a*c-q^-1*c*a", "b*d-q^-1*d*b", "c*d-q^-1*d*c", "b*c-c*b",
                          "a*d-q^-1*b*c-1", "d*a-q*b*c-1"})
    CHECK(F(rel).is_zero());
}

TEST_CASE("ncalg: rendering parses back") {
  tftest::Rng rng(0);
  for (const auto& p : {funq_sl2(), gauss_param(), q_plane()}) {
    for (int i = 0; i < 30; ++i) {
      const NCPoly x = random_element(rng, p);
      CHECK(NCPoly::parse(p, x.str()) == x);
    }
  }
}

TEST_CASE("ncalg: local confluence of the built-in presentations") {
  CHECK(check_local_confluence(*funq_sl2(), 4).passed());
  CHECK(check_local_confluence(*gauss_param(), 4).passed());
  CHECK(check_local_confluence(*gauss_param(1), 4).passed());
  CHECK(check_local_confluence(*comm_sl2(), 4).passed());
  CHECK(check_local_confluence(*q_plane(), 4).passed());
}

TEST_CASE("ncalg: contradictory rules fail at yx") {
  std::vector<RewriteRule> rules{{1, 0, {{{0, 1}, QScalar(1L)}}}, {1, 0, {{{0, 1}, QScalar(2L)}}}};
  Presentation bad("Bad", {"x", "y"}, rules);
  const auto report = check_local_confluence(bad, 3);
  CHECK_FALSE(report.passed());
  REQUIRE(!report.items.empty());
  CHECK(report.items.front().label == "y*x");
}

TEST_CASE("ncalg: the alphabetical a<b<c<d ordering is not confluent") {
  enum : Gen { a, b, c, d };
  const QScalar q = QScalar::q(), qi = QScalar::q_power(-1), one(1L);
  std::vector<RewriteRule> rules{
      {b, a, {{{a, b}, q}}},          {c, a, {{{a, c}, q}}},
      {d, b, {{{b, d}, q}}},          {d, c, {{{c, d}, q}}},
      {c, b, {{{b, c}, one}}},        {d, a, {{{}, one}, {{b, c}, q}}},
      {a, d, {{{}, one}, {{b, c}, qi}}},
  };
  Presentation literal("Literal", {"a", "b", "c", "d"}, rules);
  CHECK_FALSE(check_local_confluence(literal, 4).passed());
}

TEST_CASE("ncalg: non-terminating rules exhaust the budget") {
  std::vector<RewriteRule> rules{{1, 0, {{{0, 1}, QScalar(1L)}}}, {0, 1, {{{1, 0}, QScalar(1L)}}}};
  auto loop = std::make_shared<const Presentation>("Loop", std::vector<std::string>{"x", "y"}, rules);
  CHECK_THROWS_AS(NCPoly::parse(loop, "y*x"), PresentationError);
  CHECK_THROWS_AS(NCPoly::parse(funq_sl2(), "e*a^-1"), ParseError);
}

TEST_CASE("ncalg: multiplication respects normal forms") {
  tftest::Rng rng(0);
  for (const auto& p : {funq_sl2(), gauss_param()}) {
    for (int i = 0; i < 40; ++i) {
      const NCPoly x = random_element(rng, p);
      const NCPoly y = random_element(rng, p);
      const NCPoly z = random_element(rng, p);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      // Reducing the concatenation of raw words equals multiplying normal forms.
      for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
          Word w = wx;
          w.insert(w.end(), wy.begin(), wy.end());
          CHECK(NCPoly::from_word(p, w) == NCPoly::from_word(p, wx) * NCPoly::from_word(p, wy));
        }
    }
  }
}

TEST_CASE("ncalg: counit is a ring map") {
  tftest::Rng rng(0);
  const auto p = funq_sl2();
  const std::vector<TimesPoly> counit{TimesPoly(1L), TimesPoly(1L), TimesPoly(), TimesPoly()};
  for (int i = 0; i < 40; ++i) {
    const NCPoly x = random_element(rng, p);
    const NCPoly y = random_element(rng, p);
    CHECK(substitute_scalars(x * y, counit) == substitute_scalars(x, counit) * substitute_scalars(y, counit));
  }
}

TEST_CASE("ncalg: q-exponential addition theorem") {
  const auto p = q_plane();
  const NCPoly x = NCPoly::generator(p, "x");
  const NCPoly y = NCPoly::generator(p, "y");
  const std::size_t degree = 8;
  const NCPoly lhs = truncate_words(exp_q(x + y, 8), degree);
  const NCPoly rhs = truncate_words(exp_q(x, 8) * exp_q(y, 8), degree);
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 45);
}
