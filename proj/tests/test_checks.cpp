#include "doctest.h"
#include "json.hpp"
#include "tauforge/checks.hpp"
#include "tauforge/error.hpp"

using namespace tauforge;

TEST_CASE("check registry is ordered and unique") {
  const auto& reg = check_registry();
  REQUIRE(reg.size() >= 12);
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  for (const auto& c : reg) {
    CHECK_FALSE(c.anchor.empty());
    CHECK(static_cast<bool>(c.run));
  }
}

TEST_CASE("selectors") {
  CHECK(select_checks("qliouville.spin-half").size() == 1);
  const auto kp = select_checks("kp.*");
  std::vector<std::string> ids;
  for (const auto* c : kp) ids.push_back(c->id);
  CHECK(std::find(ids.begin(), ids.end(), "kp.fermionic") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "kp.hirota") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "kp.two-sided") != ids.end());
  CHECK_THROWS_AS(select_checks("nothing.here"), PreconditionError);
}

TEST_CASE("spins and option bounds") {
  CHECK(parse_spin("1/2") == 1);
  CHECK(parse_spin("1") == 2);
  CHECK(parse_spin("3/2") == 3);
  CHECK_THROWS_AS(parse_spin("2/3"), PreconditionError);
  CHECK_THROWS_AS(parse_spin("0"), PreconditionError);
  CHECK_THROWS_AS(parse_spin("x"), PreconditionError);
  CheckOptions o;
  o.window = 1;
  CHECK_THROWS_AS(validate_options(o), PreconditionError);
  o.window = 8;
  o.degree = 0;
  CHECK_THROWS_AS(validate_options(o), PreconditionError);
}

TEST_CASE("runs are deterministic across job counts") {
  const auto checks = select_checks("qliouville.*");
  const auto one = run_checks(checks, {}, 1);
  const auto three = run_checks(checks, {}, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].id == three[i].id);
    CHECK(one[i].passed());
    CHECK(one[i].residual() == three[i].residual());
    CHECK(one[i].items.size() == three[i].items.size());
  }
  CheckOptions o;
  o.two_j = 2;
  o.two_jp = 2;
  const auto hirota = run_checks(select_checks("qhirota.identity"), o, 1);
  REQUIRE(hirota.size() == 1);
  CHECK(hirota[0].passed());
  CHECK(hirota[0].params.at("j") == "1");
}

TEST_CASE("report rendering") {
  CHECK(render_text({}).empty());
  CHECK(render_json({}) == "[]\n");
  VerificationReport pass;
  pass.id = "demo.pass";
  pass.anchor = "demo";
  pass.milliseconds = 12.4;
  pass.add("holds", "");
  VerificationReport fail = pass;
  fail.id = "demo.fail";
  fail.add("breaks", "x1 - 1");
  CHECK(render_text({pass}) == "PASS demo.pass (demo) 12ms\n");
  CHECK(render_text({fail}) == "FAIL demo.fail (demo) 12ms\n  breaks: x1 - 1\n");
  const auto doc = nlohmann::json::parse(render_json({pass, fail}));
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["verdict"] == "pass");
  CHECK(doc[0]["residual"] == "");
  CHECK(doc[1]["verdict"] == "fail");
  CHECK(doc[1]["residual"] == "breaks: x1 - 1");
  for (const char* key : {"id", "verdict", "residual", "params", "anchor", "ms"}) CHECK(doc[1].contains(key));
}
