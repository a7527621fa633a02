#include <doctest.h>

#include <json.hpp>

#include "witt/differentiators.hpp"
#include "witt/errors.hpp"
#include "witt/expr_io.hpp"
#include "witt/sampler.hpp"

using namespace witt;

TEST_CASE("parsing in each ring") {
  CHECK(parse_witt("e[1]*e[-1] - 2*e[0]^2 + e[-1]*e[1]") == omega(2, 1, -1));
  CHECK(print_canonical(parse("d*t", RingSpec::parse("t:2"))) == "t*d + 1");
  CHECK(print_canonical(parse("∂*t", RingSpec::parse("t:2"))) == "t*d + 1");
  CHECK(print_canonical(parse(" 2 * e[ -1 ] ^ 2 ", RingSpec::witt())) == "2*e[-1]^2");
  CHECK(print_canonical(parse("e[1]*e[0]", RingSpec::parse("s"))) == "e[0]*e[1]");
  CHECK(print_canonical(parse("E[1]*E[0]", RingSpec::parse("t:inf"))) == "E[0]*E[1] - E[1]");
  CHECK(print_canonical(parse("v[1]*d*t", RingSpec::parse("grt:2"))) == "t*d*v[1]");
  CHECK(print_canonical(parse("-1/2*e[1]", RingSpec::witt())) == "-1/2*e[1]");
  CHECK(print_canonical(parse("3/6", RingSpec::witt())) == "1/2");
  CHECK(print_canonical(parse("e[0] - e[0]", RingSpec::witt())) == "0");
  CHECK(print_canonical(parse("e[-1]^2*e[3] - 1/2*e[1]", RingSpec::witt())) ==
        "e[-1]^2*e[3] - 1/2*e[1]");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_witt("e[1] + * e[2]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_witt(""), ParseError);
  CHECK_THROWS_AS(parse_witt("e[1] e[2]"), ParseError);
  CHECK_THROWS_AS(parse_witt("e[1]^0"), ParseError);
  CHECK_THROWS_AS(parse_witt("1/0"), ParseError);
  CHECK_THROWS_AS(parse_witt("e1"), ParseError);
  CHECK_THROWS_AS(parse_witt("x"), ParseError);
}

TEST_CASE("context and index errors") {
  CHECK_THROWS_AS(parse_witt("t"), ContextError);
  CHECK_THROWS_AS(parse("e[0]", RingSpec::parse("t:3")), ContextError);
  CHECK_THROWS_AS(parse("v[0]", RingSpec::parse("t:inf")), ContextError);
  CHECK_THROWS_AS(parse("d", RingSpec::parse("s")), ContextError);
  CHECK_THROWS_AS(parse("v[5]", RingSpec::parse("t:2")), IndexError);
  CHECK_THROWS_AS(parse("v[2]", RingSpec::parse("grt:2")), IndexError);
  CHECK_THROWS_AS(parse_witt("e[-2]"), IndexError);
  CHECK_THROWS_AS(RingSpec::parse("t:x"), std::invalid_argument);
  CHECK_THROWS_AS(RingSpec::parse("w"), std::invalid_argument);
  for (const char* tag : {"uw", "t:3", "t:inf", "s", "grt:0", "grt:inf"})
    CHECK(RingSpec::parse(tag).tag() == tag);
}

TEST_CASE("printing is canonical and round-trips") {
  Sampler s(51);
  for (int trial = 0; trial < 100; ++trial) {
    WittElement x = s.witt_element(4, 3, 5);
    CHECK(parse_witt(print_canonical(x)) == x);
    TargetRing r = trial % 2 ? TargetRing::finite(3) : TargetRing::infinite();
    TargetElement y = s.target_element(r, 4, 3, 3, 5);
    CHECK(parse_target(print_canonical(y), r) == y);
    CommutativeElement z = s.graded_element(r, 3, 3, 3, 5);
    CHECK(parse_commutative(print_canonical(z), Alphabet::graded(r)) == z);
  }
  // Equal values built differently print identically.
  CHECK(print_canonical(parse_witt("e[1]*e[0]")) == print_canonical(parse_witt("e[0]*e[1] - e[1]")));
}

TEST_CASE("JSON export") {
  auto j = nlohmann::json::parse(export_json(parse("-1/2*t*d^2*v[1]^3 + 4", RingSpec::parse("t:2"))));
  CHECK(j["ring"] == "t:2");
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"] == "-1/2");
  CHECK(j["terms"][0]["monomial"] == nlohmann::json::parse(R"([["t",null,1],["d",null,2],["v",1,3]])"));
  CHECK(j["terms"][1]["coeff"] == "4");
  CHECK(j["terms"][1]["monomial"].empty());
  auto w = nlohmann::json::parse(export_json(parse_witt("e[-1]^2*e[3]")));
  CHECK(w["terms"][0]["monomial"] == nlohmann::json::parse(R"([["e",-1,2],["e",3,1]])"));
}
