#include <doctest.h>

#include "symknot/oracles/oracles.hpp"
#include "symknot/seifert.hpp"
#include "test_support.hpp"

using namespace symknot;

TEST_CASE("Burau oracle on small knots") {
  CHECK(to_string(oracle::burau_alexander(parse_braid("braid[2]{1,1,1}"))) == "t^-1 - 1 + t");
  CHECK(to_string(oracle::burau_alexander(parse_braid("braid[3]{1,-2,1,-2}"))) == "-t^-1 + 3 - t");
  CHECK(to_string(oracle::burau_alexander(parse_braid("braid[1]{}"))) == "1");
}

TEST_CASE("Goeritz oracle on small diagrams") {
  const Diagram t = parse_pd(testing::kTrefoilPd);
  CHECK(oracle::goeritz_determinant(t) == 3);
  CHECK(oracle::goeritz_determinant(connected_sum(t, mirror(t), 1, 1)) == 9);
  CHECK(oracle::goeritz_determinant(parse_pd("PD[]")) == 1);
  CHECK(oracle::goeritz_determinant(braid_closure(parse_braid("braid[2]{1,1}"))) == 2);
  CHECK(oracle::goeritz_determinant(braid_closure(parse_braid("braid[3]{1,-2,1,-2}"))) == 5);
}
