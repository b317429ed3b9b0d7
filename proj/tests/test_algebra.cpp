#include <doctest.h>

#include <random>

#include "symknot/algebra.hpp"
#include "symknot/error.hpp"
#include "symknot/laurent.hpp"
#include "symknot/signature.hpp"

using namespace symknot;

TEST_CASE("Laurent text round trip") {
  for (const char* s : {"0", "1", "-1", "t", "t^-1 - 1 + t", "3t^-2 - 2t^-1 + 1",
                        "-t^-5 + t^-4 - t^-3 + 2t^-2 - t^-1 + 2 - t", "12345678901234567890t^7"}) {
    CAPTURE(s);
    CHECK(to_string(parse_laurent(s)) == s);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p;
    const int terms = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int k = 0; k < terms; ++k)
      p.add_term(std::uniform_int_distribution<int>(-8, 8)(rng), std::uniform_int_distribution<int>(-9, 9)(rng));
    CHECK(parse_laurent(to_string(p)) == p);
    CHECK(parse_laurent(to_string(p, "t", true), "t", true) == p);
  }
}

TEST_CASE("Laurent parsing accepts table spellings") {
  CHECK(parse_laurent("t^(-2)-t^(-1)+ 1") == parse_laurent("t^-2 - t^-1 + 1"));
  CHECK(parse_laurent("2*t^3 - t") == parse_laurent("-t + 2t^3"));
  const LaurentPoly h = parse_laurent("-t^(1/2) - t^(5/2)", "t", true);
  CHECK(h.coeff(1) == -1);
  CHECK(h.coeff(5) == -1);
  CHECK(to_string(h, "t", true) == "-t^(1/2) - t^(5/2)");
  for (const char* bad : {"t^^2", "2 +", "t^(1/2)", "x + 1", "1..2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_laurent(bad), Error);
  }
}

TEST_CASE("Laurent arithmetic") {
  const LaurentPoly d = parse_laurent("t^-1 - 1 + t");
  CHECK(to_string(d.pow(2)) == "t^-2 - 2t^-1 + 3 - 2t + t^2");
  CHECK(d.pow(2).divide_exact(d) == d);
  CHECK_THROWS_AS(d.divide_exact(parse_laurent("t + 2")), Error);
  CHECK(d.invert_variable() == d);
  CHECK(parse_laurent("t + t^3 - t^4").invert_variable() == parse_laurent("-t^-4 + t^-3 + t^-1"));
  CHECK(d.evaluate_unit(-1) == -3);
  CHECK(d.scale_exponents(2) == parse_laurent("t^-2 - 1 + t^2"));
  CHECK((d - d).is_zero());
  CHECK(LaurentPoly(1).pow(0) == LaurentPoly(1));
}

TEST_CASE("rational comparison against an isolated root") {
  // 4x^2 - 2x - 1 has roots (1 -+ sqrt 5) / 4, about -0.309 and 0.809.
  const UPoly p({-1, -2, 4});
  const auto roots = real_roots(p, -1, 1);
  REQUIRE(roots.size() == 2);
  const AlgebraicReal& big = roots[1];
  CHECK(big.compare(Rational(1, 2)) > 0);
  CHECK(big.compare(Rational(9, 10)) < 0);
  CHECK(big.compare(Rational(4, 5)) > 0);
  CHECK(roots[0].compare(Rational(-3, 10)) < 0);
  CHECK(roots[0].compare(Rational(-1, 3)) > 0);
  CHECK(compare(AlgebraicReal::from_rational(Rational(1, 2)), big) < 0);
  CHECK(compare(big, AlgebraicReal::from_rational(Rational(1, 2))) > 0);
  CHECK(compare(roots[0], big) < 0);
  CHECK(compare(big, big) == 0);
}

TEST_CASE("root isolation and squarefree parts") {
  // (2x - 1)^2 (4x^2 - 2x - 1)
  const UPoly p = UPoly({-1, 2}) * UPoly({-1, 2}) * UPoly({-1, -2, 4});
  const auto f = squarefree_factors(p);
  REQUIRE(f.size() == 2);
  CHECK(f[0].degree() == 2);
  CHECK(f[1].degree() == 1);
  const auto r = real_roots(f[1], -1, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].is_rational());
  CHECK(r[0].value() == Rational(1, 2));
  const AlgebraicReal fine = real_roots(f[0], 0, 1)[0].refined(Rational(1, 1000000));
  CHECK(fine.hi() - fine.lo() <= Rational(1, 1000000));
  CHECK(fine.approx() == doctest::Approx(0.80901699));
  CHECK(fine.sign_of(f[0]) == 0);
  CHECK(fine.sign_of(UPoly({-1, 2})) > 0);
}

TEST_CASE("cosine substitution of symmetric polynomials") {
  // t^-1 - 1 + t = 2x - 1 with x = cos theta.
  const UPoly p = symmetric_to_cosine(parse_laurent("t^-1 - 1 + t"));
  CHECK(p.degree() == 1);
  CHECK(p.sign_at(Rational(1, 2)) == 0);
  const UPoly q = symmetric_to_cosine(parse_laurent("t^-2 - t^-1 + 1 - t + t^2"));
  CHECK(q.degree() == 2);
  CHECK(q.sign_at(Rational(1, 2)) != 0);
}

TEST_CASE("unit circle points") {
  const UnitCirclePoint a = UnitCirclePoint::from_angle(1, 3);
  CHECK(a.label() == "1/3 pi");
  CHECK(a.conjugate().label() == "5/3 pi");
  CHECK(a.angle_approx() == doctest::Approx(1.0 / 3));
  CHECK(a.cosine().is_rational());
  CHECK(a.cosine().value() == Rational(1, 2));
  CHECK(UnitCirclePoint::from_angle(1, 1).cosine().value() == -1);
  CHECK_THROWS_AS(UnitCirclePoint::from_angle(0, 1), Error);
  CHECK_THROWS_AS(UnitCirclePoint::from_angle(2, 1), Error);
  CHECK_THROWS_AS(UnitCirclePoint::from_angle(7, 3), Error);
  const UnitCirclePoint b = UnitCirclePoint::from_angle(1, 5);
  CHECK(b.angle_approx() == doctest::Approx(0.2));
  CHECK(compare(b.cosine(), a.cosine()) > 0);
}
