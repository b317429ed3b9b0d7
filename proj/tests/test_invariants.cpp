#include <doctest.h>

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <random>

#include "symknot/bracket.hpp"
#include "symknot/error.hpp"
#include "symknot/knot_data.hpp"
#include "symknot/oracles/oracles.hpp"
#include "symknot/seifert.hpp"
#include "symknot/signature.hpp"
#include "test_support.hpp"

using namespace symknot;

namespace {

const Registry& registry() {
  static const Registry r(load_knot_table(testing::data_dir() / "knots.csv").records);
  return r;
}

// Signature of the Hermitian form from floating eigenvalues; nullopt when an
// eigenvalue is too close to zero to decide.
std::optional<int> numeric_signature(const SeifertMatrix& v, double theta) {
  const int n = v.size();
  if (n == 0) return 0;
  const std::complex<double> w = std::polar(1.0, theta);
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) = (1.0 - w) * double(v.entries(i, j)) + (1.0 - std::conj(w)) * double(v.entries(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  int s = 0;
  for (int i = 0; i < n; ++i) {
    const double e = es.eigenvalues()(i);
    if (std::abs(e) < 1e-7) return std::nullopt;
    s += e > 0 ? 1 : -1;
  }
  return s;
}

}  // namespace

TEST_CASE("bracket basics") {
  CHECK(kauffman_bracket(parse_pd("PD[]")) == LaurentPoly(1));
  CHECK(kauffman_bracket(parse_pd("PD[] + O2")) == parse_laurent("-A^-2 - A^2", "A"));
  const Diagram t = parse_pd(testing::kTrefoilPd);
  CHECK(jones(t).str() == "t + t^3 - t^4");
  CHECK(jones(parse_pd("PD[]")).str() == "1");
  CHECK(jones(parse_pd("PD[X[1,1,2,2]]")).str() == "1");
  const JonesPoly hopf = jones(braid_closure(parse_braid("braid[2]{1,1}")));
  CHECK(hopf.half);
  CHECK(hopf.str() == "-t^(1/2) - t^(5/2)");
}

TEST_CASE("Jones of mirror and connected sum") {
  const Diagram t = parse_pd(testing::kTrefoilPd);
  const Diagram f = braid_closure(parse_braid("braid[3]{1,-2,1,-2}"));
  CHECK(jones(mirror(t)).poly == jones(t).poly.invert_variable());
  CHECK(jones(connected_sum(t, f, 1, 1)).poly == jones(t).poly * jones(f).poly);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Diagram a = braid_closure(testing::random_knot_braid(rng, 4, 1, 7));
    const Diagram b = braid_closure(testing::random_knot_braid(rng, 4, 1, 7));
    CHECK(jones(mirror(a)).poly == jones(a).poly.invert_variable());
    if (a.crossing_count() && b.crossing_count())
      CHECK(jones(connected_sum(a, b, 1, 1)).poly == jones(a).poly * jones(b).poly);
  }
}

TEST_CASE("transfer contraction matches the state sum") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    const Diagram d = braid_closure(testing::random_braid(rng, 5, 0, 10));
    const LaurentPoly ref = bracket_all_states_serial(d);
    CHECK(bracket_transfer(d) == ref);
    CHECK(bracket_all_states(d) == ref);
  }
  for (const auto& r : registry().records())
    if (r.pd && r.pd->crossing_count() <= 12) CHECK(bracket_transfer(*r.pd) == bracket_all_states(*r.pd));
}

TEST_CASE("bracket resource cap is reported") {
  const Diagram d = braid_closure(parse_braid("braid[5]{1,2,3,4,1,2,3,4,1,2,3,4,1,2,3,4}"));
  BracketOptions tiny;
  tiny.max_states = 2;
  try {
    bracket_transfer(d, tiny);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
}

TEST_CASE("registry PDs and braids agree") {
  for (const auto& r : registry().records()) {
    if (!r.pd) continue;
    CAPTURE(r.name);
    const Fingerprint a = fingerprint(*r.pd);
    const Fingerprint b = fingerprint(braid_closure(r.braid));
    CHECK(fingerprint_difference(a, b).empty());
    CHECK(oracle::goeritz_determinant(*r.pd) == a.determinant);
  }
}

TEST_CASE("Seifert matrices") {
  const SeifertMatrix t = seifert_matrix(parse_braid("braid[2]{1,1,1}"));
  CHECK(t.size() == 2);
  CHECK(determinant(t) == 3);
  CHECK(oracle::goeritz_determinant(parse_pd(testing::kTrefoilPd)) == 3);
  CHECK(to_string(alexander(t)) == "t^-1 - 1 + t");

  const SeifertMatrix f = seifert_matrix(parse_braid("braid[3]{1,-2,1,-2}"));
  CHECK(f.size() == 2);
  CHECK(to_string(alexander(f)) == "-t^-1 + 3 - t");

  const SeifertMatrix u = seifert_matrix(parse_braid("braid[1]{}"));
  CHECK(u.size() == 0);
  CHECK(alexander(u) == LaurentPoly(1));
  CHECK(determinant(u) == 1);

  CHECK(to_string(alexander(seifert_matrix(registry().lookup("8_20").braid))) ==
        to_string(parse_laurent("t^-1 - 1 + t").pow(2)));
  CHECK_THROWS_AS(seifert_matrix(parse_braid("braid[2]{1,1}")), Error);
}

TEST_CASE("Seifert invariants on random knots") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = testing::random_knot_braid(rng, 4, 1, 10);
    CAPTURE(serialize_braid(w));
    const SeifertMatrix v = seifert_matrix(w);
    CHECK(v.size() == static_cast<int>(w.letters.size()) - w.strands + 1);
    const LaurentPoly a = alexander(v);
    CHECK(a == a.invert_variable());
    CHECK(a.evaluate_unit(1) == 1);
    CHECK(a == oracle::burau_alexander(w));
    const Diagram d = braid_closure(w);
    CHECK(a == alexander(d));
    CHECK(determinant(v) == determinant(d));
    CHECK(determinant(v) == oracle::goeritz_determinant(d));
  }
}

TEST_CASE("block sums multiply Alexander polynomials") {
  const SeifertMatrix a = seifert_matrix(registry().lookup("3_1").braid);
  const SeifertMatrix b = seifert_matrix(registry().lookup("5_2").braid);
  CHECK(alexander(block_sum(a, b)) == alexander(a) * alexander(b));
  CHECK(block_sum(a, SeifertMatrix{}).entries == a.entries);
}

TEST_CASE("Levine-Tristram values") {
  const SeifertMatrix v = seifert_matrix(registry().lookup("8_20").braid);
  int nullity = -1;
  CHECK(lt_signature_at(v, UnitCirclePoint::from_angle(1, 3), &nullity) == 1);
  CHECK(nullity == 1);
  CHECK(lt_signature_at(v, UnitCirclePoint::from_angle(5, 3)) == 1);
  const SeifertMatrix t = seifert_matrix(parse_braid("braid[2]{1,1,1}"));
  CHECK(lt_signature_at(t, UnitCirclePoint::from_angle(1, 1)) == -2);
  CHECK(lt_signature_at(t, UnitCirclePoint::from_angle(1, 5)) == 0);
  const SeifertMatrix tt = block_sum(t, mirror(t));
  for (int k = 1; k < 40; ++k) CHECK(lt_signature_at(tt, UnitCirclePoint::from_angle(k, 20)) == 0);
  CHECK(lt_signature_at(SeifertMatrix{}, UnitCirclePoint::from_angle(1, 2)) == 0);
}

TEST_CASE("signatures agree with a floating-point eigenvalue count") {
  std::mt19937_64 rng(13);
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    const SeifertMatrix v = seifert_matrix(testing::random_knot_braid(rng, 4, 2, 12));
    const SignatureForm form(v);
    for (int k = 1; k < 24; ++k) {
      const auto num = numeric_signature(v, std::numbers::pi * k / 12.0);
      if (!num) continue;
      ++compared;
      CHECK(form.at(UnitCirclePoint::from_angle(k, 12)).signature == *num);
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("serial and parallel evaluation agree") {
  const SignatureForm form(seifert_matrix(registry().lookup("12n_553").braid));
  std::vector<UnitCirclePoint> pts;
  for (int k = 1; k < 100; ++k) pts.push_back(UnitCirclePoint::from_angle(k, 50));
  CHECK(signatures_at(form, pts) == signatures_at_serial(form, pts));
}

TEST_CASE("signature profile of 8_20") {
  const SignatureProfile p = signature_profile(seifert_matrix(registry().lookup("8_20").braid));
  REQUIRE(p.jumps.size() == 1);
  CHECK(p.jumps[0].point.label() == "1/3 pi");
  CHECK(p.jumps[0].value == 1);
  CHECK(p.jumps[0].multiplicity == 2);
  CHECK(p.max_abs() == 1);
  const auto recs = p.records();
  std::vector<std::string> jump_angles;
  for (const auto& r : recs)
    if (r.jump) jump_angles.push_back(r.angle);
  CHECK(jump_angles == std::vector<std::string>{"1/3 pi", "5/3 pi"});
  CHECK(p.argmax().angle == "1/3 pi");
  CHECK(p.argmax().jump);
}

TEST_CASE("signature profile basics") {
  const SignatureProfile u = signature_profile(SeifertMatrix{});
  CHECK(u.jumps.empty());
  CHECK(u.max_abs() == 0);
  const SignatureProfile t = signature_profile(seifert_matrix(parse_braid("braid[2]{1,1,1}")));
  CHECK(t.max_abs() == 2);
  CHECK(t.value_at(UnitCirclePoint::from_angle(1, 1)) == -2);
  CHECK(t.serialize().find("{angle: \"1/3 pi\", kind: jump, sigma: -1, multiplicity: 1}") != std::string::npos);
}

TEST_CASE("N copies of 8_20 scale the jump value") {
  const SeifertMatrix v = seifert_matrix(registry().lookup("8_20").braid);
  SeifertMatrix sum = v;
  for (int n = 2; n <= 4; ++n) {
    sum = block_sum(sum, v);
    const SignatureProfile p = signature_profile(sum);
    CHECK(p.value_at(UnitCirclePoint::from_angle(1, 3)) == n);
    CHECK(p.max_abs() == n);
  }
}

TEST_CASE("profile structure on the registry") {
  for (const auto& r : registry().records()) {
    CAPTURE(r.name);
    const SeifertMatrix v = seifert_matrix(r.braid);
    const SignatureProfile p = signature_profile(v);
    const auto recs = p.records();
    // Records run around the full circle; the second half mirrors the first.
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& a = recs[i];
      const auto& b = recs[recs.size() - 1 - i];
      CHECK(a.sigma == b.sigma);
      CHECK(a.jump == b.jump);
    }
    for (const auto& j : p.jumps) {
      CHECK(std::abs(j.value - j.left) <= j.multiplicity);
      CHECK(std::abs(j.value - j.right) <= j.multiplicity);
      CHECK(p.value_at(j.point.conjugate()) == j.value);
    }
    std::vector<ProfileRecord> neg = recs;
    for (auto& x : neg) x.sigma = -x.sigma;
    CHECK(signature_profile(mirror(v)).records() == neg);
    // Mirror through the braid word as well.
    CHECK(signature_profile(seifert_matrix(mirror(r.braid))).records() == neg);
  }
}

TEST_CASE("nullity against root multiplicity") {
  // Nullity never exceeds the multiplicity but can be smaller: 8_20 has a
  // double root at 1/3 pi where the form has nullity 1.
  int equal = 0, smaller = 0;
  for (const auto& r : registry().records()) {
    const SignatureProfile p = signature_profile(seifert_matrix(r.braid));
    for (const auto& j : p.jumps) {
      CHECK(j.nullity >= 1);
      CHECK(j.nullity <= j.multiplicity);
      (j.nullity == j.multiplicity ? equal : smaller)++;
    }
  }
  CHECK(equal > 0);
  const SignatureProfile p = signature_profile(seifert_matrix(registry().lookup("8_20").braid));
  CHECK(p.jumps[0].multiplicity == 2);
  CHECK(p.jumps[0].nullity == 1);
  CHECK(smaller >= 1);
}

TEST_CASE("profile additivity on pairs") {
  const auto& recs = registry().records();
  for (std::size_t i = 0; i < recs.size(); i += 2)
    for (std::size_t k = 1; k < recs.size(); k += 3) {
      const SeifertMatrix a = seifert_matrix(recs[i].braid), b = seifert_matrix(recs[k].braid);
      const SignatureProfile pa = signature_profile(a), pb = signature_profile(b);
      const SignatureProfile ps = signature_profile(block_sum(a, b));
      for (const SignatureProfile* p : {&pa, &pb, &ps})
        for (const auto& j : p->jumps)
          CHECK(ps.value_at(j.point) == pa.value_at(j.point) + pb.value_at(j.point));
      for (int q = 1; q < 30; ++q) {
        const auto pt = UnitCirclePoint::from_angle(q, 15);
        CHECK(ps.value_at(pt) == pa.value_at(pt) + pb.value_at(pt));
      }
    }
}
