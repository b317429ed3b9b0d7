#include <doctest.h>

#include <algorithm>

#include "symknot/bounds.hpp"
#include "symknot/error.hpp"
#include "symknot/pipeline.hpp"
#include "test_support.hpp"

using namespace symknot;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kIo;
}

const DataSet& shipped() {
  static const DataSet d = load_data(testing::data_dir());
  return d;
}

SignatureProfile profile_of(const std::string& name) {
  return signature_profile(seifert_matrix(shipped().registry.lookup(name).braid));
}

SymUnionSpec no_twist_spec(const Diagram& base) {
  SymUnionSpec s;
  s.base = base;
  s.marks = {1};
  s.name = "nt";
  return s;
}

}  // namespace

TEST_CASE("signature lower bounds") {
  const BoundCert u = sig_lower_gds("unknot", signature_profile(seifert_matrix(parse_braid("braid[1]{}"))));
  CHECK(u.value == 0);
  const BoundCert c = sig_lower_gds("8_20", profile_of("8_20"));
  CHECK(c.value == 1);
  CHECK(c.evidence_value("angle") == "1/3 pi");
  CHECK(c.evidence_value("point") == "jump");
  CHECK(c.quantity == Quantity::kGds);
  CHECK(c.kind == BoundKind::kLower);
  check_cert(c);
  const BoundCert g = classical_g4_lower("3_1", profile_of("3_1"));
  CHECK(g.value == 2);
  CHECK(g.evidence_value("point") == "arc");
}

TEST_CASE("N-fold block sums scale the signature bound") {
  const SeifertMatrix v = seifert_matrix(shipped().registry.lookup("8_20").braid);
  SeifertMatrix sum = v;
  for (int n = 1; n <= 4; ++n) {
    if (n > 1) sum = block_sum(sum, v);
    CHECK(sig_lower_gds("x", signature_profile(sum)).value == n);
  }
}

TEST_CASE("derived certificates cite their parents") {
  const BoundCert lo = sig_lower_gds("8_20", profile_of("8_20"));
  const BoundCert tw_lo = tw_lower_from_gds(lo);
  CHECK(tw_lo.quantity == Quantity::kTw);
  CHECK(tw_lo.value == 1);
  CHECK(tw_lo.parents == std::vector<std::string>{lo.id});
  CHECK(tw_lo.rule == Rule::kTwBoundsGds);

  const PresentationRecord& p = *shipped().presentations_of("8_20").front();
  const BoundCert tw_up = tw_upper_from_spec("8_20", p.spec, p.fingerprint);
  CHECK(tw_up.value == 1);
  CHECK(tw_up.rule == Rule::kTwistRegions);
  const BoundCert gds_up = gds_upper_from_tw(tw_up);
  CHECK(gds_up.value == 1);
  CHECK(gds_up.parents == std::vector<std::string>{tw_up.id});
  const BoundCert g4 = g4x2_upper_from_gds(gds_up);
  CHECK(g4.quantity == Quantity::kG4x2);
  CHECK(g4.rule == Rule::kClassicalG4);
  const BoundCert band = gds_upper_from_band_moves("8_20", p.spec);
  CHECK(band.value == 1);
  CHECK(band.evidence_value("witness") == "infinity-resolution");
  CHECK(band.evidence_value("reference") == spec_hash(p.spec));

  CHECK(kind_of([&] { tw_lower_from_gds(gds_up); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { gds_upper_from_tw(lo); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { gds_upper_from_band_moves("k", -1, {WitnessKind::kAsserted, "x"}); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { gds_upper_from_band_moves("k", 1, {WitnessKind::kAsserted, ""}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("the two gds upper bounds agree on random specs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 80; ++i) {
    const Diagram base = braid_closure(testing::random_knot_braid(rng, 4, 2, 7));
    SymUnionSpec s = testing::random_spec(rng, base);
    s.twists.insert(s.twists.begin(), s.mu - 1, -1);
    s.mu = 1;
    s.name = "r";
    const Fingerprint fp = fingerprint(build(s));
    const BoundCert a = gds_upper_from_tw(tw_upper_from_spec("r", s, fp));
    const BoundCert b = gds_upper_from_band_moves("r", s);
    CHECK(a.value == b.value);
    CHECK(a.value == twist_region_count(s));
  }
}

TEST_CASE("unknot report from a no-twist spec") {
  SymUnionSpec s = no_twist_spec(parse_pd("PD[]"));
  const Fingerprint fp = fingerprint(build(s));
  std::vector<BoundCert> certs;
  const BoundCert lo = sig_lower_gds("u", signature_profile(seifert_matrix(parse_braid("braid[1]{}"))));
  certs.push_back(lo);
  certs.push_back(tw_lower_from_gds(lo));
  const BoundCert tw = tw_upper_from_spec("u", s, fp);
  certs.push_back(tw);
  certs.push_back(gds_upper_from_tw(tw));
  const BoundReport r = compile_report("u", certs);
  CHECK(r.interval(Quantity::kGds).str() == "[0, 0]");
  CHECK(r.interval(Quantity::kTw).str() == "[0, 0]");
  CHECK(r.interval(Quantity::kG4x2).str() == "[0, inf]");
  CHECK_FALSE(r.contradiction);

  const BoundReport only_lower = compile_report("u", {lo});
  CHECK(only_lower.interval(Quantity::kTw).str() == "[0, inf]");
  CHECK_FALSE(only_lower.interval(Quantity::kGds).determined());
}

TEST_CASE("report compilation") {
  const BoundCert lo = sig_lower_gds("8_20", profile_of("8_20"));
  const BoundCert tw_lo = tw_lower_from_gds(lo);
  CHECK(kind_of([&] { compile_report("3_1", {lo}); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { compile_report("8_20", {tw_lo}); }) == ErrorKind::kSchema);

  const BoundReport r = compile_report("8_20", {tw_lo, lo, lo});
  REQUIRE(r.certs.size() == 2);
  CHECK(r.certs[0].id == "c1");
  CHECK(r.certs[0].rule == Rule::kSignature);
  CHECK(r.certs[1].id == "c2");
  CHECK(r.certs[1].parents == std::vector<std::string>{"c1"});
  CHECK(r.certs[1].evidence_value("from") == "c1");
  for (const BoundCert& c : r.certs)
    for (const std::string& p : c.parents) {
      const auto it = std::find_if(r.certs.begin(), r.certs.end(), [&](const auto& x) { return x.id == p; });
      REQUIRE(it != r.certs.end());
      CHECK(it - r.certs.begin() < &c - r.certs.data());
    }

  BoundCert wrong_parent = tw_lo;
  wrong_parent.value = 2;
  CHECK(kind_of([&] { compile_report("8_20", {lo, wrong_parent}); }) == ErrorKind::kSchema);
}

TEST_CASE("check_cert rejects malformed certificates") {
  BoundCert c = sig_lower_gds("k", profile_of("3_1"));
  check_cert(c);
  BoundCert missing = c;
  missing.evidence.pop_back();
  CHECK(kind_of([&] { check_cert(missing); }) == ErrorKind::kSchema);
  BoundCert upper = c;
  upper.kind = BoundKind::kUpper;
  CHECK(kind_of([&] { check_cert(upper); }) == ErrorKind::kSchema);
  BoundCert with_parent = c;
  with_parent.parents = {"x"};
  CHECK(kind_of([&] { check_cert(with_parent); }) == ErrorKind::kSchema);
  BoundCert prime = prime_tw_lower("8_20");
  check_cert(prime);
  prime.value = 2;
  CHECK(kind_of([&] { check_cert(prime); }) == ErrorKind::kSchema);
  CHECK(kind_of([&] { prime_tw_lower("3_1#3_1"); }) == ErrorKind::kInvalidArgument);
  CHECK(is_prime_table_name("12n_553"));
  CHECK(is_prime_table_name("10a_7"));
  CHECK_FALSE(is_prime_table_name("3_1#-3_1"));
  CHECK_FALSE(is_prime_table_name("unknot"));
}

TEST_CASE("adding certificates only narrows intervals") {
  std::vector<BoundCert> pool;
  const BoundCert lo = sig_lower_gds("8_20", profile_of("8_20"));
  pool.push_back(lo);
  pool.push_back(classical_g4_lower("8_20", profile_of("8_20")));
  pool.push_back(tw_lower_from_gds(lo));
  pool.push_back(prime_tw_lower("8_20"));
  const PresentationRecord& p = *shipped().presentations_of("8_20").front();
  const BoundCert tw = tw_upper_from_spec("8_20", p.spec, p.fingerprint);
  pool.push_back(tw);
  const BoundCert gup = gds_upper_from_tw(tw);
  pool.push_back(gup);
  pool.push_back(g4x2_upper_from_gds(gup));
  pool.push_back(gds_upper_from_band_moves("8_20", p.spec));

  std::vector<BoundCert> acc;
  BoundReport prev = compile_report("8_20", acc);
  for (const BoundCert& c : pool) {
    acc.push_back(c);
    const BoundReport next = compile_report("8_20", acc);
    for (Quantity q : {Quantity::kGds, Quantity::kTw, Quantity::kG4x2}) {
      const Interval& a = prev.interval(q);
      const Interval& b = next.interval(q);
      CHECK(b.lower >= a.lower);
      if (a.upper) CHECK((b.upper && *b.upper <= *a.upper));
    }
    prev = next;
  }
  CHECK(prev.interval(Quantity::kGds).determined());
  CHECK(prev.interval(Quantity::kTw).determined());
  CHECK(prev.interval(Quantity::kG4x2).str() == "[0, 1]");
}

TEST_CASE("contradictions are flagged") {
  const BoundCert lo = sig_lower_gds("3_1", profile_of("3_1"));
  const BoundCert up = gds_upper_from_band_moves("3_1", 1, {WitnessKind::kAsserted, "made-up"});
  const BoundReport r = compile_report("3_1", {lo, up});
  CHECK(r.contradiction);
  CHECK(r.interval(Quantity::kGds).contradictory());
  CHECK(r.text().find("contradict") != std::string::npos);
}

TEST_CASE("shipped knot reports") {
  BoundsRequest req;
  req.knot = "8_20";
  const BoundReport r = knot_bounds(shipped(), req);
  CHECK(r.interval(Quantity::kGds).str() == "[1, 1]");
  CHECK(r.interval(Quantity::kTw).str() == "[1, 1]");
  CHECK_FALSE(r.contradiction);

  for (const char* k : {"12n_553", "12n_556"}) {
    CAPTURE(k);
    req.knot = k;
    const BoundReport s = knot_bounds(shipped(), req);
    CHECK(s.interval(Quantity::kGds).str() == "[1, 1]");
    CHECK(s.interval(Quantity::kTw).str() == "[1, 1]");
    CHECK(std::any_of(s.certs.begin(), s.certs.end(), [](const auto& c) { return c.rule == Rule::kExternal; }));
  }

  req.knot = "3_1#-3_1";
  const BoundReport z = knot_bounds(shipped(), req);
  CHECK(z.interval(Quantity::kGds).str() == "[0, 0]");
  CHECK(z.interval(Quantity::kTw).str() == "[0, 0]");

  req.knot = "4_1";
  const BoundReport f = knot_bounds(shipped(), req);
  CHECK(f.interval(Quantity::kGds).str() == "[0, inf]");
  CHECK(f.interval(Quantity::kTw).str() == "[1, inf]");

  req.knot = "9_999";
  CHECK(kind_of([&] { knot_bounds(shipped(), req); }) == ErrorKind::kUnknownName);
}

TEST_CASE("connected powers") {
  const KnotRecord& rec = shipped().registry.lookup("8_20");
  const SymUnionSpec& spec = shipped().presentations_of("8_20").front()->spec;
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const BoundReport r = scale_connected_sum(ScaleInputs{&rec, &spec, {}, true}, n);
    CHECK(r.knot == connected_power_name("8_20", n));
    CHECK(r.interval(Quantity::kGds).lower == n);
    CHECK(r.interval(Quantity::kGds).determined());
    CHECK(r.interval(Quantity::kTw).determined());
  }
  CHECK(connected_power_name("8_20", 1) == "8_20");
  CHECK(connected_power_name("8_20", 3) == "#^3(8_20)");

  const KnotRecord& z = shipped().registry.lookup("3_1#-3_1");
  const SymUnionSpec& zs = shipped().presentations_of("3_1#-3_1").front()->spec;
  for (int n = 1; n <= 3; ++n) {
    const BoundReport r = scale_connected_sum(ScaleInputs{&z, &zs, {}, true}, n);
    CHECK(r.interval(Quantity::kGds).str() == "[0, 0]");
  }
  CHECK(kind_of([&] { scale_connected_sum(ScaleInputs{&rec, &spec, {}, true}, 0); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("json output is deterministic") {
  BoundsRequest req;
  req.knot = "12n_553";
  const std::string a = knot_bounds(shipped(), req).json();
  const std::string b = knot_bounds(load_data(testing::data_dir()), req).json();
  CHECK(a == b);
  CHECK(a.find("\"contradiction\": false") != std::string::npos);
  CHECK(a.find("\"rule\": \"external\"") != std::string::npos);
}
