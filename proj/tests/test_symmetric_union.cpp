#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "symknot/bracket.hpp"
#include "symknot/error.hpp"
#include "symknot/knot_data.hpp"
#include "symknot/seifert.hpp"
#include "symknot/symmetric_union.hpp"
#include "test_support.hpp"

using namespace symknot;

namespace {

SymUnionSpec trefoil_spec(std::vector<int> marks, int mu, std::vector<int> twists,
                          AxisSide side = AxisSide::kAuto) {
  SymUnionSpec s;
  s.base = parse_pd(testing::kTrefoilPd);
  s.marks = std::move(marks);
  s.mu = mu;
  s.twists = std::move(twists);
  s.side = side;
  s.name = "t";
  return s;
}

SymUnionSpec shipped(const std::string& file) {
  return parse_spec(read_text_file(testing::data_dir() / "presentations" / file));
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kIo;
}

}  // namespace

TEST_CASE("no twist regions gives J # -J") {
  const SymUnionSpec s = trefoil_spec({1}, 1, {});
  const Diagram d = build(s);
  CHECK(validate(d).ok());
  CHECK(component_count(d) == 1);
  CHECK(d.crossing_count() == 6);
  const Diagram t = parse_pd(testing::kTrefoilPd);
  const Fingerprint expected = fingerprint(connected_sum(t, mirror(t), 1, 1));
  CHECK(fingerprint_difference(fingerprint(d), expected).empty());
  CHECK(expected.determinant == 9);
  CHECK(twist_region_count(s) == 0);
  CHECK(serialize_pd(infinity_resolution(s)) == serialize_pd(d));
}

TEST_CASE("two infinity tangles give two components") {
  const SymUnionSpec s = trefoil_spec({1, 3}, 2, {}, AxisSide::kRight);
  const Diagram d = build(s);
  CHECK(validate(d).ok());
  CHECK(component_count(d) == 2);
}

TEST_CASE("one-twist presentation of 8_20") {
  const SymUnionSpec s = shipped("su_8_20.su");
  CHECK(twist_region_count(s) == 1);
  const Diagram d = build(s);
  CHECK(component_count(d) == 1);
  CHECK(d.crossing_count() == 8);
  const Registry reg(load_knot_table(testing::data_dir() / "knots.csv").records);
  CHECK(jones(d).poly == jones(braid_closure(reg.lookup("8_20").braid)).poly);

  CHECK(component_count(infinity_resolution(s)) == 2);
  const SymUnionSpec banded = band_move(s, TwistRegionRef{1});
  CHECK(banded.mu == 2);
  CHECK(banded.twists.empty());
  CHECK(component_count(build(banded)) == 2);
  CHECK(equivalent(banded, [&] {
    SymUnionSpec r = s;
    r.mu = 2;
    r.twists.clear();
    return r;
  }()));
}

TEST_CASE("band moves and resolutions on random specs") {
  std::mt19937_64 rng(21);
  int with_twists = 0;
  for (int i = 0; i < 150; ++i) {
    const Diagram base = braid_closure(testing::random_knot_braid(rng, 4, 2, 7));
    const SymUnionSpec s = testing::random_spec(rng, base);
    CAPTURE(serialize_spec(s));
    const int l = twist_region_count(s);
    with_twists += l > 0;
    const Diagram d = build(s);
    CHECK(validate(d).ok());
    CHECK(component_count(d) == s.mu);
    CHECK(component_count(infinity_resolution(s)) == s.mu + l);
    SymUnionSpec cur = s;
    for (int k = 1; k <= l; ++k) {
      const int before = component_count(build(cur));
      cur = band_move(cur, TwistRegionRef{testing::uniform(rng, 1, twist_region_count(cur))});
      CHECK(component_count(build(cur)) == before + 1);
    }
    SymUnionSpec all = s;
    all.mu = static_cast<int>(s.marks.size());
    all.twists.clear();
    CHECK(equivalent(cur, all));
    if (s.mu + l <= 3)
      CHECK(label_isomorphic(build(cur), infinity_resolution(s)));
    else
      CHECK(jones(build(cur)) == jones(infinity_resolution(s)));
  }
  CHECK(with_twists > 30);
}

TEST_CASE("band moves on distinct regions commute") {
  std::mt19937_64 rng(22);
  int tried = 0;
  while (tried < 30) {
    const Diagram base = braid_closure(testing::random_knot_braid(rng, 4, 3, 7));
    const SymUnionSpec s = testing::random_spec(rng, base);
    if (twist_region_count(s) < 2) continue;
    ++tried;
    const SymUnionSpec a = band_move(band_move(s, TwistRegionRef{1}), TwistRegionRef{1});
    const SymUnionSpec b = band_move(band_move(s, TwistRegionRef{2}), TwistRegionRef{1});
    CHECK(equivalent(a, b));
  }
}

TEST_CASE("determinant of a knotted symmetric union is a square") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const Diagram base = braid_closure(testing::random_knot_braid(rng, 4, 2, 7));
    SymUnionSpec s = testing::random_spec(rng, base);
    s.twists.insert(s.twists.begin(), s.mu - 1, 1);
    s.mu = 1;
    const Diagram d = build(s);
    REQUIRE(component_count(d) == 1);
    const BigInt db = determinant(base);
    CHECK(determinant(d) == db * db);
    ++checked;
  }
  CHECK(checked == 150);
}

TEST_CASE("mark order does not matter") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 60; ++i) {
    const Diagram base = braid_closure(testing::random_knot_braid(rng, 4, 2, 7));
    const SymUnionSpec s = testing::random_spec(rng, base);
    SymUnionSpec r = s;
    std::shuffle(r.marks.begin(), r.marks.begin() + r.mu, rng);
    std::vector<int> idx(r.twists.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      r.marks[r.mu + k] = s.marks[s.mu + idx[k]];
      r.twists[k] = s.twists[idx[k]];
    }
    CHECK(equivalent(s, r));
    CHECK(spec_hash(s) == spec_hash(r));
    const Diagram a = build(s), b = build(r);
    CHECK(jones(a) == jones(b));
    if (s.mu == 1) CHECK(alexander(a) == alexander(b));
  }
}

TEST_CASE("spec validation") {
  CHECK(kind_of([] { build(trefoil_spec({1, 1}, 1, {2})); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { build(trefoil_spec({9}, 1, {})); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { build(trefoil_spec({1, 3}, 1, {0})); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { build(trefoil_spec({1, 3}, 1, {})); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { build(trefoil_spec({1, 3}, 3, {})); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { build(trefoil_spec({}, 1, {})); }) == ErrorKind::kInvalidArgument);
  SymUnionSpec link = trefoil_spec({1}, 1, {});
  link.base = braid_closure(parse_braid("braid[2]{1,1}"));
  CHECK(kind_of([&] { build(link); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { band_move(trefoil_spec({1, 3}, 1, {2}, AxisSide::kRight), TwistRegionRef{2}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("marks on no common face are not planar") {
  CHECK(kind_of([] { build(trefoil_spec({1, 2}, 2, {})); }) == ErrorKind::kNonPlanar);
}

TEST_CASE("unknot base") {
  SymUnionSpec s;
  s.base = parse_pd("PD[]");
  s.marks = {1};
  const Diagram d = build(s);
  CHECK(component_count(d) == 1);
  CHECK(d.crossing_count() == 0);
  CHECK(twist_region_count(s) == 0);
}

TEST_CASE("axis connected sums") {
  const SymUnionSpec a = trefoil_spec({1}, 1, {});
  const SymUnionSpec b = shipped("su_8_20.su");
  const SymUnionSpec ab = axis_connected_sum(a, a);
  CHECK(twist_region_count(ab) == 0);
  CHECK(validate(build(ab)).ok());
  CHECK(component_count(build(ab)) == 1);
  const Fingerprint f = fingerprint(build(ab));
  const Fingerprint t = fingerprint(build(a));
  CHECK(f.jones == t.jones * t.jones);
  CHECK(f.determinant == 81);

  const SymUnionSpec bb = axis_power(b, 2);
  CHECK(twist_region_count(bb) == 2);
  const Diagram d = build(bb);
  CHECK(validate(d).ok());
  CHECK(component_count(d) == 1);
  const JonesPoly j1 = jones(build(b));
  CHECK(jones(d).poly == j1.poly * j1.poly);
  CHECK(component_count(infinity_resolution(bb)) == 3);
  CHECK(twist_region_count(axis_connected_sum(bb, b)) == 3);

  CHECK(kind_of([&] { axis_connected_sum(band_move(b, TwistRegionRef{1}), a); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("spec text format") {
  const std::string text = R"(# comment line
SU {
  name: "demo";   # trailing comment
  base: PD[X[1,5,2,4],
           X[3,1,4,6],X[5,3,6,2]];
  marks: [1, 3];
  mu: 1;
  twists: [-2];
  side: right;
}
)";
  const SymUnionSpec s = parse_spec(text);
  CHECK(s.name == "demo");
  CHECK(s.marks == std::vector<int>{1, 3});
  CHECK(s.twists == std::vector<int>{-2});
  CHECK(s.side == AxisSide::kRight);
  const SymUnionSpec back = parse_spec(serialize_spec(s));
  CHECK(equivalent(back, s));
  CHECK(serialize_spec(back) == serialize_spec(s));

  CHECK(kind_of([] { parse_spec("SU { base: PD[]; marks: [1]; colour: red; }"); }) == ErrorKind::kSyntax);
  CHECK(kind_of([] { parse_spec("SU { base: PD[]; }"); }) == ErrorKind::kSyntax);
  CHECK(kind_of([] { parse_spec("SU { base: PD[]; marks: [1]; mu: 1; mu: 1; }"); }) == ErrorKind::kSyntax);
  CHECK(kind_of([] { parse_spec("SU { base: PD[]; marks: [1] "); }) == ErrorKind::kSyntax);
  CHECK(kind_of([] { parse_spec(""); }) == ErrorKind::kSyntax);
  try {
    parse_spec("SU {\n base: PD[];\n marks: [1];\n bogus: 1;\n}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  const auto blocks = parse_spec_blocks(read_text_file(testing::data_dir() / "presentations" / "su_8_20.su"));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].extra.at("target") == "8_20");
}

TEST_CASE("spec hashes") {
  const SymUnionSpec s = shipped("su_8_20.su");
  CHECK(spec_hash(s).size() == 16);
  CHECK(spec_hash(s) == spec_hash(parse_spec(serialize_spec(s))));
  SymUnionSpec other = s;
  other.twists = {2};
  CHECK(spec_hash(other) != spec_hash(s));
}
