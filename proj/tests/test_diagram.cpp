#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "symknot/diagram.hpp"
#include "symknot/error.hpp"
#include "symknot/knot_data.hpp"
#include "symknot/strand_graph.hpp"
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

std::map<std::string, std::vector<std::string>> read_trace(const std::string& file) {
  std::ifstream in(testing::fixture_dir() / file);
  std::map<std::string, std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key, rest, word;
    ls >> key;
    while (ls >> word) rest += (rest.empty() ? "" : " ") + word;
    out[key].push_back(rest);
  }
  return out;
}

int face_count(const Diagram& d) {
  int n = 0;
  StrandGraph::from_diagram(d).faces(&n);
  return n;
}

}  // namespace

TEST_CASE("trefoil PD agrees with the hand trace") {
  auto trace = read_trace("trefoil_trace.txt");
  const Diagram d = parse_pd(trace["pd"][0]);
  CHECK(d.crossing_count() == 3);
  CHECK(d.edge_count() == std::stoi(trace["edges"][0]));
  CHECK(component_count(d) == std::stoi(trace["components"][0]));
  CHECK(validate(d).ok());

  std::vector<int> out_slot, in_slot;
  REQUIRE(orient_labels(d, out_slot, in_slot, nullptr));
  for (const std::string& e : trace["edge"]) {
    std::istringstream es(e);
    int label, from, to;
    es >> label >> from >> to;
    CAPTURE(label);
    CHECK(StrandGraph::crossing_of(out_slot[label]) + 1 == from);
    CHECK(StrandGraph::crossing_of(in_slot[label]) + 1 == to);
  }
  std::istringstream signs(trace["signs"][0]);
  for (int i = 0; i < 3; ++i) {
    int s;
    signs >> s;
    CHECK(crossing_sign(d, i) == s);
  }
  CHECK(writhe(d) == std::stoi(trace["writhe"][0]));
  CHECK(face_count(d) == std::stoi(trace["faces"][0]));
}

TEST_CASE("virtual trefoil fails the Euler check") {
  auto trace = read_trace("virtual_trefoil.txt");
  const Diagram d = parse_pd(trace["pd"][0]);
  CHECK(component_count(d) == 1);
  CHECK(face_count(d) == std::stoi(trace["faces"][0]));
  const ValidationReport r = validate(d);
  CHECK_FALSE(r.ok());
  CHECK(r.has("euler-formula"));
}

TEST_CASE("PD parsing edge cases") {
  SUBCASE("empty PD is the unknot") {
    const Diagram d = parse_pd("PD[]");
    CHECK(d.crossing_count() == 0);
    CHECK(component_count(d) == 1);
    CHECK(validate(d).ok());
    const Diagram two = parse_pd("PD[] + O2");
    CHECK(component_count(two) == 2);
  }
  SUBCASE("one-crossing kink has consistent labels") {
    Diagram d;
    CHECK_NOTHROW(d = parse_pd("PD[X[1,1,2,2]]"));
    CHECK(validate(d).ok());
    CHECK(writhe(d) == 1);
  }
  SUBCASE("a label used once") {
    CHECK(kind_of([] { parse_pd("PD[X[1,2,3,4],X[2,1,4,5]]"); }) == ErrorKind::kLabelConsistency);
    Diagram raw;
    raw.crossings = {{1, 2, 3, 4}, {2, 1, 4, 5}};
    CHECK(validate(raw).has("label-range"));
  }
  SUBCASE("syntax errors carry a position") {
    for (const char* bad : {"PD[X[1,2,3]]", "PD[X[1,2,3,4]", "XD[]", "PD[X[1,a,2,2]]", "PD[X[0,0,1,1]]"}) {
      CAPTURE(bad);
      try {
        parse_pd(bad);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::kSyntax || e.kind() == ErrorKind::kLabelConsistency));
      }
    }
    try {
      parse_pd("PD[X[1,2,3]]");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
  SUBCASE("whitespace is ignored") {
    CHECK(serialize_pd(parse_pd(" PD [ X[ 1,5,2,4 ], X[3,1,4,6],\nX[5,3,6,2] ] ")) ==
          serialize_pd(parse_pd(testing::kTrefoilPd)));
  }
}

TEST_CASE("braid parsing") {
  const BraidWord t = parse_braid("braid[2]{1,1,1}");
  CHECK(t.strands == 2);
  CHECK(t.letters == std::vector<int>{1, 1, 1});
  const BraidWord f = parse_braid("braid[3]{1,-2,1,-2}");
  CHECK(f.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(serialize_braid(f) == "braid[3]{1,-2,1,-2}");
  CHECK(kind_of([] { parse_braid("braid[2]{3}"); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { parse_braid("braid[2]{0}"); }) == ErrorKind::kSyntax);
  CHECK(kind_of([] { parse_braid("braid[0]{}"); }) == ErrorKind::kSyntax);
}

TEST_CASE("braid closures") {
  const Diagram t = braid_closure(parse_braid("braid[2]{1,1,1}"));
  CHECK(t.crossing_count() == 3);
  CHECK(component_count(t) == 1);
  CHECK(writhe(t) == 3);

  const Diagram unlink = braid_closure(parse_braid("braid[2]{}"));
  CHECK(component_count(unlink) == 2);
  CHECK(unlink.crossing_count() == 0);

  const Diagram f = braid_closure(parse_braid("braid[3]{1,-2,1,-2}"));
  CHECK(f.crossing_count() == 4);
  CHECK(component_count(f) == 1);
  CHECK(writhe(f) == 0);
}

TEST_CASE("closure properties on random braids") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BraidWord w = testing::random_braid(rng, 5, 0, 12);
    const Diagram d = braid_closure(w);
    CAPTURE(serialize_braid(w));
    CHECK(component_count(d) == braid_cycle_count(w));
    CHECK(validate(d).ok());
    if (d.crossing_count() == 0) continue;
    CHECK(serialize_pd(parse_pd(serialize_pd(d))) == serialize_pd(d));
    const Diagram m = mirror(d);
    CHECK(writhe(m) == -writhe(d));
    if (d.components.size() <= 3) CHECK(label_isomorphic(mirror(m), d));
  }
}

TEST_CASE("serialization round trip keeps the diagram") {
  const Diagram d = parse_pd(testing::kTrefoilPd);
  const std::string s = serialize_pd(d);
  CHECK(serialize_pd(parse_pd(s)) == s);
  CHECK(parse_pd(s).components == d.components);
  CHECK(serialize_pd(parse_pd("PD[] + O1")) == serialize_pd(parse_pd(serialize_pd(parse_pd("PD[] + O1")))));
}

TEST_CASE("mirror") {
  const Diagram u = parse_pd("PD[]");
  CHECK(component_count(mirror(u)) == 1);
  CHECK(mirror(u).crossing_count() == 0);
  const Diagram t = parse_pd(testing::kTrefoilPd);
  CHECK(writhe(mirror(t)) == -writhe(t));
  CHECK(validate(mirror(t)).ok());
  CHECK_FALSE(label_isomorphic(mirror(t), t));
}

TEST_CASE("connected sum") {
  const Diagram t = parse_pd(testing::kTrefoilPd);
  const Diagram s = connected_sum(t, mirror(t), 1, 1);
  CHECK(s.crossing_count() == 6);
  CHECK(component_count(s) == 1);
  CHECK(validate(s).ok());
  CHECK(writhe(s) == 0);

  const Diagram with_unknot = connected_sum(parse_pd("PD[]"), t, 0, 2);
  CHECK(with_unknot.crossing_count() == 3);
  CHECK(label_isomorphic(with_unknot, t));

  const Diagram hopf = braid_closure(parse_braid("braid[2]{1,1}"));
  CHECK(component_count(connected_sum(hopf, t, 1, 1)) == 2);
  CHECK(kind_of([&] { connected_sum(t, t, 7, 1); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("label isomorphism ignores relabeling") {
  const Diagram t = parse_pd(testing::kTrefoilPd);
  // Every label moved one step along the component.
  const Diagram shifted = parse_pd("PD[X[2,6,3,5],X[4,2,5,1],X[6,4,1,3]]");
  CHECK(label_isomorphic(t, shifted));
  CHECK(canonical_relabel(t).crossings == canonical_relabel(shifted).crossings);
}
