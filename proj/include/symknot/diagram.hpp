#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symknot {

// Edge labels read counterclockwise from the incoming under-strand, so
// positions 0 and 2 carry the under-strand.
using Crossing = std::array<int, 4>;

// Labels first..last of one component, increasing along its orientation.
struct ComponentRange {
  int first = 0;
  int last = 0;
  auto operator<=>(const ComponentRange&) const = default;
};

struct Diagram {
  std::vector<Crossing> crossings;
  std::vector<ComponentRange> components;
  // Crossingless unknotted components, which a PD cannot otherwise express.
  int free_loops = 0;
  std::string name;

  int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  // Component index of an edge label, or -1.
  int component_of(int label) const;
  int successor(int label) const;
  int predecessor(int label) const;

  // Derives component ranges from label cyclicity. Throws
  // label-consistency when some label does not appear exactly twice.
  static Diagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0,
                                std::string name = {});
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
  bool operator==(const BraidWord&) const = default;
};

struct Violation {
  std::string rule;
  std::string description;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view rule) const;
};

Diagram parse_pd(std::string_view text);
std::string serialize_pd(const Diagram& d);

BraidWord parse_braid(std::string_view text);
std::string serialize_braid(const BraidWord& w);
// Number of cycles of the permutation underlying w.
int braid_cycle_count(const BraidWord& w);
Diagram braid_closure(const BraidWord& w);
// Closure of the mirror image: every letter negated.
BraidWord mirror(const BraidWord& w);
// Word for the connected sum of the closures (strands side by side).
BraidWord braid_sum(const BraidWord& a, const BraidWord& b);

int component_count(const Diagram& d);
ValidationReport validate(const Diagram& d);
int crossing_sign(const Diagram& d, int index);
int writhe(const Diagram& d);
Diagram mirror(const Diagram& d);
// Cuts edge e1 of d1 and edge e2 of d2 and splices the ends respecting
// orientation. A crossingless operand may pass 0 as its edge.
Diagram connected_sum(const Diagram& d1, const Diagram& d2, int e1, int e2);
// Minimal relabeling over all traversal starts, directions and component
// orders; equal results mean the diagrams are label-isomorphic.
Diagram canonical_relabel(const Diagram& d);
bool label_isomorphic(const Diagram& a, const Diagram& b);

}  // namespace symknot
