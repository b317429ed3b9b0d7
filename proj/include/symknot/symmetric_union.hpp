#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symknot/diagram.hpp"

namespace symknot {

// Which face of the lowest-labelled mark faces the symmetry axis, relative
// to the base orientation. kAuto takes the left face when every mark
// touches it and the right face otherwise.
enum class AxisSide { kAuto, kLeft, kRight };

struct SymUnionSpec {
  Diagram base;
  // Edge labels of the base; the first mu become infinity tangles and the
  // rest carry the twists in order.
  std::vector<int> marks;
  int mu = 1;
  std::vector<int> twists;
  std::string name;
  AxisSide side = AxisSide::kAuto;
};

struct TwistRegionRef {
  int index = 1;
};

// Throws invalid-argument describing the first broken requirement.
void check_spec(const SymUnionSpec& spec);

// Base diagram, its reflection across the axis, and a tangle on the axis
// at every mark: mu infinity tangles, then |n| half-twists per twist value.
// n > 0 puts the strand from upper left to lower right on top.
Diagram build(const SymUnionSpec& spec);
Diagram infinity_resolution(const SymUnionSpec& spec);
SymUnionSpec band_move(const SymUnionSpec& spec, TwistRegionRef r);
int twist_region_count(const SymUnionSpec& spec);
// Connected sum along the symmetry axis of two specs with mu = 1.
SymUnionSpec axis_connected_sum(const SymUnionSpec& a, const SymUnionSpec& b);
SymUnionSpec axis_power(const SymUnionSpec& s, int n);

// Same base, same set of infinity marks and same twisted marks with their
// values, regardless of list order.
bool equivalent(const SymUnionSpec& a, const SymUnionSpec& b);
std::string serialize_spec(const SymUnionSpec& spec);
// Stable 64-bit FNV-1a digest of the order-independent form, in hex.
std::string spec_hash(const SymUnionSpec& spec);

struct SpecBlock {
  SymUnionSpec spec;
  // Extra keys (target, provenance) as written.
  std::map<std::string, std::string> extra;
  int line = 0;
};

// `SU { base: PD[...]; marks: [..]; mu: m; twists: [..]; name: "..." }`
// blocks with `#` comments; optional keys side, target and provenance.
std::vector<SpecBlock> parse_spec_blocks(std::string_view text);
SymUnionSpec parse_spec(std::string_view text);

}  // namespace symknot
