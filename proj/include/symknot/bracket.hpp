#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symknot/diagram.hpp"
#include "symknot/laurent.hpp"

namespace symknot {

struct BracketOptions {
  // Largest number of boundary matchings kept alive during contraction.
  std::size_t max_states = std::size_t{1} << 22;
};

// Kauffman bracket in the variable A by direct summation over all 2^n
// smoothings, single-threaded. Kept as the reference kernel.
LaurentPoly bracket_all_states_serial(const Diagram& d);
// Same state sum split across OpenMP threads.
LaurentPoly bracket_all_states(const Diagram& d);
// Contraction of crossings one at a time, tracking how the processed part
// connects the boundary edges.
LaurentPoly bracket_transfer(const Diagram& d, const BracketOptions& opts = {});

inline LaurentPoly kauffman_bracket(const Diagram& d, const BracketOptions& opts = {}) {
  return bracket_transfer(d, opts);
}

// Greedy crossing order for contraction; max_boundary receives the widest
// boundary met along it.
std::vector<int> contraction_order(const Diagram& d, int* max_boundary = nullptr);

// Jones polynomial. When `half` is set, stored exponents count t^(1/2).
struct JonesPoly {
  LaurentPoly poly;
  bool half = false;
  bool operator==(const JonesPoly&) const = default;
  std::string str() const { return to_string(poly, "t", half); }
};

JonesPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);
JonesPoly jones(const Diagram& d, const BracketOptions& opts = {});

}  // namespace symknot
