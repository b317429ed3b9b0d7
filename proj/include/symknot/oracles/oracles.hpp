#pragma once

#include "symknot/diagram.hpp"
#include "symknot/laurent.hpp"
#include "symknot/number.hpp"

// Second implementations of a few invariants by unrelated routes, used to
// cross-check the main engines.
namespace symknot::oracle {

// det of (I - Burau(w)) with the last row and column removed, from the
// unreduced Burau representation, shifted to be symmetric with positive
// value at t = 1.
LaurentPoly burau_alexander(const BraidWord& w);

// |det| of the reduced Goeritz matrix of a checkerboard colouring.
BigInt goeritz_determinant(const Diagram& d);

}  // namespace symknot::oracle
