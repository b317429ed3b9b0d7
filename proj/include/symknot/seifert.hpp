#pragma once

#include <string>

#include "symknot/algebra.hpp"
#include "symknot/diagram.hpp"
#include "symknot/laurent.hpp"

namespace symknot {

struct SeifertMatrix {
  Matrix<long long> entries;
  std::string source;

  int size() const { return entries.rows(); }
};

enum class SeifertMode { kKnot, kLink };

// Linking form on the braided Seifert surface of the closure: one disc per
// strand and one band per letter, with a basis of loops running between
// consecutive bands of the same generator.
SeifertMatrix seifert_matrix(const BraidWord& w, SeifertMode mode = SeifertMode::kKnot);
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& v);

// Symmetric representative with positive value at t = 1 (or positive
// leading coefficient when it vanishes there).
LaurentPoly normalize_alexander(const LaurentPoly& p);
LaurentPoly alexander(const SeifertMatrix& v);
BigInt determinant(const SeifertMatrix& v);

// Alexander polynomial of a knot diagram from its Wirtinger presentation.
LaurentPoly alexander(const Diagram& d);
BigInt determinant(const Diagram& d);

}  // namespace symknot
