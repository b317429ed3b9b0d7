#pragma once

#include <map>
#include <string>
#include <string_view>

#include "symknot/number.hpp"

namespace symknot {

// Sparse Laurent polynomial with big-integer coefficients. Zero
// coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(const BigInt& c, int exponent);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  BigInt coeff(int exponent) const;
  void add_term(int exponent, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly pow(unsigned n) const;
  // t -> t^-1
  LaurentPoly invert_variable() const;
  // t -> t^k
  LaurentPoly scale_exponents(int k) const;
  // Multiply by t^k.
  LaurentPoly shift(int k) const;
  // Exact quotient; throws invalid-argument when d does not divide *this.
  LaurentPoly divide_exact(const LaurentPoly& d) const;
  // Value at t = 1 or t = -1 (any unit keeps exponents integral).
  BigInt evaluate_unit(int t) const;

 private:
  std::map<int, BigInt> terms_;
};

// Canonical ascending text, e.g. "3t^-2 - 2t^-1 + 1". With half_units set
// each stored exponent e stands for t^(e/2).
std::string to_string(const LaurentPoly& p, std::string_view var = "t",
                      bool half_units = false);

// Accepts the canonical form and common table spellings such as
// "t^(-2)-t^(-1)+ 1" or "2*t^(3/2)". Half-integer exponents require
// half_units, in which case stored exponents are doubled.
LaurentPoly parse_laurent(std::string_view text, std::string_view var = "t",
                          bool half_units = false);

}  // namespace symknot
