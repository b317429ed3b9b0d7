#pragma once

#include <optional>
#include <vector>

#include "symknot/laurent.hpp"
#include "symknot/number.hpp"

namespace symknot {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  bool operator==(const Matrix&) const = default;

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Dense univariate integer polynomial, coefficients in ascending order.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigInt> ascending);
  static UPoly constant(const BigInt& c) { return UPoly({c}); }
  static UPoly linear(const BigInt& c0, const BigInt& c1) { return UPoly({c0, c1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  UPoly derivative() const;
  BigInt content() const;
  // Divided by the content, with positive leading coefficient.
  UPoly primitive() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly scaled(const BigInt& k) const;
  bool operator==(const UPoly& o) const = default;

  BigInt eval(const BigInt& x) const;
  // Exact sign of the value at a rational point.
  int sign_at(const Rational& x) const;
  double approx(double x) const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Remainder of m * a by b with m a positive constant, so signs survive.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
// Quotient a / b; throws unless it is exact over the integers.
UPoly divide_exact(const UPoly& a, const UPoly& b);
// Primitive greatest common divisor with positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);
// Yun factorisation: f[i-1] is the product of the irreducible factors of
// multiplicity exactly i (primitive, possibly constant 1).
std::vector<UPoly> squarefree_factors(const UPoly& p);

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  int variations(const Rational& x) const;
  // Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UPoly> chain_;
};

// Real algebraic number: a rational, or the unique root of a squarefree
// integer polynomial inside an open isolating interval.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  static AlgebraicReal from_rational(const Rational& r);
  static AlgebraicReal from_root(const UPoly& squarefree, const Rational& lo, const Rational& hi);

  bool is_rational() const { return rational_; }
  const Rational& value() const { return lo_; }
  const UPoly& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  int sign_of(const UPoly& q) const;
  int compare(const Rational& r) const;
  AlgebraicReal refined(const Rational& width) const;
  double approx() const;

 private:
  bool rational_ = true;
  UPoly poly_;
  Rational lo_ = 0;
  Rational hi_ = 0;
};

// Isolated roots of a squarefree polynomial in the open interval (lo, hi),
// ascending.
std::vector<AlgebraicReal> real_roots(const UPoly& squarefree, const Rational& lo, const Rational& hi);

// Cyclotomic polynomial in t.
UPoly cyclotomic(int m);
// Rewrites a symmetric Laurent polynomial f(t) as the polynomial P with
// f(e^{i theta}) = P(cos theta).
UPoly symmetric_to_cosine(const LaurentPoly& f);
// Minimal polynomial of cos(2 pi / m) scaled to integers.
UPoly cosine_minimal_polynomial(int m);

// Simplest rational strictly between a and b (0 <= a < b).
Rational simplest_between(double a, double b);

struct GaussInt {
  BigInt re = 0;
  BigInt im = 0;
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt operator-() const { return {-re, -im}; }
};

// Characteristic polynomial det(x I - M), ascending, by the division-free
// Berkowitz recursion.
template <class R>
std::vector<R> charpoly_berkowitz(const Matrix<R>& m, const R& zero, const R& one);

// Determinant of a square integer polynomial matrix by fraction-free
// elimination.
UPoly determinant(Matrix<UPoly> m);

}  // namespace symknot

#include "symknot/algebra_impl.hpp"
