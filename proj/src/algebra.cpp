#include "symknot/algebra.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "symknot/error.hpp"

namespace symknot {

UPoly::UPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::derivative() const {
  std::vector<BigInt> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return UPoly(std::move(d));
}

BigInt UPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : c_) g = boost::multiprecision::gcd(g, c);
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] / g;
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (BigInt& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::scaled(const BigInt& k) const {
  UPoly r = *this;
  for (BigInt& c : r.c_) c *= k;
  r.trim();
  return r;
}

BigInt UPoly::eval(const BigInt& x) const {
  BigInt v = 0;
  for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
  return v;
}

int UPoly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  // den^deg * p(num/den), evaluated by Horner in homogeneous form.
  const BigInt num = numerator(x), den = denominator(x);
  BigInt v = 0, dpow = 1;
  for (int i = degree(); i >= 0; --i) {
    v = v * num + c_[i] * dpow;
    dpow *= den;
  }
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

double UPoly::approx(double x) const {
  double v = 0;
  for (int i = degree(); i >= 0; --i) v = v * x + c_[i].convert_to<double>();
  return v;
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInvalidArgument, "pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt lead = abs(b.leading());
  const int sign = b.leading() < 0 ? -1 : 1;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    BigInt top = r.back();
    // r <- |lc(b)| r - sign * top * x^(dr-db) b
    for (BigInt& c : r) c *= lead;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= sign * top * b.coeffs()[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  UPoly rem(std::move(r));
  if (rem.is_zero()) return rem;
  BigInt g = rem.content();
  std::vector<BigInt> d = rem.coeffs();
  for (BigInt& c : d) c /= g;
  return UPoly(std::move(d));
}

UPoly divide_exact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.is_zero()) return UPoly();
    throw Error(ErrorKind::kInvalidArgument, "inexact polynomial division");
  }
  std::vector<BigInt> q(a.degree() - db + 1, 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt quo, rem;
    boost::multiprecision::divide_qr(r[k + db], b.leading(), quo, rem);
    if (rem != 0) throw Error(ErrorKind::kInvalidArgument, "inexact polynomial division");
    q[k] = quo;
    for (int i = 0; i <= db; ++i) r[k + i] -= quo * b.coeffs()[i];
  }
  for (const BigInt& c : r)
    if (c != 0) throw Error(ErrorKind::kInvalidArgument, "inexact polynomial division");
  return UPoly(std::move(q));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive(), y = b.primitive();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y);
    x = y;
    y = r.primitive();
  }
  return x.primitive();
}

std::vector<UPoly> squarefree_factors(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() < 1) return out;
  UPoly f = p.primitive();
  UPoly a = gcd(f, f.derivative());
  UPoly b = divide_exact(f, a);
  UPoly c = divide_exact(f.derivative(), a);
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    UPoly nb = divide_exact(b, g);
    UPoly nc = divide_exact(d, g);
    b = nb;
    d = nc - b.derivative();
  }
  return out;
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  UPoly q = p.derivative();
  while (!q.is_zero()) {
    chain_.push_back(q);
    UPoly r = -pseudo_remainder(chain_[chain_.size() - 2], q);
    q = r;
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const UPoly& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  AlgebraicReal a;
  a.rational_ = true;
  a.lo_ = a.hi_ = r;
  return a;
}

AlgebraicReal AlgebraicReal::from_root(const UPoly& squarefree, const Rational& lo, const Rational& hi) {
  AlgebraicReal a;
  a.rational_ = false;
  a.poly_ = squarefree;
  a.lo_ = lo;
  a.hi_ = hi;
  if (squarefree.sign_at(lo) == 0 || squarefree.sign_at(hi) == 0 ||
      squarefree.sign_at(lo) == squarefree.sign_at(hi))
    throw Error(ErrorKind::kInvalidArgument, "interval does not isolate a simple root");
  return a;
}

namespace {

// Halves the interval around the root of p; returns true if the midpoint
// happened to be the root itself.
bool bisect(const UPoly& p, Rational& lo, Rational& hi) {
  Rational mid = (lo + hi) / 2;
  int sm = p.sign_at(mid);
  if (sm == 0) {
    lo = hi = mid;
    return true;
  }
  if (sm == p.sign_at(lo))
    lo = mid;
  else
    hi = mid;
  return false;
}

}  // namespace

int AlgebraicReal::sign_of(const UPoly& q) const {
  if (rational_) return q.sign_at(lo_);
  if (q.is_zero()) return 0;
  UPoly g = gcd(poly_, q);
  if (g.degree() >= 1 && g.sign_at(lo_) * g.sign_at(hi_) < 0) return 0;
  UPoly qs = q.degree() >= 1 ? divide_exact(q.primitive(), gcd(q, q.derivative())) : q;
  SturmSequence sturm(qs);
  Rational lo = lo_, hi = hi_;
  while (true) {
    if (qs.sign_at(lo) != 0 && qs.sign_at(hi) != 0 && sturm.count(lo, hi) == 0)
      return q.sign_at(lo);
    if (bisect(poly_, lo, hi)) return q.sign_at(lo);
  }
}

int AlgebraicReal::compare(const Rational& r) const {
  if (rational_) return lo_ < r ? -1 : (lo_ > r ? 1 : 0);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  int s = poly_.sign_at(r);
  if (s == 0) return 0;
  return s == poly_.sign_at(lo_) ? 1 : -1;
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  AlgebraicReal a = *this;
  while (!a.rational_ && a.hi_ - a.lo_ > width) {
    if (bisect(a.poly_, a.lo_, a.hi_)) a.rational_ = true;
  }
  return a;
}

double AlgebraicReal::approx() const {
  if (rational_) return lo_.convert_to<double>();
  AlgebraicReal a = refined(Rational(1, BigInt(1) << 64));
  return ((a.lo_ + a.hi_) / 2).convert_to<double>();
}

std::vector<AlgebraicReal> real_roots(const UPoly& squarefree, const Rational& lo, const Rational& hi) {
  std::vector<AlgebraicReal> roots;
  if (squarefree.degree() < 1) return roots;
  if (squarefree.degree() == 1) {
    Rational r(-squarefree.coeff(0), squarefree.coeff(1));
    if (lo < r && r < hi) roots.push_back(AlgebraicReal::from_rational(r));
    return roots;
  }
  SturmSequence sturm(squarefree);
  struct Job {
    Rational a, b;
  };
  // Count in (a, b) excluding b when b itself is a root.
  auto open_count = [&](const Rational& a, const Rational& b) {
    int c = sturm.count(a, b);
    if (squarefree.sign_at(b) == 0) --c;
    return c;
  };
  std::vector<Job> stack{{lo, hi}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    int c = open_count(j.a, j.b);
    if (c == 0) continue;
    if (c == 1 && squarefree.sign_at(j.a) != 0 && squarefree.sign_at(j.b) != 0) {
      roots.push_back(AlgebraicReal::from_root(squarefree, j.a, j.b));
      continue;
    }
    Rational mid = (j.a + j.b) / 2;
    if (squarefree.sign_at(mid) == 0) roots.push_back(AlgebraicReal::from_rational(mid));
    stack.push_back({j.a, mid});
    stack.push_back({mid, j.b});
  }
  // Isolating intervals are disjoint and exact roots sit on their ends.
  std::sort(roots.begin(), roots.end(), [](const AlgebraicReal& x, const AlgebraicReal& y) {
    if (x.lo() != y.lo()) return x.lo() < y.lo();
    return x.is_rational() && !y.is_rational();
  });
  return roots;
}

UPoly cyclotomic(int m) {
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "cyclotomic index must be positive");
  std::vector<BigInt> c(m + 1, 0);
  c[0] = -1;
  c[m] = 1;
  UPoly p(std::move(c));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(p, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, p);
  return p;
}

UPoly symmetric_to_cosine(const LaurentPoly& f) {
  if (f.is_zero()) return UPoly();
  if (f.min_exponent() != -f.max_exponent())
    throw Error(ErrorKind::kInvalidArgument, "polynomial is not symmetric");
  const int top = f.max_exponent();
  // Chebyshev T_k in x by T_{k+1} = 2x T_k - T_{k-1}.
  std::vector<UPoly> cheb{UPoly::constant(1), UPoly::linear(0, 1)};
  for (int k = 2; k <= top; ++k)
    cheb.push_back(UPoly::linear(0, 2) * cheb[k - 1] - cheb[k - 2]);
  UPoly p = UPoly::constant(f.coeff(0));
  for (int k = 1; k <= top; ++k) {
    if (f.coeff(k) != f.coeff(-k)) throw Error(ErrorKind::kInvalidArgument, "polynomial is not symmetric");
    p = p + cheb[k].scaled(2 * f.coeff(k));
  }
  return p;
}

UPoly cosine_minimal_polynomial(int m) {
  if (m == 1) return UPoly::linear(-1, 1);
  if (m == 2) return UPoly::linear(1, 1);
  UPoly phi = cyclotomic(m);
  const int half = phi.degree() / 2;
  LaurentPoly sym;
  for (int i = 0; i <= phi.degree(); ++i) sym.add_term(i - half, phi.coeff(i));
  return symmetric_to_cosine(sym).primitive();
}

Rational simplest_between(double a, double b) {
  // Stern-Brocot descent.
  BigInt pl = 0, ql = 1, pr = 1, qr = 0;
  for (int guard = 0; guard < 4096; ++guard) {
    BigInt pm = pl + pr, qm = ql + qr;
    double v = pm.convert_to<double>() / qm.convert_to<double>();
    if (v <= a) {
      pl = pm;
      ql = qm;
    } else if (v >= b) {
      pr = pm;
      qr = qm;
    } else {
      return Rational(pm, qm);
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "interval too narrow for a simple rational");
}

UPoly determinant(Matrix<UPoly> m) {
  const int n = m.rows();
  if (n == 0) return UPoly::constant(1);
  int sign = 1;
  UPoly prev = UPoly::constant(1);
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return UPoly();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  UPoly d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace symknot
