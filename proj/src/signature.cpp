#include "symknot/signature.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "symknot/error.hpp"

namespace symknot {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// Continued-fraction convergents of v with denominators up to max_q.
std::vector<Rational> convergents(long double v, long long max_q) {
  std::vector<Rational> out;
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double x = v;
  for (int i = 0; i < 40; ++i) {
    long long a = static_cast<long long>(std::floor(x));
    long long h = a * h0 + h1, k = a * k0 + k1;
    if (k > max_q) break;
    out.emplace_back(h, k);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    long double frac = x - a;
    if (frac < 1e-18L) break;
    x = 1 / frac;
  }
  return out;
}

long double acos_over_pi(const AlgebraicReal& x) {
  AlgebraicReal r = x.refined(Rational(1, BigInt(1) << 90));
  long double mid = ((r.lo() + r.hi()) / 2).convert_to<long double>();
  if (mid > 1) mid = 1;
  if (mid < -1) mid = -1;
  return std::acos(mid) / kPi;
}

// theta / pi for a cosine in (-1, 1) when theta is a rational multiple of
// pi with modest denominator; verified exactly against the minimal
// polynomial of the candidate cosine.
std::optional<Rational> identify_angle(const AlgebraicReal& x) {
  const long double a = acos_over_pi(x);
  for (const Rational& c : convergents(a, 4000)) {
    if (c <= 0 || c >= 1) continue;
    if (std::fabs(static_cast<long double>(c.convert_to<double>()) - a) > 1e-12L) continue;
    Rational half = c / 2;
    int m = denominator(half).convert_to<int>();
    if (x.sign_of(cosine_minimal_polynomial(m)) == 0) return c;
  }
  return std::nullopt;
}

int descartes_variations(const std::vector<int>& s) {
  int v = 0, last = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++v;
    last = x;
  }
  return v;
}

std::string format_approx(double over_pi) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "~%.6f pi", over_pi);
  return buf;
}

}  // namespace

std::string angle_label(const Rational& over_pi) {
  if (denominator(over_pi) == 1) return numerator(over_pi).str() + " pi";
  return numerator(over_pi).str() + "/" + denominator(over_pi).str() + " pi";
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational()) return -b.compare(a.value());
  if (b.is_rational()) return a.compare(b.value());
  AlgebraicReal x = a, y = b;
  if (x.sign_of(y.polynomial()) == 0) {
    // x is some root of y's polynomial; equal iff it is the isolated one.
    while (true) {
      if (x.lo() >= y.lo() && x.hi() <= y.hi()) return 0;
      if (x.hi() <= y.lo()) return -1;
      if (x.lo() >= y.hi()) return 1;
      Rational w = (x.hi() - x.lo()) / 2;
      x = x.refined(w);
      if (x.is_rational()) return -y.compare(x.value());
    }
  }
  while (true) {
    if (x.hi() <= y.lo()) return -1;
    if (x.lo() >= y.hi()) return 1;
    x = x.refined((x.hi() - x.lo()) / 2);
    y = y.refined((y.hi() - y.lo()) / 2);
    if (x.is_rational() || y.is_rational()) return compare(x, y);
  }
}

UnitCirclePoint UnitCirclePoint::from_angle(long long p, long long q) {
  if (q == 0) throw Error(ErrorKind::kInvalidArgument, "angle denominator is zero");
  return from_angle(Rational(p, q));
}

UnitCirclePoint UnitCirclePoint::from_angle(const Rational& over_pi) {
  if (over_pi <= 0 || over_pi >= 2)
    throw Error(ErrorKind::kInvalidArgument, "angle must lie strictly between 0 and 2 pi");
  UnitCirclePoint w;
  w.angle_ = over_pi;
  w.upper_ = over_pi <= 1;
  Rational base = w.upper_ ? over_pi : Rational(2) - over_pi;
  Rational half = base / 2;
  const int m = denominator(half).convert_to<int>();
  const int k = numerator(half).convert_to<int>();
  UPoly psi = cosine_minimal_polynomial(m);
  std::vector<AlgebraicReal> roots = real_roots(psi, -2, 2);
  // Roots ascend in x, i.e. descend in k among residues prime to m.
  std::vector<int> ks;
  for (int j = m / 2; j >= 1; --j)
    if (std::gcd(j, m) == 1 && 2 * j <= m) ks.push_back(j);
  if (ks.size() != roots.size())
    throw std::logic_error("cosine minimal polynomial has unexpected root count");
  for (size_t i = 0; i < ks.size(); ++i)
    if (ks[i] == k) w.x_ = roots[i];
  return w;
}

UnitCirclePoint UnitCirclePoint::from_cosine(const AlgebraicReal& x, bool upper,
                                             std::optional<Rational> angle) {
  if (x.compare(Rational(1)) >= 0 || x.compare(Rational(-1)) < 0)
    throw Error(ErrorKind::kInvalidArgument, "cosine must lie in [-1, 1)");
  UnitCirclePoint w;
  w.x_ = x;
  w.upper_ = upper || x.compare(Rational(-1)) == 0;
  w.angle_ = std::move(angle);
  return w;
}

double UnitCirclePoint::angle_approx() const {
  if (angle_) return angle_->convert_to<double>();
  double a = static_cast<double>(acos_over_pi(x_));
  return upper_ ? a : 2 - a;
}

std::string UnitCirclePoint::label() const {
  if (angle_) return angle_label(*angle_);
  return format_approx(angle_approx());
}

UnitCirclePoint UnitCirclePoint::conjugate() const {
  UnitCirclePoint w = *this;
  if (x_.is_rational() && x_.value() == -1) return w;
  w.upper_ = !upper_;
  if (angle_) w.angle_ = Rational(2) - *angle_;
  return w;
}

SignatureForm::Block SignatureForm::build_block(const Matrix<long long>& v) {
  const int m = v.rows();
  Block b;
  b.size = m;
  const int deg = m / 2;
  // Charpoly coefficients at tau = 0..deg, then interpolation in u = tau^2.
  std::vector<std::vector<BigInt>> samples(m + 1, std::vector<BigInt>(deg + 1));
  for (int j = 0; j <= deg; ++j) {
    Matrix<GaussInt> g(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        long long s = v(r, c) + v(c, r), a = v(r, c) - v(c, r);
        g(r, c) = GaussInt{BigInt(s), BigInt(-static_cast<long long>(j) * a)};
      }
    std::vector<GaussInt> cp = charpoly_berkowitz(g, GaussInt{}, GaussInt{1, 0});
    for (int k = 0; k <= m; ++k) {
      if (cp[k].im != 0) throw std::logic_error("Hermitian charpoly with imaginary coefficient");
      samples[k][j] = cp[k].re;
    }
  }
  for (int k = 0; k <= m; ++k) {
    // Newton divided differences on nodes u_j = j^2.
    std::vector<Rational> dd(samples[k].begin(), samples[k].end());
    for (int level = 1; level <= deg; ++level)
      for (int j = deg; j >= level; --j)
        dd[j] = (dd[j] - dd[j - 1]) / Rational(j * j - (j - level) * (j - level));
    std::vector<Rational> poly{dd[deg]};
    for (int j = deg - 1; j >= 0; --j) {
      // poly = poly * (u - j^2) + dd[j]
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= poly[i] * (j * j);
      }
      next[0] += dd[j];
      poly.swap(next);
    }
    // r_k(x) = (1 - x)^deg q_k((1 + x) / (1 - x))
    UPoly r;
    UPoly plus = UPoly::linear(1, 1), minus = UPoly::linear(1, -1);
    for (size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      if (denominator(poly[i]) != 1) throw std::logic_error("non-integral interpolation");
      UPoly term = UPoly::constant(numerator(poly[i]));
      for (size_t e = 0; e < i; ++e) term = term * plus;
      for (int e = static_cast<int>(i); e < deg; ++e) term = term * minus;
      r = r + term;
    }
    b.r.push_back(r);
  }
  return b;
}

SignatureForm::SignatureForm(const SeifertMatrix& v, const SignatureOptions& opts) {
  size_ = v.size();
  const int n = size_;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  if (opts.split_blocks) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (v.entries(i, j) != 0) parent[find(i)] = find(j);
  } else {
    for (int i = 0; i < n; ++i) parent[find(i)] = find(0);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::map<std::vector<long long>, int> seen;
  for (const auto& [root, idx] : groups) {
    const int m = static_cast<int>(idx.size());
    Matrix<long long> sub(m, m);
    std::vector<long long> key{m};
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) {
        sub(a, c) = v.entries(idx[a], idx[c]);
        key.push_back(sub(a, c));
      }
    auto it = seen.find(key);
    if (it != seen.end()) {
      ++block_repeat_[it->second];
      continue;
    }
    seen.emplace(key, static_cast<int>(blocks_.size()));
    blocks_.push_back(build_block(sub));
    block_repeat_.push_back(1);
  }
}

SignatureValue SignatureForm::at_cosine(const AlgebraicReal& x) const {
  if (x.compare(Rational(1)) >= 0)
    throw Error(ErrorKind::kInvalidArgument, "signature is undefined at omega = 1");
  if (x.compare(Rational(-1)) < 0)
    throw Error(ErrorKind::kInvalidArgument, "cosine below -1");
  SignatureValue total;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Block& blk = blocks_[b];
    std::vector<int> s(blk.size + 1), alt(blk.size + 1);
    for (int k = 0; k <= blk.size; ++k) s[k] = x.sign_of(blk.r[k]);
    int z = 0;
    while (z <= blk.size && s[z] == 0) ++z;
    std::vector<int> tail(s.begin() + z, s.end()), tail_neg;
    for (int k = z; k <= blk.size; ++k) tail_neg.push_back((k % 2 == 0) ? s[k] : -s[k]);
    int pos = descartes_variations(tail), neg = descartes_variations(tail_neg);
    if (pos + neg != blk.size - z) throw std::logic_error("inertia count mismatch");
    total.signature += block_repeat_[b] * (pos - neg);
    total.nullity += block_repeat_[b] * z;
  }
  return total;
}

SignatureValue SignatureForm::at(const UnitCirclePoint& omega) const {
  return at_cosine(omega.cosine());
}

int lt_signature_at(const SeifertMatrix& v, const UnitCirclePoint& omega, int* nullity,
                    const SignatureOptions& opts) {
  SignatureValue r = SignatureForm(v, opts).at(omega);
  if (nullity) *nullity = r.nullity;
  return r.signature;
}

std::vector<SignatureValue> signatures_at_serial(const SignatureForm& form,
                                                 const std::vector<UnitCirclePoint>& points) {
  std::vector<SignatureValue> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) out[i] = form.at(points[i]);
  return out;
}

std::vector<SignatureValue> signatures_at(const SignatureForm& form,
                                          const std::vector<UnitCirclePoint>& points) {
  std::vector<SignatureValue> out(points.size());
  const long long n = static_cast<long long>(points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = form.at(points[i]);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

bool SignatureProfile::jump_at_pi() const {
  return !jumps.empty() && jumps.back().point.cosine().is_rational() &&
         jumps.back().point.cosine().value() == -1;
}

namespace {

struct UpperEntry {
  std::string angle;
  bool jump;
  int sigma;
  int multiplicity;
};

std::vector<UpperEntry> upper_entries(const SignatureProfile& p) {
  std::vector<UpperEntry> out;
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    out.push_back({angle_label(p.arcs[i].label_angle), false, p.arcs[i].value, 0});
    if (i < p.jumps.size()) {
      const ProfileJump& j = p.jumps[i];
      out.push_back({j.point.label(), true, j.value, j.multiplicity});
    }
  }
  return out;
}

}  // namespace

int SignatureProfile::max_abs() const {
  int m = 0;
  for (const ProfileArc& a : arcs) m = std::max(m, std::abs(a.value));
  for (const ProfileJump& j : jumps) m = std::max(m, std::abs(j.value));
  return m;
}

SignatureProfile::Witness SignatureProfile::argmax() const {
  const int m = max_abs();
  for (const UpperEntry& e : upper_entries(*this))
    if (std::abs(e.sigma) == m) return {e.angle, e.sigma, e.jump};
  return {"1 pi", 0, false};
}

SignatureProfile::Witness SignatureProfile::arc_argmax() const {
  int m = 0;
  for (const ProfileArc& a : arcs) m = std::max(m, std::abs(a.value));
  for (const ProfileArc& a : arcs)
    if (std::abs(a.value) == m) return {angle_label(a.label_angle), a.value, false};
  return {"1 pi", 0, false};
}

int SignatureProfile::value_at(const UnitCirclePoint& omega) const {
  const AlgebraicReal& x = omega.cosine();
  for (size_t i = 0; i < jumps.size(); ++i) {
    int c = compare(x, jumps[i].point.cosine());
    if (c == 0) return jumps[i].value;
    if (c > 0) return arcs[i].value;
  }
  return arcs.back().value;
}

std::vector<ProfileRecord> SignatureProfile::records() const {
  std::vector<ProfileRecord> out;
  for (size_t i = 0; i < arcs.size(); ++i) {
    out.push_back({angle_label(arcs[i].label_angle), false, arcs[i].value, 0});
    if (i < jumps.size())
      out.push_back({jumps[i].point.label(), true, jumps[i].value, jumps[i].multiplicity});
  }
  // The last upper entry (the arc through pi, or the jump at pi) is its own
  // conjugate; the rest is mirrored.
  const size_t upper = out.size();
  for (size_t k = upper - 1; k-- > 0;) {
    ProfileRecord r = out[k];
    if (r.jump) {
      size_t jump_index = k / 2;
      r.angle = jumps[jump_index].point.conjugate().label();
    } else {
      r.angle = angle_label(Rational(2) - arcs[k / 2].label_angle);
    }
    out.push_back(r);
  }
  return out;
}

std::string SignatureProfile::serialize() const {
  std::string s = "profile [\n";
  std::vector<ProfileRecord> rs = records();
  for (size_t i = 0; i < rs.size(); ++i) {
    s += "  {angle: \"" + rs[i].angle + "\", kind: " + (rs[i].jump ? "jump" : "arc") +
         ", sigma: " + std::to_string(rs[i].sigma);
    if (rs[i].jump) s += ", multiplicity: " + std::to_string(rs[i].multiplicity);
    s += "}";
    s += i + 1 < rs.size() ? ",\n" : "\n";
  }
  return s + "]\n";
}

namespace {

int multiplicity_at_minus_one(const LaurentPoly& delta) {
  std::vector<BigInt> c;
  const int lo = delta.min_exponent();
  for (int e = lo; e <= delta.max_exponent(); ++e) c.push_back(delta.coeff(e));
  UPoly p(std::move(c));
  int mult = 0;
  const UPoly t_plus_one = UPoly::linear(1, 1);
  while (p.degree() >= 1 && p.eval(-1) == 0) {
    p = divide_exact(p, t_plus_one);
    ++mult;
  }
  return mult;
}

struct RootInfo {
  AlgebraicReal x;
  int multiplicity;
};

}  // namespace

SignatureProfile signature_profile(const SeifertMatrix& v, const SignatureOptions& opts) {
  SignatureForm form(v, opts);
  SignatureProfile prof;
  prof.alexander = alexander(v);
  const LaurentPoly& delta = prof.alexander;
  if (delta.is_zero() || delta.min_exponent() != -delta.max_exponent())
    throw Error(ErrorKind::kInvalidArgument,
                "signature profile needs a symmetric Alexander polynomial (knot Seifert matrix)");
  const UPoly p = symmetric_to_cosine(delta);
  std::vector<RootInfo> roots;
  std::vector<UPoly> factors = squarefree_factors(p);
  for (size_t i = 0; i < factors.size(); ++i)
    for (const AlgebraicReal& r : real_roots(factors[i], -1, 1))
      roots.push_back({r, static_cast<int>(i) + 1});
  std::sort(roots.begin(), roots.end(),
            [](const RootInfo& a, const RootInfo& b) { return compare(a.x, b.x) > 0; });
  // Separate neighbouring isolating intervals strictly.
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    AlgebraicReal& a = roots[i].x;
    AlgebraicReal& b = roots[i + 1].x;
    while (!(b.hi() < a.lo())) {
      if (!a.is_rational()) a = a.refined((a.hi() - a.lo()) / 2);
      if (!b.is_rational()) b = b.refined((b.hi() - b.lo()) / 2);
    }
  }
  if (!roots.empty()) {
    AlgebraicReal& top = roots.front().x;
    while (!top.is_rational() && top.hi() >= 1) top = top.refined((top.hi() - top.lo()) / 2);
    AlgebraicReal& bottom = roots.back().x;
    while (!bottom.is_rational() && bottom.lo() <= -1)
      bottom = bottom.refined((bottom.hi() - bottom.lo()) / 2);
  }
  const int minus_one = multiplicity_at_minus_one(delta);

  std::vector<AlgebraicReal> samples;
  if (roots.empty()) {
    samples.push_back(AlgebraicReal::from_rational(minus_one ? Rational(0) : Rational(-1)));
  } else {
    samples.push_back(AlgebraicReal::from_rational((Rational(1) + roots.front().x.hi()) / 2));
    for (size_t i = 0; i + 1 < roots.size(); ++i)
      samples.push_back(AlgebraicReal::from_rational((roots[i].x.lo() + roots[i + 1].x.hi()) / 2));
    samples.push_back(AlgebraicReal::from_rational(
        minus_one ? (Rational(-1) + roots.back().x.lo()) / 2 : Rational(-1)));
  }
  std::vector<UnitCirclePoint> points;
  for (const AlgebraicReal& s : samples) points.push_back(UnitCirclePoint::from_cosine(s, true));
  std::vector<std::optional<Rational>> jump_angles;
  for (const RootInfo& r : roots) {
    jump_angles.push_back(identify_angle(r.x));
    points.push_back(UnitCirclePoint::from_cosine(r.x, true, jump_angles.back()));
  }
  if (minus_one) {
    jump_angles.push_back(Rational(1));
    points.push_back(UnitCirclePoint::from_cosine(AlgebraicReal::from_rational(-1), true, Rational(1)));
  }
  std::vector<SignatureValue> values = signatures_at(form, points);

  const size_t nsamples = samples.size();
  std::vector<double> jump_theta;
  for (size_t i = 0; i < jump_angles.size(); ++i) {
    const UnitCirclePoint& pt = points[nsamples + i];
    jump_theta.push_back(pt.angle_approx());
  }
  const size_t njumps = jump_angles.size();
  for (size_t i = 0; i < nsamples; ++i) {
    if (values[i].nullity != 0) throw std::logic_error("singular form away from the roots of Delta");
    double lo = i == 0 ? 0.0 : jump_theta[i - 1];
    double hi;
    if (i < njumps)
      hi = jump_theta[i];
    else
      hi = 2.0 - lo;
    double w = hi - lo;
    ProfileArc arc;
    arc.label_angle = simplest_between(lo + w / 4, hi - w / 4);
    arc.sample = samples[i];
    arc.value = values[i].signature;
    prof.arcs.push_back(arc);
  }
  for (size_t i = 0; i < njumps; ++i) {
    ProfileJump j;
    j.point = points[nsamples + i];
    j.multiplicity = i < roots.size() ? roots[i].multiplicity : minus_one;
    j.value = values[nsamples + i].signature;
    j.nullity = values[nsamples + i].nullity;
    if (j.nullity > j.multiplicity)
      throw std::logic_error("form nullity exceeds root multiplicity");
    j.left = prof.arcs[i].value;
    j.right = i + 1 < prof.arcs.size() ? prof.arcs[i + 1].value : prof.arcs[i].value;
    prof.jumps.push_back(j);
  }
  return prof;
}

}  // namespace symknot
