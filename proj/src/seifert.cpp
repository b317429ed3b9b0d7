#include "symknot/seifert.hpp"

#include <cstdlib>
#include <numeric>

#include "symknot/error.hpp"

namespace symknot {

SeifertMatrix seifert_matrix(const BraidWord& w, SeifertMode mode) {
  for (int x : w.letters)
    if (x == 0 || std::abs(x) >= w.strands)
      throw Error(ErrorKind::kInvalidArgument, "braid letter out of range");
  if (mode == SeifertMode::kKnot && braid_cycle_count(w) != 1)
    throw Error(ErrorKind::kInvalidArgument,
                "closure of " + serialize_braid(w) + " is not a knot");
  const std::vector<int>& x = w.letters;
  const int len = static_cast<int>(x.size());
  // Loop at letter i runs to the next letter with the same generator.
  std::vector<int> loop_start, loop_end;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j)
      if (std::abs(x[j]) == std::abs(x[i])) {
        loop_start.push_back(i);
        loop_end.push_back(j);
        break;
      }
  const int n = static_cast<int>(loop_start.size());
  SeifertMatrix v;
  v.entries = Matrix<long long>(n, n, 0);
  v.source = serialize_braid(w);
  auto sgn = [](int a) { return a > 0 ? 1 : -1; };
  for (int a = 0; a < n; ++a) {
    const int i = loop_start[a], hi = loop_end[a];
    v.entries(a, a) = -(sgn(x[i]) + sgn(x[hi])) / 2;
    for (int b = a + 1; b < n; ++b) {
      const int j = loop_start[b], hj = loop_end[b];
      if (hi > hj || hi < j) continue;
      const int gi = std::abs(x[i]), gj = std::abs(x[j]);
      if (hi == j) {
        if (x[j] > 0)
          v.entries(a, b) = 1;
        else
          v.entries(b, a) = -1;
        continue;
      }
      if (gi - gj == 1) v.entries(b, a) = -1;
      if (gj - gi == 1) v.entries(a, b) = 1;
    }
  }
  return v;
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  SeifertMatrix s;
  const int n = a.size(), m = b.size();
  s.entries = Matrix<long long>(n + m, n + m, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.entries(i, j) = a.entries(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.entries(n + i, n + j) = b.entries(i, j);
  s.source = a.source.empty() ? b.source : (b.source.empty() ? a.source : a.source + " # " + b.source);
  return s;
}

SeifertMatrix mirror(const SeifertMatrix& v) {
  SeifertMatrix m;
  m.entries = v.entries.transpose();
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m.entries(i, j) = -m.entries(i, j);
  m.source = "mirror(" + v.source + ")";
  return m;
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.min_exponent(), hi = p.max_exponent();
  LaurentPoly q = (lo + hi) % 2 == 0 ? p.shift(-(lo + hi) / 2) : p.shift(-lo);
  BigInt at_one = q.evaluate_unit(1);
  if (at_one < 0 || (at_one == 0 && q.terms().rbegin()->second < 0)) q = -q;
  return q;
}

LaurentPoly alexander(const SeifertMatrix& v) {
  const int n = v.size();
  if (n == 0) return LaurentPoly(1);
  Matrix<UPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = UPoly::linear(v.entries(i, j), -v.entries(j, i));
  UPoly det = determinant(std::move(m));
  LaurentPoly p;
  for (int i = 0; i <= det.degree(); ++i) p.add_term(i, det.coeff(i));
  return normalize_alexander(p);
}

BigInt determinant(const SeifertMatrix& v) {
  const int n = v.size();
  if (n == 0) return 1;
  Matrix<UPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = UPoly::constant(v.entries(i, j) + v.entries(j, i));
  UPoly det = determinant(std::move(m));
  return abs(det.coeff(0));
}

LaurentPoly alexander(const Diagram& d) {
  if (component_count(d) != 1)
    throw Error(ErrorKind::kInvalidArgument, "diagram Alexander polynomial needs a knot");
  const int n = d.crossing_count();
  if (n == 0) return LaurentPoly(1);
  const int edges = d.edge_count();
  // Arcs: labels joined along over-strands.
  std::vector<int> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Crossing& x : d.crossings) parent[find(x[1])] = find(x[3]);
  std::vector<int> arc_index(edges + 1, -1);
  int arcs = 0;
  for (int l = 1; l <= edges; ++l)
    if (arc_index[find(l)] < 0) arc_index[find(l)] = arcs++;
  if (arcs != n) throw Error(ErrorKind::kInvalidArgument, "unexpected arc count in diagram");
  Matrix<UPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = UPoly();
  for (int i = 0; i < n; ++i) {
    const Crossing& x = d.crossings[i];
    const int over = arc_index[find(x[1])];
    const int in = arc_index[find(x[0])];
    const int out = arc_index[find(x[2])];
    const bool positive = crossing_sign(d, i) > 0;
    m(i, over) = m(i, over) + UPoly::linear(1, -1);
    m(i, in) = m(i, in) + (positive ? UPoly::linear(0, 1) : UPoly::constant(-1));
    m(i, out) = m(i, out) + (positive ? UPoly::constant(-1) : UPoly::linear(0, 1));
  }
  Matrix<UPoly> minor(n - 1, n - 1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor(i, j) = m(i, j);
  UPoly det = determinant(std::move(minor));
  LaurentPoly p;
  for (int i = 0; i <= det.degree(); ++i) p.add_term(i, det.coeff(i));
  return normalize_alexander(p);
}

BigInt determinant(const Diagram& d) { return abs(alexander(d).evaluate_unit(-1)); }

}  // namespace symknot
