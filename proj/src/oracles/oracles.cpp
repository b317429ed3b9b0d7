#include "symknot/oracles/oracles.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace symknot::oracle {

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix identity(int n) {
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Unreduced Burau matrix of sigma_i^{+-1} acting on strands i-1, i.
PolyMatrix burau_letter(int n, int letter) {
  PolyMatrix m = identity(n);
  const int i = std::abs(letter) - 1;
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  if (letter > 0) {
    m[i][i] = LaurentPoly(1) - t;
    m[i][i + 1] = t;
    m[i + 1][i] = LaurentPoly(1);
    m[i + 1][i + 1] = LaurentPoly();
  } else {
    const LaurentPoly ti = LaurentPoly::monomial(1, -1);
    m[i][i] = LaurentPoly();
    m[i][i + 1] = LaurentPoly(1);
    m[i + 1][i] = ti;
    m[i + 1][i + 1] = LaurentPoly(1) - ti;
  }
  return m;
}

// Fraction-free elimination with row swaps.
LaurentPoly poly_det(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return LaurentPoly();
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BigInt int_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

LaurentPoly burau_alexander(const BraidWord& w) {
  const int n = w.strands;
  if (n < 2) return LaurentPoly(1);
  PolyMatrix b = identity(n);
  for (int letter : w.letters) b = multiply(b, burau_letter(n, letter));
  PolyMatrix m(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) m[i][j] = (i == j ? LaurentPoly(1) : LaurentPoly()) - b[i][j];
  LaurentPoly d = poly_det(m);
  if (d.is_zero()) return d;
  const int lo = d.min_exponent(), hi = d.max_exponent();
  if ((lo + hi) % 2 == 0) d = d.shift(-(lo + hi) / 2);
  else d = d.shift(-lo);
  if (d.evaluate_unit(1) < 0) d = -d;
  return d;
}

BigInt goeritz_determinant(const Diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return d.free_loops == 1 ? BigInt(1) : BigInt(0);
  // Corner (c, p) lies between rays p and p + 1 counterclockwise.
  std::vector<int> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::vector<int>> rays;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) rays[d.crossings[c][p]].push_back(4 * c + p);
  for (auto& [label, ends] : rays) {
    if (ends.size() != 2) throw std::invalid_argument("label does not occur twice");
    for (int k = 0; k < 2; ++k) {
      int from = ends[k], to = ends[1 - k];
      // Leaving along ray r, the corner clockwise of r continues as the
      // corner counterclockwise of the arrival ray.
      int c = from / 4, r = from % 4;
      int corner_here = 4 * c + (r + 3) % 4;
      int corner_there = to;
      parent[find(corner_here)] = find(corner_there);
    }
  }
  std::map<int, int> face_index;
  for (int x = 0; x < 4 * n; ++x) face_index.emplace(find(x), static_cast<int>(face_index.size()));
  const int faces = static_cast<int>(face_index.size());
  std::vector<std::vector<int>> adj(faces);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      int a = face_index[find(4 * c + p)], b = face_index[find(4 * c + (p + 1) % 4)];
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::vector<int> colour(faces, -1);
  std::queue<int> q;
  colour[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int g : adj[f]) {
      if (colour[g] == -1) {
        colour[g] = 1 - colour[f];
        q.push(g);
      } else if (colour[g] == colour[f]) {
        throw std::invalid_argument("diagram has no checkerboard colouring");
      }
    }
  }
  std::map<int, int> white;
  for (int f = 0; f < faces; ++f)
    if (colour[f] == 0) white.emplace(f, static_cast<int>(white.size()));
  const int m = static_cast<int>(white.size());
  std::vector<std::vector<BigInt>> g(m, std::vector<BigInt>(m, 0));
  for (int c = 0; c < n; ++c) {
    int f0 = face_index[find(4 * c + 0)], f1 = face_index[find(4 * c + 1)];
    int f2 = face_index[find(4 * c + 2)], f3 = face_index[find(4 * c + 3)];
    int a, b, eta;
    if (colour[f0] == 0) {
      a = white[f0];
      b = white[f2];
      eta = 1;
    } else {
      a = white[f1];
      b = white[f3];
      eta = -1;
    }
    if (a == b) continue;
    g[a][b] -= eta;
    g[b][a] -= eta;
    g[a][a] += eta;
    g[b][b] += eta;
  }
  std::vector<std::vector<BigInt>> minor(m - 1, std::vector<BigInt>(m - 1));
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < m; ++j) minor[i][j] = g[i][j];
  BigInt det = int_det(minor);
  return det < 0 ? BigInt(-det) : det;
}

}  // namespace symknot::oracle
