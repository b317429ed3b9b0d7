#pragma once

namespace symknot {

template <class R>
std::vector<R> charpoly_berkowitz(const Matrix<R>& m, const R& zero, const R& one) {
  const int n = m.rows();
  // c holds det(xI - M_r) for the leading r x r block, highest degree first.
  std::vector<R> c{one};
  for (int r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{r-1} C.
    std::vector<R> q(r + 2, zero);
    q[0] = one;
    q[1] = -m(r, r);
    std::vector<R> v(r, zero);
    for (int i = 0; i < r; ++i) v[i] = m(i, r);
    for (int k = 0; k < r; ++k) {
      R acc = zero;
      for (int j = 0; j < r; ++j) acc = acc + m(r, j) * v[j];
      q[k + 2] = -acc;
      if (k + 1 < r) {
        std::vector<R> w(r, zero);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) w[i] = w[i] + m(i, j) * v[j];
        v.swap(w);
      }
    }
    std::vector<R> next(r + 2, zero);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) next[i] = next[i] + q[i - j] * c[j];
    c.swap(next);
  }
  return std::vector<R>(c.rbegin(), c.rend());
}

}  // namespace symknot
