#include "gwb/linalg.hpp"

#include "gwb/error.hpp"

namespace gwb::linalg {

std::vector<int> rref(const FiniteField& f, Mat& m) {
  std::vector<int> piv;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && m[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(m[r], m[s]);
    const int iv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int factor = f.neg(m[i][c]);
      for (std::size_t k = c; k < cols; ++k)
        if (m[r][k]) m[i][k] = f.add(m[i][k], f.mul(factor, m[r][k]));
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return piv;
}

int rank(const FiniteField& f, Mat m) { return static_cast<int>(rref(f, m).size()); }

Mat nullspace(const FiniteField& f, Mat m, std::size_t cols) {
  auto piv = rref(f, m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(m[i][free]);
    basis.push_back(v);
  }
  return basis;
}

std::optional<Vec> solve(const FiniteField& f, const Mat& a, const Vec& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(f, aug);
  Vec x(cols, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (static_cast<std::size_t>(piv[i]) == cols) return std::nullopt;
    x[piv[i]] = aug[i][cols];
  }
  return x;
}

Mat multiply(const FiniteField& f, const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (a[0].size() != k) throw InternalError("matrix shapes do not match");
  Mat r(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const int x = a[i][t];
      if (!x) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[t][j]) r[i][j] = f.add(r[i][j], f.mul(x, b[t][j]));
    }
  return r;
}

Vec apply(const FiniteField& f, const Mat& a, const Vec& v) {
  Vec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] && v[j]) r[i] = f.add(r[i], f.mul(a[i][j], v[j]));
  return r;
}

Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::optional<Mat> inverse(const FiniteField& f, const Mat& a) {
  const std::size_t n = a.size();
  Mat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, 0);
    aug[i][n + i] = 1;
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || static_cast<std::size_t>(piv[n - 1]) >= n) return std::nullopt;
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace gwb::linalg
