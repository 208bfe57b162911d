#include "gwb/cohomology.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace gwb {

TableGroup TableGroup::from_group(const Group& g) {
  TableGroup t;
  t.order = static_cast<int>(g.order());
  t.table.resize(static_cast<std::size_t>(t.order) * t.order);
  t.inverse.resize(t.order);
  for (int a = 0; a < t.order; ++a) {
    t.inverse[a] = g.inv(a);
    for (int b = 0; b < t.order; ++b) t.table[a * t.order + b] = g.mul(a, b);
  }
  return t;
}

void TableGroup::validate() const {
  const int n = order;
  if (static_cast<int>(table.size()) != n * n || static_cast<int>(inverse.size()) != n)
    throw InputError("group table has the wrong shape");
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw InputError("element 0 is not the identity");
    if (mul(a, inverse[a]) != 0) throw InputError("inverse table is wrong");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("group table is not associative");
}

namespace {

long long mod(long long x, long long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long inverse_mod(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r) {
    const long long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InternalError("not a unit");
  return mod(x, m);
}

std::vector<std::pair<long long, int>> factor(long long m) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      int k = 0;
      while (m % d == 0) {
        m /= d;
        ++k;
      }
      out.emplace_back(d, k);
    }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

int valuation(long long x, long long l) {
  int v = 0;
  while (x % l == 0) {
    x /= l;
    ++v;
  }
  return v;
}

long long p_prime_part(long long n, int p) {
  while (n % p == 0) n /= p;
  return n;
}

// Diagonalization over the local ring Z/l^k: pivots of least valuation,
// row operations carried to `rhs`, column operations recorded in `cols`.
struct LocalElimination {
  long long l;
  int k;
  long long q;
  std::vector<int> vals;
  std::vector<long long> units;

  LocalElimination(long long l_, int k_) : l(l_), k(k_), q(ipow(l_, k_)) {}

  void run(modular::IntMat& a, std::vector<long long>* rhs, modular::IntMat* cols) {
    const std::size_t rows = a.size();
    const std::size_t ncols = rows ? a[0].size() : 0;
    for (auto& row : a)
      for (auto& x : row) x = mod(x, q);
    if (rhs)
      for (auto& x : *rhs) x = mod(x, q);
    for (std::size_t r = 0; r < std::min(rows, ncols); ++r) {
      int best = k;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = r; i < rows && best > 0; ++i)
        for (std::size_t j = r; j < ncols; ++j) {
          if (!a[i][j]) continue;
          const int v = valuation(a[i][j], l);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
      if (best == k) break;
      std::swap(a[r], a[bi]);
      if (rhs) std::swap((*rhs)[r], (*rhs)[bi]);
      if (bj != r) {
        for (auto& row : a) std::swap(row[r], row[bj]);
        if (cols)
          for (auto& row : *cols) std::swap(row[r], row[bj]);
      }
      const long long lv = ipow(l, best);
      const long long u = a[r][r] / lv;
      const long long uinv = inverse_mod(u, q);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (!a[i][r]) continue;
        const long long f = mulmod(a[i][r] / lv, uinv, q);
        for (std::size_t j = r; j < ncols; ++j)
          if (a[r][j]) a[i][j] = mod(a[i][j] - mulmod(f, a[r][j], q), q);
        if (rhs) (*rhs)[i] = mod((*rhs)[i] - mulmod(f, (*rhs)[r], q), q);
      }
      for (std::size_t j = r + 1; j < ncols; ++j) {
        if (!a[r][j]) continue;
        const long long f = mulmod(a[r][j] / lv, uinv, q);
        a[r][j] = 0;
        if (cols)
          for (auto& row : *cols) row[j] = mod(row[j] - mulmod(f, row[r], q), q);
      }
      vals.push_back(best);
      units.push_back(u);
    }
  }
};

std::optional<std::vector<long long>> solve_local(modular::IntMat a, std::vector<long long> b,
                                                  long long l, int k) {
  const std::size_t ncols = a.empty() ? 0 : a[0].size();
  modular::IntMat cols(ncols, std::vector<long long>(ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) cols[i][i] = 1;
  LocalElimination el(l, k);
  el.run(a, &b, &cols);
  const std::size_t rank = el.vals.size();
  for (std::size_t i = rank; i < b.size(); ++i)
    if (b[i]) return std::nullopt;
  std::vector<long long> y(ncols, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    const long long lv = ipow(l, el.vals[r]);
    if (b[r] % lv) return std::nullopt;
    y[r] = mulmod(b[r] / lv, inverse_mod(el.units[r], el.q), el.q);
  }
  std::vector<long long> x(ncols, 0);
  for (std::size_t i = 0; i < ncols; ++i)
    for (std::size_t r = 0; r < ncols; ++r)
      if (y[r] && cols[i][r]) x[i] = mod(x[i] + mulmod(cols[i][r], y[r], el.q), el.q);
  return x;
}

}  // namespace

namespace modular {

std::optional<std::vector<long long>> solve(const IntMat& a, const std::vector<long long>& b,
                                            long long m) {
  const std::size_t ncols = a.empty() ? 0 : a[0].size();
  std::vector<long long> x(ncols, 0);
  long long done = 1;
  for (auto [l, k] : factor(m)) {
    auto part = solve_local(a, b, l, k);
    if (!part) return std::nullopt;
    const long long q = ipow(l, k);
    // CRT: x = x mod done, x = part mod q.
    const long long t = inverse_mod(mod(done, q), q);
    for (std::size_t i = 0; i < ncols; ++i) {
      const long long diff = mod((*part)[i] - x[i], q);
      x[i] = mod(x[i] + done * mulmod(diff, t, q), done * q);
    }
    done *= q;
  }
  return x;
}

long long image_length(IntMat a, long long l, int k) {
  LocalElimination el(l, k);
  el.run(a, nullptr, nullptr);
  long long total = 0;
  for (int v : el.vals) total += k - v;
  return total;
}

}  // namespace modular

bool is_cocycle(const Cocycle& a) {
  const TableGroup& g = a.group;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      for (int z = 0; z < g.order; ++z)
        if (mod(a.at(x, y) + a.at(g.mul(x, y), z) - a.at(y, z) - a.at(x, g.mul(y, z)), a.modulus))
          return false;
  return true;
}

bool is_normalized(const Cocycle& a) {
  for (int x = 0; x < a.group.order; ++x)
    if (mod(a.at(0, x), a.modulus) || mod(a.at(x, 0), a.modulus)) return false;
  return true;
}

std::optional<CoboundaryWitness> coboundary_witness(const Cocycle& a, int p) {
  const int n = a.group.order;
  const long long e = p_prime_part(n, p);
  const long long m = a.modulus * e;
  modular::IntMat rows;
  std::vector<long long> rhs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<long long> row(n, 0);
      row[x] += 1;
      row[y] += 1;
      row[a.group.mul(x, y)] -= 1;
      rows.push_back(std::move(row));
      rhs.push_back(mod(a.at(x, y), a.modulus) * e);
    }
  auto beta = modular::solve(rows, rhs, m);
  if (!beta) return std::nullopt;
  return CoboundaryWitness{m, *beta};
}

bool is_coboundary(const Cocycle& a, int p) { return coboundary_witness(a, p).has_value(); }

Cocycle power(const Cocycle& a, long long k) {
  Cocycle out = a;
  for (auto& v : out.values) v = mulmod(mod(v, a.modulus), mod(k, a.modulus), a.modulus);
  return out;
}

bool classes_equal(const Cocycle& a, const Cocycle& b, int p) {
  if (a.modulus != b.modulus || a.group.table != b.group.table)
    throw InputError("cocycles live on different groups or coefficient tables");
  Cocycle d = a;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] = mod(a.values[i] - b.values[i], a.modulus);
  return is_coboundary(d, p);
}

long long class_order(const Cocycle& a, int p) {
  const long long e = p_prime_part(a.group.order, p);
  for (long long k = 1; k <= e; ++k)
    if (e % k == 0 && is_coboundary(power(a, k), p)) return k;
  throw InternalError("class order does not divide the p'-part of the group order");
}

std::vector<long long> h2_invariants(const TableGroup& a, int p, std::size_t cap) {
  if (static_cast<std::size_t>(a.order) > cap) throw CapExceeded("H^2 computation exceeds the group-order cap");
  const int n = a.order;
  const int c1 = n - 1;
  // Normalized cochains: arguments range over non-identity elements.
  modular::IntMat d1, d2;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      std::vector<long long> row(c1, 0);
      row[x - 1] += 1;
      row[y - 1] += 1;
      if (a.mul(x, y)) row[a.mul(x, y) - 1] -= 1;
      d1.push_back(std::move(row));
    }
  auto pair_col = [&](int x, int y) { return (x - 1) * c1 + (y - 1); };
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) {
        std::vector<long long> row(static_cast<std::size_t>(c1) * c1, 0);
        const int xy = a.mul(x, y), yz = a.mul(y, z);
        row[pair_col(y, z)] += 1;
        if (xy) row[pair_col(xy, z)] -= 1;
        if (yz) row[pair_col(x, yz)] += 1;
        row[pair_col(x, y)] -= 1;
        d2.push_back(std::move(row));
      }
  std::vector<long long> out;
  for (auto [l, top] : factor(n)) {
    if (l == p) continue;
    // s_j = log_l |H^2(A, Z/l^j)| - log_l |H^1(A, Z/l^j)| = sum_i min(a_i, j)
    // over the l-primary invariants a_i of the Schur multiplier.
    std::vector<long long> s{0};
    for (int j = 1; j <= top; ++j) {
      const long long im1 = modular::image_length(d1, l, j);
      const long long im2 = modular::image_length(d2, l, j);
      const long long h2 = static_cast<long long>(j) * c1 * c1 - im2 - im1;
      const long long h1 = static_cast<long long>(j) * c1 - im1;
      s.push_back(h2 - h1);
    }
    std::vector<long long> at_least(top + 2, 0);
    for (int j = 1; j <= top; ++j) at_least[j] = s[j] - s[j - 1];
    for (int j = 1; j <= top; ++j)
      for (long long c = at_least[j] - at_least[j + 1]; c > 0; --c) out.push_back(ipow(l, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gwb
