#include "gwb/fixtures.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <cctype>

namespace gwb {

using nlohmann::json;

namespace {

json perm_desc(int degree, json gens) {
  return {{"kind", "perm"}, {"degree", degree}, {"generators", std::move(gens)}};
}

}  // namespace

std::vector<IntMatrix> g432_matrices() {
  // W = [[0,1],[1,1]] has order 3.
  IntMatrix a = {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  IntMatrix b = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}};
  return {a, b};
}

std::vector<IntMatrix> a7_matrices() {
  IntMatrix x = {{0, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}};
  IntMatrix y = {{1, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}};
  return {x, y};
}

std::vector<std::vector<int>> g432_cocycle() {
  const auto mats = g432_matrices();
  BuiltGroup l = semidirect(2, 4, mats, nullptr);
  const Group& g = l.group;
  // Linear actions of a^i b^j as images of the basis vectors 1, 2, 4, 8.
  auto matmul = [](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) r[i][j] = (r[i][j] + x[i][k] * y[k][j]) % 2;
    return r;
  };
  IntMatrix id = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::vector<std::vector<int>> columns(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      IntMatrix m = id;
      for (int s = 0; s < i; ++s) m = matmul(mats[0], m);
      for (int s = 0; s < j; ++s) m = matmul(mats[1], m);
      for (int k = 0; k < 4; ++k) {
        std::vector<int> e(4, 0);
        e[k] = 1;
        columns[3 * i + j].push_back(encode_vector(apply_matrix(m, e, 2), 2));
      }
    }
  const int n = static_cast<int>(g.order());
  std::vector<int> ei(n), ej(n);
  for (int x = 0; x < n; ++x) {
    const Permutation& px = g.element(x);
    const int t = px(0);
    std::vector<int> cols;
    for (int k = 0; k < 4; ++k) cols.push_back(px(static_cast<Point>(1 << k)) ^ t);
    auto it = std::find(columns.begin(), columns.end(), cols);
    if (it == columns.end()) throw InternalError("linear part outside <a, b>");
    const int idx = static_cast<int>(it - columns.begin());
    ei[x] = idx / 3;
    ej[x] = idx % 3;
  }
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) c[x][y] = (ej[x] * ei[y]) % 3;
  return c;
}

const std::vector<FixtureSpec>& fixture_registry() {
  static const std::vector<FixtureSpec> registry = [] {
    std::vector<FixtureSpec> r;
    auto add = [&](std::string name, std::string summary, json desc, std::vector<int> primes,
                   std::size_t order, bool group_only = false) {
      r.push_back({std::move(name), std::move(summary), std::move(desc), std::move(primes),
                   group_only, order});
    };
    json s3 = perm_desc(3, {{{1, 2, 3}}, {{1, 2}}});
    json c7 = perm_desc(7, {{{1, 2, 3, 4, 5, 6, 7}}});
    json c2 = perm_desc(2, {{{1, 2}}});
    json c3 = perm_desc(3, {{{1, 2, 3}}});
    add("S3", "symmetric group of degree 3", s3, {2, 3}, 6);
    add("S4", "symmetric group of degree 4", perm_desc(4, {{{1, 2, 3, 4}}, {{1, 2}}}), {2, 3}, 24);
    add("A4", "alternating group of degree 4", perm_desc(4, {{{1, 2, 3}}, {{2, 3, 4}}}), {2, 3},
        12);
    add("D8", "dihedral group of order 8", perm_desc(4, {{{1, 2, 3, 4}}, {{1, 3}}}), {2, 3}, 8);
    add("Q8", "quaternion group",
        perm_desc(8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}}), {2, 3}, 8);
    add("C7", "cyclic group of order 7", c7, {2, 3}, 7);
    add("C7xC2", "cyclic group of order 14 as a direct product",
        json{{"kind", "direct"}, {"factors", {c7, c2}}}, {2, 3}, 14);
    add("C7:C3", "Frobenius group of order 21",
        perm_desc(7, {{{1, 2, 3, 4, 5, 6, 7}}, {{2, 3, 5}, {4, 7, 6}}}), {2, 3}, 21);
    add("SL(2,3)", "special linear group of 2x2 matrices over GF(3)",
        json{{"kind", "matrix"}, {"p", 3}, {"rank", 2}, {"matrices", {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}}}},
        {2, 3}, 24);
    add("A5", "alternating group of degree 5", perm_desc(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}}),
        {2, 3}, 60);
    add("C3xC3", "elementary abelian group of order 9",
        json{{"kind", "direct"}, {"factors", {c3, c3}}}, {2, 3}, 9);
    add("3^(1+2)", "extraspecial group of order 27 and exponent 3",
        json{{"kind", "semidirect"}, {"p", 3}, {"rank", 2}, {"matrices", {{{1, 0}, {1, 1}}}}},
        {2, 3}, 27);
    const auto gm = g432_matrices();
    json l = {{"kind", "semidirect"}, {"p", 2}, {"rank", 4}, {"matrices", gm}};
    add("G432", "central extension of E16 x| (C3 x C3) by C3 with an order-3 class",
        json{{"kind", "central_ext"}, {"base", l}, {"center_order", 3}, {"cocycle", g432_cocycle()}},
        {2, 3}, 432);
    add("E16:A7", "E16 x| A7 with A7 inside GL4(2); group-level checks only",
        json{{"kind", "semidirect"}, {"p", 2}, {"rank", 4}, {"matrices", a7_matrices()}}, {2},
        40320, true);
    return r;
  }();
  return registry;
}

const FixtureSpec& fixture(const std::string& name) {
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  for (const auto& f : fixture_registry())
    if (lower(f.name) == lower(name)) return f;
  throw InputError("unknown fixture: " + name);
}

}  // namespace gwb
