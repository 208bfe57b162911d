#include "gwb/build.hpp"
#include "gwb/error.hpp"
#include "gwb/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace gwb;

namespace {

Group perms(std::size_t n, std::vector<std::vector<std::vector<int>>> gens) {
  return perm_group(n, gens).group;
}

std::vector<std::size_t> class_sizes(const Group& g) {
  std::vector<std::size_t> s;
  for (const auto& c : g.classes()) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

// Conjugacy classes by brute force over all pairs.
std::size_t brute_class_count(const Group& g) {
  std::set<int> seen;
  std::size_t count = 0;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen.count(x)) continue;
    ++count;
    for (int y = 0; y < static_cast<int>(g.order()); ++y) seen.insert(g.conj(y, x));
  }
  return count;
}

}  // namespace

TEST(Perm, CompositionAppliesRightFactorFirst) {
  auto a = Permutation::from_cycles(3, {{1, 2}});
  auto b = Permutation::from_cycles(3, {{2, 3}});
  // (a*b)(1) = a(b(1)) = a(1) = 2
  EXPECT_EQ((a * b)(0), 1);
  EXPECT_EQ((b * a)(0), 2);
  EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InputError);
}

TEST(Group, IdentityFirstAndClassSizes) {
  Group s3 = perms(3, {{{1, 2, 3}}, {{1, 2}}});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_TRUE(s3.element(0).is_identity());
  EXPECT_EQ(class_sizes(s3), (std::vector<std::size_t>{1, 2, 3}));

  Group q8 = perms(8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}});
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(class_sizes(q8), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(q8.exponent(), 4);

  Group a5 = perms(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}});
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_EQ(class_sizes(a5), (std::vector<std::size_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(a5.class_count(), brute_class_count(a5));
}

TEST(Group, ClassesMatchBruteForce) {
  Group s4 = perms(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  EXPECT_EQ(s4.class_count(), brute_class_count(s4));
  for (const auto& c : s4.classes()) {
    EXPECT_EQ(c.size * c.centralizer_order, s4.order());
    EXPECT_EQ(centralizer(s4, {c.representative}).size(), c.centralizer_order);
  }
}

TEST(Group, PowerClassesAndInverses) {
  Group s4 = perms(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  for (int c = 0; c < static_cast<int>(s4.class_count()); ++c) {
    const int r = s4.classes()[c].representative;
    for (int k = -3; k < 6; ++k) EXPECT_EQ(s4.power_class(c, k), s4.class_of(s4.pow(r, k)));
  }
  for (int x = 0; x < static_cast<int>(s4.order()); ++x) EXPECT_EQ(s4.mul(x, s4.inv(x)), 0);
}

TEST(Group, SylowSubgroups) {
  Group s4 = perms(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  ElemSet p = sylow_subgroup(s4, 2);
  EXPECT_EQ(p.size(), 8u);
  EXPECT_TRUE(is_subgroup(s4, p));
  EXPECT_TRUE(is_p_group(s4, p, 2));
  EXPECT_EQ(sylow_subgroup(s4, 3).size(), 3u);
  EXPECT_EQ(o_p(s4, 2).size(), 4u);
}

TEST(Group, PParts) {
  Group c6 = perms(6, {{{1, 2, 3, 4, 5, 6}}});
  for (int x = 0; x < 6; ++x) {
    auto [xp, xq] = p_parts(c6, x, 2);
    EXPECT_EQ(c6.mul(xp, xq), x);
    EXPECT_EQ(c6.mul(xq, xp), x);
    EXPECT_TRUE(is_p_element(c6, xp, 2));
    EXPECT_EQ(c6.elem_order(xq) % 2, 1);
  }
}

TEST(Group, SubgroupsOfD8) {
  Group d8 = perms(4, {{{1, 2, 3, 4}}, {{1, 3}}});
  auto subs = subgroups_of(d8, whole(d8));
  // 1, five of order 2, three of order 4, D8
  EXPECT_EQ(subs.size(), 10u);
  std::map<std::size_t, int> by_size;
  for (const auto& s : subs) {
    EXPECT_TRUE(is_subgroup(d8, s));
    ++by_size[s.size()];
  }
  EXPECT_EQ(by_size[2], 5);
  EXPECT_EQ(by_size[4], 3);
}

TEST(Group, AutomorphismGroupOrders) {
  Group c7 = perms(7, {{{1, 2, 3, 4, 5, 6, 7}}});
  EXPECT_EQ(automorphism_group(c7, whole(c7)).size(), 6u);
  Group v4 = perms(4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  EXPECT_EQ(automorphism_group(v4, whole(v4)).size(), 6u);
  Group d8 = perms(4, {{{1, 2, 3, 4}}, {{1, 3}}});
  EXPECT_EQ(automorphism_group(d8, whole(d8)).size(), 8u);
  Group q8 = perms(8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}});
  EXPECT_EQ(automorphism_group(q8, whole(q8)).size(), 24u);
}

TEST(Group, AutomorphismsOfE16) {
  BuiltGroup e16 = semidirect(2, 4, {}, nullptr);
  EXPECT_EQ(e16.group.order(), 16u);
  // |GL_4(2)| = 15*14*12*8
  EXPECT_EQ(automorphism_group(e16.group, whole(e16.group)).size(), 20160u);
}

TEST(Group, AutomorphismsAreHomomorphisms) {
  Group d8 = perms(4, {{{1, 2, 3, 4}}, {{1, 3}}});
  for (const auto& a : automorphism_group(d8, whole(d8))) {
    EXPECT_TRUE(a.injective());
    for (int x : a.source)
      for (int y : a.source) EXPECT_EQ(a(d8.mul(x, y)), d8.mul(a(x), a(y)));
  }
}

TEST(Build, SemidirectAndCentralExtension) {
  const IntMatrix w = {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const IntMatrix v = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}};
  BuiltGroup l = semidirect(2, 4, {w, v}, nullptr);
  EXPECT_EQ(l.group.order(), 144u);
  std::vector<std::vector<int>> zero(144, std::vector<int>(144, 0));
  BuiltGroup split = central_extension(l, 3, zero);
  EXPECT_EQ(split.group.order(), 432u);
  std::vector<std::vector<int>> bad = zero;
  bad[1][2] = 1;
  EXPECT_THROW(central_extension(l, 3, bad), InputError);
}

TEST(Build, JsonDescriptions) {
  nlohmann::json s3 = {{"kind", "perm"}, {"degree", 3}, {"generators", {{{1, 2, 3}}, {{1, 2}}}}};
  EXPECT_EQ(build_group(s3).group.order(), 6u);
  nlohmann::json prod = {{"kind", "direct"}, {"factors", {s3, s3}}};
  EXPECT_EQ(build_group(prod).group.order(), 36u);
  nlohmann::json sl23 = {{"kind", "matrix"}, {"p", 3}, {"rank", 2},
                         {"matrices", {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}}}};
  Group sl = build_group(sl23).group;
  EXPECT_EQ(sl.order(), 24u);
  EXPECT_EQ(class_sizes(sl), (std::vector<std::size_t>{1, 1, 4, 4, 4, 4, 6}));
  EXPECT_THROW(build_group(nlohmann::json{{"kind", "nope"}}), InputError);
  EXPECT_THROW(build_group(nlohmann::json{{"kind", "perm"}}), InputError);
}

TEST(Build, OrderCapIsEnforced) {
  EXPECT_THROW(perm_group(8, {{{1, 2, 3, 4, 5, 6, 7, 8}}, {{1, 2}}}, 1000), CapExceeded);
}

TEST(Group, DirectProductAndDiagonal) {
  Group s3 = perms(3, {{{1, 2, 3}}, {{1, 2}}});
  Group prod = direct_product(s3, s3);
  EXPECT_EQ(prod.order(), 36u);
  auto id = conjugation_map(s3, whole(s3), 0);
  ElemSet diag = twisted_diagonal(prod, s3, s3, id);
  EXPECT_EQ(diag.size(), 6u);
  EXPECT_TRUE(is_subgroup(prod, diag));
}
