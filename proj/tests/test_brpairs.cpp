#include "gwb/brpairs.hpp"
#include "gwb/build.hpp"
#include "gwb/error.hpp"
#include "gwb/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace gwb;

namespace {

GroupPtr make(const std::string& name) {
  return std::make_shared<const Group>(build_group(fixture(name).description).group);
}

std::vector<std::string> block_fixtures() {
  std::vector<std::string> out;
  for (const auto& f : fixture_registry())
    if (!f.group_only) out.push_back(f.name);
  return out;
}

std::string sanitize(const ::testing::TestParamInfo<std::string>& info) {
  std::string s;
  for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

int principal(const BrauerContext& ctx) { return ctx.blocks().block_of_character(0); }

// The block of G432 at p = 2 whose characters are nontrivial on the centre.
int faithful_block(const BrauerContext& ctx) {
  const Group& g = ctx.group();
  const ElemSet z = center(g, whole(g));
  const auto& t = ctx.blocks().table();
  int zc = -1;
  for (int x : z)
    if (g.elem_order(x) == 3) zc = g.class_of(x);
  for (int chi = 0; chi < static_cast<int>(t.size()); ++chi)
    if (!(t.value(chi, zc) == t.value(chi, 0))) return ctx.blocks().block_of_character(chi);
  return -1;
}

bool all_zero(const GroupAlgebraElem& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

TEST(BrauerHom, UnitAndDefectZero) {
  auto g = make("S3");
  BrauerContext ctx(g, 2);
  const ElemSet c2 = sylow_subgroup(*g, 2);
  GroupAlgebraElem one(g->order(), ctx.reduction().zero());
  one[0] = ctx.reduction().one();
  EXPECT_EQ(brauer_hom(*g, c2, one), one);
  // The 2-dimensional character sits alone in a block of defect zero.
  const int dz = ctx.blocks().block_of_character(2);
  ASSERT_EQ(ctx.blocks().block(dz).defect, 0);
  EXPECT_TRUE(all_zero(brauer_hom(*g, c2, ctx.idempotent({trivial_subgroup(), dz}))));
  // No pair with a nontrivial first component lies above it.
  for (int f = 0; f < static_cast<int>(ctx.blocks_of(c2).size()); ++f)
    EXPECT_FALSE(ctx.contains({trivial_subgroup(), dz}, {c2, f}));
  EXPECT_TRUE(ctx.covers({trivial_subgroup(), dz}).empty());
}

TEST(BrauerHom, MultiplicativeOnFixedElements) {
  auto g = make("S4");
  BrauerContext ctx(g, 2);
  const ElemSet v4 = o_p(*g, 2);
  std::mt19937 rng(7);
  const FiniteField& f = ctx.reduction().field();
  auto random_fixed = [&](const ElemSet& p) {
    GroupAlgebraElem x(g->order(), ctx.reduction().zero());
    std::vector<bool> done(g->order(), false);
    for (int h = 0; h < static_cast<int>(g->order()); ++h) {
      if (done[h]) continue;
      const FieldElem c(f, static_cast<int>(rng() % f.size()));
      for (int y : p) {
        x[g->conj(y, h)] = c;
        done[g->conj(y, h)] = true;
      }
    }
    return x;
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_fixed(v4), b = random_fixed(v4);
    EXPECT_EQ(brauer_hom(*g, v4, multiply(*g, a, b)),
              multiply(*g, brauer_hom(*g, v4, a), brauer_hom(*g, v4, b)));
  }
  GroupAlgebraElem bad(g->order(), ctx.reduction().zero());
  bad[1] = ctx.reduction().one();
  EXPECT_THROW(brauer_hom(*g, v4, bad), InputError);
}

TEST(BrauerPairs, SymmetricGroupAtThree) {
  auto g = make("S3");
  BrauerContext ctx(g, 3);
  const int b0 = principal(ctx);
  const auto top = ctx.maximal_pair(b0);
  EXPECT_EQ(top.p, sylow_subgroup(*g, 3));
  EXPECT_EQ(ctx.blocks_of(top.p).size(), 1u);
  EXPECT_TRUE(ctx.contains({trivial_subgroup(), b0}, top));
  EXPECT_TRUE(ctx.contains(top, top));
  auto fam = compatible_family(ctx, top);
  EXPECT_EQ(fam.pair(trivial_subgroup()).block, b0);
  EXPECT_EQ(fam.pair(top.p).block, top.block);
}

TEST(BrauerPairs, DefectGroupExamples) {
  {
    auto g = make("S3");
    BrauerContext ctx(g, 2);
    EXPECT_EQ(ctx.defect_group(ctx.blocks().block_of_character(2)), trivial_subgroup());
    EXPECT_EQ(enumerate_pairs(ctx, ctx.blocks().block_of_character(2)).pairs.size(), 1u);
  }
  {
    auto g = make("C7xC2");
    BrauerContext ctx(g, 2);
    for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b)
      EXPECT_EQ(ctx.defect_group(b), sylow_subgroup(*g, 2));
  }
}

TEST(BrauerPairs, SigmaOnCyclicGroup) {
  auto g = make("C7");
  BrauerContext ctx(g, 2);
  const auto& t = ctx.blocks().table();
  for (int chi = 0; chi < 7; ++chi) {
    std::vector<Cyclotomic> sq;
    for (const auto& v : t.row(chi)) sq.push_back(v.galois(2));
    const int chi2 = t.find({t.group_ptr(), sq});
    const BrauerPair pair{trivial_subgroup(), ctx.blocks().block_of_character(chi)};
    EXPECT_EQ(ctx.sigma(pair).block, ctx.blocks().block_of_character(chi2));
  }
}

class PairFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(PairFixture, PosetAxiomsAndMaximalPairs) {
  auto g = make(GetParam());
  if (g->order() > 500) GTEST_SKIP() << "exhaustive poset checks limited to small groups";
  for (int p : fixture(GetParam()).primes) {
    BrauerContext ctx(g, p);
    for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
      auto poset = enumerate_pairs(ctx, b);
      const auto& pairs = poset.pairs;
      const int n = static_cast<int>(pairs.size());
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) le[i][j] = ctx.contains(pairs[i], pairs[j]);
      for (int i = 0; i < n; ++i) {
        EXPECT_TRUE(le[i][i]);
        // Exactly one pair below (P, e) for every subgroup Q of P, and it is a b-pair.
        for (const auto& q : subgroups_of(*g, pairs[i].p)) {
          int count = 0;
          for (int f = 0; f < static_cast<int>(ctx.blocks_of(q).size()); ++f)
            if (ctx.contains({q, f}, pairs[i])) {
              ++count;
              EXPECT_GE(poset.index_of({q, f}), 0);
            }
          EXPECT_EQ(count, 1);
        }
        for (int j = 0; j < n; ++j) {
          if (i != j) EXPECT_FALSE(le[i][j] && le[j][i]);
          for (int k = 0; k < n; ++k)
            if (le[i][j] && le[j][k]) EXPECT_TRUE(le[i][k]);
        }
      }
      // Conjugation preserves containment.
      for (int x : g->generators())
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (le[i][j]) EXPECT_TRUE(ctx.contains(ctx.conjugate(pairs[i], x), ctx.conjugate(pairs[j], x)));
      // Maximal pairs are conjugate and their first component has the block's defect.
      const auto& m0 = pairs[poset.maximal.front()];
      EXPECT_EQ(m0.p.size(), static_cast<std::size_t>(std::pow(p, ctx.blocks().block(b).defect)));
      for (int mi : poset.maximal) {
        bool conj = false;
        for (int x = 0; x < static_cast<int>(g->order()) && !conj; ++x)
          conj = ctx.conjugate(m0, x) == pairs[mi];
        EXPECT_TRUE(conj);
      }
      // sigma maps b-pairs onto sigma(b)-pairs and preserves order both ways.
      auto image = enumerate_pairs(ctx, ctx.blocks().sigma(b));
      ASSERT_EQ(image.pairs.size(), pairs.size());
      for (int i = 0; i < n; ++i) {
        EXPECT_GE(image.index_of(ctx.sigma(pairs[i])), 0);
        for (int j = 0; j < n; ++j)
          EXPECT_EQ(ctx.contains(ctx.sigma(pairs[i]), ctx.sigma(pairs[j])), le[i][j]);
      }
    }
  }
}

TEST_P(PairFixture, FamilyFusionAndCentricity) {
  auto g = make(GetParam());
  for (int p : fixture(GetParam()).primes) {
    BrauerContext ctx(g, p);
    for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
      const auto top = ctx.maximal_pair(b);
      auto fam = compatible_family(ctx, top);
      EXPECT_EQ(fam.pair(trivial_subgroup()).block, b);
      for (std::size_t i = 0; i < fam.subgroups.size(); ++i)
        for (std::size_t j = 0; j < fam.subgroups.size(); ++j)
          if (is_subset(fam.subgroups[i], fam.subgroups[j]))
            EXPECT_TRUE(ctx.contains(fam.pair(static_cast<int>(i)), fam.pair(static_cast<int>(j))));
      auto fs = FusionSystem::of_block(ctx, fam);
      for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
        const auto pair = fam.pair(static_cast<int>(i));
        const ElemSet& q = pair.p;
        // |Out_F(P)| = |N_G(P, e_P)| / |P C_G(P)|
        const ElemSet pc = join(*g, q, centralizer(*g, q));
        EXPECT_EQ(fs.out_order(q) * pc.size(), ctx.stabilizer(pair).size());
        EXPECT_EQ(ctx.self_centralizing(pair), fs.is_centric(q)) << GetParam() << " p=" << p;
        // The sigma-conjugate pair is self-centralizing exactly when this one is.
        EXPECT_EQ(ctx.self_centralizing(ctx.sigma(pair)), ctx.self_centralizing(pair));
      }
      // Inner automorphisms of D are F-automorphisms.
      EXPECT_GE(fs.aut_order(top.p), top.p.size() / center(*g, top.p).size());
      EXPECT_TRUE(fs.is_fully_centralized(top.p));
      EXPECT_EQ(ctx.self_centralizing({trivial_subgroup(), b}), top.p.size() == 1);
      // The identity of D identifies the fusion systems of b and sigma(b).
      const auto stop = ctx.sigma(top);
      auto sfam = compatible_family(ctx, stop);
      EXPECT_TRUE(fs.same_morphisms(FusionSystem::of_block(ctx, sfam)));
      if (b == principal(ctx))
        EXPECT_TRUE(fs.same_morphisms(FusionSystem::of_group(g, top.p)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, PairFixture, ::testing::ValuesIn(block_fixtures()), sanitize);

TEST(Fusion, SymmetricGroupOfDegreeFour) {
  auto g = make("S4");
  BrauerContext ctx(g, 2);
  auto fam = compatible_family(ctx, ctx.maximal_pair(principal(ctx)));
  auto fs = FusionSystem::of_block(ctx, fam);
  EXPECT_EQ(fs.o_p(), o_p(*g, 2));
  EXPECT_EQ(fs.o_p().size(), 4u);
}

TEST(Fusion, CentralExtensionFaithfulBlock) {
  auto g = make("G432");
  BrauerContext ctx(g, 2);
  const int b = faithful_block(ctx);
  ASSERT_GE(b, 0);
  const auto top = ctx.maximal_pair(b);
  ASSERT_EQ(top.p.size(), 16u);
  EXPECT_EQ(top.p, sylow_subgroup(*g, 2));
  EXPECT_TRUE(ctx.self_centralizing(top));
  auto fam = compatible_family(ctx, top);
  auto fs = FusionSystem::of_block(ctx, fam);
  EXPECT_EQ(fs.out_order(top.p), 9u);
  // Out_F(E16) is elementary abelian of order 9: every automorphism has order dividing 3.
  for (const auto& m : fs.aut(top.p)) {
    const int y3 = g->pow(m.by, 3);
    for (int x : top.p) EXPECT_EQ(g->conj(y3, x), x);
  }
  EXPECT_EQ(fs.o_p(), top.p);
  EXPECT_TRUE(f_invariants(fs, top.p).normal);
  // The sigma-image block has the same poset shape.
  auto poset = enumerate_pairs(ctx, b);
  auto image = enumerate_pairs(ctx, ctx.blocks().sigma(b));
  EXPECT_EQ(poset.pairs.size(), image.pairs.size());
  for (const auto& [i, j] : poset.steps)
    EXPECT_TRUE(ctx.contains(ctx.sigma(poset.pairs[i]), ctx.sigma(poset.pairs[j])));
  for (int mi : poset.maximal) EXPECT_TRUE(image.index_of(ctx.sigma(poset.pairs[mi])) >= 0);
}
