#include "gwb/build.hpp"
#include "gwb/error.hpp"
#include "gwb/fixtures.hpp"
#include "gwb/isotypy.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace gwb;

namespace {

GroupPtr make(const std::string& name) {
  return std::make_shared<const Group>(build_group(fixture(name).description).group);
}

struct Case {
  std::string fixture;
  int p;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (const auto& f : fixture_registry())
    if (!f.group_only)
      for (int p : f.primes) out.push_back({f.name, p});
  return out;
}

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  std::string s;
  for (char c : info.param.fixture) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s + "_p" + std::to_string(info.param.p);
}

bool p_regular(const Group& g, int x, int p) { return g.elem_order(x) % p != 0; }

// chi(g^k) as a class function.
ClassFunction power_map(const CharacterTable& t, int chi, int k) {
  ClassFunction f{t.group_ptr(), {}};
  for (std::size_t c = 0; c < t.group().class_count(); ++c)
    f.values.push_back(t.value(chi, t.group().power_class(static_cast<int>(c), k)));
  return f;
}

int image_of(const Isometry& iso, int chi) {
  const auto pos = std::find(iso.source.begin(), iso.source.end(), chi);
  if (pos == iso.source.end()) return -1;
  const auto& row = iso.images[pos - iso.source.begin()];
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j]) return row[j] == 1 ? static_cast<int>(j) : -2;
  return -1;
}

int faithful_block(const BrauerContext& ctx) {
  const Group& g = ctx.group();
  const auto& t = ctx.blocks().table();
  int zc = -1;
  for (int x : center(g, whole(g)))
    if (g.elem_order(x) == 3) zc = g.class_of(x);
  for (int chi = 0; chi < static_cast<int>(t.size()); ++chi)
    if (!(t.value(chi, zc) == t.value(chi, 0))) return ctx.blocks().block_of_character(chi);
  return -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generalized decomposition maps

TEST(GenDecomposition, DefectZeroCharacterIsFixed) {
  auto g = make("S3");
  BrauerContext ctx(g, 2);
  const auto& t = ctx.blocks().table();
  const int dz = ctx.blocks().block_of_character(2);
  const ClassFunction chi = t.character(2);
  EXPECT_EQ(gen_decomposition(ctx, trivial_subgroup(), 0, dz, chi).values, chi.values);
  // The other block sees nothing of it.
  const int b0 = ctx.blocks().block_of_character(0);
  for (const auto& v : gen_decomposition(ctx, trivial_subgroup(), 0, b0, chi).values) EXPECT_TRUE(v.is_zero());
}

TEST(GenDecomposition, RejectsNonPElements) {
  auto g = make("S3");
  BrauerContext ctx(g, 2);
  int three = -1;
  for (int x = 0; x < static_cast<int>(g->order()); ++x)
    if (g->elem_order(x) == 3) three = x;
  EXPECT_THROW(DecompositionMap(ctx, trivial_subgroup(), three, 0), InputError);
}

class DecompFixture : public ::testing::TestWithParam<Case> {};

// Against the second main theorem: summed over the blocks f of C_G(u) the maps
// recover chi(us), each piece is a p'-function of the block f, and it is
// nonzero only when (1, b_chi) <= (<u>, f).
TEST_P(DecompFixture, SecondMainTheorem) {
  const auto& [name, p] = GetParam();
  auto g = make(name);
  if (g->order() > 200) GTEST_SKIP() << "covered by the isotypy checks";
  BrauerContext ctx(g, p);
  const auto& t = ctx.blocks().table();
  for (const auto& cls : g->classes()) {
    const int u = cls.representative;
    if (!is_p_element(*g, u, p)) continue;
    const ElemSet cu = join(*g, trivial_subgroup(), ElemSet{u});
    const auto& loc = ctx.local(cu);
    const auto& bs = *loc.blocks;
    std::vector<DecompositionMap> maps;
    for (int f = 0; f < static_cast<int>(bs.size()); ++f) maps.emplace_back(ctx, trivial_subgroup(), u, f);
    for (int chi = 0; chi < static_cast<int>(t.size()); ++chi) {
      ClassFunction sum = zero_function(loc.group, t.conductor());
      for (int f = 0; f < static_cast<int>(bs.size()); ++f) {
        const ClassFunction d = maps[f](t.character(chi));
        sum += d;
        bool nonzero = false;
        for (std::size_t c = 0; c < d.values.size(); ++c) {
          const int s = loc.group->to_ambient(loc.group->classes()[c].representative);
          if (!p_regular(*g, s, p)) EXPECT_TRUE(d.values[c].is_zero());
          nonzero = nonzero || !d.values[c].is_zero();
        }
        const auto coeffs = decompose(d, bs.table());
        for (int psi = 0; psi < static_cast<int>(coeffs.size()); ++psi)
          if (bs.block_of_character(psi) != f) EXPECT_TRUE(coeffs[psi].is_zero());
        if (nonzero) EXPECT_TRUE(ctx.contains({trivial_subgroup(), ctx.blocks().block_of_character(chi)}, {cu, f}));
      }
      for (std::size_t c = 0; c < sum.values.size(); ++c) {
        const int s = loc.group->to_ambient(loc.group->classes()[c].representative);
        if (p_regular(*g, s, p)) EXPECT_EQ(sum.values[c], t.value(chi, g->class_of(g->mul(u, s))));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, DecompFixture, ::testing::ValuesIn(cases()), case_name);

// ---------------------------------------------------------------------------
// Kessar's family

TEST(KessarFamily, C7SquaresAtTwo) {
  auto g = make("C7");
  BrauerContext ctx(g, 2);
  const auto& t = ctx.blocks().table();
  for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
    const auto fam = kessar_family(ctx, ctx.maximal_pair(b));
    ASSERT_EQ(fam.maps.size(), 1u);
    for (int chi : fam.maps[0].source) {
      const int img = image_of(fam.maps[0], chi);
      ASSERT_GE(img, 0);
      // lambda(g^2) = lambda^2(g), in sigma(e_lambda).
      EXPECT_EQ(t.character(img).values, power_map(t, chi, 2).values);
      EXPECT_EQ(ctx.blocks().block_of_character(img), ctx.blocks().sigma(b));
    }
  }
}

TEST(KessarFamily, C7TwiceIsTheFourthPower) {
  auto g = make("C7");
  BrauerContext ctx(g, 2);
  const auto& t = ctx.blocks().table();
  for (int chi = 1; chi < 7; ++chi) {
    const int b = ctx.blocks().block_of_character(chi);
    const auto f1 = kessar_family(ctx, ctx.maximal_pair(b));
    const int once = image_of(f1.maps[0], chi);
    const auto f2 = kessar_family(ctx, ctx.maximal_pair(ctx.blocks().sigma(b)));
    const int twice = image_of(f2.maps[0], once);
    EXPECT_EQ(t.character(twice).values, power_map(t, chi, 4).values);
  }
}

TEST(KessarFamily, S3IsTheIdentityAtTwo) {
  auto g = make("S3");
  BrauerContext ctx(g, 2);
  for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
    const auto fam = kessar_family(ctx, ctx.maximal_pair(b));
    for (std::size_t i = 0; i < fam.maps.size(); ++i)
      for (int chi : fam.maps[i].source) EXPECT_EQ(image_of(fam.maps[i], chi), chi);
  }
}

TEST(KessarFamily, TrivialDefectHasOnlyTheTopIsometry) {
  auto g = make("S3");
  BrauerContext ctx(g, 2);
  const int dz = ctx.blocks().block_of_character(2);
  const auto fam = kessar_family(ctx, ctx.maximal_pair(dz));
  ASSERT_EQ(fam.maps.size(), 1u);
  const auto rep = verify_isotypy(ctx, fam);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.compatibility_classes, 1u);
  ASSERT_EQ(rep.perfection.size(), 1u);
  EXPECT_TRUE(rep.perfection[0].pass());
}

// Perfection read literally: I^1 sends O-valued class functions of the block
// to O-valued ones and p'-supported ones to p'-supported ones. Spanning
// functions: f_C = sum_{chi in e} conj(chi(g_C)) chi, the block part of
// |C_G(g_C)| times the indicator of C; p'-supported when C is p-regular.
TEST(KessarFamily, PreservesIntegralAndPRegularFunctions) {
  for (const auto& [name, p] : {Case{"S4", 2}, Case{"C7", 2}, Case{"C7xC2", 2}, Case{"A4", 3}}) {
    SCOPED_TRACE(name);
    auto g = make(name);
    BrauerContext ctx(g, p);
    const auto& t = ctx.blocks().table();
    for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
      const auto fam = kessar_family(ctx, ctx.maximal_pair(b));
      for (std::size_t c = 0; c < g->class_count(); ++c) {
        ClassFunction f = zero_function(g, t.conductor());
        for (int chi : ctx.blocks().block(b).characters)
          for (std::size_t d = 0; d < g->class_count(); ++d)
            f.values[d] += t.value(chi, static_cast<int>(c)).conj() * t.value(chi, static_cast<int>(d));
        ASSERT_TRUE(o_valued(f, ctx.reduction()));
        const ClassFunction img = apply_isometry(ctx, fam, 0, f);
        EXPECT_TRUE(o_valued(img, ctx.reduction()));
        EXPECT_TRUE(supported_on(img, t, ctx.blocks().block(ctx.blocks().sigma(b)).characters));
        if (p_regular(*g, g->classes()[c].representative, p)) {
          ASSERT_TRUE(vanishes_off_p_regular(f, p));
          EXPECT_TRUE(vanishes_off_p_regular(img, p));
        }
      }
    }
  }
}

class IsotypyFixture : public ::testing::TestWithParam<Case> {};

TEST_P(IsotypyFixture, KessarFamilyIsAPerfectIsotypy) {
  const auto& [name, p] = GetParam();
  auto g = make(name);
  BrauerContext ctx(g, p);
  for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
    const auto top = ctx.maximal_pair(b);
    if (top.p.size() > kDefectGroupCap) continue;
    SCOPED_TRACE("block " + std::to_string(b));
    const auto fam = kessar_family(ctx, top);
    // Permutation matrices with all signs +1.
    for (const auto& iso : fam.maps)
      for (int chi : iso.source) EXPECT_GE(image_of(iso, chi), 0);
    const auto rep = verify_isotypy(ctx, fam);
    EXPECT_TRUE(rep.isometry.pass);
    EXPECT_TRUE(rep.equivariance.pass);
    EXPECT_TRUE(rep.compatibility.pass);
    EXPECT_TRUE(rep.perfect());
    EXPECT_GT(rep.compatibility.checks, 0u);
    EXPECT_EQ(rep.perfection.size(), fam.maps.size());
    if (!rep.equivariance.witnesses.empty()) ADD_FAILURE() << rep.equivariance.witnesses.front().what;
    if (!rep.compatibility.witnesses.empty()) ADD_FAILURE() << rep.compatibility.witnesses.front().what;
  }
}

// Each mutant breaks the axiom it targets. G432 is checked on its principal
// block only, to keep the suite short.
TEST_P(IsotypyFixture, MutantsAreCaught) {
  const auto& [name, p] = GetParam();
  auto g = make(name);
  BrauerContext ctx(g, p);
  const int blocks = g->order() > 200 ? 1 : static_cast<int>(ctx.blocks().size());
  std::map<Mutant, int> applied;
  for (int b = 0; b < blocks; ++b) {
    const auto fam = kessar_family(ctx, ctx.maximal_pair(b));
    for (Mutant m : {Mutant::ScaleImage, Mutant::SwapImages, Mutant::NegateConjugate, Mutant::ForeignImage}) {
      const auto mf = mutate(ctx, fam, m);
      if (!mf) continue;
      ++applied[m];
      SCOPED_TRACE(std::string(mutant_name(m)) + " block " + std::to_string(b));
      const auto rep = verify_isotypy(ctx, *mf, m == Mutant::ForeignImage);
      EXPECT_FALSE(rep.pass());
      switch (m) {
        case Mutant::ScaleImage: EXPECT_FALSE(rep.isometry.pass); break;
        case Mutant::SwapImages:
          EXPECT_FALSE(rep.compatibility.pass);
          if (!rep.compatibility.witnesses.empty()) EXPECT_GE(rep.compatibility.witnesses.front().element, 0);
          break;
        case Mutant::NegateConjugate: EXPECT_FALSE(rep.equivariance.pass); break;
        case Mutant::ForeignImage:
          ASSERT_FALSE(rep.perfection.empty());
          EXPECT_FALSE(rep.perfection[0].separation);
          break;
      }
    }
  }
  // Scaling and swapping apply to every family.
  EXPECT_EQ(applied[Mutant::ScaleImage], blocks);
  EXPECT_EQ(applied[Mutant::SwapImages], blocks);
  // Without p dividing |G| there is no defect to get wrong.
  if (g->order() % p == 0) EXPECT_GT(applied[Mutant::ForeignImage], 0);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, IsotypyFixture, ::testing::ValuesIn(cases()), case_name);

TEST(Mutants, EveryKindOccursInTheRegistry) {
  std::map<Mutant, int> applied;
  for (const std::string name : {"S3", "S4", "C7"}) {
    auto g = make(name);
    for (int p : {2, 3}) {
      BrauerContext ctx(g, p);
      for (int b = 0; b < static_cast<int>(ctx.blocks().size()); ++b) {
        const auto fam = kessar_family(ctx, ctx.maximal_pair(b));
        for (Mutant m : {Mutant::ScaleImage, Mutant::SwapImages, Mutant::NegateConjugate, Mutant::ForeignImage})
          if (mutate(ctx, fam, m)) ++applied[m];
      }
    }
  }
  EXPECT_EQ(applied.size(), 4u);
}

// ---------------------------------------------------------------------------
// The componentwise equivariance criterion against Brauer pairs of G x G.

class ProductCriterion : public ::testing::TestWithParam<Case> {};

TEST_P(ProductCriterion, MatchesTwistedDiagonalPairs) {
  const auto& [name, p] = GetParam();
  auto g = make(name);
  BrauerContext ctx(g, p);
  auto prod = std::make_shared<const Group>(direct_product(*g, *g));
  BrauerContext pctx(prod, p, ctx.conductor());
  const FiniteField& f = pctx.reduction().field();
  ASSERT_EQ(&f, &ctx.reduction().field());
  const int n = static_cast<int>(g->order());

  auto diagonal = [&](const ElemSet& q) {
    ElemSet out;
    for (int x : q) out.push_back(pair_index(*prod, *g, *g, x, x));
    std::sort(out.begin(), out.end());
    return out;
  };
  // The block sigma(e_Q) (x) e_Q^* of C_G(Q) x C_G(Q).
  auto product_pair = [&](const IsometryFamily& fam, int i) {
    const ElemSet dq = diagonal(fam.source.subgroups[i]);
    const auto a = ctx.idempotent(fam.target.pair(i));
    const auto b = ctx.idempotent(fam.source.pair(i));
    GroupAlgebraElem e(prod->order(), pctx.reduction().zero());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!a[x].is_zero() && !b[g->inv(y)].is_zero())
          e[pair_index(*prod, *g, *g, x, y)] = FieldElem(f, f.mul(a[x].value, b[g->inv(y)].value));
    const int label = pctx.blocks_of(dq).find(pctx.class_vector(dq, e));
    EXPECT_GE(label, 0);
    return BrauerPair{dq, label};
  };

  for (int blk = 0; blk < static_cast<int>(ctx.blocks().size()); ++blk) {
    const auto fam = kessar_family(ctx, ctx.maximal_pair(blk));
    const std::size_t top = fam.source.subgroups.size() - 1;
    const BrauerPair big = product_pair(fam, static_cast<int>(top));
    for (std::size_t i = 0; i < fam.source.subgroups.size(); ++i) {
      const ElemSet& q = fam.source.subgroups[i];
      const BrauerPair small = product_pair(fam, static_cast<int>(i));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const bool product = pctx.contains(pctx.conjugate(small, pair_index(*prod, *g, *g, x, y)), big);
          bool same_map = true;
          for (int z : q) same_map = same_map && g->conj(x, z) == g->conj(y, z);
          const ElemSet qx = conjugate(*g, q, x);
          const bool componentwise =
              same_map && is_subset(qx, fam.source.maximal.p) &&
              ctx.contains(ctx.conjugate(fam.target.pair(static_cast<int>(i)), x), fam.target.maximal) &&
              ctx.contains(ctx.conjugate(fam.source.pair(static_cast<int>(i)), y), fam.source.maximal);
          EXPECT_EQ(product, componentwise) << "Q#" << i << " g=" << x << " h=" << y;
        }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, ProductCriterion,
                         ::testing::Values(Case{"C7", 2}, Case{"S3", 2}, Case{"S3", 3}, Case{"A4", 2}),
                         case_name);

// ---------------------------------------------------------------------------
// Obstructions and the example conditions

TEST(Obstruction, G432FaithfulBlock) {
  auto g = make("G432");
  BrauerContext ctx(g, 2);
  const int b = faithful_block(ctx);
  const auto top = ctx.maximal_pair(b);
  const auto rep = check_obstruction_hypotheses(ctx, top);
  EXPECT_EQ(rep.thm_two, Verdict::True);
  EXPECT_EQ(rep.thm_three, Verdict::Undetermined);
  EXPECT_TRUE(rep.capped.empty());
  const auto fam = compatible_family(ctx, top);
  bool found = false;
  for (const auto& w : rep.pairs) {
    EXPECT_TRUE(w.lemma_three);
    if (fam.subgroups[w.subgroup] == top.p) {
      found = true;
      EXPECT_EQ(w.kappa_order, 3);
      EXPECT_FALSE(w.frobenius_fixed);
      ASSERT_TRUE(w.restriction_condition.has_value());
      EXPECT_FALSE(*w.restriction_condition);
    }
  }
  EXPECT_TRUE(found);
  // Aut_F(E16) = C3 x C3 has index 8 in its normalizer in GL4(2).
  EXPECT_EQ(rep.fusion_preserving, 72u);
}

TEST(Obstruction, PrincipalBlocksHaveNone) {
  for (const std::string name : {"S4", "A5", "SL(2,3)", "G432"}) {
    auto g = make(name);
    for (int p : {2, 3}) {
      BrauerContext ctx(g, p);
      const auto rep = check_obstruction_hypotheses(ctx, ctx.maximal_pair(ctx.blocks().block_of_character(0)));
      EXPECT_EQ(rep.thm_two, Verdict::False) << name << " " << p;
      EXPECT_EQ(rep.thm_three, Verdict::False) << name << " " << p;
      for (const auto& w : rep.pairs) EXPECT_TRUE(w.frobenius_fixed);
    }
  }
}

TEST(ExampleConditions, E16WithC3xC3) {
  auto g = make("G432");
  const ElemSet p = o_p(*g, 2);
  ASSERT_EQ(p.size(), 16u);
  const auto ex = example_conditions(*g, p, conjugation_action(*g, p), 2);
  EXPECT_EQ(ex.order_a, 9u);
  EXPECT_TRUE(ex.inner_trivial);
  EXPECT_TRUE(ex.op_trivial);
  EXPECT_FALSE(ex.self_normalizing);
  EXPECT_EQ(ex.h2, std::vector<long long>{3});
  ASSERT_TRUE(ex.moved_class.has_value());
  EXPECT_TRUE(*ex.moved_class);
}

TEST(ExampleConditions, E16WithA7) {
  const auto& spec = fixture("E16:A7");
  auto g = std::make_shared<const Group>(build_group(spec.description, kGroupOnlyOrderCap).group);
  ASSERT_EQ(g->order(), 40320u);
  const ElemSet p = o_p(*g, 2);
  ASSERT_EQ(p.size(), 16u);
  // H_2(A7, Z) = Z/6 gives a class of order 3, moved by the Frobenius at p = 2.
  const auto ex = example_conditions(*g, p, conjugation_action(*g, p), 2, true);
  EXPECT_EQ(ex.order_a, 2520u);
  EXPECT_TRUE(ex.inner_trivial);
  EXPECT_TRUE(ex.op_trivial);
  EXPECT_TRUE(ex.self_normalizing);
  EXPECT_TRUE(ex.h2.empty());
  ASSERT_TRUE(ex.moved_class.has_value());
  EXPECT_TRUE(*ex.moved_class);
  // Without the documented value condition four stays open.
  EXPECT_FALSE(example_conditions(*g, p, conjugation_action(*g, p), 2).moved_class.has_value());
}

TEST(ExampleConditions, CyclicActionHasNoMovedClass) {
  auto g = make("C7:C3");
  const ElemSet p = o_p(*g, 7);
  ASSERT_EQ(p.size(), 7u);
  const auto ex = example_conditions(*g, p, conjugation_action(*g, p), 7);
  EXPECT_EQ(ex.order_a, 3u);
  EXPECT_TRUE(ex.h2.empty());
  ASSERT_TRUE(ex.moved_class.has_value());
  EXPECT_FALSE(*ex.moved_class);
}
