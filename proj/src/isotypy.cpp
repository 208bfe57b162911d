#include "gwb/isotypy.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gwb {

namespace {

bool p_regular(const Group& g, int x, int p) { return g.elem_order(x) % p != 0; }

// Class of the ambient element x in the local group l.
int local_class(const Group& l, int x) {
  const int i = l.from_ambient(x);
  if (i < 0) throw InternalError("element outside the local group");
  return l.class_of(i);
}

std::vector<Cyclotomic> combination(const CharacterTable& t, const std::vector<long>& coeffs) {
  std::vector<Cyclotomic> v(t.group().class_count(), Cyclotomic(t.conductor()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j]) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += t.value(static_cast<int>(j), static_cast<int>(c)) * Rational(coeffs[j]);
  }
  return v;
}

// Values of I^P(chi) for every source character, per class of C_G(P).
std::vector<std::vector<Cyclotomic>> image_values(const BrauerContext& ctx, const IsometryFamily& fam, int i) {
  const auto& t = ctx.blocks_of(fam.source.subgroups[i]).table();
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& row : fam.maps[i].images) out.push_back(combination(t, row));
  return out;
}

// The class of h^-1 y h in C_G(Q) for each class of C_G(hQh^-1).
std::vector<int> transport(const Group& g, const Group& from, const Group& to, int h) {
  std::vector<int> m;
  const int hi = g.inv(h);
  for (const auto& c : to.classes()) m.push_back(local_class(from, g.conj(hi, to.to_ambient(c.representative))));
  return m;
}

std::string classes_note(std::size_t a, std::size_t b) {
  return "classes " + std::to_string(a) + ", " + std::to_string(b);
}

std::vector<int> block_characters(const BlockSystem& bs, int label) { return bs.block(label).characters; }

// g -> g_p g_p'^p on the classes of a local group.
std::vector<int> twist_classes(const BrauerContext& ctx, const Group& l) {
  const Group& g = ctx.group();
  const int p = ctx.p();
  std::vector<int> twist;
  for (const auto& c : l.classes()) {
    const auto [gp, gq] = p_parts(g, l.to_ambient(c.representative), p);
    twist.push_back(local_class(l, g.mul(gp, g.pow(gq, p))));
  }
  return twist;
}

int twisted_character(const CharacterTable& t, const std::vector<int>& twist, int chi) {
  ClassFunction f{t.group_ptr(), {}};
  for (int c : twist) f.values.push_back(t.value(chi, c));
  return t.find(f);
}

}  // namespace

// ---------------------------------------------------------------------------
// Generalized decomposition maps

DecompositionMap::DecompositionMap(const BrauerContext& ctx, const ElemSet& p, int u, int block)
    : p_(p), u_(u), block_(block) {
  const Group& g = ctx.group();
  const auto& src = ctx.local(p);
  if (!gwb::contains(src.centralizer, u) || !is_p_element(g, u, ctx.p()))
    throw InputError("u is not a p-element of C_G(P)");
  pu_ = join(g, p, ElemSet{u});
  source_ = src.group;
  const auto& tgt = ctx.local(pu_);
  target_ = tgt.group;
  if (block < 0 || block >= static_cast<int>(tgt.blocks->size())) throw InputError("block label out of range");
  const Block& blk = tgt.blocks->block(block);

  std::vector<std::pair<int, const Cyclotomic*>> support;  // ambient y with e(y) != 0
  for (int y = 0; y < static_cast<int>(target_->order()); ++y) {
    const Cyclotomic& c = blk.idempotent_K[target_->class_of(y)];
    if (!c.is_zero()) support.emplace_back(target_->to_ambient(y), &c);
  }
  weights_.resize(target_->class_count());
  for (std::size_t k = 0; k < target_->class_count(); ++k) {
    const int s = target_->to_ambient(target_->classes()[k].representative);
    if (!p_regular(g, s, ctx.p())) continue;
    const int us = g.mul(u, s);
    std::map<int, Cyclotomic> acc;
    for (const auto& [y, c] : support) {
      auto [it, fresh] = acc.try_emplace(local_class(*source_, g.mul(us, y)), *c);
      if (!fresh) it->second += *c;
    }
    for (auto& [cls, c] : acc)
      if (!c.is_zero()) weights_[k].emplace_back(cls, std::move(c));
  }
}

ClassFunction DecompositionMap::operator()(const ClassFunction& chi) const {
  if (chi.values.size() != source_->class_count()) throw InputError("class function lives on another group");
  const int m = chi.values.empty() ? 1 : chi.values.front().conductor();
  ClassFunction out = zero_function(target_, m);
  for (std::size_t k = 0; k < weights_.size(); ++k)
    for (const auto& [cls, w] : weights_[k]) out.values[k] += w * chi.values[cls];
  return out;
}

ClassFunction gen_decomposition(const BrauerContext& ctx, const ElemSet& p, int u, int block,
                                const ClassFunction& chi) {
  return DecompositionMap(ctx, p, u, block)(chi);
}

// ---------------------------------------------------------------------------
// Kessar's family

IsometryFamily kessar_family(const BrauerContext& ctx, const BrauerPair& maximal) {
  IsometryFamily fam;
  fam.p = ctx.p();
  fam.maximal = maximal;
  fam.source = compatible_family(ctx, maximal);
  fam.target = compatible_family(ctx, ctx.sigma(maximal));
  if (fam.source.subgroups != fam.target.subgroups) throw InternalError("families over different subgroup lists");

  for (std::size_t i = 0; i < fam.source.subgroups.size(); ++i) {
    const auto& loc = ctx.local(fam.source.subgroups[i]);
    const BlockSystem& bs = *loc.blocks;
    const CharacterTable& t = bs.table();
    const Group& l = *loc.group;
    const std::vector<int> twist = twist_classes(ctx, l);
    Isometry iso;
    iso.target_block = fam.target.blocks[i];
    iso.source = block_characters(bs, fam.source.blocks[i]);
    for (int chi : iso.source) {
      const int image = twisted_character(t, twist, chi);
      if (image < 0 || bs.block_of_character(image) != iso.target_block)
        throw InternalError("twisted character is not irreducible in the sigma-block");
      std::vector<long> row(t.size(), 0);
      row[image] = 1;
      iso.images.push_back(std::move(row));
    }
    fam.maps.push_back(std::move(iso));
  }
  return fam;
}

ClassFunction apply_isometry(const BrauerContext& ctx, const IsometryFamily& fam, int i,
                             const ClassFunction& psi) {
  const auto& loc = ctx.local(fam.source.subgroups[i]);
  const CharacterTable& t = loc.blocks->table();
  const auto coeffs = decompose(psi, t);
  ClassFunction out = zero_function(loc.group, t.conductor());
  const Isometry& iso = fam.maps[i];
  for (std::size_t r = 0; r < iso.source.size(); ++r) {
    const Cyclotomic& c = coeffs[iso.source[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < iso.images[r].size(); ++j) {
      if (!iso.images[r][j]) continue;
      const Cyclotomic cj = c * Rational(iso.images[r][j]);
      for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] += cj * t.value(static_cast<int>(j), static_cast<int>(k));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

void AxiomVerdict::fail(Witness w) {
  pass = false;
  if (witnesses.size() < 8) witnesses.push_back(std::move(w));
}

bool VerificationReport::perfect() const {
  return std::all_of(perfection.begin(), perfection.end(), [](const auto& r) { return r.pass(); });
}

PerfectionReport verify_perfection(const BrauerContext& ctx, const IsometryFamily& fam, int i) {
  const Group& g = ctx.group();
  const int p = ctx.p();
  const auto& loc = ctx.local(fam.source.subgroups[i]);
  const Group& l = *loc.group;
  const CharacterTable& t = loc.blocks->table();
  const Reduction& red = ctx.reduction();
  const auto img = image_values(ctx, fam, i);
  const auto& src = fam.maps[i].source;
  const std::size_t r = l.class_count();

  PerfectionReport rep;
  rep.subgroup = i;
  rep.mu.assign(r, std::vector<Cyclotomic>(r, Cyclotomic(t.conductor())));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      Cyclotomic& m = rep.mu[a][b];
      const int binv = l.power_class(static_cast<int>(b), -1);  // conj(chi(h)) = chi(h^-1)
      for (std::size_t k = 0; k < src.size(); ++k)
        if (!img[k][a].is_zero()) m += img[k][a] * t.value(src[k], binv);
      const bool ra = p_regular(g, l.to_ambient(l.classes()[a].representative), p);
      const bool rb = p_regular(g, l.to_ambient(l.classes()[b].representative), p);
      if (ra != rb && !m.is_zero()) {
        rep.separation = false;
        if (!rep.witness) rep.witness = Witness{i, -1, -1, classes_note(a, b) + ": mu nonzero across p-sections"};
      }
      if (m.is_zero()) continue;
      const Rational ca(1, static_cast<long>(l.classes()[a].centralizer_order));
      const Rational cb(1, static_cast<long>(l.classes()[b].centralizer_order));
      if (!red.integral(m * ca) || !red.integral(m * cb)) {
        rep.integrality = false;
        if (!rep.witness) rep.witness = Witness{i, -1, -1, classes_note(a, b) + ": mu / |C| not integral"};
      }
    }
  return rep;
}

VerificationReport verify_isotypy(const BrauerContext& ctx, const IsometryFamily& fam, bool perfection) {
  const Group& g = ctx.group();
  VerificationReport rep;
  const std::size_t n = fam.source.subgroups.size();
  std::vector<std::vector<std::vector<Cyclotomic>>> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = image_values(ctx, fam, static_cast<int>(i));

  // Isometry: the images are orthonormal and span Irr(C_G(P), f).
  for (std::size_t i = 0; i < n; ++i) {
    const Isometry& iso = fam.maps[i];
    const BlockSystem& bs = ctx.blocks_of(fam.source.subgroups[i]);
    const int ii = static_cast<int>(i);
    ++rep.isometry.checks;
    if (iso.target_block != fam.target.blocks[i]) rep.isometry.fail({ii, -1, -1, "target block is not sigma(e_P)"});
    if (iso.source != bs.block(fam.source.blocks[i]).characters) rep.isometry.fail({ii, -1, -1, "domain is not Irr(C_G(P), e_P)"});
    if (iso.source.size() != bs.block(iso.target_block).characters.size())
      rep.isometry.fail({ii, -1, -1, "domain and codomain ranks differ"});
    for (std::size_t a = 0; a < iso.images.size(); ++a) {
      for (std::size_t j = 0; j < iso.images[a].size(); ++j)
        if (iso.images[a][j] && bs.block_of_character(static_cast<int>(j)) != iso.target_block)
          rep.isometry.fail({ii, -1, iso.source[a], "image leaves the target block"});
      for (std::size_t b = 0; b < iso.images.size(); ++b) {
        long dot = 0;
        for (std::size_t j = 0; j < iso.images[a].size(); ++j) dot += iso.images[a][j] * iso.images[b][j];
        if (dot != (a == b ? 1 : 0)) rep.isometry.fail({ii, -1, iso.source[a], "Gram matrix is not the identity"});
      }
    }
  }

  // Equivariance over (g, h) with ^h(Q, e_Q) <= (D, e_D), ^g(Q, sigma e_Q) <=
  // (D, sigma e_D) and c_g = c_h on Q, i.e. g in h C_G(Q). Both sides depend
  // only on the coset h C_G(Q), since C_G(Q) fixes its own class functions.
  const FusionSystem fs = FusionSystem::of_block(ctx, fam.source);
  for (std::size_t i = 0; i < n; ++i) {
    const ElemSet& q = fam.source.subgroups[i];
    const auto& li = ctx.local(q);
    const CharacterTable& ti = li.blocks->table();
    std::vector<char> seen(g.order(), 0);
    for (int h : fs.conjugators(fs.index_of(q))) {
      if (seen[h]) continue;
      for (int c : li.centralizer) seen[g.mul(h, c)] = 1;
      const ElemSet q2 = conjugate(g, q, h);
      const int j = fam.source.index_of(q2);
      const int ii = static_cast<int>(i);
      if (j < 0 || ctx.conjugate(fam.source.pair(ii), h) != fam.source.pair(j)) {
        rep.equivariance.fail({ii, h, -1, "conjugator is not admissible on the source side"});
        continue;
      }
      if (ctx.conjugate(fam.target.pair(ii), h) != fam.target.pair(j)) {
        rep.equivariance.fail({ii, h, -1, "conjugator is not admissible on the target side"});
        continue;
      }
      const auto& lj = ctx.local(q2);
      const CharacterTable& tj = lj.blocks->table();
      const auto back = transport(g, *li.group, *lj.group, h);
      for (std::size_t a = 0; a < fam.maps[i].source.size(); ++a) {
        ++rep.equivariance.checks;
        const int psi = fam.maps[i].source[a];
        ClassFunction moved{lj.group, {}};
        for (int c : back) moved.values.push_back(ti.value(psi, c));
        const int k = tj.find(moved);
        const auto& srcj = fam.maps[j].source;
        const auto pos = std::find(srcj.begin(), srcj.end(), k);
        if (pos == srcj.end()) {
          rep.equivariance.fail({ii, h, psi, "^h psi is not in Irr(C_G(hQ), e_hQ)"});
          continue;
        }
        const auto& rhs = img[j][pos - srcj.begin()];
        for (std::size_t c = 0; c < back.size(); ++c)
          if (!(img[i][a][back[c]] == rhs[c])) {
            rep.equivariance.fail({ii, h, psi, "^h I^Q(psi) differs from I^{hQ}(^h psi)"});
            break;
          }
      }
    }
  }

  // Compatibility: d^{v, sigma e_{Q<v>}} I^Q = I^{Q<v>} d^{v, e_{Q<v>}} for v in C_D(Q),
  // on one fully centralized subgroup per F-isomorphism class; equivariance
  // carries it to the rest of the class.
  const ElemSet& d = fam.source.maximal.p;
  std::vector<char> covered(n, 0);
  for (std::size_t i0 = 0; i0 < n; ++i0) {
    if (covered[i0]) continue;
    std::size_t i = i0, best = 0;
    for (const ElemSet& q2 : fs.isomorphic_images(fam.source.subgroups[i0])) {
      const int j = fam.source.index_of(q2);
      covered[j] = 1;
      const std::size_t cd = intersect(d, ctx.local(q2).centralizer).size();
      if (cd > best || (cd == best && static_cast<std::size_t>(j) < i)) {
        best = cd;
        i = j;
      }
    }
    ++rep.compatibility_classes;
    const ElemSet& q = fam.source.subgroups[i];
    const auto& li = ctx.local(q);
    const CharacterTable& ti = li.blocks->table();
    const int ii = static_cast<int>(i);
    for (int v : intersect(d, li.centralizer)) {
      const ElemSet qv = join(g, q, ElemSet{v});
      const int k = fam.source.index_of(qv);
      const DecompositionMap ds(ctx, q, v, fam.source.blocks[k]);
      const DecompositionMap dt(ctx, q, v, fam.target.blocks[k]);
      for (std::size_t a = 0; a < fam.maps[i].source.size(); ++a) {
        ++rep.compatibility.checks;
        const int psi = fam.maps[i].source[a];
        const ClassFunction lhs = dt(ClassFunction{li.group, img[i][a]});
        const ClassFunction rhs = apply_isometry(ctx, fam, k, ds(ti.character(psi)));
        if (!(lhs.values == rhs.values)) rep.compatibility.fail({ii, v, psi, "d I^Q(psi) differs from I^{Q<v>} d(psi)"});
      }
    }
  }

  if (perfection)
    for (std::size_t i = 0; i < n; ++i) rep.perfection.push_back(verify_perfection(ctx, fam, static_cast<int>(i)));
  return rep;
}

// ---------------------------------------------------------------------------
// Mutants

const char* mutant_name(Mutant m) {
  switch (m) {
    case Mutant::ScaleImage: return "scale-image";
    case Mutant::SwapImages: return "swap-images";
    case Mutant::NegateConjugate: return "negate-conjugate";
    case Mutant::ForeignImage: return "foreign-image";
  }
  return "?";
}

std::optional<IsometryFamily> mutate(const BrauerContext& ctx, const IsometryFamily& fam, Mutant m) {
  IsometryFamily out = fam;
  // Index 0 is the trivial subgroup, where C_G(1) = G.
  Isometry& top = out.maps[0];
  const BlockSystem& bs = ctx.blocks();
  const CharacterTable& t = bs.table();
  const int b = fam.source.blocks[0];
  auto twisted_row = [&](int chi) {
    std::vector<long> row(t.size(), 0);
    row[twisted_character(t, twist_classes(ctx, bs.group()), chi)] = 1;
    return row;
  };
  auto other_block = [&](bool positive_defect) -> int {
    for (int l = 0; l < static_cast<int>(bs.size()); ++l)
      if (l != b && (!positive_defect || bs.block(l).defect > 0)) return bs.block(l).characters.front();
    return -1;
  };

  switch (m) {
    case Mutant::ScaleImage:
      for (auto& x : top.images.front()) x *= 2;
      return out;

    case Mutant::SwapImages: {
      // Two images that differ somewhere off the p-regular classes; images
      // agreeing there can be exchanged without breaking anything.
      auto image = [&](std::size_t r) {
        return static_cast<int>(std::find(top.images[r].begin(), top.images[r].end(), 1) - top.images[r].begin());
      };
      const Group& g = bs.group();
      for (std::size_t r = 0; r < top.images.size(); ++r)
        for (std::size_t s = r + 1; s < top.images.size(); ++s)
          for (std::size_t c = 0; c < g.class_count(); ++c)
            if (g.elem_order(g.classes()[c].representative) % ctx.p() == 0 &&
                !(t.value(image(r), static_cast<int>(c)) == t.value(image(s), static_cast<int>(c)))) {
              std::swap(top.images[r], top.images[s]);
              return out;
            }
      const int chi = other_block(false);
      if (chi < 0) return std::nullopt;
      top.images[0] = twisted_row(chi);
      return out;
    }

    case Mutant::ForeignImage: {
      // Needs p | |G|: otherwise every character has defect zero.
      if (p_part(bs.group().order(), ctx.p()) == 1) return std::nullopt;
      int chi = -1;
      if (bs.block(b).defect == 0)
        chi = other_block(true);
      else if (bs.size() > 1)
        chi = other_block(false);
      else if (top.source.size() > 1)
        chi = top.source[1];
      if (chi < 0) return std::nullopt;
      top.images[0] = twisted_row(chi);
      return out;
    }

    case Mutant::NegateConjugate: {
      // A conjugation h with hQh^-1 != Q, or one moving a character of C_G(Q).
      const Group& g = ctx.group();
      const FusionSystem fs = FusionSystem::of_block(ctx, fam.source);
      for (std::size_t i = 0; i < fam.source.subgroups.size(); ++i) {
        const ElemSet& q = fam.source.subgroups[i];
        const auto& li = ctx.local(q);
        const CharacterTable& ti = li.blocks->table();
        for (int h : fs.conjugators(fs.index_of(q))) {
          const ElemSet q2 = conjugate(g, q, h);
          const int j = fam.source.index_of(q2);
          const auto& lj = ctx.local(q2);
          const auto back = transport(g, *li.group, *lj.group, h);
          for (int psi : fam.maps[i].source) {
            ClassFunction moved{lj.group, {}};
            for (int c : back) moved.values.push_back(ti.value(psi, c));
            const int k = lj.blocks->table().find(moved);
            if (j == static_cast<int>(i) && k == psi) continue;
            auto& iso = out.maps[j];
            const auto pos = std::find(iso.source.begin(), iso.source.end(), k);
            if (pos == iso.source.end()) continue;
            for (auto& x : iso.images[pos - iso.source.begin()]) x = -x;
            return out;
          }
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Obstructions

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

ObstructionReport check_obstruction_hypotheses(const BrauerContext& ctx, const BrauerPair& maximal) {
  const Group& g = ctx.group();
  const CompatibleFamily fam = compatible_family(ctx, maximal);
  ObstructionReport rep;
  std::optional<std::vector<GroupMap>> preserving;
  bool moved = false, restricted = false;

  for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
    const BrauerPair pair = fam.pair(static_cast<int>(i));
    if (!ctx.self_centralizing(pair)) continue;
    ObstructionWitness w;
    w.subgroup = static_cast<int>(i);
    try {
      const auto r = verify_lemma_three(ctx, pair);
      w.kappa_order = r.order;
      w.frobenius_fixed = r.frobenius_fixed;
      w.lemma_three = r.holds;
    } catch (const CapExceeded&) {
      rep.capped.push_back(static_cast<int>(i));
      continue;
    }
    if (!w.frobenius_fixed) {
      moved = true;
      if (!preserving) {
        preserving = FusionSystem::of_block(ctx, fam).fusion_preserving_automorphisms();
        rep.fusion_preserving = preserving->size();
      }
      // Restrictions c_g|_P for g in N_G(P, e_P), on the sorted elements of P.
      std::set<std::vector<int>> inner;
      for (int x : ctx.stabilizer(pair)) {
        std::vector<int> im;
        for (int y : pair.p) im.push_back(g.conj(x, y));
        inner.insert(std::move(im));
      }
      bool all = true;
      for (const auto& phi : *preserving) {
        std::vector<int> im;
        for (int y : pair.p) im.push_back(phi(y));
        if (!inner.count(im)) {
          all = false;
          break;
        }
      }
      w.restriction_condition = all;
      restricted = restricted || all;
    }
    rep.pairs.push_back(w);
  }
  rep.thm_two = moved ? Verdict::True : rep.capped.empty() ? Verdict::False : Verdict::Undetermined;
  if (restricted)
    rep.thm_three = Verdict::True;
  else if (moved || !rep.capped.empty())
    rep.thm_three = Verdict::Undetermined;
  else
    rep.thm_three = Verdict::False;
  return rep;
}

// ---------------------------------------------------------------------------
// Conditions on (P, A)

std::vector<GroupMap> conjugation_action(const Group& g, const ElemSet& p) {
  std::vector<GroupMap> out;
  for (int x : g.generators()) out.push_back(conjugation_map(g, p, x));
  return out;
}

ExampleConditions example_conditions(const Group& g, const ElemSet& p,
                                     const std::vector<GroupMap>& a_gens, int prime,
                                     std::optional<bool> documented, std::size_t h2_cap) {
  // Automorphisms act on the positions of P's sorted elements.
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<int>(i);
  auto as_perm = [&](const GroupMap& phi) {
    std::vector<Point> im;
    for (int x : p) im.push_back(static_cast<Point>(pos[phi(x)]));
    return Permutation(std::move(im));
  };
  std::vector<Permutation> gens;
  for (const auto& phi : a_gens) gens.push_back(as_perm(phi));
  if (gens.empty()) gens.push_back(Permutation::identity(p.size()));
  const Group a = Group::generate(gens, kGroupOnlyOrderCap);

  ExampleConditions out;
  out.order_a = a.order();

  std::vector<Permutation> inner;
  for (int x : generating_set(g, p)) inner.push_back(as_perm(conjugation_map(g, p, x)));
  out.inner_trivial = true;
  for (int x : p) {
    const Permutation c = as_perm(conjugation_map(g, p, x));
    if (!c.is_identity() && a.find(c) >= 0) out.inner_trivial = false;
  }

  out.op_trivial = o_p(a, prime).size() == 1;

  // Aut(P) as a permutation group, grown until it holds every automorphism.
  const auto all = automorphism_group(g, p);
  std::vector<Permutation> aut_gens;
  Group aut = Group::generate({Permutation::identity(p.size())}, kGroupOnlyOrderCap);
  for (const auto& phi : all) {
    Permutation x = as_perm(phi);
    if (aut.find(x) >= 0) continue;
    aut_gens.push_back(std::move(x));
    aut = Group::generate(aut_gens, kGroupOnlyOrderCap);
    if (aut.order() == all.size()) break;
  }
  std::vector<int> ai;
  for (const auto& x : gens) ai.push_back(aut.find(x));
  for (const auto& x : inner) ai.push_back(aut.find(x));
  const ElemSet a_inn = closure(aut, ai);
  const auto a_inn_gens = generating_set(aut, a_inn);
  std::size_t normalizer = 0;
  for (int x = 0; x < static_cast<int>(aut.order()); ++x) {
    bool ok = true;
    for (int s : a_inn_gens)
      if (!gwb::contains(a_inn, aut.conj(x, s))) {
        ok = false;
        break;
      }
    normalizer += ok;
  }
  out.self_normalizing = normalizer == a_inn.size();

  if (a.order() <= h2_cap) {
    out.h2 = h2_invariants(TableGroup::from_group(a), prime, h2_cap);
    long long exponent = 1;
    for (long long d : out.h2) exponent = std::lcm(exponent, d);
    out.moved_class = (prime - 1) % exponent != 0;
    out.note = "condition four computed from H^2(A, k^x)";
  } else if (documented) {
    out.moved_class = documented;
    out.note = "condition four taken from the documented Schur multiplier; A exceeds the H^2 cap";
  } else {
    out.note = "condition four undetermined: A exceeds the H^2 cap";
  }
  return out;
}

}  // namespace gwb
