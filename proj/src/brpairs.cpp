#include "gwb/brpairs.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <deque>

namespace gwb {

// ---------------------------------------------------------------------------
// Algebra helpers

GroupAlgebraElem brauer_hom(const Group& g, const ElemSet& p, const GroupAlgebraElem& x) {
  for (int y : generating_set(g, p))
    for (int h = 0; h < static_cast<int>(g.order()); ++h)
      if (!(x[g.conj(y, h)] == x[h])) throw InputError("Brauer homomorphism applied to a non-fixed element");
  GroupAlgebraElem out(x.size(), FieldElem(*x.front().field, 0));
  for (int h : centralizer(g, p)) out[h] = x[h];
  return out;
}

GroupAlgebraElem multiply(const Group& g, const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  GroupAlgebraElem out(a.size(), FieldElem(*a.front().field, 0));
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) out[g.mul(i, j)] += a[i] * b[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// BrauerContext

BrauerContext::BrauerContext(GroupPtr g, int p, int conductor)
    : g_(std::move(g)), p_(p), m_(conductor ? conductor : g_->exponent()) {
  if (m_ % g_->exponent()) throw InputError("conductor is not a multiple of the group exponent");
  red_ = shared_reduction(m_, p_);
}

const BrauerContext::Local& BrauerContext::local(const ElemSet& p) const {
  std::lock_guard lock(mu_);
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  if (!is_p_group(*g_, p, p_)) throw InputError("first component of a Brauer pair must be a p-subgroup");
  Local loc;
  loc.centralizer = centralizer(*g_, p);
  loc.group = std::make_shared<const Group>(Group::from_subset(*g_, loc.centralizer));
  loc.blocks = BlockSystem::compute(CharacterTable::compute(loc.group, m_), red_);
  return cache_.emplace(p, std::move(loc)).first->second;
}

GroupAlgebraElem BrauerContext::idempotent(const BrauerPair& pair) const {
  const Local& loc = local(pair.p);
  GroupAlgebraElem out(g_->order(), red_->zero());
  const auto& e = loc.blocks->block(pair.block).idempotent;
  for (int i = 0; i < static_cast<int>(loc.group->order()); ++i)
    out[loc.group->to_ambient(i)] = e[loc.group->class_of(i)];
  return out;
}

ClassVector BrauerContext::class_vector(const ElemSet& p, const GroupAlgebraElem& x) const {
  const Local& loc = local(p);
  ClassVector v;
  for (const auto& c : loc.group->classes()) v.push_back(x[loc.group->to_ambient(c.representative)]);
  return v;
}

BrauerPair BrauerContext::conjugate(const BrauerPair& pair, int g) const {
  BrauerPair out{gwb::conjugate(*g_, pair.p, g), 0};
  const Local& src = local(pair.p);
  const Local& dst = local(out.p);
  const auto& e = src.blocks->block(pair.block).idempotent;
  const int gi = g_->inv(g);
  ClassVector v;
  for (const auto& c : dst.group->classes()) {
    const int x = g_->conj(gi, dst.group->to_ambient(c.representative));
    v.push_back(e[src.group->class_of(src.group->from_ambient(x))]);
  }
  out.block = dst.blocks->find(v);
  if (out.block < 0) throw InternalError("conjugate of a block idempotent is not a block idempotent");
  return out;
}

bool BrauerContext::stable(const BrauerPair& pair, int g) const {
  if (gwb::conjugate(*g_, pair.p, g) != pair.p) return false;
  return conjugate(pair, g).block == pair.block;
}

ElemSet BrauerContext::stabilizer(const BrauerPair& pair) const {
  ElemSet out;
  for (int x : normalizer(*g_, pair.p))
    if (stable(pair, x)) out.push_back(x);
  return out;
}

bool BrauerContext::normal_step(const BrauerPair& small, const BrauerPair& big) const {
  if (!is_subset(small.p, big.p)) return false;
  for (int x : generating_set(*g_, big.p))
    if (!stable(small, x)) return false;
  const auto br = class_vector(big.p, idempotent(small));
  const BlockSystem& bs = blocks_of(big.p);
  const auto& e = bs.block(big.block).idempotent;
  return bs.multiply(e, br) == e;
}

int BrauerContext::unique_extension(const ElemSet& q, const BrauerPair& big) const {
  if (!is_subset(q, big.p)) throw InputError("unique_extension: Q is not contained in P");
  std::vector<ElemSet> chain{q};
  while (chain.back() != big.p) {
    ElemSet next = intersect(normalizer(*g_, chain.back()), big.p);
    if (next == chain.back()) throw InternalError("normalizer chain stalled in a p-group");
    chain.push_back(std::move(next));
  }
  BrauerPair cur = big;
  for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
    int found = -1;
    const int n = static_cast<int>(blocks_of(chain[i]).size());
    for (int f = 0; f < n; ++f) {
      if (!normal_step({chain[i], f}, cur)) continue;
      if (found >= 0) throw InternalError("two blocks lie below one Brauer pair");
      found = f;
    }
    if (found < 0) throw InputError("no Brauer pair lies below the given pair");
    cur = {chain[i], found};
  }
  return cur.block;
}

bool BrauerContext::contains(const BrauerPair& small, const BrauerPair& big) const {
  if (!is_subset(small.p, big.p)) return false;
  return unique_extension(small.p, big) == small.block;
}

BrauerPair BrauerContext::sigma(const BrauerPair& pair) const {
  return {pair.p, blocks_of(pair.p).sigma(pair.block)};
}

std::vector<BrauerPair> BrauerContext::covers(const BrauerPair& pair) const {
  return covers_within(pair, normalizer(*g_, pair.p));
}

std::vector<BrauerPair> BrauerContext::covers_within(const BrauerPair& pair,
                                                     const ElemSet& candidates) const {
  std::set<ElemSet> seen;
  std::vector<BrauerPair> out;
  const auto gens = generating_set(*g_, pair.p);
  for (int x : candidates) {
    if (gwb::contains(pair.p, x) || !is_p_element(*g_, x, p_)) continue;
    auto ext = gens;
    ext.push_back(x);
    ElemSet big = closure(*g_, ext);
    if (!seen.insert(big).second) continue;
    if (!stable(pair, x)) continue;
    const int n = static_cast<int>(blocks_of(big).size());
    for (int e = 0; e < n; ++e)
      if (normal_step(pair, {big, e})) out.push_back({big, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

BrauerPair BrauerContext::maximal_pair(int block) const {
  BrauerPair cur{trivial_subgroup(), block};
  for (;;) {
    auto c = covers(cur);
    if (c.empty()) return cur;
    cur = c.front();
  }
}

bool BrauerContext::self_centralizing(const BrauerPair& pair) const {
  // Brauer pairs of H = P C_G(P) over e: every x in H normalizes P and
  // C_H(P<x>) = C_G(P<x>), so the covers inside H are computed here.
  const ElemSet h = join(*g_, pair.p, local(pair.p).centralizer);
  return covers_within(pair, h).empty();
}

// ---------------------------------------------------------------------------
// Posets and families

int PairPoset::index_of(const BrauerPair& pair) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), pair);
  return it != pairs.end() && *it == pair ? static_cast<int>(it - pairs.begin()) : -1;
}

PairPoset enumerate_pairs(const BrauerContext& ctx, int block, std::size_t cap) {
  const Group& g = ctx.group();
  std::set<BrauerPair> found;
  std::deque<BrauerPair> queue;
  std::vector<std::pair<BrauerPair, BrauerPair>> steps;
  auto add_orbit = [&](const BrauerPair& pair) {
    if (found.count(pair)) return;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      auto c = ctx.conjugate(pair, x);
      if (found.insert(c).second) queue.push_back(c);
    }
    if (found.size() > cap) throw CapExceeded("Brauer pair poset exceeds the cap");
  };
  add_orbit({trivial_subgroup(), block});
  PairPoset poset;
  std::set<BrauerPair> has_cover;
  while (!queue.empty()) {
    BrauerPair cur = queue.front();
    queue.pop_front();
    for (const auto& up : ctx.covers(cur)) {
      steps.emplace_back(cur, up);
      has_cover.insert(cur);
      add_orbit(up);
    }
  }
  poset.pairs.assign(found.begin(), found.end());
  for (const auto& [a, b] : steps) poset.steps.emplace_back(poset.index_of(a), poset.index_of(b));
  std::sort(poset.steps.begin(), poset.steps.end());
  for (int i = 0; i < static_cast<int>(poset.pairs.size()); ++i)
    if (!has_cover.count(poset.pairs[i])) poset.maximal.push_back(i);
  return poset;
}

int CompatibleFamily::index_of(const ElemSet& p) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i] == p) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<ElemSet> sorted_subgroups(const Group& g, const ElemSet& d) {
  if (d.size() > kDefectGroupCap) throw CapExceeded("defect group exceeds the cap");
  auto subs = subgroups_of(g, d);
  std::sort(subs.begin(), subs.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return subs;
}

}  // namespace

CompatibleFamily compatible_family(const BrauerContext& ctx, const BrauerPair& maximal) {
  if (!ctx.covers(maximal).empty()) throw InputError("compatible_family needs a maximal pair");
  CompatibleFamily fam;
  fam.maximal = maximal;
  fam.subgroups = sorted_subgroups(ctx.group(), maximal.p);
  for (const auto& q : fam.subgroups) fam.blocks.push_back(ctx.unique_extension(q, maximal));
  return fam;
}

// ---------------------------------------------------------------------------
// Fusion systems

FusionSystem FusionSystem::of_block(const BrauerContext& ctx, const CompatibleFamily& family) {
  FusionSystem f;
  f.g_ = ctx.group_ptr();
  f.d_ = family.maximal.p;
  f.subgroups_ = family.subgroups;
  const Group& g = *f.g_;
  for (std::size_t i = 0; i < f.subgroups_.size(); ++i) f.index_[f.subgroups_[i]] = static_cast<int>(i);
  f.admissible_.resize(f.subgroups_.size());
  for (std::size_t i = 0; i < f.subgroups_.size(); ++i) {
    const BrauerPair pair = family.pair(static_cast<int>(i));
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      const ElemSet q = conjugate(g, pair.p, x);
      if (!is_subset(q, f.d_)) continue;
      if (ctx.conjugate(pair, x).block == family.blocks[f.index_.at(q)]) f.admissible_[i].push_back(x);
    }
  }
  f.finish();
  return f;
}

FusionSystem FusionSystem::of_group(GroupPtr gp, const ElemSet& d) {
  FusionSystem f;
  f.g_ = std::move(gp);
  f.d_ = d;
  f.group_mode_ = true;
  const Group& g = *f.g_;
  f.subgroups_ = sorted_subgroups(g, d);
  for (std::size_t i = 0; i < f.subgroups_.size(); ++i) f.index_[f.subgroups_[i]] = static_cast<int>(i);
  f.admissible_.resize(f.subgroups_.size());
  for (std::size_t i = 0; i < f.subgroups_.size(); ++i)
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
      if (is_subset(conjugate(g, f.subgroups_[i], x), d)) f.admissible_[i].push_back(x);
  f.finish();
  return f;
}

void FusionSystem::finish() {
  hom_to_d_.resize(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    for (int x : admissible_[i]) {
      std::vector<int> imgs;
      for (int y : subgroups_[i]) imgs.push_back(g_->conj(x, y));
      hom_to_d_[i].insert(std::move(imgs));
    }
}

int FusionSystem::index_of(const ElemSet& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InputError("not a subgroup of the defect group");
  return it->second;
}

std::vector<FusionMorphism> FusionSystem::hom(const ElemSet& p, const ElemSet& q) const {
  const int i = index_of(p);
  std::set<std::vector<int>> seen;
  std::vector<FusionMorphism> out;
  for (int x : admissible_[i]) {
    std::vector<int> imgs;
    bool inside = true;
    for (int y : p) {
      imgs.push_back(g_->conj(x, y));
      if (!gwb::contains(q, imgs.back())) inside = false;
    }
    if (inside && seen.insert(imgs).second) out.push_back({x, std::move(imgs)});
  }
  return out;
}

std::size_t FusionSystem::out_order(const ElemSet& p) const {
  return aut_order(p) * center(*g_, p).size() / p.size();
}

std::vector<ElemSet> FusionSystem::isomorphic_images(const ElemSet& p) const {
  std::set<ElemSet> out;
  for (auto imgs : hom_to_d_[index_of(p)]) {
    std::sort(imgs.begin(), imgs.end());
    out.insert(std::move(imgs));
  }
  return {out.begin(), out.end()};
}

bool FusionSystem::is_centric(const ElemSet& p) const {
  for (const auto& q : isomorphic_images(p))
    if (intersect(centralizer(*g_, q), d_) != center(*g_, q)) return false;
  return true;
}

bool FusionSystem::is_fully_centralized(const ElemSet& p) const {
  const std::size_t own = intersect(centralizer(*g_, p), d_).size();
  for (const auto& q : isomorphic_images(p))
    if (intersect(centralizer(*g_, q), d_).size() > own) return false;
  return true;
}

bool FusionSystem::is_normal(const ElemSet& p) const {
  for (int x : generating_set(*g_, d_))
    if (conjugate(*g_, p, x) != p) return false;
  // Every morphism on Q extends to QP with P mapped onto P.
  for (std::size_t j = 0; j < subgroups_.size(); ++j) {
    const ElemSet& q = subgroups_[j];
    const ElemSet qp = join(*g_, q, p);
    std::set<std::vector<int>> extendable;
    for (int h : admissible_[index_of(qp)]) {
      if (conjugate(*g_, p, h) != p) continue;
      std::vector<int> imgs;
      for (int y : q) imgs.push_back(g_->conj(h, y));
      extendable.insert(std::move(imgs));
    }
    for (const auto& imgs : hom_to_d_[j])
      if (!extendable.count(imgs)) return false;
  }
  return true;
}

ElemSet FusionSystem::o_p() const {
  std::vector<ElemSet> normal;
  for (const auto& s : subgroups_)
    if (is_normal(s)) normal.push_back(s);
  ElemSet best = normal.front();
  for (const auto& s : normal)
    if (s.size() > best.size()) best = s;
  for (const auto& s : normal)
    if (!is_subset(s, best)) throw InternalError("normal subgroups of a fusion system have no maximum");
  return best;
}

bool FusionSystem::same_morphisms(const FusionSystem& other) const {
  return g_->order() == other.g_->order() && d_ == other.d_ && subgroups_ == other.subgroups_ &&
         hom_to_d_ == other.hom_to_d_;
}

bool FusionSystem::preserves(const GroupMap& phi) const {
  std::map<int, int> back;
  for (std::size_t k = 0; k < phi.source.size(); ++k) back[phi.images[k]] = phi.source[k];
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    const ElemSet& p = subgroups_[i];
    ElemSet fp;
    for (int x : p) fp.push_back(phi(x));
    std::sort(fp.begin(), fp.end());
    const auto& target = hom_to_d_[index_of(fp)];
    if (target.size() != hom_to_d_[i].size()) return false;
    for (const auto& imgs : hom_to_d_[i]) {
      std::vector<int> w;
      for (int y : fp) {
        const int x = back.at(y);
        const auto pos = std::lower_bound(p.begin(), p.end(), x) - p.begin();
        w.push_back(phi(imgs[pos]));
      }
      if (!target.count(w)) return false;
    }
  }
  return true;
}

std::vector<GroupMap> FusionSystem::fusion_preserving_automorphisms() const {
  std::vector<GroupMap> out;
  for (auto& phi : automorphism_group(*g_, d_))
    if (preserves(phi)) out.push_back(std::move(phi));
  return out;
}

FusionInvariants f_invariants(const FusionSystem& f, const ElemSet& p) {
  return {f.is_centric(p), f.is_fully_centralized(p), f.is_normal(p)};
}

}  // namespace gwb
