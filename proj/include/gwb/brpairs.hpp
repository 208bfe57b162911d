#pragma once

#include "gwb/blocks.hpp"
#include "gwb/group.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

namespace gwb {

/// Cap on |D| for block-level Brauer pair work.
inline constexpr std::size_t kDefectGroupCap = 64;

/// An element of kG as one coefficient per element of the ambient group.
using GroupAlgebraElem = std::vector<FieldElem>;

/// (P, e): P a p-subgroup, e a block label of C_G(P) in the owning context.
struct BrauerPair {
  ElemSet p;
  int block = 0;

  friend auto operator<=>(const BrauerPair&, const BrauerPair&) = default;
};

/// (u, e): u a p-element, e a block label of C_G(u).
struct BrauerElement {
  int u = 0;
  int block = 0;
};

/// Centralizers of p-subgroups of one group with their blocks, all over the
/// residue field of a single reduction so idempotents can be compared.
class BrauerContext {
 public:
  BrauerContext(GroupPtr g, int p, int conductor = 0);

  const Group& group() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  int p() const { return p_; }
  int conductor() const { return m_; }
  const Reduction& reduction() const { return *red_; }
  const BlockSystem& blocks() const { return *local(trivial_subgroup()).blocks; }

  struct Local {
    ElemSet centralizer;
    GroupPtr group;  // C_G(P), elements in ambient order
    BlocksPtr blocks;
  };
  /// C_G(P) and its blocks; cached.
  const Local& local(const ElemSet& p) const;
  const BlockSystem& blocks_of(const ElemSet& p) const { return *local(p).blocks; }

  /// The idempotent of the pair as an element of kG (zero off C_G(P)).
  GroupAlgebraElem idempotent(const BrauerPair& pair) const;
  /// Class vector of C_G(P) holding the coefficients of x.
  ClassVector class_vector(const ElemSet& p, const GroupAlgebraElem& x) const;

  /// g(P, e)g^-1.
  BrauerPair conjugate(const BrauerPair& pair, int g) const;
  bool stable(const BrauerPair& pair, int g) const;
  /// N_G(P, e).
  ElemSet stabilizer(const BrauerPair& pair) const;

  /// Q normal in P, f P-stable and e Br_P(f) = e.
  bool normal_step(const BrauerPair& small, const BrauerPair& big) const;
  /// The unique f with (Q, f) <= big. Throws InputError when none exists.
  int unique_extension(const ElemSet& q, const BrauerPair& big) const;
  bool contains(const BrauerPair& small, const BrauerPair& big) const;

  /// (P, sigma(e)).
  BrauerPair sigma(const BrauerPair& pair) const;

  /// A maximal pair above (1, b), found by climbing normal steps.
  BrauerPair maximal_pair(int block) const;
  ElemSet defect_group(int block) const { return maximal_pair(block).p; }

  /// (P, e) is maximal among the Brauer pairs of P C_G(P) lying over e.
  bool self_centralizing(const BrauerPair& pair) const;

  /// One-element extensions P < P<x> with x a p-element of N_G(P, e).
  std::vector<BrauerPair> covers(const BrauerPair& pair) const;

 private:
  /// covers() with x restricted to `candidates`, a subset of N_G(P).
  std::vector<BrauerPair> covers_within(const BrauerPair& pair, const ElemSet& candidates) const;

  GroupPtr g_;
  int p_;
  int m_;
  std::shared_ptr<const Reduction> red_;
  mutable std::recursive_mutex mu_;
  mutable std::map<ElemSet, Local> cache_;
};

/// Br_P: truncation to C_G(P). Throws InputError when x is not P-fixed.
GroupAlgebraElem brauer_hom(const Group& g, const ElemSet& p, const GroupAlgebraElem& x);
/// Product in kG.
GroupAlgebraElem multiply(const Group& g, const GroupAlgebraElem& a, const GroupAlgebraElem& b);

struct PairPoset {
  std::vector<BrauerPair> pairs;                 // sorted
  std::vector<std::pair<int, int>> steps;        // normal one-element extensions
  std::vector<int> maximal;
  int index_of(const BrauerPair& pair) const;    // -1 when absent
};
/// All b-Brauer pairs, closed under G-conjugation.
PairPoset enumerate_pairs(const BrauerContext& ctx, int block, std::size_t cap = 5000);

/// e_P for every subgroup P of D, below a maximal pair (D, e_D).
struct CompatibleFamily {
  BrauerPair maximal;
  std::vector<ElemSet> subgroups;  // all subgroups of D
  std::vector<int> blocks;         // e_P, aligned with subgroups
  int index_of(const ElemSet& p) const;
  BrauerPair pair(int i) const { return {subgroups[i], blocks[i]}; }
  BrauerPair pair(const ElemSet& p) const { return pair(index_of(p)); }
};
CompatibleFamily compatible_family(const BrauerContext& ctx, const BrauerPair& maximal);

/// A morphism P -> D given by conjugation, with the images of the sorted
/// elements of P.
struct FusionMorphism {
  int by = 0;
  std::vector<int> images;
};

/// The fusion system on the subgroups of D. Morphisms are the conjugations
/// c_g with g(P, e_P)g^-1 <= (Q, e_Q); in group mode every conjugation into D.
class FusionSystem {
 public:
  static FusionSystem of_block(const BrauerContext& ctx, const CompatibleFamily& family);
  static FusionSystem of_group(GroupPtr g, const ElemSet& d);

  const Group& group() const { return *g_; }
  const ElemSet& defect_group() const { return d_; }
  bool group_mode() const { return group_mode_; }
  const std::vector<ElemSet>& subgroups() const { return subgroups_; }
  int index_of(const ElemSet& p) const;

  /// g with gPg^-1 <= D realizing a morphism.
  const std::vector<int>& conjugators(int i) const { return admissible_[i]; }
  std::vector<FusionMorphism> hom(const ElemSet& p, const ElemSet& q) const;
  std::vector<FusionMorphism> aut(const ElemSet& p) const { return hom(p, p); }
  std::size_t aut_order(const ElemSet& p) const { return aut(p).size(); }
  std::size_t out_order(const ElemSet& p) const;
  /// Images of P under morphisms into D.
  std::vector<ElemSet> isomorphic_images(const ElemSet& p) const;

  bool is_centric(const ElemSet& p) const;
  bool is_fully_centralized(const ElemSet& p) const;
  bool is_normal(const ElemSet& p) const;
  ElemSet o_p() const;

  /// Literal equality of all morphism sets.
  bool same_morphisms(const FusionSystem& other) const;
  /// phi in Aut(D) with phi Hom(P, D) phi^-1 = Hom(phi P, D) for every P.
  bool preserves(const GroupMap& phi) const;
  std::vector<GroupMap> fusion_preserving_automorphisms() const;

 private:
  GroupPtr g_;
  ElemSet d_;
  bool group_mode_ = false;
  std::vector<ElemSet> subgroups_;
  std::map<ElemSet, int> index_;
  std::vector<std::vector<int>> admissible_;
  std::vector<std::set<std::vector<int>>> hom_to_d_;  // image vectors per subgroup

  void finish();
};

struct FusionInvariants {
  bool centric = false;
  bool fully_centralized = false;
  bool normal = false;
};
FusionInvariants f_invariants(const FusionSystem& f, const ElemSet& p);

}  // namespace gwb
