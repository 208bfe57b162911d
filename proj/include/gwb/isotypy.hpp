#pragma once

#include "gwb/brpairs.hpp"
#include "gwb/kpclass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwb {

/// d^{u,e} for the group C_G(P): class functions of C_G(P) to p'-class
/// functions of C_G(P<u>), where e is a block label of C_G(P<u>).
/// The coefficients of chi(u s e) are precomputed per target class.
class DecompositionMap {
 public:
  DecompositionMap(const BrauerContext& ctx, const ElemSet& p, int u, int block);

  const ElemSet& source_subgroup() const { return p_; }
  const ElemSet& target_subgroup() const { return pu_; }
  int element() const { return u_; }
  int block() const { return block_; }
  ClassFunction operator()(const ClassFunction& chi) const;

 private:
  ElemSet p_, pu_;
  int u_, block_;
  GroupPtr source_, target_;
  // Per class of C_G(P<u>): (class of C_G(P), coefficient); empty off p'-classes.
  std::vector<std::vector<std::pair<int, Cyclotomic>>> weights_;
};

/// d^{u,e}_{C_G(P)}(chi) without keeping the map.
ClassFunction gen_decomposition(const BrauerContext& ctx, const ElemSet& p, int u, int block,
                                const ClassFunction& chi);

/// One isometry R_K(C_G(P), e_P) -> R_K(C_G(P), f): integer coefficients of
/// each image over all of Irr(C_G(P)).
struct Isometry {
  std::vector<int> source;                 // Irr(C_G(P), e_P) as table indices
  int target_block = 0;                    // f
  std::vector<std::vector<long>> images;   // per source character
};

/// {I^P : P <= D} from (C_G(P), e_P) to (C_G(P), sigma(e_P)).
struct IsometryFamily {
  int p = 0;
  BrauerPair maximal;        // (D, e_D)
  CompatibleFamily source;   // e_P
  CompatibleFamily target;   // sigma(e_P), same subgroup order
  std::vector<Isometry> maps;
};

/// I^P(chi)(g) = chi(g_p g_p'^p). Throws InternalError if an image is not an
/// irreducible character of the sigma-block.
IsometryFamily kessar_family(const BrauerContext& ctx, const BrauerPair& maximal);

/// I^P applied to a class function of C_G(P) by linear extension; components
/// outside Irr(C_G(P), e_P) are dropped.
ClassFunction apply_isometry(const BrauerContext& ctx, const IsometryFamily& fam, int i,
                             const ClassFunction& psi);

struct Witness {
  int subgroup = -1;   // index into the family
  int element = -1;    // ambient group element (v, or the conjugator)
  int character = -1;  // source character (table index)
  std::string what;
};

struct AxiomVerdict {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<Witness> witnesses;  // the first few failures

  void fail(Witness w);
};

struct PerfectionReport {
  int subgroup = -1;
  bool integrality = true;
  bool separation = true;
  std::vector<std::vector<Cyclotomic>> mu;  // mu(g, h) over class representatives
  std::optional<Witness> witness;
  bool pass() const { return integrality && separation; }
};

struct VerificationReport {
  AxiomVerdict isometry, equivariance, compatibility;
  std::size_t compatibility_classes = 0;  // F-isomorphism classes checked
  std::vector<PerfectionReport> perfection;
  bool perfect() const;
  bool pass() const { return isometry.pass && equivariance.pass && compatibility.pass && perfect(); }
};

/// mu(g, h) = sum_chi I(chi)(g) conj(chi(h)) must be divisible by |C(g)| and
/// |C(h)| in O and vanish when exactly one of g, h is p-regular.
PerfectionReport verify_perfection(const BrauerContext& ctx, const IsometryFamily& fam, int i);

/// Isometry, equivariance and compatibility for every P <= D; perfection of
/// every I^P when `perfection` is set.
VerificationReport verify_isotypy(const BrauerContext& ctx, const IsometryFamily& fam,
                                  bool perfection = true);

/// Corruptions used to show each check can fail.
enum class Mutant {
  ScaleImage,       // 2 I^1(chi): breaks isometry
  SwapImages,       // two images at P = 1 that differ on p-singular classes exchanged: breaks compatibility
  NegateConjugate,  // -I^{hQ} on ^h psi for a conjugation moving psi: breaks equivariance
  ForeignImage,     // I^1(chi) replaced by the twist of a character of another defect
};
const char* mutant_name(Mutant m);
/// nullopt when the mutant cannot be formed for this family (documented per kind).
std::optional<IsometryFamily> mutate(const BrauerContext& ctx, const IsometryFamily& fam, Mutant m);

enum class Verdict { False, True, Undetermined };
const char* verdict_name(Verdict v);

struct ObstructionWitness {
  int subgroup = -1;          // index into the compatible family
  long long kappa_order = 1;  // order of the class at (P, e_P)
  bool frobenius_fixed = true;
  bool lemma_three = false;
  std::optional<bool> restriction_condition;  // every fusion-preserving phi restricts to c_g on P
};

struct ObstructionReport {
  Verdict thm_two = Verdict::Undetermined;
  Verdict thm_three = Verdict::Undetermined;
  std::vector<ObstructionWitness> pairs;  // every self-centralizing pair examined
  std::vector<int> capped;                // subgroups skipped for caps
  std::size_t fusion_preserving = 0;      // |{phi in Aut(D) preserving F}|
};

/// Searches the compatible family below `maximal` for self-centralizing pairs
/// whose class is moved by the Frobenius; see the obstruction theorems.
ObstructionReport check_obstruction_hypotheses(const BrauerContext& ctx, const BrauerPair& maximal);

struct ExampleConditions {
  std::size_t order_a = 0;
  bool inner_trivial = false;      // Inn(P) meets A trivially
  bool op_trivial = false;         // O_p(A) = 1
  bool self_normalizing = false;   // image of A in Out(P) is self-normalizing
  std::optional<bool> moved_class; // some kappa in H^2(A, k^x) with kappa != kappa^p
  std::vector<long long> h2;       // when computed
  std::string note;
};

/// The automorphisms of the normal subgroup P induced by conjugation in G.
std::vector<GroupMap> conjugation_action(const Group& g, const ElemSet& p);

/// The four conditions for (P, A), A given by generators in Aut(P). Condition
/// four is computed when |A| <= h2_cap; otherwise `documented` is reported.
ExampleConditions example_conditions(const Group& g, const ElemSet& p,
                                     const std::vector<GroupMap>& a_gens, int prime,
                                     std::optional<bool> documented = std::nullopt,
                                     std::size_t h2_cap = 27);

}  // namespace gwb
