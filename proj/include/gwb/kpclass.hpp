#pragma once

#include "gwb/brpairs.hpp"
#include "gwb/cohomology.hpp"
#include "gwb/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gwb {

/// A representation of H = P C_G(P) over k; matrices act on column vectors.
struct ModularRep {
  ElemSet group;                   // H, ambient indices
  int dim = 0;
  const FiniteField* field = nullptr;
  std::vector<linalg::Mat> matrices;  // one per element of H, in `group` order
  std::uint64_t seed = 0;
  int block_dimension = 0;            // dim k H e

  const linalg::Mat& at(int ambient) const;
};

/// X on coset representatives of H in I = N_G(P, e).
struct ProjectiveRep {
  ElemSet stabilizer;               // I
  std::vector<int> representatives;  // one per coset tH, the identity first
  std::vector<linalg::Mat> matrices;  // X(t)
};

struct KPClass {
  BrauerPair pair;
  ModularRep y;
  ProjectiveRep x;
  Cocycle alpha;  // on I/H, indexed like `x.representatives`
};

/// The unique simple module of k[P C_G(P)]e for a self-centralizing pair.
/// Throws InputError when the pair is not self-centralizing and
/// CapExceeded when dim kHe exceeds `cap`.
ModularRep irreducible_module(const BrauerContext& ctx, const BrauerPair& pair,
                              std::uint64_t seed = 0, int cap = 4096);

/// The Kulshammer-Puig factor set of the pair on I/P C_G(P). A nonzero seed
/// also randomizes the coset representatives.
KPClass kp_class(const BrauerContext& ctx, const BrauerPair& pair, std::uint64_t seed = 0,
                 int cap = 81);

/// kappa at (P, sigma(e)) against kappa at (P, e) raised to the p.
struct LemmaThreeReport {
  KPClass kappa;
  KPClass kappa_sigma;
  bool holds = false;          // kappa_sigma = kappa^p
  bool frobenius_fixed = false;  // kappa = kappa^p
  long long order = 1;
  std::optional<CoboundaryWitness> witness;  // for kappa_sigma - kappa^p
};
LemmaThreeReport verify_lemma_three(const BrauerContext& ctx, const BrauerPair& pair);

}  // namespace gwb
