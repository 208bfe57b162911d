#pragma once

#include "gwb/group.hpp"

#include <json.hpp>

#include <vector>

namespace gwb {

using IntMatrix = std::vector<std::vector<int>>;

/// A built group together with the generators it was described by, in
/// description order (Group deduplicates its own generator list).
struct BuiltGroup {
  Group group;
  std::vector<Permutation> generators;
};

/// Builds a group from the JSON group-description format:
///   {"kind":"perm","degree":n,"generators":[[cycles...]]}
///   {"kind":"direct","factors":[...]}
///   {"kind":"semidirect","p":p,"rank":n,"matrices":[...],"complement":{...}}
///   {"kind":"central_ext","base":{...},"center_order":m,"cocycle":[[...]]}
///   {"kind":"matrix","p":p,"rank":n,"matrices":[...]}
/// "complement" is optional: when present its generators act through the
/// matching matrices, so the action may have a kernel.
BuiltGroup build_group(const nlohmann::json& desc, std::size_t cap = kBlockOrderCap);

BuiltGroup perm_group(std::size_t degree, const std::vector<std::vector<std::vector<int>>>& gens,
                      std::size_t cap = kBlockOrderCap);
BuiltGroup direct_product_of(const std::vector<BuiltGroup>& factors,
                             std::size_t cap = kBlockOrderCap);
/// (F_p)^rank x| A with A generated by `matrices`, acting on column vectors.
/// Without a complement the group is the affine group on p^rank points.
BuiltGroup semidirect(int p, int rank, const std::vector<IntMatrix>& matrices,
                      const BuiltGroup* complement, std::size_t cap = kBlockOrderCap);
/// Linear group on the nonzero vectors of (F_p)^rank.
BuiltGroup matrix_group(int p, int rank, const std::vector<IntMatrix>& matrices,
                        std::size_t cap = kBlockOrderCap);
/// Central extension of `base` by Z/m with a normalized 2-cocycle indexed by
/// base element indices; realized by the left regular action on base x Z/m.
BuiltGroup central_extension(const BuiltGroup& base, int center_order,
                             const std::vector<std::vector<int>>& cocycle,
                             std::size_t cap = kBlockOrderCap);

/// Vector encoding used for matrix actions: index = sum v_i p^i.
std::vector<int> decode_vector(int code, int p, int rank);
int encode_vector(const std::vector<int>& v, int p);
std::vector<int> apply_matrix(const IntMatrix& m, const std::vector<int>& v, int p);

}  // namespace gwb
