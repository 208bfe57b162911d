#pragma once

#include "gwb/perm.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gwb {

/// Default cap on |G| for block-level work.
inline constexpr std::size_t kBlockOrderCap = 10'000;
/// Cap on |G| for purely group-theoretic checks.
inline constexpr std::size_t kGroupOnlyOrderCap = 50'000;

/// A subgroup (or any subset) of a Group, as sorted element indices.
using ElemSet = std::vector<int>;

struct ConjugacyClass {
  int representative;  // least element index in the class
  std::size_t size;
  std::size_t centralizer_order;
};

/// A finite permutation group with every element enumerated.
///
/// Elements are stored in lexicographic order of their image sequences, so
/// index 0 is the identity and all downstream labelings are reproducible.
/// Conjugacy classes are ordered by representative index.
class Group {
 public:
  static Group generate(const std::vector<Permutation>& generators,
                        std::size_t cap = kBlockOrderCap);
  /// The subgroup of `ambient` with the given element indices. The element
  /// order is inherited from the ambient group.
  static Group from_subset(const Group& ambient, const ElemSet& subset);

  std::size_t order() const { return elems_.size(); }
  std::size_t degree() const { return elems_.front().degree(); }
  const Permutation& element(int i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  /// Index of `p`, or -1 when p is not in the group.
  int find(const Permutation& p) const;

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long k) const;
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  int elem_order(int a) const { return orders_[a]; }
  int exponent() const { return exponent_; }

  const std::vector<int>& generators() const { return gens_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  int class_of(int a) const { return class_of_[a]; }
  /// Class of (rep of class c)^k.
  int power_class(int c, long long k) const;

  /// For groups built with from_subset: ambient index of each element.
  const std::vector<int>& ambient_index() const { return ambient_; }
  /// Ambient index of element i (i itself when there is no ambient group).
  int to_ambient(int i) const { return ambient_.empty() ? i : ambient_[i]; }
  /// Local index of an ambient element, or -1.
  int from_ambient(int a) const;

 private:
  void finish(std::vector<Permutation> elems, const std::vector<Permutation>& gens,
              const Group* ambient = nullptr);

  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<std::int32_t> table_;  // multiplication table, only for small groups
  std::vector<int> inv_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::vector<int> gens_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> ambient_;
};

// ---------------------------------------------------------------------------
// Subgroup machinery on a fixed ambient group. All sets are sorted.

ElemSet closure(const Group& g, const std::vector<int>& generators);
ElemSet whole(const Group& g);
ElemSet trivial_subgroup();
bool contains(const ElemSet& s, int x);
bool is_subset(const ElemSet& small, const ElemSet& big);
bool is_subgroup(const Group& g, const ElemSet& s);
/// A small generating set (greedy over the sorted elements).
std::vector<int> generating_set(const Group& g, const ElemSet& s);

ElemSet centralizer(const Group& g, const ElemSet& s);
ElemSet normalizer(const Group& g, const ElemSet& s);
ElemSet center(const Group& g, const ElemSet& s);
/// g S g^-1
ElemSet conjugate(const Group& g, const ElemSet& s, int by);
ElemSet intersect(const ElemSet& a, const ElemSet& b);
/// Subgroup generated by the union.
ElemSet join(const Group& g, const ElemSet& a, const ElemSet& b);

struct LocalSubgroups {
  ElemSet centralizer, normalizer, center;
};
LocalSubgroups local_subgroups(const Group& g, const ElemSet& p);

bool is_p_element(const Group& g, int x, int p);
bool is_p_group(const Group& g, const ElemSet& s, int p);
/// p-part of n.
std::size_t p_part(std::size_t n, int p);
int p_adic_valuation(std::size_t n, int p);

/// A Sylow p-subgroup, grown from the trivial group by normalizer climbing.
ElemSet sylow_subgroup(const Group& g, int p);

/// (g_p, g_p'), with g = g_p g_p' = g_p' g_p.
std::pair<int, int> p_parts(const Group& g, int x, int p);

/// All subgroups of the p-group `d` (every subgroup, not classes).
std::vector<ElemSet> subgroups_of(const Group& g, const ElemSet& d,
                                  std::size_t cap = 5000);

/// Largest normal p-subgroup.
ElemSet o_p(const Group& g, int p);

// ---------------------------------------------------------------------------
// Maps

/// A homomorphism given on a source subset; images are indices in the target
/// group.
struct GroupMap {
  ElemSet source;
  std::vector<int> images;

  int operator()(int x) const;
  bool injective() const;
  ElemSet image_set() const;
};

/// Extends generator images to a homomorphism, checking consistency over all
/// of closure(gens). Returns nullopt if the assignment does not extend.
std::optional<GroupMap> extend_homomorphism(const Group& src,
                                            const std::vector<int>& gens,
                                            const Group& dst,
                                            const std::vector<int>& gen_images);

/// c_g restricted to s.
GroupMap conjugation_map(const Group& g, const ElemSet& s, int by);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap inverse_map(const GroupMap& m);
bool same_map(const GroupMap& a, const GroupMap& b);

/// Direct product acting on the disjoint union of the two point sets.
Group direct_product(const Group& a, const Group& b,
                     std::size_t cap = kGroupOnlyOrderCap);
/// Index of (x, y) in a direct_product(a, b).
int pair_index(const Group& prod, const Group& a, const Group& b, int x, int y);

/// Delta(P, phi, Q) = {(phi(y), y) : y in Q} in G x H. phi maps Q (in H) to
/// P (in G).
ElemSet twisted_diagonal(const Group& prod, const Group& g, const Group& h,
                         const GroupMap& phi);

/// Aut(P). Elementary abelian P uses the linear-algebra path; otherwise a
/// brute-force search over generator images (|P| <= 256).
std::vector<GroupMap> automorphism_group(const Group& g, const ElemSet& p,
                                         std::size_t cap = 50'000);

}  // namespace gwb
