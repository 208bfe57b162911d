#pragma once

#include "gwb/cyclotomic.hpp"
#include "gwb/group.hpp"
#include "gwb/reduction.hpp"

#include <memory>
#include <vector>

namespace gwb {

using GroupPtr = std::shared_ptr<const Group>;

/// A class function, one value per conjugacy class of `group`.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(int c) const { return values[c]; }
  /// Value at a local element index.
  const Cyclotomic& operator()(int x) const { return values[group->class_of(x)]; }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& r);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& r) { return a *= r; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group == b.group && a.values == b.values;
  }
};

ClassFunction zero_function(GroupPtr g, int conductor);

class CharacterTable {
 public:
  /// Irreducible characters of g with values in Q(zeta_conductor); the
  /// conductor must be a multiple of exp(g) (0 means exp(g)).
  static std::shared_ptr<const CharacterTable> compute(GroupPtr g, int conductor = 0);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int conductor() const { return conductor_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Cyclotomic>& row(int chi) const { return rows_[chi]; }
  const Cyclotomic& value(int chi, int cls) const { return rows_[chi][cls]; }
  long degree(int chi) const { return degrees_[chi]; }
  ClassFunction character(int chi) const { return {group_, rows_[chi]}; }
  long auxiliary_prime() const { return ell_; }

  /// Class-sum structure constants: C_j C_i = sum_k c(j,i,k) C_k.
  long structure_constant(int j, int i, int k) const {
    const std::size_t r = group_->class_count();
    return coeffs_[(static_cast<std::size_t>(j) * r + i) * r + k];
  }
  /// Index of the character equal to f, or -1.
  int find(const ClassFunction& f) const;

 private:
  GroupPtr group_;
  int conductor_ = 1;
  long ell_ = 0;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<long> degrees_;
  std::vector<long> coeffs_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
/// Coefficients of f against every irreducible character.
std::vector<Cyclotomic> decompose(const ClassFunction& f, const CharacterTable& t);

/// omega_chi(C_K) = |K| chi(g_K) / chi(1).
Cyclotomic central_character(const CharacterTable& t, int chi, int cls);

/// Zero on p-singular classes.
ClassFunction p_prime_truncation(const ClassFunction& f, int p);
bool vanishes_off_p_regular(const ClassFunction& f, int p);
/// All values have non-negative valuation.
bool o_valued(const ClassFunction& f, const Reduction& r);
/// f lies in the span of the given irreducible characters.
bool supported_on(const ClassFunction& f, const CharacterTable& t, const std::vector<int>& chars);
/// Galois twist by tau_t (zeta_m -> zeta_m^s, s = 1 mod p^a).
ClassFunction tau_twist(const ClassFunction& f, const Reduction& r, long long t);

// Class functions on subgroups of one ambient group. Groups built with
// Group::from_subset(ambient, ...) carry the ambient indices; the ambient
// group itself is accepted as well.

/// Value of f at an ambient element (which must lie in f.group).
const Cyclotomic& value_at_ambient(const ClassFunction& f, int ambient_elem);
/// Restriction of f to `sub`, a subgroup of f.group inside the same ambient.
ClassFunction restrict_to(const ClassFunction& f, GroupPtr sub);
/// ^g f on target = g H g^-1, i.e. (^g f)(y) = f(g^-1 y g).
ClassFunction conjugate_function(const Group& ambient, const ClassFunction& f, GroupPtr target,
                                 int g);

}  // namespace gwb
