#pragma once

#include "gwb/chars.hpp"
#include "gwb/reduction.hpp"

#include <memory>
#include <vector>

namespace gwb {

/// A central element of kG in class-sum coordinates.
using ClassVector = std::vector<FieldElem>;

struct Block {
  int label = 0;
  std::vector<int> characters;            // indices into the character table
  ClassVector residues;                   // omega_chi mod P, per class
  ClassVector idempotent;                 // per class
  std::vector<Cyclotomic> idempotent_K;   // the same idempotent over K
  int defect = 0;                         // defect group has order p^defect
};

/// The p-blocks of a group, from the fibers of the reduced central characters.
class BlockSystem {
 public:
  static std::shared_ptr<const BlockSystem> compute(TablePtr table,
                                                    std::shared_ptr<const Reduction> red);

  const CharacterTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  const Group& group() const { return table_->group(); }
  const Reduction& reduction() const { return *red_; }
  int p() const { return red_->p(); }
  std::size_t size() const { return blocks_.size(); }
  const Block& block(int label) const { return blocks_[label]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_of_character(int chi) const { return char_block_[chi]; }

  /// Label whose idempotent equals `v`, or -1.
  int find(const ClassVector& v) const;
  /// Coefficientwise Frobenius.
  int sigma(int label) const;
  /// Image under the antipode g -> g^-1.
  int antipode(int label) const;
  /// Idempotent coefficient at every element (local indices).
  std::vector<FieldElem> element_coefficients(int label) const;

  /// Product of central elements in class-sum coordinates.
  ClassVector multiply(const ClassVector& a, const ClassVector& b) const;
  ClassVector one() const;

 private:
  TablePtr table_;
  std::shared_ptr<const Reduction> red_;
  std::vector<Block> blocks_;
  std::vector<int> char_block_;
};

using BlocksPtr = std::shared_ptr<const BlockSystem>;

/// Table and blocks of `g` with values in Q(zeta_conductor).
BlocksPtr block_partition(GroupPtr g, int p, int conductor = 0);

ClassVector frobenius(const ClassVector& v);
ClassVector antipode(const Group& g, const ClassVector& v);

struct GaloisOrbitReport {
  std::vector<std::vector<int>> orbits;  // cycles of sigma, each starting at its least label
  std::vector<int> sigma;                // label -> label
};
GaloisOrbitReport galois_orbits(const BlockSystem& bs);

/// The block of G x H whose idempotent is e_a (x) e_b^*, where `prod` is
/// direct_product(G, H) and `bprod` its block system. Returns -1 when the
/// outer product is not a block idempotent.
int product_block(const BlockSystem& bg, int a, const BlockSystem& bh, int b,
                  const BlockSystem& bprod);

/// Primitive idempotents of Z(kG) computed without characters: the class-sum
/// structure constants are counted from the multiplication table and k^r is
/// split into joint generalized eigenspaces of the multiplication operators.
std::vector<ClassVector> center_idempotents(const Group& g, const Reduction& red);

}  // namespace gwb
