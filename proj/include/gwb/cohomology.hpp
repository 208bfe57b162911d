#pragma once

#include "gwb/group.hpp"

#include <optional>
#include <vector>

namespace gwb {

/// A finite group given by its multiplication table; element 0 is the identity.
struct TableGroup {
  int order = 1;
  std::vector<int> table{0};
  std::vector<int> inverse{0};

  int mul(int a, int b) const { return table[a * order + b]; }
  static TableGroup from_group(const Group& g);
  /// Throws InputError unless the table is a group with identity 0.
  void validate() const;
};

/// A 2-cochain with values in the cyclic group k^x, written additively as
/// discrete logarithms mod `modulus` (= |k^x|).
struct Cocycle {
  TableGroup group;
  long long modulus = 1;
  std::vector<long long> values;  // values[x * |A| + y]

  long long at(int x, int y) const { return values[x * group.order + y]; }
};

bool is_cocycle(const Cocycle& a);
bool is_normalized(const Cocycle& a);

/// beta with a(x,y) = beta(x) + beta(y) - beta(xy) in the algebraic closure.
/// Solved in Z/(modulus * E) with E the p'-part of |A|, after embedding a by
/// multiplication with E; the witness lives in that larger group.
struct CoboundaryWitness {
  long long modulus = 1;
  std::vector<long long> beta;
};
std::optional<CoboundaryWitness> coboundary_witness(const Cocycle& a, int p);
bool is_coboundary(const Cocycle& a, int p);
bool classes_equal(const Cocycle& a, const Cocycle& b, int p);
/// kappa -> kappa^k.
Cocycle power(const Cocycle& a, long long k);
/// kappa -> kappa^p, the Frobenius on H^2(A, k^x).
inline Cocycle frobenius_on_class(const Cocycle& a, int p) { return power(a, p); }
/// Order of the class in H^2(A, k^x).
long long class_order(const Cocycle& a, int p);

/// Elementary divisors of H^2(A, k^x) for k algebraically closed of
/// characteristic p. Throws CapExceeded when |A| > cap.
std::vector<long long> h2_invariants(const TableGroup& a, int p, std::size_t cap = 27);

/// Linear algebra over Z/m for composite m, exposed for tests.
namespace modular {
using IntMat = std::vector<std::vector<long long>>;
std::optional<std::vector<long long>> solve(const IntMat& a, const std::vector<long long>& b,
                                            long long m);
/// log_l |image of a| over Z/l^k.
long long image_length(IntMat a, long long l, int k);
}  // namespace modular

}  // namespace gwb
