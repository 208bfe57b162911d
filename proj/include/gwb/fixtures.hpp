#pragma once

#include "gwb/build.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gwb {

struct FixtureSpec {
  std::string name;
  std::string summary;
  nlohmann::json description;  // group-description JSON
  std::vector<int> primes;     // primes used by the self-test
  bool group_only = false;     // too large for block-level work
  std::size_t expected_order = 0;
};

/// Every registered fixture, in a fixed order.
const std::vector<FixtureSpec>& fixture_registry();
/// Lookup by name (case-insensitive); throws InputError when unknown.
const FixtureSpec& fixture(const std::string& name);

/// The 144 x 144 table c(x, y) = j(x) i(y) mod 3 on L = E16 x| (C3 x C3),
/// where x acts linearly through a^i b^j. Indexed by element indices of
/// semidirect(2, 4, {a, b}).
std::vector<std::vector<int>> g432_cocycle();
/// The two commuting order-3 matrices a = diag(W, I), b = diag(I, W).
std::vector<IntMatrix> g432_matrices();
/// Two matrices generating a copy of A7 inside GL4(2).
std::vector<IntMatrix> a7_matrices();

}  // namespace gwb
