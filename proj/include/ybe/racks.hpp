#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybe/permutation.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

/// A rack x |> y = L_x(y) with its self-distributive solution r(x, y) = (x |> y, x).
struct RackStructure {
  QuadraticSet base;
  /// op[x][y] = x |> y.
  std::vector<std::vector<int>> op;
  std::vector<Permutation> inner_generators;
  bool quandle = false;
};

/// Throws InvalidArgument unless every L_x is a bijection and L_x L_y = L_{x|>y} L_x.
RackStructure rack_from_operation(std::vector<std::vector<int>> op);
/// Requires an SD set whose left translations satisfy the rack identity.
RackStructure rack_from_quadratic_set(const QuadraticSet& qs);

/// x |> y = 2x - y mod p.
RackStructure dihedral_quandle(int p);
/// x |> y = (1 - g) x + g y mod n; throws NotAUnit unless gcd(g, n) = 1.
RackStructure affine_quandle(int n, int g);

struct Decomposition {
  bool indecomposable = true;
  /// When decomposable: a proper nonempty Y (containing 0) with Y^2 and its
  /// complement's square both r-invariant.
  std::vector<int> block;
  std::vector<int> complement;
};

/// Nondegenerate SD sets: transitivity of the group generated by the L_x, the
/// block being the orbit of 0. Otherwise searches all subsets containing 0 for
/// an r-invariant splitting (n <= 16).
Decomposition is_indecomposable(const QuadraticSet& qs);

/// Finest partition of the form "smallest r-compatible equivalence joining 0
/// with some b" in which every block is r-invariant and there are at least two
/// blocks. r-compatible: x ~ x', y ~ y' implies r(x, y) ~ r(x', y') in both
/// components. Empty when none exists (n <= 16).
std::vector<std::vector<int>> invariant_block_system(const QuadraticSet& qs);

/// Orbits of the group generated by all L_x; needs nondegenerate left actions.
std::vector<std::vector<int>> inner_orbits(const QuadraticSet& qs);
bool inner_group_transitive(const QuadraticSet& qs);

/// x -> L_x is injective.
bool is_faithful(const QuadraticSet& qs);

/// Order of the group generated by the L_x, by closure within budget.
std::uint64_t inner_group_order(const QuadraticSet& qs, std::uint64_t budget = 1'000'000);

}  // namespace ybe
