#pragma once

#include <random>
#include <string>
#include <vector>

#include "ybe/extensions.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe::testing {

QuadraticSet fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// 2-cancellativity straight from the definition: every power r^k, 1 <= k < |r|.
bool two_cancellative_by_powers(const QuadraticSet& qs);

/// Isomorphism by trying every bijection.
bool isomorphic_brute_force(const QuadraticSet& a, const QuadraticSet& b);

/// Seed for randomized property tests, set in tests/CMakeLists.txt.
inline constexpr unsigned kPropertySeed = YBE_TEST_SEED;

Permutation random_permutation(int n, std::mt19937& rng);

/// Braided sets of order <= 4 for extension tests: trivial sets, small racks,
/// the small fixtures, and random permutation solutions r(x, y) = (f y, g x)
/// with f, g commuting. The non-braided order-3 fixture is included as well.
std::vector<QuadraticSet> extension_part_pool();

/// Parts drawn from the pool, or a fresh permutation solution; sigma, tau uniform.
ExtensionSpec random_extension_spec(std::mt19937& rng, const std::vector<QuadraticSet>& pool);

}  // namespace ybe::testing
