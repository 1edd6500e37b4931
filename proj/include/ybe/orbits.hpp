#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybe/quadratic_set.hpp"

namespace ybe {

using Word = std::vector<int>;

inline constexpr std::uint64_t kDefaultOrbitBudget = 10'000'000;

/// Orbits of X^m under the maps r^{i,i+1}. Words are indexed in base n with the
/// first letter most significant, so index order is lexicographic order.
struct OrbitPartition {
  int n = 0;
  int m = 0;
  /// Orbit id of every word index.
  std::vector<std::uint32_t> class_of;
  /// Smallest word index of each orbit, in discovery order (which is increasing).
  std::vector<std::uint64_t> reps;
  std::vector<std::uint64_t> lengths;
  /// Number of orbits of length 1.
  std::uint64_t fixed_count = 0;
  /// Number of orbits of length > 1.
  std::uint64_t q = 0;

  std::size_t count() const { return reps.size(); }
  std::uint32_t class_of_word(const Word& w) const;
  Word rep_word(std::uint32_t id) const;
};

std::uint64_t word_index(const Word& w, int n);
Word word_from_index(std::uint64_t idx, int n, int m);
std::uint64_t checked_power(std::uint64_t n, int m, std::uint64_t budget);

OrbitPartition dm_orbits(const QuadraticSet& qs, int m, std::uint64_t budget = kDefaultOrbitBudget);
OrbitPartition r_orbits(const QuadraticSet& qs);

/// The orbit containing a single word, found by closure; words in increasing order.
std::vector<Word> orbit_of(const QuadraticSet& qs, const Word& w, std::uint64_t budget = kDefaultOrbitBudget);

/// dims[m] = number of orbits of X^m for m <= max_degree (dims[0] = 1, dims[1] = n).
std::vector<std::uint64_t> graded_dims(const QuadraticSet& qs, int max_degree,
                                       std::uint64_t budget = kDefaultOrbitBudget);

struct OrbitTypeStats {
  std::uint64_t count = 0;
  std::uint64_t min_length = 0;
  std::uint64_t max_length = 0;
};

/// Orbits of X^3 by type: meeting the diagonal, meeting words with exactly
/// one repeated adjacent pair of letters, or avoiding repeated adjacent letters.
struct X3Census {
  OrbitTypeStats diagonal;
  OrbitTypeStats type_ii;
  OrbitTypeStats square_free;
  /// Per orbit: 0 diagonal, 1 type ii, 2 square-free.
  std::vector<int> type_of;
  /// Diagonal orbits have length 1, type ii orbits length >= 3, square-free ones >= 6.
  bool length_bounds_hold = true;
};

X3Census classify_x3(const QuadraticSet& qs);

/// Closed form of the k-th power of r on the dihedral quandle of order p.
Pair dihedral_orbit_closed_form(int p, int x, int y, long long k);

}  // namespace ybe
