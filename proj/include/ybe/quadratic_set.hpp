#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/permutation.hpp"

namespace ybe {

using Pair = std::pair<int, int>;

/// A finite set {0,...,n-1} with a bijective map r on pairs.
/// The table stores r(x, y) at index x * n + y.
class QuadraticSet {
 public:
  QuadraticSet() = default;

  /// Throws NotBijective or BadLabel.
  static QuadraticSet from_table(int n, std::vector<Pair> rmap);
  /// Builds r(x, y) = (left[x][y], right[y][x]).
  static QuadraticSet from_actions(const std::vector<std::vector<int>>& left,
                                   const std::vector<std::vector<int>>& right);
  /// Builds the self-distributive map r(x, y) = (left[x][y], x).
  static QuadraticSet from_left_translations(const std::vector<std::vector<int>>& left);
  /// r(x, y) = (y, x).
  static QuadraticSet trivial(int n);

  int size() const { return n_; }
  const std::vector<Pair>& table() const { return rmap_; }

  Pair r(int x, int y) const { return rmap_[index(x, y)]; }
  Pair r_inverse(int x, int y) const { return inv_[index(x, y)]; }
  /// Left action: first component of r(x, y).
  int left(int x, int y) const { return rmap_[index(x, y)].first; }
  /// Right action of y on x: second component of r(x, y).
  int right(int x, int y) const { return rmap_[index(x, y)].second; }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }
  /// r as a permutation of {0,...,n^2-1}.
  const std::vector<int>& r_index_table() const { return fwd_; }
  const std::vector<int>& r_inverse_index_table() const { return bwd_; }

  /// Relabels by phi: the result maps (phi x, phi y) to (phi x phi)(r(x, y)).
  QuadraticSet relabel(const Permutation& phi) const;
  /// Restriction to a subset that must satisfy r(Y x Y) = Y x Y.
  /// The subset is relabeled 0..k-1 in increasing order.
  QuadraticSet restrict_to(const std::vector<int>& subset) const;

  friend bool operator==(const QuadraticSet& a, const QuadraticSet& b) {
    return a.n_ == b.n_ && a.rmap_ == b.rmap_;
  }

 private:
  int n_ = 0;
  std::vector<Pair> rmap_;
  std::vector<Pair> inv_;
  std::vector<int> fwd_;
  std::vector<int> bwd_;
};

/// Left and right translation tables; left[x][y] = L_x(y), right[y][x] = R_y(x).
struct ActionTables {
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;
  bool nondegenerate = false;
  /// lcm of the orders of all L_x and R_x; present only when nondegenerate.
  std::optional<std::uint64_t> p;

  Permutation left_perm(int x) const { return Permutation(left[static_cast<std::size_t>(x)]); }
  Permutation right_perm(int y) const { return Permutation(right[static_cast<std::size_t>(y)]); }
};

ActionTables actions(const QuadraticSet& qs);

std::vector<Pair> fixed_points(const QuadraticSet& qs);

/// Lengths of the cycles of r on X x X, in order of each cycle's smallest index.
std::vector<std::uint64_t> r_cycle_lengths(const QuadraticSet& qs);

/// Order of r as a permutation of X x X.
std::uint64_t order_of_r(const QuadraticSet& qs);

/// Applies r on positions (i, i+1) of word; forward or inverse.
void apply_r_at(const QuadraticSet& qs, std::vector<int>& word, std::size_t i, bool inverse = false);

/// Both sides of the braid relation r12 r23 r12 = r23 r12 r23 on (x, y, z).
std::pair<std::vector<int>, std::vector<int>> braid_sides(const QuadraticSet& qs, int x, int y, int z);

}  // namespace ybe
