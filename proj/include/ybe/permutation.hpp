#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ybe {

/// A bijection of {0,...,n-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  static Permutation from_cycles(int n, const std::string& text);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  /// (this * other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(long long k) const;
  bool is_identity() const;
  std::uint64_t order() const;
  /// Lengths of all cycles, fixed points included, in order of smallest element.
  std::vector<int> cycle_lengths() const;
  std::string to_cycles(int base = 0) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// True if table is a bijection of {0,...,table.size()-1}.
bool is_bijection(const std::vector<int>& table);

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace ybe
