#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ybe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse integer row: (column, coefficient) with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::uint64_t, BigInt>>;

/// Incremental exact row echelon form over the rationals, kept fraction-free:
/// rows stay primitive integer vectors.
class EchelonBasis {
 public:
  /// Reduces row against the current pivots; returns true if it added a new pivot.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivot_rows_.size(); }

 private:
  SparseRow reduce(SparseRow row) const;
  std::vector<SparseRow> pivot_rows_;
  // Column of each pivot -> index into pivot_rows_, as a sorted vector of pairs.
  std::vector<std::pair<std::uint64_t, std::size_t>> pivots_;
  const SparseRow* find_pivot(std::uint64_t col) const;
};

std::size_t exact_rank(const std::vector<SparseRow>& rows);

}  // namespace ybe
