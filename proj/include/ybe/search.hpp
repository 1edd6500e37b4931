#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybe/properties.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

/// Per-property requirement (true), prohibition (false) or no constraint.
struct SearchFilter {
  std::array<std::optional<bool>, kPropertyCount> want{};
  /// dim A_2 = 2n - 1.
  bool minimality = false;

  SearchFilter& require(Property p);
  SearchFilter& forbid(Property p);
  bool wants(Property p, bool value) const { return want[static_cast<std::size_t>(p)] == value; }
  bool accepts(const QuadraticSet& qs) const;
  /// Parses "nondegenerate,!involutive,square_free"; a leading '!' forbids.
  static SearchFilter parse(const std::string& text);
  std::string to_string() const;
};

/// Lexicographically smallest table over all relabelings (n <= 8).
QuadraticSet canonical_form(const QuadraticSet& qs);
bool isomorphic(const QuadraticSet& a, const QuadraticSet& b);

/// Canonical form of the partition of X^2 into r-orbits under relabeling:
/// orbit ids numbered by first appearance, minimized over all relabelings.
/// Equal forms mean the algebras have the same relations up to renaming
/// generators (n <= 8).
std::vector<int> relation_class_form(const QuadraticSet& qs);

enum class SearchStrategy {
  /// Cell-by-cell backtracking over the table of r.
  General,
  /// Tuples of left translations of a self-distributive set.
  SelfDistributive,
  /// Racks: left translations closed under L_{x|>y} = L_x L_y L_x^-1.
  Rack,
};

struct SearchStats {
  SearchStrategy strategy = SearchStrategy::General;
  std::uint64_t candidates = 0;
  std::uint64_t classes = 0;
};

/// Picks a strategy for n and the filter, or throws BudgetExceeded when the
/// search space is out of reach:
/// SD and braided required: racks, n <= 6;
/// SD required: n <= 4, or n <= 5 when square-free is required too;
/// otherwise n <= 3, or n <= 4 when nondegenerate is required.
SearchStrategy choose_strategy(int n, const SearchFilter& filter);

/// Streams one canonical representative per isomorphism class, in order of
/// discovery (deterministic).
SearchStats enumerate(int n, const SearchFilter& filter, const std::function<void(const QuadraticSet&)>& emit);
/// All classes, sorted by canonical table.
std::vector<QuadraticSet> enumerate_all(int n, const SearchFilter& filter);

struct MinimalityEntry {
  QuadraticSet qs;
  std::uint64_t dim2 = 0;
  bool orbit_lengths_n = false;
  /// Every nontrivial orbit has minimum 0y, and its words use each letter once
  /// in the first position and once in the second.
  bool relation_shape = false;
  bool dual3_zero = false;
  std::optional<int> gk_estimate;
  bool growth_at_most_2 = false;
  bool indecomposable = false;
  bool all_checks() const {
    return orbit_lengths_n && relation_shape && dual3_zero && growth_at_most_2 && indecomposable;
  }
};

/// Classes of nondegenerate square-free 2-cancellative sets of order n with
/// dim A_2 = 2n - 1, each with its cross-checks. sd_only searches racks.
std::vector<MinimalityEntry> minimality_survey(int n, bool sd_only);
MinimalityEntry minimality_checks(const QuadraticSet& qs);

}  // namespace ybe
