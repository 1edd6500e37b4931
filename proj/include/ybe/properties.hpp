#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/quadratic_set.hpp"

namespace ybe {

enum class Property {
  Nondegenerate,
  Involutive,
  SquareFree,
  TwoCancellative,
  L1,
  R1,
  LR3,
  Braided,
  CL1,
  CR1,
  CL2,
  CR2,
  LRI,
  SD,
  QuantumBinomial,
};

inline constexpr std::size_t kPropertyCount = 15;

std::string_view property_name(Property p);
/// Accepts the names printed by property_name, plus a few aliases
/// ("2-cancellative", "sqfree", "nondeg", "ybe").
std::optional<Property> parse_property(std::string_view name);
const std::array<Property, kPropertyCount>& all_properties();

struct Flag {
  bool holds = true;
  /// Lexicographically first failing tuple of labels, empty when the flag holds.
  std::vector<int> witness;
};

struct PropertyReport {
  std::array<Flag, kPropertyCount> flags;

  const Flag& operator[](Property p) const { return flags[static_cast<std::size_t>(p)]; }
  Flag& operator[](Property p) { return flags[static_cast<std::size_t>(p)]; }
  bool holds(Property p) const { return (*this)[p].holds; }
  /// cl1, cr1, cl2 and cr2 together.
  bool cyclic() const;
};

PropertyReport check_conditions(const QuadraticSet& qs);

/// Individual predicates, each returning the first failing tuple.
Flag check_nondegenerate(const QuadraticSet& qs);
Flag check_involutive(const QuadraticSet& qs);
Flag check_square_free(const QuadraticSet& qs);
/// Witness is (x, y, k) with r^k(x, y) sharing exactly one coordinate with (x, y).
Flag check_two_cancellative(const QuadraticSet& qs);
Flag check_braided(const QuadraticSet& qs);

}  // namespace ybe
