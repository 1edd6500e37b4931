#pragma once

#include <istream>
#include <map>
#include <string>

#include "ybe/quadratic_set.hpp"

namespace ybe {

inline constexpr int kSolutionFormatVersion = 1;

/// On-disk form of a quadratic set: {"format_version", "n", "r", "metadata"}.
/// Labels are 0-based and r lists r(x, y) for x * n + y in increasing order.
struct SolutionFile {
  QuadraticSet qs;
  std::map<std::string, std::string> metadata;

  /// Canonical form: sorted keys, no insignificant whitespace.
  std::string serialize() const;
  /// Throws Error(Parse) on malformed input, or the validation error of from_table.
  static SolutionFile parse(const std::string& text);
  static SolutionFile read(std::istream& in);
  static SolutionFile load(const std::string& path);
};

}  // namespace ybe
