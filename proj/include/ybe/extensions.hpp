#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ybe/permutation.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

/// Two disjoint quadratic sets glued along permutations of each part.
/// In the glued set the first part keeps labels [0, |X|) and the second part
/// is shifted to [|X|, |X| + |Y|).
struct ExtensionSpec {
  QuadraticSet xpart;
  QuadraticSet ypart;
  Permutation sigma;  // acts on xpart
  Permutation tau;    // acts on ypart
};

/// r restricts to the parts on X^2 and Y^2; for x in X and a in Y,
/// r(x, a) = (tau a, sigma x) and r(a, x) = (sigma x, tau a).
/// Throws InvalidArgument when a permutation size does not match its part.
QuadraticSet build_sigma_tau(const ExtensionSpec& spec);

/// Block labels of a set partition; blocks[i] lists its elements in increasing order.
struct Partition {
  std::vector<std::vector<int>> blocks;

  static Partition two_blocks(int first_size, int total);
  /// Parses "0 1 2|3 4 5".
  static Partition parse(const std::string& text, int n);
  std::string to_string(int base = 0) const;
};

/// Throws InvalidArgument unless the blocks partition {0..n-1}, and
/// BlocksNotInvariant unless r maps every block's square onto itself.
void require_invariant_partition(const QuadraticSet& qs, const Partition& part);

struct ExtensionConditions {
  bool parts_braided = true;
  bool sigma_automorphism = true;  // (sigma x sigma) r_X = r_X (sigma x sigma)
  bool tau_automorphism = true;
  /// L and R of x agree with those of sigma^2 x in X, and likewise for tau in Y.
  bool square_actions = true;
  bool predicted_braided = true;
  bool direct_braided = true;
  /// First failing condition, empty when all hold.
  std::string first_failure;
};

ExtensionConditions check_extension_conditions(const ExtensionSpec& spec);

struct OrbitProfile {
  bool parts_two_cancellative = true;
  /// Common cycle length of sigma when all its cycles have one length.
  std::optional<std::uint64_t> sigma_uniform;
  std::optional<std::uint64_t> tau_uniform;
  /// Rule with sigma and tau of one uniform cycle length q.
  bool uniform_rule_two_cancellative = false;
  /// Rule with sigma^2 and tau^2 of one uniform cycle length c.
  bool squares_rule_two_cancellative = false;
  bool direct_two_cancellative = false;
  /// q or 2q under the uniform rule, 2c under the squares rule.
  std::optional<std::uint64_t> uniform_rule_mixed_length;
  std::optional<std::uint64_t> squares_rule_mixed_length;
  std::set<std::uint64_t> direct_mixed_lengths;
  /// lcm(|r_X|, |r_Y|, q or 2q) when the uniform rule applies.
  std::optional<std::uint64_t> uniform_rule_order;
  /// lcm(|r_X|, |r_Y|, 2 lcm(ord sigma^2, ord tau^2)); valid for every spec.
  std::uint64_t predicted_order = 0;
  std::uint64_t direct_order = 0;
};

OrbitProfile predicted_orbit_profile(const ExtensionSpec& spec);

struct StuReport {
  bool holds = true;
  /// "stu1".."stu4" of the first failure.
  std::string failing_tag;
  /// Blocks (i, j) and the elements of the first failure.
  std::vector<int> witness;
};

/// stu1: ^(a^y) x = ^a x, stu2: x^(^y a) = x^a, stu3: ^(x^b) a = ^x a,
/// stu4: a^(^b x) = a^x, for x, y in one block and a, b in another; every
/// pair of blocks is checked.
StuReport is_generalized_stu(const QuadraticSet& qs, const Partition& part);

/// For a split into X (block 0) and Y (block 1): each stu condition beside the
/// matching statement that restricted translations are automorphisms.
struct StuAutomorphismReport {
  bool stu[4] = {true, true, true, true};
  /// L_a on X, R_a on X (a in Y), L_x on Y, R_x on Y (x in X).
  bool restricted_automorphism[4] = {true, true, true, true};
};

StuAutomorphismReport stu_automorphism_equivalences(const QuadraticSet& qs, const Partition& part);

/// The stu conditions with single letters replaced by words: a, b over one
/// block, u, v over the other, all lengths <= max_length, compared as classes
/// of the monoid. Throws NotBraided for non-braided sets.
StuReport stu_monoid_bounded(const QuadraticSet& qs, const Partition& part, int max_length);

struct MixedReport {
  /// l1(X,Y,X), r2(X,Y,X), l1(Y,X,Y), r2(Y,X,Y).
  bool mixed[4] = {true, true, true, true};
  /// x -> L_x|Y, x -> R_x|Y, a -> L_a|X, a -> R_a|X give group homomorphisms into
  /// the automorphism groups of the other part.
  bool homomorphisms[4] = {true, true, true, true};
  bool parts_braided = true;
  bool predicted_braided = true;
  bool direct_braided = true;
  std::vector<int> first_mixed_witness;
};

MixedReport mixed_l1_r2(const QuadraticSet& qs, const Partition& part);

/// The three conditions l1, laut and stu1 on one mixed triple (a in Y; x, y in X).
struct MixedTriple {
  bool l1 = false;
  bool laut = false;
  bool stu1 = false;
};

MixedTriple mixed_triple(const QuadraticSet& qs, int a, int y, int x);

}  // namespace ybe
