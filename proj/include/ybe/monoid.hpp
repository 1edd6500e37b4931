#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/orbits.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

/// Elements of the monoid S(X, r) of length <= max_degree, as orbit classes.
class MonoidView {
 public:
  MonoidView(const QuadraticSet& qs, int max_degree, std::uint64_t budget = kDefaultOrbitBudget);

  const QuadraticSet& base() const { return qs_; }
  int max_degree() const { return static_cast<int>(parts_.size()) - 1; }
  const OrbitPartition& degree(int m) const { return parts_[static_cast<std::size_t>(m)]; }
  std::uint32_t class_of(const Word& w) const;
  bool equivalent(const Word& a, const Word& b) const;

 private:
  QuadraticSet qs_;
  std::vector<OrbitPartition> parts_;
};

/// ^a u: letters of a act from the right end inwards, each one swept through u by r.
Word left_action_unchecked(const QuadraticSet& qs, const Word& a, const Word& u);
/// u^a: letters of a act left to right, each one swept backwards through u by r.
Word right_action_unchecked(const QuadraticSet& qs, const Word& u, const Word& a);

/// As above; throws NotBraided unless r satisfies the braid relation.
Word word_action_left(const QuadraticSet& qs, const Word& a, const Word& u);
Word word_action_right(const QuadraticSet& qs, const Word& u, const Word& a);

struct AxiomCheck {
  std::string name;
  bool holds = true;
  /// Words of the first failing instance.
  std::vector<Word> witness;
};

struct MatchedPairReport {
  int max_length = 0;
  /// ML0, ML1, ML2, MR0, MR1, MR2, M3, then well-definedness of both actions on classes.
  std::vector<AxiomCheck> axioms;
  bool all_hold() const;
  const AxiomCheck& get(const std::string& name) const;
};

/// Checks the matched pair axioms on all words whose combined length is at
/// most max_length, comparing elements as classes in S.
MatchedPairReport check_matched_pair(const QuadraticSet& qs, int max_length);

struct CancellationFailure {
  /// true for a.u = a.v, false for u.a = v.a.
  bool left = true;
  int letter = 0;
  /// Canonical representatives, u the largest and v the smallest in the first colliding group.
  Word u;
  Word v;
};

struct CancellationReport {
  int max_length = 0;
  std::optional<CancellationFailure> left_failure;
  std::optional<CancellationFailure> right_failure;
  bool cancellative() const { return !left_failure && !right_failure; }
};

/// For every degree m < max_length and letter a, u -> a.u and u -> u.a must be injective on classes.
CancellationReport cancellativity_bounded(const QuadraticSet& qs, int max_length);

inline int default_cancellation_length(std::uint64_t p) { return static_cast<int>(std::max<std::uint64_t>(4, p + 1)); }

struct PowerIdentityReport {
  std::uint64_t p = 0;
  bool shifted_powers = true;   // a.x^m = (^a x)^m . a^(x^m) and its mirror, m <= p
  bool action_on_powers = true; // ^a(x^m) = (^a x)^m and (x^m)^a = (x^a)^m, m <= p
  bool period_identities = true;  // a.x^p = a.((^a x)^a)^p and its mirror
  bool powers_commute = true;   // x^p y^p = y^p x^p
  /// First (a, x, y), x != y, with a.x^p = a.y^p.
  std::optional<std::vector<int>> left_collision;
  /// First (a, x, y), x != y, with x^p.a = y^p.a.
  std::optional<std::vector<int>> right_collision;
  std::vector<std::string> failures;
};

/// Needs nondegenerate r; p is the lcm of the orders of all L_x and R_x.
PowerIdentityReport power_identities(const QuadraticSet& qs, std::uint64_t budget = kDefaultOrbitBudget);

}  // namespace ybe
