#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/linalg.hpp"
#include "ybe/orbits.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

/// The relation lead - tail, with lead > tail in the chosen order.
struct Binomial {
  Word lead;
  Word tail;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Quadratic presentation of the algebra of a quadratic set together with its
/// sign-flipped dual relations.
struct Presentation {
  int n = 0;
  /// ordering[i] is the generator of rank i; letters compare by rank.
  std::vector<int> ordering;
  /// One relation w - z per non-minimal word w of every nontrivial r-orbit with minimum z.
  std::vector<Binomial> relations;
  /// Dual relations xi_w + xi_z, one for each relation w - z.
  std::vector<Binomial> dual_binomials;
  /// Dual monomials xi_x xi_y for every fixed point (x, y) of r.
  std::vector<Word> dual_monomials;

  std::size_t s() const { return relations.size(); }
};

/// ordering defaults to the identity (0 < 1 < ... < n-1).
Presentation reduced_relations(const QuadraticSet& qs, std::vector<int> ordering = {});

struct LinearDims {
  std::uint64_t algebra = 0;
  std::uint64_t dual = 0;
};

inline constexpr std::uint64_t kDefaultLinearBudget = 1'000'000;

/// Dimensions of the degree-m components of the algebra and its dual via exact
/// rank of the degree-m part of the relation ideal.
LinearDims linear_dims(const Presentation& pres, int m, std::uint64_t budget = kDefaultLinearBudget);

/// dims[m] of the dual algebra for m <= max_degree.
std::vector<std::uint64_t> dual_graded_dims(const Presentation& pres, int max_degree,
                                            std::uint64_t budget = kDefaultLinearBudget);

struct Term {
  Word word;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Homogeneous polynomial with terms in decreasing order; the first term is the lead.
struct Polynomial {
  std::vector<Term> terms;
  int degree() const { return terms.empty() ? 0 : static_cast<int>(terms.front().word.size()); }
  const Word& lead() const { return terms.front().word; }
  bool is_binomial() const;
};

/// Letters are printed base-shifted and concatenated when the alphabet has at
/// most 9 letters, else separated by '.'.
std::string format_word(const Word& w, int n, int base = 1);
std::string format_polynomial(const Polynomial& p, int n, int base = 1);

struct GroebnerBasis {
  int n = 0;
  std::vector<int> ordering;
  /// Reduced basis sorted by degree, then by lead.
  std::vector<Polynomial> elements;
  /// All overlaps of degree <= complete_to_degree resolve.
  int complete_to_degree = 2;
  /// True when every overlap of every degree resolves, so the basis is finite and final.
  bool complete = false;
  /// Degree of the first overlap above the budget that does not resolve.
  std::optional<int> first_unresolved_degree;

  std::vector<Polynomial> of_degree_at_least(int d) const;
  /// Number of words avoiding every lead, for degrees 0..max_degree.
  std::vector<std::uint64_t> normal_word_counts(int max_degree) const;
};

/// Noncommutative Buchberger in deglex order, degree by degree up to max_degree.
GroebnerBasis groebner(const Presentation& pres, int max_degree = 6);

/// True if the reduced relations for this ordering already form a Groebner basis.
bool is_pbw_under(const QuadraticSet& qs, const std::vector<int>& ordering);

struct PbwResult {
  bool pbw = false;
  /// The first ordering (in lexicographic order) that works.
  std::optional<std::vector<int>> ordering;
  std::uint64_t orderings_tried = 0;
};

/// Tries the identity ordering, or every ordering when exhaustive (n <= 7).
PbwResult is_pbw(const QuadraticSet& qs, bool exhaustive = true);

/// Coefficients of H_A(z) H_dual(-z) - 1 up to degree max_degree.
std::vector<long long> koszul_hilbert_check(const std::vector<std::uint64_t>& dims,
                                            const std::vector<std::uint64_t>& dual_dims, int max_degree);

struct GrowthVerdict {
  /// Smallest k whose k-th differences end in two zeros on the window: the
  /// estimated GK-dimension (dims eventually polynomial of degree k-1).
  std::optional<int> gk_estimate;
  int window_first = 0;
  int window_last = 0;
  std::string describe() const;
};

/// Uses the trailing window of the last max(3, M-2) degrees, M the top degree.
GrowthVerdict growth_estimate(const std::vector<std::uint64_t>& dims);

}  // namespace ybe
