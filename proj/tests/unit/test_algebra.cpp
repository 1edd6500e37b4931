#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ybe/algebra.hpp"
#include "ybe/racks.hpp"

using namespace ybe;
using ybe::testing::fixture;
using ybe::testing::fixture_names;

namespace {

// Dual algebra in degree m: words joined by xi_w = -xi_z edges (z the minimum
// of a nontrivial r-orbit containing w, at adjacent positions), words containing a fixed pair are
// zero. A component contributes one dimension iff it is bipartite and has no
// zero word.
std::uint64_t dual_dim_signed_graph(const QuadraticSet& qs, int m) {
  const int n = qs.size();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(n);
  auto orbits = r_orbits(qs);
  std::vector<std::vector<std::uint64_t>> adj(total);
  std::vector<bool> zero(total, false);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w = word_from_index(idx, n, m);
    for (int i = 0; i + 1 < m; ++i) {
      const auto pair_idx = static_cast<std::uint64_t>(w[i] * n + w[i + 1]);
      const auto cls = orbits.class_of[pair_idx];
      if (orbits.lengths[cls] == 1) {
        zero[idx] = true;
        continue;
      }
      // Only w - min edges: the relations are xi_w + xi_min.
      const auto rep = orbits.reps[cls];
      std::vector<std::uint64_t> partners;
      if (pair_idx != rep) {
        partners.push_back(rep);
      } else {
        for (std::uint64_t other = 0; other < static_cast<std::uint64_t>(n * n); ++other)
          if (other != rep && orbits.class_of[other] == cls) partners.push_back(other);
      }
      for (auto other : partners) {
        Word v = w;
        v[i] = static_cast<int>(other / static_cast<std::uint64_t>(n));
        v[i + 1] = static_cast<int>(other % static_cast<std::uint64_t>(n));
        adj[idx].push_back(word_index(v, n));
      }
    }
  }
  std::vector<int> colour(total, -1);
  std::uint64_t dim = 0;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (colour[s] >= 0) continue;
    bool ok = true;
    std::vector<std::uint64_t> stack{s};
    colour[s] = 0;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      if (zero[u]) ok = false;
      for (auto v : adj[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          ok = false;
        }
      }
    }
    dim += ok;
  }
  return dim;
}

std::set<std::string> extras(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const auto& p : gb.of_degree_at_least(3)) out.insert(format_polynomial(p, gb.n));
  return out;
}

}  // namespace

TEST_CASE("reduced relations: one per non-minimal word of each nontrivial orbit") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto qs = fixture(name);
    auto pres = reduced_relations(qs);
    auto part = r_orbits(qs);
    std::uint64_t expected = 0;
    for (auto len : part.lengths) expected += len - 1;
    CHECK(pres.s() == expected);
    CHECK(pres.dual_binomials.size() == pres.s());
    CHECK(pres.dual_monomials.size() == part.fixed_count);
    for (const auto& rel : pres.relations) {
      CHECK(rel.tail < rel.lead);
      CHECK(part.class_of_word(rel.lead) == part.class_of_word(rel.tail));
    }
  }
}

TEST_CASE("linear algebra dims agree with orbit counts and the signed-graph dual") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto qs = fixture(name);
    auto pres = reduced_relations(qs);
    for (int m = 2; m <= 4; ++m) {
      CAPTURE(m);
      auto d = linear_dims(pres, m);
      CHECK(d.algebra == dm_orbits(qs, m).count());
      CHECK(d.dual == dual_dim_signed_graph(qs, m));
    }
  }
}

TEST_CASE("order-5 dihedral presentation") {
  auto qs = fixture("q5");
  auto pres = reduced_relations(qs);
  CHECK(pres.s() == 16);
  CHECK(linear_dims(pres, 2).algebra == 9);
  CHECK(linear_dims(pres, 2).dual == 4);
  CHECK(linear_dims(pres, 3).dual == 0);
  auto gb = groebner(pres, 4);
  CHECK(extras(gb) == std::set<std::string>{"133-122", "144-122", "155-122", "1222-1112"});
  CHECK(gb.complete);
  CHECK(gb.normal_word_counts(6) == graded_dims(qs, 6));
  auto pbw = is_pbw(qs);
  CHECK_FALSE(pbw.pbw);
  CHECK(pbw.orderings_tried == 120);
  CHECK(growth_estimate(graded_dims(qs, 8)).gk_estimate == 1);
}

TEST_CASE("order-4 SD presentation") {
  auto qs = fixture("sd4");
  auto pres = reduced_relations(qs);
  CHECK(linear_dims(pres, 2).algebra == 8);
  auto gb4 = groebner(pres, 4);
  CHECK(extras(gb4) == std::set<std::string>{"224-122", "244-133", "1333-1222", "1444-1222"});
  CHECK_FALSE(gb4.complete);
  CHECK(gb4.first_unresolved_degree == 5);
  auto gb6 = groebner(pres, 6);
  CHECK(gb6.complete);
  CHECK(extras(gb6).count("12222-11112") == 1);
  CHECK(gb6.normal_word_counts(7) == graded_dims(qs, 7));
  // The extra element is a genuine relation: both words share a D_5-orbit.
  auto part = dm_orbits(qs, 5);
  CHECK(part.class_of_word({0, 1, 1, 1, 1}) == part.class_of_word({0, 0, 0, 0, 1}));
}

TEST_CASE("normal words match orbit counts whenever the basis is complete") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto qs = fixture(name);
    auto gb = groebner(reduced_relations(qs), 6);
    if (!gb.complete) continue;
    CHECK(gb.normal_word_counts(6) == graded_dims(qs, 6));
  }
}

TEST_CASE("trivial solutions: binomial dims, PBW, zero Koszul residual") {
  for (int n : {3, 4, 5}) {
    auto qs = QuadraticSet::trivial(n);
    auto pres = reduced_relations(qs);
    CHECK(is_pbw_under(qs, {}));
    auto dims = graded_dims(qs, 5);
    auto dual = dual_graded_dims(pres, 5);
    for (int m = 0; m <= 5; ++m) {
      std::uint64_t c = 1;
      for (int k = 1; k <= m; ++k) c = c * static_cast<std::uint64_t>(n - 1 + k) / static_cast<std::uint64_t>(k);
      CHECK(dims[static_cast<std::size_t>(m)] == c);
    }
    for (long long v : koszul_hilbert_check(dims, dual, 5)) CHECK(v == 0);
    CHECK(growth_estimate(graded_dims(qs, 9)).gk_estimate == n);
  }
}

TEST_CASE("PBW depends on the generator ordering") {
  auto qs = fixture("inv3b");
  CHECK_FALSE(is_pbw_under(qs, {0, 1, 2}));
  auto res = is_pbw(qs);
  REQUIRE(res.pbw);
  CHECK(res.ordering == std::vector<int>{0, 2, 1});
  CHECK_FALSE(is_pbw(qs, false).pbw);
}

TEST_CASE("Groebner ordering only changes the leads") {
  auto qs = fixture("inv3b");
  auto pres = reduced_relations(qs, {0, 2, 1});
  auto gb = groebner(pres, 5);
  CHECK(gb.complete);
  CHECK(gb.elements.size() == 3);
  CHECK(gb.normal_word_counts(5) == graded_dims(qs, 5));
}

TEST_CASE("formatting") {
  CHECK(format_word({0, 4, 4}, 5) == "155");
  CHECK(format_word({0, 4, 4}, 5, 0) == "044");
  CHECK(format_word({0, 10}, 12) == "1.11");
  Polynomial p{{{{0, 4, 4}, Rational(1)}, {{0, 1, 1}, Rational(-1)}}};
  CHECK(format_polynomial(p, 5) == "155-122");
  CHECK(p.is_binomial());
}

TEST_CASE("growth estimate window") {
  auto g = growth_estimate({1, 5, 9, 10, 10, 10, 10});
  CHECK(g.gk_estimate == 1);
  auto lin = growth_estimate({1, 2, 3, 4, 5, 6, 7});
  CHECK(lin.gk_estimate == 2);
  auto expo = growth_estimate({1, 2, 4, 8, 16, 32, 64});
  CHECK_FALSE(expo.gk_estimate.has_value());
}

TEST_CASE("Koszul residual detects a mismatch") {
  auto r = koszul_hilbert_check({1, 2, 3, 4}, {1, 2, 2, 0}, 3);
  CHECK(r[0] == 0);
  CHECK(r[1] == 0);
  CHECK(r[2] != 0);
}
