#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ybe/error.hpp"
#include "ybe/orbits.hpp"
#include "ybe/racks.hpp"

using namespace ybe;
using ybe::testing::fixture;
using ybe::testing::fixture_names;

namespace {

// Union-find over all words of length m, joining w with r applied at each position.
std::vector<std::size_t> orbit_sizes_union_find(const QuadraticSet& qs, int m) {
  const int n = qs.size();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(n);
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w = word_from_index(idx, n, m);
    for (int i = 0; i + 1 < m; ++i) {
      Word v = w;
      auto [a, b] = qs.r(v[i], v[i + 1]);
      v[i] = a;
      v[i + 1] = b;
      auto ra = find(idx), rb = find(word_index(v, n));
      if (ra != rb) parent[ra] = rb;
    }
  }
  std::map<std::uint64_t, std::size_t> sizes;
  for (std::uint64_t idx = 0; idx < total; ++idx) ++sizes[find(idx)];
  std::vector<std::size_t> out;
  for (auto [root, size] : sizes) out.push_back(size);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("word indexing is lexicographic") {
  CHECK(word_index({0, 0, 0}, 3) == 0);
  CHECK(word_index({2, 1, 0}, 3) == 21);
  CHECK(word_from_index(21, 3, 3) == Word{2, 1, 0});
  for (std::uint64_t i = 0; i + 1 < 27; ++i) CHECK(word_from_index(i, 3, 3) < word_from_index(i + 1, 3, 3));
  CHECK_THROWS_AS(checked_power(10, 8, 1000), Error);
}

TEST_CASE("orbit partition agrees with union-find on every fixture") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto qs = fixture(name);
    for (int m = 1; m <= 4; ++m) {
      auto part = dm_orbits(qs, m);
      std::vector<std::size_t> lengths(part.lengths.begin(), part.lengths.end());
      std::sort(lengths.begin(), lengths.end());
      CHECK(lengths == orbit_sizes_union_find(qs, m));
      std::uint64_t fixed = 0;
      for (auto len : part.lengths) fixed += len == 1;
      CHECK(part.fixed_count == fixed);
      CHECK(part.q + part.fixed_count == part.count());
      for (std::uint32_t id = 0; id < part.count(); ++id) {
        CHECK(part.class_of_word(part.rep_word(id)) == id);
        if (id > 0) CHECK(part.reps[id - 1] < part.reps[id]);
      }
    }
  }
}

TEST_CASE("orbit_of matches the partition") {
  auto qs = fixture("q5");
  auto part = dm_orbits(qs, 3);
  for (std::uint64_t idx = 0; idx < 125; idx += 7) {
    Word w = word_from_index(idx, 5, 3);
    auto orbit = orbit_of(qs, w);
    CHECK(orbit.size() == part.lengths[part.class_of[idx]]);
    CHECK(orbit.front() == part.rep_word(part.class_of[idx]));
  }
}

TEST_CASE("trivial solution dims are binomial") {
  for (int n : {3, 4, 5}) {
    auto dims = graded_dims(QuadraticSet::trivial(n), 5);
    for (int m = 0; m <= 5; ++m)
      CHECK(dims[static_cast<std::size_t>(m)] == binomial(static_cast<std::uint64_t>(n + m - 1), static_cast<std::uint64_t>(m)));
  }
}

TEST_CASE("order-5 dihedral orbits in X^2") {
  auto part = r_orbits(fixture("q5"));
  CHECK(part.count() == 9);
  CHECK(part.q == 4);
  CHECK(part.fixed_count == 5);
  for (auto len : part.lengths) CHECK((len == 1 || len == 5));
}

TEST_CASE("order-9 census in X^2") {
  auto part = r_orbits(fixture("sd9"));
  std::map<std::uint64_t, int> census;
  for (auto len : part.lengths) ++census[len];
  CHECK(census == std::map<std::uint64_t, int>{{1, 9}, {3, 6}, {9, 6}});
}

TEST_CASE("dihedral closed form matches iteration") {
  for (int p : {3, 5, 7, 11}) {
    auto qs = dihedral_quandle(p).base;
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        Pair cur{x, y};
        for (int k = 0; k < 2 * p; ++k) {
          CHECK(dihedral_orbit_closed_form(p, x, y, k) == cur);
          cur = qs.r(cur.first, cur.second);
        }
      }
  }
}

TEST_CASE("dihedral prime orbit lengths") {
  for (int p : {3, 5, 7}) {
    auto part = r_orbits(dihedral_quandle(p).base);
    for (auto len : part.lengths) CHECK((len == 1 || len == static_cast<std::uint64_t>(p)));
    CHECK(part.fixed_count == static_cast<std::uint64_t>(p));
  }
}

TEST_CASE("X^3 census on square-free braided fixtures") {
  for (const auto& name : {"q5", "sd4", "sd9", "triv3a", "inv3a", "inv3b"}) {
    CAPTURE(name);
    auto qs = fixture(name);
    auto census = classify_x3(qs);
    CHECK(census.length_bounds_hold);
    CHECK(census.diagonal.count == static_cast<std::uint64_t>(qs.size()));
    CHECK(census.diagonal.max_length == 1);
    CHECK(census.diagonal.count + census.type_ii.count + census.square_free.count == dm_orbits(qs, 3).count());
  }
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(dm_orbits(QuadraticSet::trivial(10), 7, 1000), Error);
}
