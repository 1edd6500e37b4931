#include "helpers.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>

#include "ybe/racks.hpp"
#include "ybe/solution_file.hpp"

namespace ybe::testing {

QuadraticSet fixture(const std::string& name) {
  return SolutionFile::load(std::string(YBE_FIXTURE_DIR) + "/" + name + ".json").qs;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(YBE_FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool two_cancellative_by_powers(const QuadraticSet& qs) {
  const std::uint64_t ord = order_of_r(qs);
  const int n = qs.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Pair cur{x, y};
      for (std::uint64_t k = 1; k < ord; ++k) {
        cur = qs.r(cur.first, cur.second);
        if (cur.first == x && cur.second != y) return false;
        if (cur.second == y && cur.first != x) return false;
      }
    }
  return true;
}

bool isomorphic_brute_force(const QuadraticSet& a, const QuadraticSet& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> phi(static_cast<std::size_t>(n));
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        auto [u, v] = a.r(x, y);
        ok = b.r(phi[x], phi[y]) == Pair{phi[u], phi[v]};
      }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

namespace {

QuadraticSet permutation_solution(int n, std::mt19937& rng) {
  const Permutation f = random_permutation(n, rng);
  const Permutation g = f.power(std::uniform_int_distribution<int>(0, 5)(rng));
  std::vector<Pair> table;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table.emplace_back(f(y), g(x));
  return QuadraticSet::from_table(n, table);
}

}  // namespace

std::vector<QuadraticSet> extension_part_pool() {
  std::vector<QuadraticSet> pool;
  for (int n = 1; n <= 4; ++n) pool.push_back(QuadraticSet::trivial(n));
  pool.push_back(dihedral_quandle(3).base);
  pool.push_back(dihedral_quandle(4).base);
  for (const char* name : {"sd4", "inv3a", "inv3b", "perm3", "nonbraided3"}) pool.push_back(fixture(name));
  return pool;
}

ExtensionSpec random_extension_spec(std::mt19937& rng, const std::vector<QuadraticSet>& pool) {
  auto pick = [&]() {
    const auto k = std::uniform_int_distribution<std::size_t>(0, pool.size() + 3)(rng);
    if (k < pool.size()) return pool[k];
    return permutation_solution(std::uniform_int_distribution<int>(1, 4)(rng), rng);
  };
  ExtensionSpec spec{pick(), pick(), {}, {}};
  spec.sigma = random_permutation(spec.xpart.size(), rng);
  spec.tau = random_permutation(spec.ypart.size(), rng);
  return spec;
}

}  // namespace ybe::testing
