#include "ybe/racks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ybe/error.hpp"
#include "ybe/properties.hpp"

namespace ybe {

RackStructure rack_from_operation(std::vector<std::vector<int>> op) {
  const int n = static_cast<int>(op.size());
  RackStructure rack;
  for (const auto& row : op) {
    if (static_cast<int>(row.size()) != n || !is_bijection(row))
      fail(ErrorKind::InvalidArgument, "left translations must be permutations");
    rack.inner_generators.emplace_back(row);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& lx = rack.inner_generators[static_cast<std::size_t>(x)];
      const auto& ly = rack.inner_generators[static_cast<std::size_t>(y)];
      const auto& lxy = rack.inner_generators[static_cast<std::size_t>(lx(y))];
      if (lx.compose(ly) != lxy.compose(lx))
        fail(ErrorKind::InvalidArgument, "operation is not self-distributive");
    }
  rack.quandle = true;
  for (int x = 0; x < n; ++x)
    if (op[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] != x) rack.quandle = false;
  rack.base = QuadraticSet::from_left_translations(op);
  rack.op = std::move(op);
  return rack;
}

RackStructure rack_from_quadratic_set(const QuadraticSet& qs) {
  if (!check_conditions(qs).holds(Property::SD)) fail(ErrorKind::InvalidArgument, "quadratic set is not self-distributive");
  return rack_from_operation(actions(qs).left);
}

RackStructure dihedral_quandle(int p) {
  if (p < 1) fail(ErrorKind::InvalidArgument, "order must be positive");
  std::vector<std::vector<int>> op(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((2 * x - y) % p + p) % p;
  return rack_from_operation(std::move(op));
}

RackStructure affine_quandle(int n, int g) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "order must be positive");
  const int gg = ((g % n) + n) % n;
  if (std::gcd(gg, n) != 1) fail(ErrorKind::NotAUnit, std::to_string(g) + " is not a unit mod " + std::to_string(n));
  std::vector<std::vector<int>> op(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long long v = static_cast<long long>(1 - gg) * x + static_cast<long long>(gg) * y;
      op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = static_cast<int>(((v % n) + n) % n);
    }
  return rack_from_operation(std::move(op));
}

namespace {

bool square_invariant(const QuadraticSet& qs, std::uint32_t mask) {
  const int n = qs.size();
  for (int x = 0; x < n; ++x) {
    if (!(mask >> x & 1U)) continue;
    for (int y = 0; y < n; ++y) {
      if (!(mask >> y & 1U)) continue;
      auto [a, b] = qs.r(x, y);
      if (!(mask >> a & 1U) || !(mask >> b & 1U)) return false;
    }
  }
  return true;
}

}  // namespace

Decomposition is_indecomposable(const QuadraticSet& qs) {
  const int n = qs.size();
  Decomposition d;
  if (check_conditions(qs).holds(Property::SD) && check_nondegenerate(qs).holds) {
    auto orbits = inner_orbits(qs);
    if (orbits.size() > 1) {
      d.indecomposable = false;
      d.block = orbits.front();
      for (std::size_t i = 1; i < orbits.size(); ++i) d.complement.insert(d.complement.end(), orbits[i].begin(), orbits[i].end());
      std::sort(d.complement.begin(), d.complement.end());
    }
    return d;
  }
  if (n > 16) fail(ErrorKind::BudgetExceeded, "subset search needs n <= 16");
  const std::uint32_t full = (1U << n) - 1U;
  // Subsets containing 0, excluding X itself.
  for (std::uint32_t rest = 0; rest < (1U << (n - 1)); ++rest) {
    const std::uint32_t mask = (rest << 1) | 1U;
    if (mask == full) continue;
    if (square_invariant(qs, mask) && square_invariant(qs, full & ~mask)) {
      d.indecomposable = false;
      for (int x = 0; x < n; ++x) (mask >> x & 1U ? d.block : d.complement).push_back(x);
      return d;
    }
  }
  return d;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Smallest equivalence containing a ~ b that r respects componentwise.
std::vector<int> congruence_closure(const QuadraticSet& qs, int a, int b) {
  const int n = qs.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  parent[static_cast<std::size_t>(find_root(parent, b))] = find_root(parent, a);
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int x2 = 0; x2 < n; ++x2) {
          if (find_root(parent, x) != find_root(parent, x2)) continue;
          for (int y2 = 0; y2 < n; ++y2) {
            if (find_root(parent, y) != find_root(parent, y2)) continue;
            auto [p, q] = qs.r(x, y);
            auto [p2, q2] = qs.r(x2, y2);
            for (auto [u, v] : {std::pair{p, p2}, std::pair{q, q2}}) {
              int ru = find_root(parent, u), rv = find_root(parent, v);
              if (ru != rv) {
                parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
                changed = true;
              }
            }
          }
        }
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) label[static_cast<std::size_t>(x)] = find_root(parent, x);
  return label;
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& label) {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(label.size(), -1);
  for (std::size_t x = 0; x < label.size(); ++x) {
    auto root = static_cast<std::size_t>(label[x]);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> invariant_block_system(const QuadraticSet& qs) {
  const int n = qs.size();
  if (n > 16) fail(ErrorKind::BudgetExceeded, "block search needs n <= 16");
  std::vector<std::vector<int>> best;
  for (int b = 1; b < n; ++b) {
    auto blocks = blocks_of(congruence_closure(qs, 0, b));
    if (blocks.size() < 2) continue;
    bool ok = true;
    for (const auto& blk : blocks) {
      std::uint32_t mask = 0;
      for (int x : blk) mask |= 1U << x;
      if (!square_invariant(qs, mask)) ok = false;
    }
    if (!ok) continue;
    // Prefer the finest system, then the one found first.
    if (best.empty() || blocks.size() > best.size()) best = std::move(blocks);
  }
  return best;
}

std::vector<std::vector<int>> inner_orbits(const QuadraticSet& qs) {
  const auto t = actions(qs);
  for (const auto& row : t.left)
    if (!is_bijection(row)) fail(ErrorKind::InvalidArgument, "left actions are not bijective");
  const int n = qs.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> orbit{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int x = 0; x < n; ++x) {
        int y = t.left[static_cast<std::size_t>(x)][static_cast<std::size_t>(orbit[i])];
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool inner_group_transitive(const QuadraticSet& qs) { return inner_orbits(qs).size() == 1; }

bool is_faithful(const QuadraticSet& qs) {
  const auto t = actions(qs);
  std::set<std::vector<int>> seen(t.left.begin(), t.left.end());
  return seen.size() == t.left.size();
}

std::uint64_t inner_group_order(const QuadraticSet& qs, std::uint64_t budget) {
  const auto t = actions(qs);
  std::vector<Permutation> gens;
  for (const auto& row : t.left) {
    if (!is_bijection(row)) fail(ErrorKind::InvalidArgument, "left actions are not bijective");
    gens.emplace_back(row);
  }
  std::set<std::vector<int>> seen;
  std::vector<Permutation> frontier{Permutation::identity(qs.size())};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = s.compose(g);
        if (seen.insert(h.images()).second) {
          if (seen.size() > budget) fail(ErrorKind::BudgetExceeded, "inner group exceeds budget");
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace ybe
