#include "ybe/quadratic_set.hpp"

#include <algorithm>

#include "ybe/error.hpp"

namespace ybe {

QuadraticSet QuadraticSet::from_table(int n, std::vector<Pair> rmap) {
  if (n <= 0) fail(ErrorKind::BadLabel, "set size must be positive");
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (rmap.size() != nn)
    fail(ErrorKind::BadLabel, "table has " + std::to_string(rmap.size()) + " entries, expected " +
                                  std::to_string(nn));
  QuadraticSet qs;
  qs.n_ = n;
  qs.fwd_.assign(nn, -1);
  qs.bwd_.assign(nn, -1);
  for (std::size_t i = 0; i < nn; ++i) {
    auto [a, b] = rmap[i];
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorKind::BadLabel, "label out of range at entry " + std::to_string(i));
    std::size_t j = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
    if (qs.bwd_[j] != -1)
      fail(ErrorKind::NotBijective, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is hit twice");
    qs.fwd_[i] = static_cast<int>(j);
    qs.bwd_[j] = static_cast<int>(i);
  }
  qs.inv_.resize(nn);
  for (std::size_t j = 0; j < nn; ++j) {
    int i = qs.bwd_[j];
    qs.inv_[j] = {i / n, i % n};
  }
  qs.rmap_ = std::move(rmap);
  return qs;
}

QuadraticSet QuadraticSet::from_actions(const std::vector<std::vector<int>>& left,
                                        const std::vector<std::vector<int>>& right) {
  const int n = static_cast<int>(left.size());
  if (static_cast<int>(right.size()) != n) fail(ErrorKind::BadLabel, "action tables differ in size");
  std::vector<Pair> rmap;
  rmap.reserve(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rmap.emplace_back(left[static_cast<std::size_t>(x)].at(static_cast<std::size_t>(y)),
                        right[static_cast<std::size_t>(y)].at(static_cast<std::size_t>(x)));
  return from_table(n, std::move(rmap));
}

QuadraticSet QuadraticSet::from_left_translations(const std::vector<std::vector<int>>& left) {
  const int n = static_cast<int>(left.size());
  std::vector<Pair> rmap;
  rmap.reserve(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rmap.emplace_back(left[static_cast<std::size_t>(x)].at(static_cast<std::size_t>(y)), x);
  return from_table(n, std::move(rmap));
}

QuadraticSet QuadraticSet::trivial(int n) {
  std::vector<Pair> rmap;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rmap.emplace_back(y, x);
  return from_table(n, std::move(rmap));
}

QuadraticSet QuadraticSet::relabel(const Permutation& phi) const {
  if (phi.size() != n_) fail(ErrorKind::InvalidArgument, "relabeling has wrong size");
  std::vector<Pair> out(rmap_.size());
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      auto [a, b] = r(x, y);
      out[index(phi(x), phi(y))] = {phi(a), phi(b)};
    }
  return from_table(n_, std::move(out));
}

QuadraticSet QuadraticSet::restrict_to(const std::vector<int>& subset) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  const int k = static_cast<int>(sorted.size());
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(k * k));
  for (int x : sorted)
    for (int y : sorted) {
      auto [a, b] = r(x, y);
      if (pos[static_cast<std::size_t>(a)] < 0 || pos[static_cast<std::size_t>(b)] < 0)
        fail(ErrorKind::BlocksNotInvariant, "subset is not r-invariant");
      out.emplace_back(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
    }
  return from_table(k, std::move(out));
}

ActionTables actions(const QuadraticSet& qs) {
  const int n = qs.size();
  ActionTables t;
  t.left.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  t.right.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t.left[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = qs.left(x, y);
      t.right[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = qs.right(x, y);
    }
  t.nondegenerate = std::all_of(t.left.begin(), t.left.end(), is_bijection) &&
                    std::all_of(t.right.begin(), t.right.end(), is_bijection);
  if (t.nondegenerate) {
    std::uint64_t p = 1;
    for (int x = 0; x < n; ++x) {
      p = checked_lcm(p, t.left_perm(x).order());
      p = checked_lcm(p, t.right_perm(x).order());
    }
    t.p = p;
  }
  return t;
}

std::vector<Pair> fixed_points(const QuadraticSet& qs) {
  std::vector<Pair> out;
  for (int x = 0; x < qs.size(); ++x)
    for (int y = 0; y < qs.size(); ++y)
      if (qs.r(x, y) == Pair{x, y}) out.emplace_back(x, y);
  return out;
}

std::vector<std::uint64_t> r_cycle_lengths(const QuadraticSet& qs) {
  const auto& f = qs.r_index_table();
  std::vector<char> seen(f.size(), 0);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(f[j]);
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

std::uint64_t order_of_r(const QuadraticSet& qs) {
  std::uint64_t o = 1;
  for (auto len : r_cycle_lengths(qs)) o = checked_lcm(o, len);
  return o;
}

void apply_r_at(const QuadraticSet& qs, std::vector<int>& word, std::size_t i, bool inverse) {
  Pair p = inverse ? qs.r_inverse(word[i], word[i + 1]) : qs.r(word[i], word[i + 1]);
  word[i] = p.first;
  word[i + 1] = p.second;
}

std::pair<std::vector<int>, std::vector<int>> braid_sides(const QuadraticSet& qs, int x, int y, int z) {
  std::vector<int> lhs{x, y, z};
  std::vector<int> rhs{x, y, z};
  apply_r_at(qs, lhs, 0);
  apply_r_at(qs, lhs, 1);
  apply_r_at(qs, lhs, 0);
  apply_r_at(qs, rhs, 1);
  apply_r_at(qs, rhs, 0);
  apply_r_at(qs, rhs, 1);
  return {lhs, rhs};
}

}  // namespace ybe
