#include "ybe/orbits.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ybe/error.hpp"

namespace ybe {

std::uint64_t word_index(const Word& w, int n) {
  std::uint64_t idx = 0;
  for (int c : w) idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c);
  return idx;
}

Word word_from_index(std::uint64_t idx, int n, int m) {
  Word w(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(n));
    idx /= static_cast<std::uint64_t>(n);
  }
  return w;
}

std::uint64_t checked_power(std::uint64_t n, int m, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (n != 0 && total > budget / n)
      fail(ErrorKind::BudgetExceeded, "n^m exceeds budget of " + std::to_string(budget) + " words");
    total *= n;
  }
  if (total > budget) fail(ErrorKind::BudgetExceeded, "n^m exceeds budget of " + std::to_string(budget) + " words");
  return total;
}

std::uint32_t OrbitPartition::class_of_word(const Word& w) const {
  return class_of[word_index(w, n)];
}

Word OrbitPartition::rep_word(std::uint32_t id) const { return word_from_index(reps[id], n, m); }

OrbitPartition dm_orbits(const QuadraticSet& qs, int m, std::uint64_t budget) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "degree must be non-negative");
  const int n = qs.size();
  const std::uint64_t total = checked_power(static_cast<std::uint64_t>(n), m, budget);
  if (total > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::BudgetExceeded, "too many words for 32-bit orbit ids");

  OrbitPartition part;
  part.n = n;
  part.m = m;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  part.class_of.assign(total, kUnset);

  // pow[i] = n^(m-1-i): weight of position i.
  std::vector<std::uint64_t> pow(static_cast<std::size_t>(std::max(m, 0)));
  {
    std::uint64_t w = 1;
    for (int i = m - 1; i >= 0; --i) {
      pow[static_cast<std::size_t>(i)] = w;
      w *= static_cast<std::uint64_t>(n);
    }
  }
  const auto& fwd = qs.r_index_table();
  const auto& bwd = qs.r_inverse_index_table();
  const std::uint64_t un = static_cast<std::uint64_t>(n);

  std::vector<std::uint64_t> stack;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (part.class_of[seed] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.reps.size());
    part.reps.push_back(seed);
    std::uint64_t len = 0;
    part.class_of[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      std::uint64_t w = stack.back();
      stack.pop_back();
      ++len;
      for (int i = 0; i + 1 < m; ++i) {
        const std::uint64_t hi = pow[static_cast<std::size_t>(i)];
        const std::uint64_t lo = pow[static_cast<std::size_t>(i + 1)];
        const std::uint64_t a = (w / hi) % un;
        const std::uint64_t b = (w / lo) % un;
        const std::uint64_t base = w - a * hi - b * lo;
        for (const auto* table : {&fwd, &bwd}) {
          const auto img = static_cast<std::uint64_t>((*table)[a * un + b]);
          const std::uint64_t next = base + (img / un) * hi + (img % un) * lo;
          if (part.class_of[next] == kUnset) {
            part.class_of[next] = id;
            stack.push_back(next);
          }
        }
      }
    }
    part.lengths.push_back(len);
    if (len == 1)
      ++part.fixed_count;
    else
      ++part.q;
  }
  return part;
}

OrbitPartition r_orbits(const QuadraticSet& qs) { return dm_orbits(qs, 2); }

std::vector<Word> orbit_of(const QuadraticSet& qs, const Word& w, std::uint64_t budget) {
  std::set<Word> seen{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      for (bool inv : {false, true}) {
        Word next = cur;
        apply_r_at(qs, next, i, inv);
        if (seen.insert(next).second) {
          if (seen.size() > budget) fail(ErrorKind::BudgetExceeded, "orbit exceeds budget");
          stack.push_back(std::move(next));
        }
      }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::uint64_t> graded_dims(const QuadraticSet& qs, int max_degree, std::uint64_t budget) {
  std::vector<std::uint64_t> dims;
  for (int m = 0; m <= max_degree; ++m) {
    if (m == 0)
      dims.push_back(1);
    else if (m == 1)
      dims.push_back(static_cast<std::uint64_t>(qs.size()));
    else
      dims.push_back(dm_orbits(qs, m, budget).count());
  }
  return dims;
}

X3Census classify_x3(const QuadraticSet& qs) {
  const OrbitPartition part = dm_orbits(qs, 3);
  const int n = qs.size();
  X3Census c;
  c.type_of.assign(part.count(), 2);
  for (std::uint64_t idx = 0; idx < part.class_of.size(); ++idx) {
    Word w = word_from_index(idx, n, 3);
    const std::uint32_t id = part.class_of[idx];
    if (w[0] == w[1] && w[1] == w[2])
      c.type_of[id] = 0;
    else if ((w[0] == w[1] || w[1] == w[2]) && c.type_of[id] != 0)
      c.type_of[id] = 1;
  }
  for (std::size_t id = 0; id < part.count(); ++id) {
    OrbitTypeStats& s = c.type_of[id] == 0 ? c.diagonal : c.type_of[id] == 1 ? c.type_ii : c.square_free;
    const std::uint64_t len = part.lengths[id];
    s.min_length = s.count == 0 ? len : std::min(s.min_length, len);
    s.max_length = std::max(s.max_length, len);
    ++s.count;
  }
  c.length_bounds_hold = (c.diagonal.count == 0 || c.diagonal.max_length == 1) &&
                         (c.type_ii.count == 0 || c.type_ii.min_length >= 3) &&
                         (c.square_free.count == 0 || c.square_free.min_length >= 6);
  return c;
}

Pair dihedral_orbit_closed_form(int p, int x, int y, long long k) {
  if (p <= 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
  auto mod = [p](long long v) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
  };
  const long long kk = k % p;
  return {mod((kk + 1) * x - kk * y), mod(kk * x - (kk - 1) * y)};
}

}  // namespace ybe
