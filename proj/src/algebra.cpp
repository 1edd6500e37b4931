#include "ybe/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ybe/error.hpp"

namespace ybe {

namespace {

std::vector<int> normalize_ordering(int n, std::vector<int> ordering) {
  if (ordering.empty()) {
    ordering.resize(static_cast<std::size_t>(n));
    std::iota(ordering.begin(), ordering.end(), 0);
  }
  if (static_cast<int>(ordering.size()) != n || !is_bijection(ordering))
    fail(ErrorKind::InvalidArgument, "ordering must be a permutation of the generators");
  return ordering;
}

std::vector<int> ranks_of(const std::vector<int>& ordering) {
  std::vector<int> rank(ordering.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) rank[static_cast<std::size_t>(ordering[i])] = static_cast<int>(i);
  return rank;
}

// Internal words live in rank space as strings, so std::string comparison is
// the lexicographic part of deglex.
using RWord = std::string;

RWord to_rank_word(const Word& w, const std::vector<int>& rank) {
  RWord out;
  out.reserve(w.size());
  for (int c : w) out.push_back(static_cast<char>(rank[static_cast<std::size_t>(c)]));
  return out;
}

Word from_rank_word(const RWord& w, const std::vector<int>& ordering) {
  Word out;
  out.reserve(w.size());
  for (char c : w) out.push_back(ordering[static_cast<unsigned char>(c)]);
  return out;
}

struct DeglexGreater {
  bool operator()(const RWord& a, const RWord& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};

using IPoly = std::vector<std::pair<RWord, Rational>>;  // decreasing, lead first
using WorkMap = std::map<RWord, Rational, DeglexGreater>;

class LeadIndex {
 public:
  void add(const RWord& lead, std::size_t idx) {
    map_.emplace(lead, idx);
    if (std::find(lengths_.begin(), lengths_.end(), lead.size()) == lengths_.end()) lengths_.push_back(lead.size());
  }
  // First (position, element) with lead occurring as a subword of w.
  std::optional<std::pair<std::size_t, std::size_t>> find(const RWord& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t len : lengths_) {
        if (i + len > w.size()) continue;
        auto it = map_.find(w.substr(i, len));
        if (it != map_.end()) return std::make_pair(i, it->second);
      }
    return std::nullopt;
  }
  bool has_suffix_lead(const RWord& w) const {
    for (std::size_t len : lengths_)
      if (len <= w.size() && map_.count(w.substr(w.size() - len))) return true;
    return false;
  }

 private:
  std::unordered_map<RWord, std::size_t> map_;
  std::vector<std::size_t> lengths_;
};

IPoly reduce_full(WorkMap work, const std::vector<IPoly>& basis, const LeadIndex& index) {
  IPoly out;
  while (!work.empty()) {
    auto it = work.begin();
    RWord w = it->first;
    Rational c = it->second;
    work.erase(it);
    auto hit = index.find(w);
    if (!hit) {
      out.emplace_back(std::move(w), std::move(c));
      continue;
    }
    const auto [pos, gi] = *hit;
    const IPoly& g = basis[gi];
    const RWord prefix = w.substr(0, pos);
    const RWord suffix = w.substr(pos + g.front().first.size());
    for (std::size_t t = 1; t < g.size(); ++t) {
      RWord nw = prefix + g[t].first + suffix;
      Rational& slot = work[nw];
      slot -= c * g[t].second;
      if (slot == 0) work.erase(nw);
    }
  }
  return out;
}

void make_monic(IPoly& p) {
  const Rational lead = p.front().second;
  if (lead != 1)
    for (auto& [w, c] : p) c /= lead;
}

// f C - A g for the overlap lead(f) = A B, lead(g) = B C with |B| = k.
WorkMap overlap_poly(const IPoly& f, const IPoly& g, std::size_t k) {
  const RWord& lf = f.front().first;
  const RWord& lg = g.front().first;
  const RWord left = lf.substr(0, lf.size() - k);
  const RWord right = lg.substr(k);
  WorkMap work;
  for (std::size_t t = 1; t < f.size(); ++t) work[f[t].first + right] += f[t].second;
  for (std::size_t t = 1; t < g.size(); ++t) work[left + g[t].first] -= g[t].second;
  for (auto it = work.begin(); it != work.end();) it = it->second == 0 ? work.erase(it) : std::next(it);
  return work;
}

struct Overlap {
  std::size_t f, g, k;
  std::size_t degree;
};

std::vector<Overlap> overlaps_between(const std::vector<IPoly>& basis, std::size_t f, std::size_t g) {
  std::vector<Overlap> out;
  const RWord& lf = basis[f].front().first;
  const RWord& lg = basis[g].front().first;
  const std::size_t maxk = std::min(lf.size(), lg.size());
  for (std::size_t k = 1; k < maxk; ++k)
    if (lf.compare(lf.size() - k, k, lg, 0, k) == 0) out.push_back({f, g, k, lf.size() + lg.size() - k});
  return out;
}

std::vector<IPoly> quadratic_basis(const Presentation& pres, const std::vector<int>& rank) {
  std::vector<IPoly> basis;
  for (const auto& rel : pres.relations) {
    IPoly p;
    p.emplace_back(to_rank_word(rel.lead, rank), Rational(1));
    p.emplace_back(to_rank_word(rel.tail, rank), Rational(-1));
    if (DeglexGreater{}(p[1].first, p[0].first)) fail(ErrorKind::InvalidArgument, "relation lead is not the larger word");
    basis.push_back(std::move(p));
  }
  std::sort(basis.begin(), basis.end(), [](const IPoly& a, const IPoly& b) { return DeglexGreater{}(b.front().first, a.front().first); });
  return basis;
}

}  // namespace

Presentation reduced_relations(const QuadraticSet& qs, std::vector<int> ordering) {
  const int n = qs.size();
  Presentation pres;
  pres.n = n;
  pres.ordering = normalize_ordering(n, std::move(ordering));
  const auto rank = ranks_of(pres.ordering);
  const OrbitPartition part = r_orbits(qs);

  std::vector<std::vector<Word>> members(part.count());
  for (std::uint64_t idx = 0; idx < part.class_of.size(); ++idx)
    members[part.class_of[idx]].push_back(word_from_index(idx, n, 2));
  auto less = [&](const Word& a, const Word& b) { return to_rank_word(a, rank) < to_rank_word(b, rank); };
  for (auto& orbit : members) std::sort(orbit.begin(), orbit.end(), less);
  std::sort(members.begin(), members.end(), [&](const auto& a, const auto& b) { return less(a.front(), b.front()); });
  for (const auto& orbit : members) {
    if (orbit.size() == 1) {
      pres.dual_monomials.push_back(orbit.front());
      continue;
    }
    for (std::size_t i = 1; i < orbit.size(); ++i) {
      pres.relations.push_back({orbit[i], orbit.front()});
      pres.dual_binomials.push_back({orbit[i], orbit.front()});
    }
  }
  return pres;
}

LinearDims linear_dims(const Presentation& pres, int m, std::uint64_t budget) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "degree must be non-negative");
  const int n = pres.n;
  const std::uint64_t total = checked_power(static_cast<std::uint64_t>(n), m, budget);
  if (m < 2) return {total, total};
  const std::uint64_t un = static_cast<std::uint64_t>(n);

  auto for_each_placement = [&](const Word& rel_word, auto&& emit) {
    for (int left = 0; left + 2 <= m; ++left) {
      const int right = m - 2 - left;
      const std::uint64_t lcount = checked_power(un, left, budget);
      const std::uint64_t rcount = checked_power(un, right, budget);
      const std::uint64_t rweight = rcount;
      const std::uint64_t mid = word_index(rel_word, n);
      for (std::uint64_t u = 0; u < lcount; ++u)
        for (std::uint64_t v = 0; v < rcount; ++v) emit(u, left, mid, v, rweight);
    }
  };

  auto col = [&](std::uint64_t u, std::uint64_t mid, std::uint64_t v, std::uint64_t rweight) {
    return (u * un * un + mid) * rweight + v;
  };

  EchelonBasis alg, dual;
  for (const auto& rel : pres.relations) {
    const std::uint64_t lead = word_index(rel.lead, n);
    const std::uint64_t tail = word_index(rel.tail, n);
    for_each_placement(rel.lead, [&](std::uint64_t u, int, std::uint64_t, std::uint64_t v, std::uint64_t rw) {
      alg.insert({{col(u, lead, v, rw), BigInt(1)}, {col(u, tail, v, rw), BigInt(-1)}});
    });
  }
  for (const auto& rel : pres.dual_binomials) {
    const std::uint64_t lead = word_index(rel.lead, n);
    const std::uint64_t tail = word_index(rel.tail, n);
    for_each_placement(rel.lead, [&](std::uint64_t u, int, std::uint64_t, std::uint64_t v, std::uint64_t rw) {
      dual.insert({{col(u, lead, v, rw), BigInt(1)}, {col(u, tail, v, rw), BigInt(1)}});
    });
  }
  for (const auto& mono : pres.dual_monomials) {
    const std::uint64_t w = word_index(mono, n);
    for_each_placement(mono, [&](std::uint64_t u, int, std::uint64_t, std::uint64_t v, std::uint64_t rw) {
      dual.insert({{col(u, w, v, rw), BigInt(1)}});
    });
  }
  return {total - alg.rank(), total - dual.rank()};
}

std::vector<std::uint64_t> dual_graded_dims(const Presentation& pres, int max_degree, std::uint64_t budget) {
  std::vector<std::uint64_t> out;
  for (int m = 0; m <= max_degree; ++m) out.push_back(linear_dims(pres, m, budget).dual);
  return out;
}

bool Polynomial::is_binomial() const {
  return terms.size() == 2 && terms[0].coeff == 1 && terms[1].coeff == -1;
}

std::string format_word(const Word& w, int n, int base) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (n + base > 10 && i > 0) os << '.';
    os << w[i] + base;
  }
  return os.str();
}

std::string format_polynomial(const Polynomial& p, int n, int base) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const Rational& c = p.terms[i].coeff;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (i == 0) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (mag != 1) os << mag << '*';
    os << format_word(p.terms[i].word, n, base);
  }
  return os.str();
}

std::vector<Polynomial> GroebnerBasis::of_degree_at_least(int d) const {
  std::vector<Polynomial> out;
  for (const auto& p : elements)
    if (p.degree() >= d) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> GroebnerBasis::normal_word_counts(int max_degree) const {
  LeadIndex index;
  const auto rank = ranks_of(ordering);
  for (std::size_t i = 0; i < elements.size(); ++i) index.add(to_rank_word(elements[i].lead(), rank), i);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_degree + 1), 0);
  RWord w;
  auto dfs = [&](auto&& self) -> void {
    ++counts[w.size()];
    if (static_cast<int>(w.size()) == max_degree) return;
    for (int c = 0; c < n; ++c) {
      w.push_back(static_cast<char>(c));
      if (!index.has_suffix_lead(w)) self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  return counts;
}

GroebnerBasis groebner(const Presentation& pres, int max_degree) {
  if (max_degree < 2) fail(ErrorKind::InvalidArgument, "max degree must be at least 2");
  if (pres.n > 127) fail(ErrorKind::BudgetExceeded, "alphabet too large");
  const auto rank = ranks_of(pres.ordering);
  std::vector<IPoly> basis = quadratic_basis(pres, rank);
  LeadIndex index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.add(basis[i].front().first, i);

  for (int d = 3; d <= max_degree; ++d) {
    const std::size_t below = basis.size();
    std::vector<Overlap> todo;
    for (std::size_t f = 0; f < below; ++f)
      for (std::size_t g = 0; g < below; ++g)
        for (const auto& ov : overlaps_between(basis, f, g))
          if (ov.degree == static_cast<std::size_t>(d)) todo.push_back(ov);
    for (const auto& ov : todo) {
      IPoly red = reduce_full(overlap_poly(basis[ov.f], basis[ov.g], ov.k), basis, index);
      if (red.empty()) continue;
      make_monic(red);
      // Keep degree-d elements in reduced echelon form.
      for (std::size_t e = below; e < basis.size(); ++e) {
        IPoly& other = basis[e];
        auto hit = std::find_if(other.begin() + 1, other.end(), [&](const auto& t) { return t.first == red.front().first; });
        if (hit == other.end()) continue;
        WorkMap work(other.begin(), other.end());
        const Rational c = hit->second;
        for (const auto& [w, v] : red) {
          Rational& slot = work[w];
          slot -= c * v;
          if (slot == 0) work.erase(w);
        }
        other.assign(work.begin(), work.end());
      }
      index.add(red.front().first, basis.size());
      basis.push_back(std::move(red));
    }
  }

  GroebnerBasis gb;
  gb.n = pres.n;
  gb.ordering = pres.ordering;
  gb.complete_to_degree = max_degree;
  for (std::size_t f = 0; f < basis.size(); ++f)
    for (std::size_t g = 0; g < basis.size(); ++g)
      for (const auto& ov : overlaps_between(basis, f, g)) {
        const int deg = static_cast<int>(ov.degree);
        if (deg <= max_degree || (gb.first_unresolved_degree && deg >= *gb.first_unresolved_degree)) continue;
        if (!reduce_full(overlap_poly(basis[ov.f], basis[ov.g], ov.k), basis, index).empty())
          gb.first_unresolved_degree = deg;
      }
  gb.complete = !gb.first_unresolved_degree.has_value();

  std::sort(basis.begin(), basis.end(), [](const IPoly& a, const IPoly& b) { return DeglexGreater{}(b.front().first, a.front().first); });
  for (const auto& p : basis) {
    Polynomial poly;
    for (const auto& [w, c] : p) poly.terms.push_back({from_rank_word(w, pres.ordering), c});
    gb.elements.push_back(std::move(poly));
  }
  return gb;
}

bool is_pbw_under(const QuadraticSet& qs, const std::vector<int>& ordering) {
  const Presentation pres = reduced_relations(qs, ordering);
  const auto rank = ranks_of(pres.ordering);
  const std::vector<IPoly> basis = quadratic_basis(pres, rank);
  LeadIndex index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.add(basis[i].front().first, i);
  for (std::size_t f = 0; f < basis.size(); ++f)
    for (std::size_t g = 0; g < basis.size(); ++g)
      for (const auto& ov : overlaps_between(basis, f, g))
        if (!reduce_full(overlap_poly(basis[ov.f], basis[ov.g], ov.k), basis, index).empty()) return false;
  return true;
}

PbwResult is_pbw(const QuadraticSet& qs, bool exhaustive) {
  const int n = qs.size();
  if (exhaustive && n > 7) fail(ErrorKind::BudgetExceeded, "exhaustive ordering search needs n <= 7");
  std::vector<int> ordering(static_cast<std::size_t>(n));
  std::iota(ordering.begin(), ordering.end(), 0);
  PbwResult res;
  do {
    ++res.orderings_tried;
    if (is_pbw_under(qs, ordering)) {
      res.pbw = true;
      res.ordering = ordering;
      return res;
    }
  } while (exhaustive && std::next_permutation(ordering.begin(), ordering.end()));
  return res;
}

std::vector<long long> koszul_hilbert_check(const std::vector<std::uint64_t>& dims,
                                            const std::vector<std::uint64_t>& dual_dims, int max_degree) {
  if (static_cast<int>(dims.size()) <= max_degree || static_cast<int>(dual_dims.size()) <= max_degree)
    fail(ErrorKind::InvalidArgument, "not enough dimensions for the requested degree");
  std::vector<long long> out;
  for (int k = 0; k <= max_degree; ++k) {
    long long c = k == 0 ? -1 : 0;
    for (int i = 0; i <= k; ++i) {
      const long long a = static_cast<long long>(dims[static_cast<std::size_t>(i)]);
      const long long b = static_cast<long long>(dual_dims[static_cast<std::size_t>(k - i)]);
      c += ((k - i) % 2 == 0 ? 1 : -1) * a * b;
    }
    out.push_back(c);
  }
  return out;
}

std::string GrowthVerdict::describe() const {
  std::ostringstream os;
  if (gk_estimate)
    os << "GK-dimension estimate " << *gk_estimate;
  else
    os << "inconclusive";
  os << " (window degrees " << window_first << ".." << window_last << ")";
  return os.str();
}

GrowthVerdict growth_estimate(const std::vector<std::uint64_t>& dims) {
  GrowthVerdict v;
  if (dims.empty()) return v;
  const int top = static_cast<int>(dims.size()) - 1;
  const int width = std::min(static_cast<int>(dims.size()), std::max(3, top - 2));
  v.window_first = top - width + 1;
  v.window_last = top;
  std::vector<long long> seq(dims.end() - width, dims.end());
  for (int k = 0; k + 2 <= width; ++k) {
    // Eventually zero: the last two entries of the k-th differences vanish.
    if (seq[seq.size() - 1] == 0 && seq[seq.size() - 2] == 0) {
      v.gk_estimate = k;
      return v;
    }
    std::vector<long long> next;
    for (std::size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
    seq = std::move(next);
  }
  return v;
}

}  // namespace ybe
