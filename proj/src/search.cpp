#include "ybe/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ybe/algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/orbits.hpp"
#include "ybe/racks.hpp"

namespace ybe {

SearchFilter& SearchFilter::require(Property p) {
  want[static_cast<std::size_t>(p)] = true;
  return *this;
}

SearchFilter& SearchFilter::forbid(Property p) {
  want[static_cast<std::size_t>(p)] = false;
  return *this;
}

bool SearchFilter::accepts(const QuadraticSet& qs) const {
  const PropertyReport rep = check_conditions(qs);
  for (Property p : all_properties()) {
    const auto& w = want[static_cast<std::size_t>(p)];
    if (w && rep.holds(p) != *w) return false;
  }
  if (minimality && r_orbits(qs).count() != static_cast<std::size_t>(2 * qs.size() - 1)) return false;
  return true;
}

SearchFilter SearchFilter::parse(const std::string& text) {
  SearchFilter f;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    bool value = true;
    if (tok.front() == '!') {
      value = false;
      tok.erase(0, 1);
    }
    if (tok == "minimality" || tok == "M") {
      if (!value) fail(ErrorKind::Parse, "minimality can only be required");
      f.minimality = true;
      continue;
    }
    if (tok == "noninvolutive") {
      tok = "involutive";
      value = !value;
    }
    auto p = parse_property(tok);
    if (!p) fail(ErrorKind::Parse, "unknown property '" + tok + "'");
    auto& slot = f.want[static_cast<std::size_t>(*p)];
    if (slot && *slot != value) fail(ErrorKind::Parse, "property '" + tok + "' both required and forbidden");
    slot = value;
  }
  return f;
}

std::string SearchFilter::to_string() const {
  std::string out;
  for (Property p : all_properties()) {
    const auto& w = want[static_cast<std::size_t>(p)];
    if (!w) continue;
    if (!out.empty()) out += ',';
    if (!*w) out += '!';
    out += property_name(p);
  }
  if (minimality) out += out.empty() ? "minimality" : ",minimality";
  return out;
}

namespace {

// Table entries flattened to pair indices a * n + b.
std::vector<int> flat(const QuadraticSet& qs) {
  const int n = qs.size();
  std::vector<int> out;
  out.reserve(qs.table().size());
  for (auto [a, b] : qs.table()) out.push_back(a * n + b);
  return out;
}

QuadraticSet from_flat(int n, const std::vector<int>& t) {
  std::vector<Pair> rmap;
  rmap.reserve(t.size());
  for (int v : t) rmap.emplace_back(v / n, v % n);
  return QuadraticSet::from_table(n, std::move(rmap));
}

std::vector<int> canonical_table(const QuadraticSet& qs) {
  const int n = qs.size();
  if (n > 8) fail(ErrorKind::BudgetExceeded, "canonical form needs n <= 8");
  const std::vector<int> base = flat(qs);
  std::vector<int> best = base;
  // psi maps new labels to old ones; phi is its inverse.
  std::vector<int> psi(static_cast<std::size_t>(n)), phi(static_cast<std::size_t>(n));
  std::iota(psi.begin(), psi.end(), 0);
  std::vector<int> cur(base.size());
  do {
    for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(psi[static_cast<std::size_t>(i)])] = i;
    bool less = false;
    bool abandoned = false;
    for (int i = 0; i < n && !abandoned; ++i)
      for (int j = 0; j < n; ++j) {
        const int v = base[static_cast<std::size_t>(psi[static_cast<std::size_t>(i)] * n + psi[static_cast<std::size_t>(j)])];
        const int w = phi[static_cast<std::size_t>(v / n)] * n + phi[static_cast<std::size_t>(v % n)];
        const std::size_t k = static_cast<std::size_t>(i * n + j);
        cur[k] = w;
        if (!less) {
          if (w > best[k]) {
            abandoned = true;
            break;
          }
          if (w < best[k]) less = true;
        }
      }
    if (!abandoned && less) best = cur;
  } while (std::next_permutation(psi.begin(), psi.end()));
  return best;
}

std::vector<Permutation> all_permutations(int n, bool fix_point, int point) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    if (!fix_point || img[static_cast<std::size_t>(point)] == point) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

class Collector {
 public:
  Collector(int n, const SearchFilter& filter, const std::function<void(const QuadraticSet&)>& emit, SearchStats& stats)
      : n_(n), filter_(filter), emit_(emit), stats_(stats) {}

  void offer(const QuadraticSet& qs) {
    ++stats_.candidates;
    if (!filter_.accepts(qs)) return;
    auto canon = canonical_table(qs);
    if (!seen_.insert(canon).second) return;
    ++stats_.classes;
    emit_(from_flat(n_, canon));
  }

 private:
  int n_;
  const SearchFilter& filter_;
  const std::function<void(const QuadraticSet&)>& emit_;
  SearchStats& stats_;
  std::set<std::vector<int>> seen_;
};

// Cell-by-cell assignment of r with the constraints the filter makes local.
class TableSearch {
 public:
  TableSearch(int n, const SearchFilter& filter, Collector& out)
      : n_(n), nn_(n * n), out_(out), table_(static_cast<std::size_t>(nn_), -1), preimage_(static_cast<std::size_t>(nn_), -1),
        row_used_(static_cast<std::size_t>(n), 0), col_used_(static_cast<std::size_t>(n), 0) {
    nondeg_ = filter.wants(Property::Nondegenerate, true);
    square_free_ = filter.wants(Property::SquareFree, true);
    involutive_ = filter.wants(Property::Involutive, true) || filter.wants(Property::QuantumBinomial, true);
    two_canc_ = filter.wants(Property::TwoCancellative, true);
    if (filter.wants(Property::QuantumBinomial, true)) nondeg_ = square_free_ = true;
  }

  void run() {
    if (square_free_)
      for (int x = 0; x < n_; ++x) place(x * n_ + x, x * n_ + x);
    step(0);
  }

 private:
  void place(int cell, int v) {
    table_[static_cast<std::size_t>(cell)] = v;
    preimage_[static_cast<std::size_t>(v)] = cell;
    row_used_[static_cast<std::size_t>(cell / n_)] |= 1U << (v / n_);
    col_used_[static_cast<std::size_t>(cell % n_)] |= 1U << (v % n_);
  }

  void unplace(int cell, int v) {
    table_[static_cast<std::size_t>(cell)] = -1;
    preimage_[static_cast<std::size_t>(v)] = -1;
    row_used_[static_cast<std::size_t>(cell / n_)] &= ~(1U << (v / n_));
    col_used_[static_cast<std::size_t>(cell % n_)] &= ~(1U << (v % n_));
  }

  bool allowed(int cell, int v) const {
    if (preimage_[static_cast<std::size_t>(v)] >= 0) return false;
    const int x = cell / n_, y = cell % n_, a = v / n_, b = v % n_;
    if (nondeg_ && ((row_used_[static_cast<std::size_t>(x)] >> a & 1U) || (col_used_[static_cast<std::size_t>(y)] >> b & 1U)))
      return false;
    if (two_canc_ && ((a == x) != (b == y))) return false;
    if (involutive_) {
      const int back = table_[static_cast<std::size_t>(v)];
      if (back >= 0 && back != cell) return false;
      const int pre = preimage_[static_cast<std::size_t>(cell)];
      if (pre >= 0 && pre != v) return false;
    }
    return true;
  }

  void step(int cell) {
    while (cell < nn_ && table_[static_cast<std::size_t>(cell)] >= 0) ++cell;
    if (cell == nn_) {
      out_.offer(from_flat(n_, table_));
      return;
    }
    for (int v = 0; v < nn_; ++v) {
      if (!allowed(cell, v)) continue;
      place(cell, v);
      step(cell + 1);
      unplace(cell, v);
    }
  }

  int n_;
  int nn_;
  Collector& out_;
  std::vector<int> table_;
  std::vector<int> preimage_;
  std::vector<unsigned> row_used_;
  std::vector<unsigned> col_used_;
  bool nondeg_ = false;
  bool square_free_ = false;
  bool involutive_ = false;
  bool two_canc_ = false;
};

QuadraticSet sd_set(const std::vector<Permutation>& lefts) {
  std::vector<std::vector<int>> rows;
  for (const auto& p : lefts) rows.push_back(p.images());
  return QuadraticSet::from_left_translations(rows);
}

void sd_search(int n, bool quandle, Collector& out) {
  std::vector<std::vector<Permutation>> choices;
  for (int x = 0; x < n; ++x) choices.push_back(all_permutations(n, quandle, x));
  std::vector<Permutation> cur(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      out.offer(sd_set(cur));
      return;
    }
    for (const auto& p : choices[static_cast<std::size_t>(x)]) {
      cur[static_cast<std::size_t>(x)] = p;
      rec(x + 1);
    }
  };
  rec(0);
}

// Racks: once L_x and L_y are fixed, L_{L_x y} and L_{L_x^-1 y} are forced.
class RackSearch {
 public:
  RackSearch(int n, bool quandle, Collector& out) : n_(n), out_(out) {
    for (int x = 0; x < n; ++x) choices_.push_back(all_permutations(n, quandle, x));
  }

  void run() { step(std::vector<std::optional<Permutation>>(static_cast<std::size_t>(n_))); }

 private:
  bool propagate(std::vector<std::optional<Permutation>>& lefts) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int x = 0; x < n_; ++x) {
        if (!lefts[static_cast<std::size_t>(x)]) continue;
        const Permutation lx = *lefts[static_cast<std::size_t>(x)];
        const Permutation lx_inv = lx.inverse();
        for (int y = 0; y < n_; ++y) {
          if (!lefts[static_cast<std::size_t>(y)]) continue;
          const Permutation& ly = *lefts[static_cast<std::size_t>(y)];
          const std::pair<int, Permutation> forced[2] = {{lx(y), lx.compose(ly).compose(lx_inv)},
                                                        {lx_inv(y), lx_inv.compose(ly).compose(lx)}};
          for (const auto& [z, want] : forced) {
            auto& slot = lefts[static_cast<std::size_t>(z)];
            if (!slot) {
              if (std::find(choices_[static_cast<std::size_t>(z)].begin(), choices_[static_cast<std::size_t>(z)].end(),
                            want) == choices_[static_cast<std::size_t>(z)].end())
                return false;
              slot = want;
              changed = true;
            } else if (*slot != want) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  void step(const std::vector<std::optional<Permutation>>& lefts) {
    int x = 0;
    while (x < n_ && lefts[static_cast<std::size_t>(x)]) ++x;
    if (x == n_) {
      std::vector<Permutation> full;
      for (const auto& l : lefts) full.push_back(*l);
      out_.offer(sd_set(full));
      return;
    }
    for (const auto& p : choices_[static_cast<std::size_t>(x)]) {
      auto next = lefts;
      next[static_cast<std::size_t>(x)] = p;
      if (propagate(next)) step(next);
    }
  }

  int n_;
  Collector& out_;
  std::vector<std::vector<Permutation>> choices_;
};

}  // namespace

QuadraticSet canonical_form(const QuadraticSet& qs) { return from_flat(qs.size(), canonical_table(qs)); }

bool isomorphic(const QuadraticSet& a, const QuadraticSet& b) {
  return a.size() == b.size() && canonical_table(a) == canonical_table(b);
}

std::vector<int> relation_class_form(const QuadraticSet& qs) {
  const int n = qs.size();
  if (n > 8) fail(ErrorKind::BudgetExceeded, "relation class form needs n <= 8");
  const OrbitPartition orbits = r_orbits(qs);
  std::vector<int> psi(static_cast<std::size_t>(n));
  std::iota(psi.begin(), psi.end(), 0);
  std::vector<int> best;
  std::vector<int> cur(static_cast<std::size_t>(n * n));
  std::vector<int> renumber(orbits.count());
  do {
    std::fill(renumber.begin(), renumber.end(), -1);
    int next = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto id = orbits.class_of[static_cast<std::size_t>(psi[static_cast<std::size_t>(i)] * n + psi[static_cast<std::size_t>(j)])];
        if (renumber[id] < 0) renumber[id] = next++;
        cur[static_cast<std::size_t>(i * n + j)] = renumber[id];
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(psi.begin(), psi.end()));
  return best;
}

SearchStrategy choose_strategy(int n, const SearchFilter& filter) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "order must be positive");
  const bool sd = filter.wants(Property::SD, true);
  if (sd && filter.wants(Property::Braided, true)) {
    if (n > 6) fail(ErrorKind::BudgetExceeded, "rack search needs n <= 6");
    return SearchStrategy::Rack;
  }
  if (sd) {
    const int bound = filter.wants(Property::SquareFree, true) ? 5 : 4;
    if (n > bound) fail(ErrorKind::BudgetExceeded, "self-distributive search needs n <= " + std::to_string(bound));
    return SearchStrategy::SelfDistributive;
  }
  const bool nondeg = filter.wants(Property::Nondegenerate, true) || filter.wants(Property::QuantumBinomial, true);
  const int bound = nondeg ? 4 : 3;
  if (n > bound) fail(ErrorKind::BudgetExceeded, "table search needs n <= " + std::to_string(bound));
  return SearchStrategy::General;
}

SearchStats enumerate(int n, const SearchFilter& filter, const std::function<void(const QuadraticSet&)>& emit) {
  SearchStats stats;
  stats.strategy = choose_strategy(n, filter);
  Collector out(n, filter, emit, stats);
  const bool quandle = filter.wants(Property::SquareFree, true);
  switch (stats.strategy) {
    case SearchStrategy::Rack:
      RackSearch(n, quandle, out).run();
      break;
    case SearchStrategy::SelfDistributive:
      sd_search(n, quandle, out);
      break;
    case SearchStrategy::General:
      TableSearch(n, filter, out).run();
      break;
  }
  return stats;
}

std::vector<QuadraticSet> enumerate_all(int n, const SearchFilter& filter) {
  std::vector<QuadraticSet> out;
  enumerate(n, filter, [&](const QuadraticSet& qs) { out.push_back(qs); });
  std::sort(out.begin(), out.end(), [](const QuadraticSet& a, const QuadraticSet& b) { return a.table() < b.table(); });
  return out;
}

MinimalityEntry minimality_checks(const QuadraticSet& qs) {
  const int n = qs.size();
  MinimalityEntry e;
  e.qs = qs;
  const OrbitPartition orbits = r_orbits(qs);
  e.dim2 = orbits.count();
  e.orbit_lengths_n = true;
  e.relation_shape = true;
  for (std::uint32_t id = 0; id < orbits.count(); ++id) {
    if (orbits.lengths[id] == 1) continue;
    if (orbits.lengths[id] != static_cast<std::uint64_t>(n)) e.orbit_lengths_n = false;
    std::vector<int> firsts(static_cast<std::size_t>(n), 0), seconds(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < n * n; ++w)
      if (orbits.class_of[static_cast<std::size_t>(w)] == id) {
        ++firsts[static_cast<std::size_t>(w / n)];
        ++seconds[static_cast<std::size_t>(w % n)];
      }
    if (orbits.reps[id] / static_cast<std::uint64_t>(n) != 0) e.relation_shape = false;
    for (int x = 0; x < n; ++x)
      if (firsts[static_cast<std::size_t>(x)] != 1 || seconds[static_cast<std::size_t>(x)] != 1) e.relation_shape = false;
  }
  e.dual3_zero = linear_dims(reduced_relations(qs), 3).dual == 0;
  e.gk_estimate = growth_estimate(graded_dims(qs, 8)).gk_estimate;
  e.growth_at_most_2 = e.gk_estimate && *e.gk_estimate <= 2;
  e.indecomposable = is_indecomposable(qs).indecomposable;
  return e;
}

std::vector<MinimalityEntry> minimality_survey(int n, bool sd_only) {
  SearchFilter f;
  f.require(Property::Nondegenerate).require(Property::SquareFree).require(Property::TwoCancellative);
  f.minimality = true;
  if (sd_only) f.require(Property::SD).require(Property::Braided);
  std::vector<MinimalityEntry> out;
  for (const auto& qs : enumerate_all(n, f)) out.push_back(minimality_checks(qs));
  return out;
}

}  // namespace ybe
