#include "ybe/monoid.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ybe/error.hpp"
#include "ybe/properties.hpp"

namespace ybe {

MonoidView::MonoidView(const QuadraticSet& qs, int max_degree, std::uint64_t budget) : qs_(qs) {
  if (max_degree < 0) fail(ErrorKind::InvalidArgument, "degree must be non-negative");
  for (int m = 0; m <= max_degree; ++m) parts_.push_back(dm_orbits(qs, m, budget));
}

std::uint32_t MonoidView::class_of(const Word& w) const {
  if (static_cast<int>(w.size()) > max_degree()) fail(ErrorKind::BudgetExceeded, "word longer than the monoid view");
  return parts_[w.size()].class_of_word(w);
}

bool MonoidView::equivalent(const Word& a, const Word& b) const {
  return a.size() == b.size() && class_of(a) == class_of(b);
}

namespace {

// Moves letter a rightwards through u: returns ^a u and leaves a^u in a.
Word sweep_right(const QuadraticSet& qs, int& a, const Word& u) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto [l, r] = qs.r(a, u[i]);
    out[i] = l;
    a = r;
  }
  return out;
}

// Moves letter b leftwards through u: returns u^b and leaves ^u b in b.
Word sweep_left(const QuadraticSet& qs, const Word& u, int& b) {
  Word out(u.size());
  for (std::size_t i = u.size(); i-- > 0;) {
    auto [l, r] = qs.r(u[i], b);
    out[i] = r;
    b = l;
  }
  return out;
}

void require_braided(const QuadraticSet& qs) {
  if (!check_braided(qs).holds) fail(ErrorKind::NotBraided, "word actions need a braided set");
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(int x, std::uint64_t m) { return Word(static_cast<std::size_t>(m), x); }

// All words of length 0..max_len, by length then lexicographically.
std::vector<Word> words_up_to(int n, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (int c = 0; c < n; ++c) {
        Word w = out[i];
        w.push_back(c);
        out.push_back(std::move(w));
      }
    start = end;
  }
  return out;
}

}  // namespace

Word left_action_unchecked(const QuadraticSet& qs, const Word& a, const Word& u) {
  Word cur = u;
  for (std::size_t j = a.size(); j-- > 0;) {
    int letter = a[j];
    cur = sweep_right(qs, letter, cur);
  }
  return cur;
}

Word right_action_unchecked(const QuadraticSet& qs, const Word& u, const Word& a) {
  Word cur = u;
  for (int letter : a) {
    int b = letter;
    cur = sweep_left(qs, cur, b);
  }
  return cur;
}

Word word_action_left(const QuadraticSet& qs, const Word& a, const Word& u) {
  require_braided(qs);
  return left_action_unchecked(qs, a, u);
}

Word word_action_right(const QuadraticSet& qs, const Word& u, const Word& a) {
  require_braided(qs);
  return right_action_unchecked(qs, u, a);
}

bool MatchedPairReport::all_hold() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.holds; });
}

const AxiomCheck& MatchedPairReport::get(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return a;
  fail(ErrorKind::InvalidArgument, "no axiom named " + name);
}

MatchedPairReport check_matched_pair(const QuadraticSet& qs, int max_length) {
  if (max_length < 1) fail(ErrorKind::InvalidArgument, "length bound must be positive");
  const MonoidView S(qs, max_length);
  const int n = qs.size();
  const std::vector<Word> words = words_up_to(n, max_length);
  auto L = [&](const Word& a, const Word& u) { return left_action_unchecked(qs, a, u); };
  auto R = [&](const Word& u, const Word& a) { return right_action_unchecked(qs, u, a); };
  auto eq = [&](const Word& a, const Word& b) { return S.equivalent(a, b); };

  MatchedPairReport rep;
  rep.max_length = max_length;
  for (const char* name : {"ML0", "ML1", "ML2", "MR0", "MR1", "MR2", "M3", "left_well_defined", "right_well_defined"})
    rep.axioms.push_back({name, true, {}});
  auto record = [&](std::size_t idx, std::vector<Word> w) {
    if (rep.axioms[idx].holds) {
      rep.axioms[idx].holds = false;
      rep.axioms[idx].witness = std::move(w);
    }
  };
  const Word one{};

  for (const Word& a : words) {
    if (!eq(L(a, one), one) || !eq(L(one, a), a)) record(0, {a});
    if (!eq(R(one, a), one) || !eq(R(a, one), a)) record(3, {a});
  }
  for (const Word& a : words)
    for (const Word& b : words) {
      if (a.size() + b.size() > static_cast<std::size_t>(max_length)) continue;
      const Word ab = concat(a, b);
      for (const Word& u : words) {
        if (u.empty()) continue;
        if (!eq(L(ab, u), L(a, L(b, u)))) record(1, {a, b, u});
        if (!eq(R(u, ab), R(R(u, a), b))) record(4, {u, a, b});
      }
    }
  for (const Word& a : words) {
    if (a.empty()) continue;
    for (const Word& u : words)
      for (const Word& v : words) {
        if (u.size() + v.size() > static_cast<std::size_t>(max_length)) continue;
        const Word uv = concat(u, v);
        if (!eq(L(a, uv), concat(L(a, u), L(R(a, u), v)))) record(2, {a, u, v});
        if (!eq(R(uv, a), concat(R(u, L(v, a)), R(v, a)))) record(5, {u, v, a});
      }
  }
  for (const Word& u : words)
    for (const Word& v : words) {
      if (u.size() + v.size() > static_cast<std::size_t>(max_length)) continue;
      if (!eq(concat(L(u, v), R(u, v)), concat(u, v))) record(6, {u, v});
    }
  // Both actions must only depend on the classes of their arguments.
  using ClassKey = std::tuple<std::size_t, std::uint32_t, std::size_t, std::uint32_t>;
  std::map<ClassKey, std::pair<Word, Word>> first_seen;
  for (const Word& u : words)
    for (const Word& v : words) {
      if (u.empty() || v.empty()) continue;
      const ClassKey key{u.size(), S.class_of(u), v.size(), S.class_of(v)};
      auto [it, inserted] = first_seen.emplace(key, std::make_pair(u, v));
      if (inserted) continue;
      const auto& [u0, v0] = it->second;
      if (!eq(L(u0, v0), L(u, v))) record(7, {u0, v0, u, v});
      if (!eq(R(u0, v0), R(u, v))) record(8, {u0, v0, u, v});
    }
  return rep;
}

CancellationReport cancellativity_bounded(const QuadraticSet& qs, int max_length) {
  if (max_length < 2) fail(ErrorKind::InvalidArgument, "length bound must be at least 2");
  const MonoidView S(qs, max_length);
  const int n = qs.size();
  CancellationReport rep;
  rep.max_length = max_length;
  for (int side = 0; side < 2; ++side) {
    std::optional<CancellationFailure>& slot = side == 0 ? rep.left_failure : rep.right_failure;
    for (int m = 1; m < max_length && !slot; ++m) {
      const OrbitPartition& part = S.degree(m);
      for (int a = 0; a < n && !slot; ++a) {
        // image class -> representatives of the preimage classes, in increasing order
        std::map<std::uint32_t, std::vector<std::uint64_t>> groups;
        for (std::size_t id = 0; id < part.count(); ++id) {
          Word u = part.rep_word(static_cast<std::uint32_t>(id));
          Word w = side == 0 ? concat(Word{a}, u) : concat(u, Word{a});
          groups[S.class_of(w)].push_back(part.reps[id]);
        }
        const std::vector<std::uint64_t>* first = nullptr;
        for (const auto& [img, reps] : groups)
          if (reps.size() > 1 && (!first || reps.front() < first->front())) first = &reps;
        if (first)
          slot = CancellationFailure{side == 0, a, word_from_index(first->back(), n, m),
                                     word_from_index(first->front(), n, m)};
      }
    }
  }
  return rep;
}

PowerIdentityReport power_identities(const QuadraticSet& qs, std::uint64_t budget) {
  const auto acts = actions(qs);
  if (!acts.nondegenerate) fail(ErrorKind::InvalidArgument, "power identities need a nondegenerate set");
  const std::uint64_t p = *acts.p;
  const int top = static_cast<int>(std::max<std::uint64_t>(p + 1, 2 * p));
  const MonoidView S(qs, top, budget);
  const int n = qs.size();
  PowerIdentityReport rep;
  rep.p = p;
  auto L = [&](const Word& a, const Word& u) { return left_action_unchecked(qs, a, u); };
  auto R = [&](const Word& u, const Word& a) { return right_action_unchecked(qs, u, a); };
  auto note = [&](bool& flag, const std::string& msg) {
    if (flag) rep.failures.push_back(msg);
    flag = false;
  };
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      const int ax = qs.left(a, x);
      const int xa = qs.right(x, a);
      for (std::uint64_t m = 1; m <= p; ++m) {
        const Word xm = power(x, m);
        if (!S.equivalent(concat({a}, xm), concat(power(ax, m), R({a}, xm))) ||
            !S.equivalent(concat(xm, {a}), concat(L(xm, {a}), power(xa, m))))
          note(rep.shifted_powers, "shifted powers fail at a=" + std::to_string(a) + " x=" + std::to_string(x));
        if (!S.equivalent(L({a}, xm), power(ax, m)) || !S.equivalent(R(xm, {a}), power(xa, m)))
          note(rep.action_on_powers, "action on powers fails at a=" + std::to_string(a) + " x=" + std::to_string(x));
      }
      const Word xp = power(x, p);
      const int twisted_left = qs.right(ax, a);  // (^a x)^a
      const int twisted_right = qs.left(a, xa);  // ^a (x^a)
      if (!S.equivalent(concat({a}, xp), concat({a}, power(twisted_left, p))) ||
          !S.equivalent(concat(xp, {a}), concat(power(twisted_right, p), {a})))
        note(rep.period_identities, "period identity fails at a=" + std::to_string(a) + " x=" + std::to_string(x));
      for (int y = 0; y < n; ++y) {
        const Word yp = power(y, p);
        if (!S.equivalent(concat(xp, yp), concat(yp, xp)))
          note(rep.powers_commute, "powers do not commute for x=" + std::to_string(x) + " y=" + std::to_string(y));
        if (x == y) continue;
        if (!rep.left_collision && S.equivalent(concat({a}, xp), concat({a}, yp))) rep.left_collision = std::vector<int>{a, x, y};
        if (!rep.right_collision && S.equivalent(concat(xp, {a}), concat(yp, {a})))
          rep.right_collision = std::vector<int>{a, x, y};
      }
    }
  return rep;
}

}  // namespace ybe
