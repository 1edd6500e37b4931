#include "ybe/extensions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ybe/error.hpp"
#include "ybe/monoid.hpp"
#include "ybe/properties.hpp"

namespace ybe {

QuadraticSet build_sigma_tau(const ExtensionSpec& spec) {
  const int nx = spec.xpart.size();
  const int ny = spec.ypart.size();
  if (spec.sigma.size() != nx || spec.tau.size() != ny)
    fail(ErrorKind::InvalidArgument, "sigma and tau must act on their parts");
  const int n = nx + ny;
  std::vector<Pair> rmap(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto at = [&](int a, int b) -> Pair& { return rmap[static_cast<std::size_t>(a * n + b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool ax = a < nx, bx = b < nx;
      if (ax && bx) {
        at(a, b) = spec.xpart.r(a, b);
      } else if (!ax && !bx) {
        auto [u, v] = spec.ypart.r(a - nx, b - nx);
        at(a, b) = {u + nx, v + nx};
      } else if (ax) {
        at(a, b) = {spec.tau(b - nx) + nx, spec.sigma(a)};
      } else {
        at(a, b) = {spec.sigma(b), spec.tau(a - nx) + nx};
      }
    }
  return QuadraticSet::from_table(n, std::move(rmap));
}

Partition Partition::two_blocks(int first_size, int total) {
  Partition p;
  p.blocks.resize(2);
  for (int x = 0; x < total; ++x) p.blocks[x < first_size ? 0 : 1].push_back(x);
  return p;
}

Partition Partition::parse(const std::string& text, int n) {
  Partition p;
  std::stringstream whole(text);
  std::string chunk;
  while (std::getline(whole, chunk, '|')) {
    std::stringstream in(chunk);
    std::vector<int> block;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        block.push_back(v);
      } catch (const std::logic_error&) {
        fail(ErrorKind::Parse, "bad block element '" + tok + "'");
      }
    }
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) fail(ErrorKind::Parse, "empty block");
    for (int x : b) {
      if (x < 0 || x >= n) fail(ErrorKind::BadLabel, "block element " + std::to_string(x) + " out of range");
      if (seen[static_cast<std::size_t>(x)]++) fail(ErrorKind::Parse, "element " + std::to_string(x) + " repeated");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail(ErrorKind::Parse, "blocks do not cover the set");
  return p;
}

std::string Partition::to_string(int base) const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(blocks[i][j] + base);
    }
  }
  return out;
}

namespace {

std::vector<int> block_index(const QuadraticSet& qs, const Partition& part) {
  std::vector<int> idx(static_cast<std::size_t>(qs.size()), -1);
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (int x : part.blocks[b]) {
      if (x < 0 || x >= qs.size() || idx[static_cast<std::size_t>(x)] >= 0)
        fail(ErrorKind::InvalidArgument, "blocks must partition the set");
      idx[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  if (std::find(idx.begin(), idx.end(), -1) != idx.end()) fail(ErrorKind::InvalidArgument, "blocks must cover the set");
  return idx;
}

// (phi x phi) r = r (phi x phi) on the set, phi given as an image table.
bool is_automorphism(const QuadraticSet& qs, const std::vector<int>& phi) {
  if (!is_bijection(phi)) return false;
  const int n = qs.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = qs.r(x, y);
      const Pair lhs{phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]};
      if (qs.r(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]) != lhs) return false;
    }
  return true;
}

// Restricts a map on Z to a block, expressed in the block's local labels;
// empty when the image leaves the block.
std::vector<int> restrict_map(const std::vector<int>& block, const std::vector<int>& local, auto&& f) {
  std::vector<int> out;
  for (int x : block) {
    int y = f(x);
    int l = local[static_cast<std::size_t>(y)];
    if (l < 0 || block[static_cast<std::size_t>(l)] != y) return {};
    out.push_back(l);
  }
  return out;
}

std::vector<int> local_labels(const std::vector<int>& block, int n) {
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < block.size(); ++i) local[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
  return local;
}

std::vector<Word> words_over(const std::vector<int>& block, int max_length) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int c : block) {
        Word v = w;
        v.push_back(c);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

void require_invariant_partition(const QuadraticSet& qs, const Partition& part) {
  const auto idx = block_index(qs, part);
  const int n = qs.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (idx[static_cast<std::size_t>(x)] != idx[static_cast<std::size_t>(y)]) continue;
      auto [a, b] = qs.r(x, y);
      if (idx[static_cast<std::size_t>(a)] != idx[static_cast<std::size_t>(x)] ||
          idx[static_cast<std::size_t>(b)] != idx[static_cast<std::size_t>(x)])
        fail(ErrorKind::BlocksNotInvariant, "r moves (" + std::to_string(x) + "," + std::to_string(y) + ") out of its block");
    }
}

ExtensionConditions check_extension_conditions(const ExtensionSpec& spec) {
  const QuadraticSet z = build_sigma_tau(spec);
  ExtensionConditions rep;
  auto note = [&](bool& flag, bool value, const char* what) {
    flag = flag && value;
    if (!value && rep.first_failure.empty()) rep.first_failure = what;
  };
  note(rep.parts_braided, check_braided(spec.xpart).holds, "first part not braided");
  note(rep.parts_braided, check_braided(spec.ypart).holds, "second part not braided");
  note(rep.sigma_automorphism, is_automorphism(spec.xpart, spec.sigma.images()), "sigma not an automorphism");
  note(rep.tau_automorphism, is_automorphism(spec.ypart, spec.tau.images()), "tau not an automorphism");
  for (const auto* part : {&spec.xpart, &spec.ypart}) {
    const Permutation& perm = part == &spec.xpart ? spec.sigma : spec.tau;
    const Permutation sq = perm.compose(perm);
    const int n = part->size();
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = part->left(sq(x), y) == part->left(x, y) && part->right(y, sq(x)) == part->right(y, x);
    note(rep.square_actions, ok, part == &spec.xpart ? "L or R of sigma^2 x differs from x" : "L or R of tau^2 y differs from y");
  }
  rep.predicted_braided = rep.parts_braided && rep.sigma_automorphism && rep.tau_automorphism && rep.square_actions;
  rep.direct_braided = check_braided(z).holds;
  return rep;
}

OrbitProfile predicted_orbit_profile(const ExtensionSpec& spec) {
  const QuadraticSet z = build_sigma_tau(spec);
  const int nx = spec.xpart.size();
  const int n = z.size();
  OrbitProfile prof;
  prof.parts_two_cancellative =
      check_two_cancellative(spec.xpart).holds && check_two_cancellative(spec.ypart).holds;

  auto uniform = [](const Permutation& p) -> std::optional<std::uint64_t> {
    auto lens = p.cycle_lengths();
    if (lens.empty()) return std::nullopt;
    for (int l : lens)
      if (l != lens.front()) return std::nullopt;
    return static_cast<std::uint64_t>(lens.front());
  };
  prof.sigma_uniform = uniform(spec.sigma);
  prof.tau_uniform = uniform(spec.tau);
  const auto sigma_sq = uniform(spec.sigma.compose(spec.sigma));
  const auto tau_sq = uniform(spec.tau.compose(spec.tau));

  const std::uint64_t rx = order_of_r(spec.xpart), ry = order_of_r(spec.ypart);
  if (prof.sigma_uniform && prof.tau_uniform && *prof.sigma_uniform == *prof.tau_uniform) {
    const std::uint64_t q = *prof.sigma_uniform;
    prof.uniform_rule_two_cancellative = prof.parts_two_cancellative;
    prof.uniform_rule_mixed_length = q % 2 == 0 ? q : 2 * q;
    prof.uniform_rule_order = checked_lcm(checked_lcm(rx, ry), *prof.uniform_rule_mixed_length);
  }
  if (sigma_sq && tau_sq && *sigma_sq == *tau_sq) {
    prof.squares_rule_two_cancellative = prof.parts_two_cancellative;
    prof.squares_rule_mixed_length = 2 * *sigma_sq;
  }
  const std::uint64_t sq_order =
      checked_lcm(spec.sigma.compose(spec.sigma).order(), spec.tau.compose(spec.tau).order());
  prof.predicted_order = checked_lcm(checked_lcm(rx, ry), 2 * sq_order);

  prof.direct_two_cancellative = check_two_cancellative(z).holds;
  prof.direct_order = order_of_r(z);
  for (int x = 0; x < nx; ++x)
    for (int a = nx; a < n; ++a) {
      Pair cur = z.r(x, a);
      std::uint64_t len = 1;
      while (cur != Pair{x, a}) {
        cur = z.r(cur.first, cur.second);
        ++len;
      }
      prof.direct_mixed_lengths.insert(len);
    }
  return prof;
}

StuReport is_generalized_stu(const QuadraticSet& qs, const Partition& part) {
  require_invariant_partition(qs, part);
  StuReport rep;
  const auto L = [&](int a, int b) { return qs.left(a, b); };   // ^a b
  const auto R = [&](int a, int b) { return qs.right(a, b); };  // a^b
  for (std::size_t i = 0; i < part.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < part.blocks.size(); ++j) {
      const auto& xs = part.blocks[i];
      const auto& ys = part.blocks[j];
      auto record = [&](const char* tag, std::vector<int> w) {
        if (!rep.holds) return;
        rep.holds = false;
        rep.failing_tag = tag;
        rep.witness = {static_cast<int>(i), static_cast<int>(j)};
        rep.witness.insert(rep.witness.end(), w.begin(), w.end());
      };
      for (int a : ys)
        for (int x : xs)
          for (int y : xs) {
            if (L(R(a, y), x) != L(a, x)) record("stu1", {a, y, x});
            if (R(x, L(y, a)) != R(x, a)) record("stu2", {x, y, a});
          }
      for (int x : xs)
        for (int a : ys)
          for (int b : ys) {
            if (L(R(x, b), a) != L(x, a)) record("stu3", {x, b, a});
            if (R(a, L(b, x)) != R(a, x)) record("stu4", {a, b, x});
          }
    }
  return rep;
}

StuAutomorphismReport stu_automorphism_equivalences(const QuadraticSet& qs, const Partition& part) {
  if (part.blocks.size() != 2) fail(ErrorKind::InvalidArgument, "needs a split into two blocks");
  require_invariant_partition(qs, part);
  const auto& xs = part.blocks[0];
  const auto& ys = part.blocks[1];
  const QuadraticSet xq = qs.restrict_to(xs), yq = qs.restrict_to(ys);
  const auto xl = local_labels(xs, qs.size()), yl = local_labels(ys, qs.size());
  StuAutomorphismReport rep;

  for (int a : ys)
    for (int x : xs)
      for (int y : xs) {
        if (qs.left(qs.right(a, y), x) != qs.left(a, x)) rep.stu[0] = false;
        if (qs.right(x, qs.left(y, a)) != qs.right(x, a)) rep.stu[1] = false;
      }
  for (int x : xs)
    for (int a : ys)
      for (int b : ys) {
        if (qs.left(qs.right(x, b), a) != qs.left(x, a)) rep.stu[2] = false;
        if (qs.right(a, qs.left(b, x)) != qs.right(a, x)) rep.stu[3] = false;
      }

  auto check = [&](bool& flag, const std::vector<int>& block, const std::vector<int>& local, const QuadraticSet& sub,
                   auto&& f) {
    auto m = restrict_map(block, local, f);
    if (m.empty() || !is_automorphism(sub, m)) flag = false;
  };
  for (int a : ys) {
    check(rep.restricted_automorphism[0], xs, xl, xq, [&](int x) { return qs.left(a, x); });
    check(rep.restricted_automorphism[1], xs, xl, xq, [&](int x) { return qs.right(x, a); });
  }
  for (int x : xs) {
    check(rep.restricted_automorphism[2], ys, yl, yq, [&](int a) { return qs.left(x, a); });
    check(rep.restricted_automorphism[3], ys, yl, yq, [&](int a) { return qs.right(a, x); });
  }
  return rep;
}

StuReport stu_monoid_bounded(const QuadraticSet& qs, const Partition& part, int max_length) {
  require_invariant_partition(qs, part);
  if (max_length < 1) fail(ErrorKind::InvalidArgument, "length bound must be positive");
  if (!check_braided(qs).holds) fail(ErrorKind::NotBraided, "monoid actions need a braided set");
  const MonoidView S(qs, max_length);
  StuReport rep;
  auto L = [&](const Word& a, const Word& u) { return left_action_unchecked(qs, a, u); };
  auto R = [&](const Word& u, const Word& a) { return right_action_unchecked(qs, u, a); };
  auto record = [&](const char* tag, std::size_t i, std::size_t j, const std::vector<Word>& ws) {
    if (!rep.holds) return;
    rep.holds = false;
    rep.failing_tag = tag;
    rep.witness = {static_cast<int>(i), static_cast<int>(j)};
    for (const auto& w : ws) {
      rep.witness.push_back(-1);
      rep.witness.insert(rep.witness.end(), w.begin(), w.end());
    }
  };
  for (std::size_t i = 0; i < part.blocks.size(); ++i)
    for (std::size_t j = 0; j < part.blocks.size(); ++j) {
      if (i == j) continue;
      // a, b over block i, u over block j; the reverse order covers stu3 and stu4.
      const auto as = words_over(part.blocks[i], max_length);
      const auto us = words_over(part.blocks[j], max_length);
      for (const auto& u : us)
        for (const auto& a : as) {
          const Word ua = L(u, a);
          const Word au = R(a, u);
          for (const auto& b : as) {
            if (!S.equivalent(L(R(u, b), a), ua)) record(i < j ? "stu1" : "stu3", i, j, {u, b, a});
            if (!S.equivalent(R(a, L(b, u)), au)) record(i < j ? "stu2" : "stu4", i, j, {a, b, u});
            if (!rep.holds) return rep;
          }
        }
    }
  return rep;
}

MixedTriple mixed_triple(const QuadraticSet& qs, int a, int y, int x) {
  const int lhs = qs.left(a, qs.left(y, x));
  MixedTriple t;
  t.l1 = lhs == qs.left(qs.left(a, y), qs.left(qs.right(a, y), x));
  t.laut = lhs == qs.left(qs.left(a, y), qs.left(a, x));
  t.stu1 = qs.left(qs.right(a, y), x) == qs.left(a, x);
  return t;
}

MixedReport mixed_l1_r2(const QuadraticSet& qs, const Partition& part) {
  if (part.blocks.size() != 2) fail(ErrorKind::InvalidArgument, "needs a split into two blocks");
  require_invariant_partition(qs, part);
  MixedReport rep;
  const auto L = [&](int a, int b) { return qs.left(a, b); };
  const auto R = [&](int a, int b) { return qs.right(a, b); };
  // l1(a,b,c): ^a(^b c) = ^(^a b)(^(a^b) c)
  auto l1 = [&](int a, int b, int c) { return L(a, L(b, c)) == L(L(a, b), L(R(a, b), c)); };
  // r2(a,b,c): r((a,b)^c) = (r(a,b))^c with (a,b)^c = (a^(^b c), b^c)
  auto r2 = [&](int a, int b, int c) {
    auto ext = [&](Pair p, int z) { return Pair{R(p.first, L(p.second, z)), R(p.second, z)}; };
    Pair lhs = ext({a, b}, c);
    lhs = qs.r(lhs.first, lhs.second);
    return lhs == ext(qs.r(a, b), c);
  };
  for (int side = 0; side < 2; ++side) {
    const auto& outer = part.blocks[static_cast<std::size_t>(side)];
    const auto& inner = part.blocks[static_cast<std::size_t>(1 - side)];
    for (int x : outer)
      for (int a : inner)
        for (int y : outer) {
          if (!l1(x, a, y)) {
            if (rep.first_mixed_witness.empty()) rep.first_mixed_witness = {2 * side, x, a, y};
            rep.mixed[2 * side] = false;
          }
          if (!r2(x, a, y)) {
            if (rep.first_mixed_witness.empty()) rep.first_mixed_witness = {2 * side + 1, x, a, y};
            rep.mixed[2 * side + 1] = false;
          }
        }
  }

  const auto& xs = part.blocks[0];
  const auto& ys = part.blocks[1];
  const QuadraticSet xq = qs.restrict_to(xs), yq = qs.restrict_to(ys);
  const auto xl = local_labels(xs, qs.size()), yl = local_labels(ys, qs.size());
  rep.parts_braided = check_braided(xq).holds && check_braided(yq).holds;

  // g -> (its left or right translation restricted to the other block) must land in
  // Aut of that block and respect the defining relations g h = ^g h . g^h.
  auto homomorphism = [&](const std::vector<int>& gens, const std::vector<int>& target, const std::vector<int>& local,
                          const QuadraticSet& sub, bool left) {
    for (int g : gens) {
      auto m = restrict_map(target, local, [&](int t) { return left ? L(g, t) : R(t, g); });
      if (m.empty() || !is_automorphism(sub, m)) return false;
    }
    for (int g : gens)
      for (int h : gens)
        for (int t : target) {
          if (left) {
            if (L(g, L(h, t)) != L(L(g, h), L(R(g, h), t))) return false;
          } else {
            if (R(R(t, g), h) != R(R(t, L(g, h)), R(g, h))) return false;
          }
        }
    return true;
  };
  rep.homomorphisms[0] = homomorphism(xs, ys, yl, yq, true);
  rep.homomorphisms[1] = homomorphism(xs, ys, yl, yq, false);
  rep.homomorphisms[2] = homomorphism(ys, xs, xl, xq, true);
  rep.homomorphisms[3] = homomorphism(ys, xs, xl, xq, false);

  rep.predicted_braided = rep.parts_braided;
  for (int k = 0; k < 4; ++k) rep.predicted_braided = rep.predicted_braided && rep.mixed[k] && rep.homomorphisms[k];
  rep.direct_braided = check_braided(qs).holds;
  return rep;
}

}  // namespace ybe
