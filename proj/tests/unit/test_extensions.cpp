#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ybe/error.hpp"
#include "ybe/extensions.hpp"
#include "ybe/properties.hpp"
#include "ybe/racks.hpp"

using namespace ybe;
using ybe::testing::fixture;

namespace {

ExtensionSpec trivial_spec(int nx, int ny, const char* sigma, const char* tau) {
  return {QuadraticSet::trivial(nx), QuadraticSet::trivial(ny), Permutation::from_cycles(nx, sigma),
          Permutation::from_cycles(ny, tau)};
}

ExtensionSpec three_cycles() { return trivial_spec(3, 3, "(0 1 2)", "(0 1 2)"); }

}  // namespace

TEST_CASE("three-cycle extension of trivial sets") {
  auto spec = three_cycles();
  auto z = build_sigma_tau(spec);
  CHECK(z == fixture("ext6"));
  auto flags = check_conditions(z);
  CHECK(flags.holds(Property::Nondegenerate));
  CHECK(flags.holds(Property::SquareFree));
  CHECK(flags.holds(Property::Braided));
  CHECK(flags.holds(Property::TwoCancellative));
  CHECK(order_of_r(z) == 6);
  auto prof = predicted_orbit_profile(spec);
  CHECK(prof.uniform_rule_two_cancellative);
  CHECK(prof.squares_rule_two_cancellative);
  CHECK(prof.direct_two_cancellative);
  CHECK(prof.uniform_rule_mixed_length == 6);
  CHECK(prof.squares_rule_mixed_length == 6);
  CHECK(prof.direct_mixed_lengths == std::set<std::uint64_t>{6});
  CHECK(prof.uniform_rule_order == 6);
  CHECK(prof.predicted_order == 6);
  CHECK(prof.direct_order == 6);
  auto cond = check_extension_conditions(spec);
  CHECK(cond.predicted_braided);
  CHECK(cond.direct_braided);
}

TEST_CASE("identity permutations give the trivial solution") {
  auto z = build_sigma_tau(trivial_spec(2, 3, "", ""));
  CHECK(z == QuadraticSet::trivial(5));
}

TEST_CASE("transpositions give an involutive extension") {
  auto spec = trivial_spec(2, 2, "(0 1)", "(0 1)");
  auto z = build_sigma_tau(spec);
  CHECK(check_involutive(z).holds);
  auto prof = predicted_orbit_profile(spec);
  CHECK(prof.direct_mixed_lengths == std::set<std::uint64_t>{2});
  CHECK(prof.uniform_rule_mixed_length == 2);
  CHECK(prof.direct_order == 2);
}

TEST_CASE("mixed cycle lengths of sigma and tau") {
  auto spec = trivial_spec(2, 3, "(0 1)", "(0 1 2)");
  auto prof = predicted_orbit_profile(spec);
  CHECK_FALSE(prof.direct_two_cancellative);
  CHECK_FALSE(prof.uniform_rule_two_cancellative);
  CHECK_FALSE(prof.squares_rule_two_cancellative);
  CHECK(prof.predicted_order == prof.direct_order);
}

TEST_CASE("non-uniform sigma can still give a 2-cancellative extension") {
  // sigma^2 = tau^2 = id, so r is involutive although sigma has cycles of lengths 2 and 1.
  auto spec = trivial_spec(3, 3, "(0 1)", "(1 2)");
  auto prof = predicted_orbit_profile(spec);
  CHECK_FALSE(prof.sigma_uniform.has_value());
  CHECK_FALSE(prof.uniform_rule_two_cancellative);
  CHECK(prof.squares_rule_two_cancellative);
  CHECK(prof.direct_two_cancellative);
  CHECK(check_involutive(build_sigma_tau(spec)).holds);
}

TEST_CASE("automorphism failures break the braid relation") {
  // A transposition of Dih(5) is not an automorphism.
  ExtensionSpec d5{dihedral_quandle(5).base, QuadraticSet::trivial(2), Permutation::from_cycles(5, "(0 1)"),
                   Permutation::identity(2)};
  auto c5 = check_extension_conditions(d5);
  CHECK_FALSE(c5.sigma_automorphism);
  CHECK_FALSE(c5.predicted_braided);
  CHECK_FALSE(c5.direct_braided);
  // A rotation of Dih(3) is an automorphism, but L of its square differs.
  ExtensionSpec d3{dihedral_quandle(3).base, QuadraticSet::trivial(2), Permutation::from_cycles(3, "(0 1 2)"),
                   Permutation::identity(2)};
  auto c3 = check_extension_conditions(d3);
  CHECK(c3.sigma_automorphism);
  CHECK_FALSE(c3.square_actions);
  CHECK_FALSE(c3.direct_braided);
  // Trivial parts accept every permutation.
  auto any = check_extension_conditions(trivial_spec(3, 3, "(0 1 2)", "(0 1)"));
  CHECK(any.predicted_braided);
  CHECK(any.direct_braided);
}

TEST_CASE("random specs: predictions match direct computation") {
  std::mt19937 rng(ybe::testing::kPropertySeed);
  const auto pool = ybe::testing::extension_part_pool();
  for (int i = 0; i < 400; ++i) {
    auto spec = ybe::testing::random_extension_spec(rng, pool);
    CAPTURE(i);
    auto z = build_sigma_tau(spec);
    auto cond = check_extension_conditions(spec);
    CHECK(cond.predicted_braided == cond.direct_braided);
    auto prof = predicted_orbit_profile(spec);
    CHECK(prof.squares_rule_two_cancellative == prof.direct_two_cancellative);
    CHECK(prof.predicted_order == prof.direct_order);
    if (prof.squares_rule_two_cancellative)
      CHECK(prof.direct_mixed_lengths == std::set<std::uint64_t>{*prof.squares_rule_mixed_length});
    // Whenever the uniform rule applies it agrees with the squares rule.
    if (prof.uniform_rule_two_cancellative) {
      CHECK(prof.squares_rule_two_cancellative);
      CHECK(prof.uniform_rule_mixed_length == prof.squares_rule_mixed_length);
      CHECK(prof.uniform_rule_order == prof.direct_order);
    }
    // Nondegeneracy and involutivity of the glued set.
    CHECK(check_nondegenerate(z).holds ==
          (check_nondegenerate(spec.xpart).holds && check_nondegenerate(spec.ypart).holds));
    const bool squares_trivial = spec.sigma.compose(spec.sigma).is_identity() && spec.tau.compose(spec.tau).is_identity();
    CHECK(check_involutive(z).holds ==
          (squares_trivial && check_involutive(spec.xpart).holds && check_involutive(spec.ypart).holds));
    // Braided glued sets are generalized twisted unions of their parts.
    auto part = Partition::two_blocks(spec.xpart.size(), z.size());
    if (cond.direct_braided) CHECK(is_generalized_stu(z, part).holds);
  }
}

TEST_CASE("mixed-condition verdict inside its hypotheses") {
  std::mt19937 rng(ybe::testing::kPropertySeed + 1);
  const auto pool = ybe::testing::extension_part_pool();
  int cases = 0;
  for (int i = 0; i < 400; ++i) {
    auto spec = ybe::testing::random_extension_spec(rng, pool);
    auto z = build_sigma_tau(spec);
    auto part = Partition::two_blocks(spec.xpart.size(), z.size());
    if (!check_nondegenerate(z).holds || !is_generalized_stu(z, part).holds) continue;
    if (!check_braided(spec.xpart).holds || !check_braided(spec.ypart).holds) continue;
    if (!check_two_cancellative(spec.xpart).holds || !check_two_cancellative(spec.ypart).holds) continue;
    ++cases;
    auto m = mixed_l1_r2(z, part);
    CHECK(m.predicted_braided == m.direct_braided);
  }
  CHECK(cases > 50);
}

TEST_CASE("mixed conditions on the three-cycle extension and a broken twin") {
  auto z = build_sigma_tau(three_cycles());
  auto m = mixed_l1_r2(z, Partition::two_blocks(3, 6));
  for (bool b : m.mixed) CHECK(b);
  CHECK(m.predicted_braided);
  CHECK(m.direct_braided);
  ExtensionSpec bad{dihedral_quandle(3).base, QuadraticSet::trivial(3), Permutation::from_cycles(3, "(0 1 2)"),
                    Permutation::from_cycles(3, "(0 1 2)")};
  auto mb = mixed_l1_r2(build_sigma_tau(bad), Partition::two_blocks(3, 6));
  CHECK_FALSE(mb.direct_braided);
  CHECK_FALSE(mb.predicted_braided);
  auto triv = mixed_l1_r2(QuadraticSet::trivial(4), Partition::two_blocks(2, 4));
  CHECK(triv.predicted_braided);
  CHECK(triv.direct_braided);
}

TEST_CASE("stu on SD decompositions and the order-9 blocks") {
  auto d4 = dihedral_quandle(4).base;
  auto split = is_indecomposable(d4);
  REQUIRE_FALSE(split.indecomposable);
  CHECK(is_generalized_stu(d4, Partition{{split.block, split.complement}}).holds);
  auto sd9 = fixture("sd9");
  Partition blocks{invariant_block_system(sd9)};
  CHECK(blocks.blocks.size() == 3);
  CHECK(is_generalized_stu(sd9, blocks).holds);
  CHECK(stu_monoid_bounded(sd9, blocks, 2).holds);
  CHECK_THROWS_AS(is_generalized_stu(sd9, Partition::parse("0 1 2|3 4 5|6 7 8", 9)), Error);
  try {
    is_generalized_stu(sd9, Partition::parse("0 1 2|3 4 5|6 7 8", 9));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BlocksNotInvariant);
  }
}

TEST_CASE("stu at the monoid level") {
  CHECK(stu_monoid_bounded(fixture("ext6"), Partition::two_blocks(3, 6), 3).holds);
  CHECK(stu_monoid_bounded(QuadraticSet::trivial(4), Partition::two_blocks(2, 4), 3).holds);
  CHECK_THROWS_AS(stu_monoid_bounded(fixture("nonbraided3"), Partition{{{0, 1, 2}}}, 2), Error);
}

TEST_CASE("stu conditions match restricted automorphisms") {
  std::mt19937 rng(ybe::testing::kPropertySeed + 2);
  const auto pool = ybe::testing::extension_part_pool();
  int cases = 0;
  for (int i = 0; i < 300; ++i) {
    auto spec = ybe::testing::random_extension_spec(rng, pool);
    auto z = build_sigma_tau(spec);
    if (!check_nondegenerate(z).holds || !check_braided(z).holds) continue;
    ++cases;
    auto rep = stu_automorphism_equivalences(z, Partition::two_blocks(spec.xpart.size(), z.size()));
    for (int k = 0; k < 4; ++k) CHECK(rep.stu[k] == rep.restricted_automorphism[k]);
  }
  CHECK(cases > 20);
}

TEST_CASE("two of l1, laut, stu1 imply the third on mixed triples") {
  std::mt19937 rng(ybe::testing::kPropertySeed + 3);
  const auto pool = ybe::testing::extension_part_pool();
  for (int i = 0; i < 200; ++i) {
    auto spec = ybe::testing::random_extension_spec(rng, pool);
    auto z = build_sigma_tau(spec);
    if (!check_nondegenerate(z).holds) continue;
    const int nx = spec.xpart.size();
    for (int a = nx; a < z.size(); ++a)
      for (int y = 0; y < nx; ++y)
        for (int x = 0; x < nx; ++x) {
          auto t = mixed_triple(z, a, y, x);
          CHECK(int(t.l1) + int(t.laut) + int(t.stu1) != 2);
        }
  }
}

TEST_CASE("partitions") {
  auto p = Partition::parse("0 1 2|3 4 5", 6);
  CHECK(p.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(p.to_string(1) == "1 2 3|4 5 6");
  CHECK_THROWS_AS(Partition::parse("0 1|1 2", 3), Error);
  CHECK_THROWS_AS(Partition::parse("0 1", 3), Error);
  CHECK_THROWS_AS(Partition::parse("0 x|1 2", 3), Error);
  CHECK_THROWS_AS(build_sigma_tau({QuadraticSet::trivial(2), QuadraticSet::trivial(2), Permutation::identity(3),
                                   Permutation::identity(2)}),
                  Error);
}
