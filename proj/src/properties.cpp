#include "ybe/properties.hpp"

#include <algorithm>

namespace ybe {

namespace {

constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "nondegenerate", "involutive", "square_free", "two_cancellative", "l1",
    "r1",            "lr3",        "braided",     "cl1",              "cr1",
    "cl2",           "cr2",        "lri",         "sd",               "quantum_binomial",
};

Flag failed(std::vector<int> w) { return Flag{false, std::move(w)}; }

}  // namespace

std::string_view property_name(Property p) { return kNames[static_cast<std::size_t>(p)]; }

const std::array<Property, kPropertyCount>& all_properties() {
  static const std::array<Property, kPropertyCount> all = [] {
    std::array<Property, kPropertyCount> a{};
    for (std::size_t i = 0; i < kPropertyCount; ++i) a[i] = static_cast<Property>(i);
    return a;
  }();
  return all;
}

std::optional<Property> parse_property(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyCount; ++i)
    if (kNames[i] == name) return static_cast<Property>(i);
  if (name == "nondeg") return Property::Nondegenerate;
  if (name == "sqfree" || name == "square-free") return Property::SquareFree;
  if (name == "2-cancellative" || name == "2canc" || name == "two-cancellative")
    return Property::TwoCancellative;
  if (name == "ybe") return Property::Braided;
  if (name == "quantum-binomial") return Property::QuantumBinomial;
  return std::nullopt;
}

bool PropertyReport::cyclic() const {
  return holds(Property::CL1) && holds(Property::CR1) && holds(Property::CL2) && holds(Property::CR2);
}

Flag check_nondegenerate(const QuadraticSet& qs) {
  const auto t = actions(qs);
  for (int side = 0; side < 2; ++side)
    for (int x = 0; x < qs.size(); ++x) {
      const auto& row = side == 0 ? t.left[static_cast<std::size_t>(x)] : t.right[static_cast<std::size_t>(x)];
      if (!is_bijection(row)) return failed({side, x});
    }
  return {};
}

Flag check_involutive(const QuadraticSet& qs) {
  for (int x = 0; x < qs.size(); ++x)
    for (int y = 0; y < qs.size(); ++y) {
      auto [a, b] = qs.r(x, y);
      if (qs.r(a, b) != Pair{x, y}) return failed({x, y});
    }
  return {};
}

Flag check_square_free(const QuadraticSet& qs) {
  for (int x = 0; x < qs.size(); ++x)
    if (qs.r(x, x) != Pair{x, x}) return failed({x});
  return {};
}

Flag check_two_cancellative(const QuadraticSet& qs) {
  // Every power r^k, k < |r|, restricted to an orbit is a rotation of it, so it
  // suffices to walk each orbit once from every starting pair.
  const int n = qs.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Pair cur = qs.r(x, y);
      int k = 1;
      while (cur != Pair{x, y}) {
        if ((cur.first == x) != (cur.second == y)) return failed({x, y, k});
        cur = qs.r(cur.first, cur.second);
        ++k;
      }
    }
  return {};
}

Flag check_braided(const QuadraticSet& qs) {
  const int n = qs.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto [lhs, rhs] = braid_sides(qs, x, y, z);
        if (lhs != rhs) return failed({x, y, z});
      }
  return {};
}

PropertyReport check_conditions(const QuadraticSet& qs) {
  PropertyReport rep;
  const int n = qs.size();
  auto L = [&](int x, int y) { return qs.left(x, y); };
  auto R = [&](int y, int x) { return qs.right(x, y); };  // R_y(x)

  rep[Property::Nondegenerate] = check_nondegenerate(qs);
  rep[Property::Involutive] = check_involutive(qs);
  rep[Property::SquareFree] = check_square_free(qs);
  rep[Property::TwoCancellative] = check_two_cancellative(qs);

  auto first_triple = [&](auto pred) -> Flag {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!pred(x, y, z)) return failed({x, y, z});
    return {};
  };
  auto first_pair = [&](auto pred) -> Flag {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!pred(x, y)) return failed({x, y});
    return {};
  };

  rep[Property::L1] = first_triple([&](int x, int y, int z) {
    return L(x, L(y, z)) == L(L(x, y), L(R(y, x), z));
  });
  rep[Property::R1] = first_triple([&](int x, int y, int z) {
    return R(z, R(y, x)) == R(R(z, y), R(L(y, z), x));
  });
  rep[Property::LR3] = first_triple([&](int x, int y, int z) {
    return R(L(R(y, x), z), L(x, y)) == L(R(L(y, z), x), R(z, y));
  });
  {
    Flag b;
    for (Property p : {Property::L1, Property::R1, Property::LR3}) {
      const Flag& f = rep[p];
      if (!f.holds && (b.holds || f.witness < b.witness)) b = f;
    }
    rep[Property::Braided] = b;
  }
  rep[Property::CL1] = first_pair([&](int x, int y) { return L(R(x, y), x) == L(y, x); });
  rep[Property::CR1] = first_pair([&](int x, int y) { return R(L(x, y), x) == R(y, x); });
  rep[Property::CL2] = first_pair([&](int x, int y) { return L(L(x, y), x) == L(y, x); });
  rep[Property::CR2] = first_pair([&](int x, int y) { return R(R(x, y), x) == R(y, x); });
  rep[Property::LRI] = first_pair([&](int x, int y) {
    return R(x, L(x, y)) == y && L(x, R(x, y)) == y;
  });
  rep[Property::SD] = first_pair([&](int x, int y) { return R(y, x) == x; });

  Flag qb;
  for (Property p : {Property::Nondegenerate, Property::SquareFree, Property::Involutive})
    if (!rep[p].holds) {
      qb = rep[p];
      break;
    }
  rep[Property::QuantumBinomial] = qb;
  return rep;
}

}  // namespace ybe
