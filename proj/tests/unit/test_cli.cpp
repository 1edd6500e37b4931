#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "ybe/algebra.hpp"
#include "ybe/cli.hpp"
#include "ybe/solution_file.hpp"

using namespace ybe;
using ybe::testing::fixture;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream s(out);
    for (std::string line; std::getline(s, line);) v.push_back(line);
    return v;
  }
  bool has_line(const std::string& line) const {
    auto v = lines();
    return std::find(v.begin(), v.end(), line) != v.end();
  }
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return std::string(YBE_FIXTURE_DIR) + "/" + name + ".json"; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("check reports flags") {
  auto r = call({"check", fx("perm3")});
  REQUIRE(r.code == 0);
  CHECK(r.has_line("base 1"));
  CHECK(r.has_line("braided true"));
  CHECK(r.lines().end() != std::find_if(r.lines().begin(), r.lines().end(), [](const std::string& l) {
          return l.rfind("two_cancellative false", 0) == 0;
        }));

  r = call({"check", fx("q5")});
  CHECK(r.has_line("square_free true"));
  CHECK(r.has_line("sd true"));
  CHECK(r.has_line("braided true"));
  CHECK(r.lines().end() != std::find_if(r.lines().begin(), r.lines().end(), [](const std::string& l) {
          return l.rfind("involutive false", 0) == 0;
        }));

  r = call({"check", "--json", fx("q5")});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["base"] == 0);
  CHECK(j["flags"]["involutive"]["holds"] == false);
  CHECK(j["order_of_r"] == 5);
}

TEST_CASE("exit codes") {
  CHECK(call({"check", "-"}, "{\"format_version\": 1, \"n\": 2").code == cli::kExitInvalid);
  CHECK(call({"check", "-"}, "{\"format_version\":1,\"n\":2,\"r\":[[0,0],[0,0],[1,0],[1,1]]}").code == cli::kExitInvalid);
  CHECK(call({"check", "/nonexistent/file.json"}).code == cli::kExitInvalid);
  CHECK(call({"frobnicate"}).code == cli::kExitInvalid);
  CHECK(call({}).code == cli::kExitInvalid);
  CHECK(call({"--help"}).code == cli::kExitOk);
  CHECK(call({"enumerate", "--n", "5", "--require", "nondegenerate"}).code == cli::kExitBudget);
  CHECK(call({"enumerate", "--n", "3", "--require", "involutive", "--forbid", "involutive"}).code == cli::kExitInvalid);
  CHECK(call({"quandle", "affine", "6", "2"}).code == cli::kExitInvalid);
}

TEST_CASE("dims on the order-5 fixture") {
  auto r = call({"dims", fx("q5"), "--max-degree", "3"});
  REQUIRE(r.code == 0);
  const auto third = linear_dims(reduced_relations(fixture("q5")), 3).algebra;
  CHECK(r.lines().at(0) == "1 5 9 " + std::to_string(third));
  r = call({"dims", fx("triv3a"), "--max-degree", "4", "--dual"});
  CHECK(r.lines().at(0) == "1 3 6 10 15");
  CHECK(r.has_line("dual 1 3 3 1 0"));
  CHECK(r.has_line("hilbert_residual 0 0 0 0 0"));
}

TEST_CASE("quandle piped into groebner") {
  auto q = call({"quandle", "dihedral", "5"});
  REQUIRE(q.code == 0);
  CHECK(ybe::testing::isomorphic_brute_force(SolutionFile::parse(q.out).qs, fixture("q5")));
  auto g = call({"groebner", "--max-degree", "4"}, q.out);
  REQUIRE(g.code == 0);
  CHECK(g.has_line("relations 16"));
  CHECK(g.has_line("extras 4"));
  std::set<std::string> extras;
  auto lines = g.lines();
  auto it = std::find(lines.begin(), lines.end(), "extras 4");
  for (int i = 1; i <= 4; ++i) extras.insert(*(it + i));
  CHECK(extras == std::set<std::string>{"133-122", "144-122", "155-122", "1222-1112"});
}

TEST_CASE("groebner ordering option") {
  CHECK(call({"groebner", fx("inv3b"), "--order", "0 2 1"}).has_line("extras 0"));
  CHECK(call({"groebner", fx("inv3b"), "--order", "0 0 1"}).code == cli::kExitInvalid);
  auto p = call({"pbw", fx("inv3b")});
  CHECK(p.has_line("pbw true"));
  CHECK(p.has_line("ordering 1 3 2"));
}

TEST_CASE("extend glues two trivial sets") {
  auto r = call({"extend", fx("triv3a"), fx("triv3b"), "--sigma", "(0 1 2)", "--tau", "(0 1 2)"});
  REQUIRE(r.code == 0);
  CHECK(r.has_line("n 6"));
  CHECK(r.has_line("order_of_r 6 (predicted 6)"));
  CHECK(r.has_line("braided true"));
  CHECK(r.has_line("two_cancellative true"));
  CHECK(r.has_line("mixed_orbit_lengths 6"));
  auto e = call({"extend", fx("triv3a"), fx("triv3b"), "--sigma", "(0 1 2)", "--tau", "(0 1 2)", "--emit"});
  CHECK(SolutionFile::parse(e.out).qs == fixture("ext6"));
  CHECK(call({"extend", fx("triv3a"), fx("triv3b"), "--sigma", "(0 1 7)"}).code == cli::kExitInvalid);
}

TEST_CASE("enumerate streams records with a fixed field order") {
  auto r = call({"enumerate", "--n", "3", "--require", "nondegenerate,two_cancellative,square_free"});
  REQUIRE(r.code == 0);
  auto lines = r.lines();
  REQUIRE(lines.size() == 4);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto j = nlohmann::ordered_json::parse(lines[i]);
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys.at(0) == "index");
    CHECK(keys.at(1) == "n");
    CHECK(keys.at(2) == "base");
    CHECK(keys.at(3) == "r");
    CHECK(j["index"] == i);
    CHECK(j["two_cancellative"] == true);
  }
  CHECK(r.err.find("classes 4") != std::string::npos);
}

TEST_CASE("stu and survey") {
  auto r = call({"stu", fx("sd9")});
  REQUIRE(r.code == 0);
  CHECK(r.has_line("blocks 1 4 7|2 5 9|3 6 8"));
  CHECK(r.has_line("stu true"));
  r = call({"stu", fx("ext6"), "--blocks", "0 1 2|3 4 5", "--length", "2"});
  CHECK(r.has_line("stu true"));
  CHECK(r.has_line("stu_monoid_length_2 true"));
  CHECK(call({"stu", fx("sd9"), "--blocks", "0 1 2|3 4 5|6 7 8"}).code == cli::kExitInvalid);
  auto s = call({"survey", "--n", "3", "--sd-only"});
  REQUIRE(s.lines().size() == 1);
  CHECK(nlohmann::json::parse(s.out)["all_checks"] == true);
}

TEST_CASE("solution files round-trip byte for byte") {
  for (const auto& name : ybe::testing::fixture_names()) {
    const std::string text = slurp(fx(name));
    CHECK(SolutionFile::parse(text).serialize() == text);
  }
}
