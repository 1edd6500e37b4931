#include "ybe/solution_file.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "ybe/error.hpp"

namespace ybe {

using nlohmann::json;

std::string SolutionFile::serialize() const {
  json j;
  j["format_version"] = kSolutionFormatVersion;
  j["n"] = qs.size();
  json pairs = json::array();
  for (const auto& [a, b] : qs.table()) pairs.push_back(json::array({a, b}));
  j["r"] = std::move(pairs);
  if (!metadata.empty()) j["metadata"] = metadata;
  return j.dump();
}

SolutionFile SolutionFile::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) fail(ErrorKind::Parse, "top level must be an object");
    if (!j.contains("format_version") || j.at("format_version").get<int>() != kSolutionFormatVersion)
      fail(ErrorKind::Parse, "unsupported or missing format_version");
    const int n = j.at("n").get<int>();
    const json& r = j.at("r");
    if (!r.is_array()) fail(ErrorKind::Parse, "r must be an array");
    std::vector<Pair> rmap;
    rmap.reserve(r.size());
    for (const auto& e : r) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "each entry of r must be a pair");
      rmap.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    SolutionFile sf;
    sf.qs = QuadraticSet::from_table(n, std::move(rmap));
    if (j.contains("metadata")) {
      for (const auto& [k, v] : j.at("metadata").items())
        sf.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return sf;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad solution file: ") + e.what());
  }
}

SolutionFile SolutionFile::read(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse(text);
}

SolutionFile SolutionFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  return read(in);
}

}  // namespace ybe
