#include "ybe/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybe/algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/extensions.hpp"
#include "ybe/monoid.hpp"
#include "ybe/orbits.hpp"
#include "ybe/properties.hpp"
#include "ybe/racks.hpp"
#include "ybe/search.hpp"
#include "ybe/solution_file.hpp"

namespace ybe::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Human reports print letters from 1; JSON records keep labels from 0.
constexpr int kHumanBase = 1;

SolutionFile load(const std::string& path, std::istream& in) {
  if (path == "-") return SolutionFile::read(in);
  return SolutionFile::load(path);
}

std::string label(int x) { return std::to_string(x + kHumanBase); }

std::string pair_text(Pair p) { return "(" + label(p.first) + "," + label(p.second) + ")"; }

std::string joined(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string word_text(const Word& w, int n) { return format_word(w, n, kHumanBase); }

std::string witness_text(Property p, const std::vector<int>& w) {
  if (w.empty()) return "";
  std::string s;
  // Nondegeneracy reports (side, x); 2-cancellativity reports (x, y, k).
  if (w.size() == 2 && p == Property::Nondegenerate) return (w[0] == 0 ? "L_" : "R_") + label(w[1]) + " not bijective";
  if (p == Property::TwoCancellative && w.size() == 3) return pair_text({w[0], w[1]}) + " k=" + std::to_string(w[2]);
  s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + label(w[i]);
  return s + ")";
}

ojson table_json(const QuadraticSet& qs) {
  ojson r = ojson::array();
  for (auto [a, b] : qs.table()) r.push_back({a, b});
  return r;
}

void write_solution(const QuadraticSet& qs, std::map<std::string, std::string> meta, const std::string& path,
                    std::ostream& out) {
  SolutionFile sf{qs, std::move(meta)};
  if (path.empty() || path == "-") {
    out << sf.serialize() << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  f << sf.serialize();
}

std::vector<int> parse_ordering(const std::string& text, int n) {
  if (text.empty()) return {};
  std::vector<int> ord;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ',' || c == '[' || c == ']'; }), tok.end());
    if (tok.empty()) continue;
    try {
      ord.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad ordering entry '" + tok + "'");
    }
  }
  std::vector<int> sorted = ord;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  if (sorted != ident) fail(ErrorKind::Parse, "ordering must list 0.." + std::to_string(n - 1) + " once each");
  return ord;
}

// check

void cmd_check(const QuadraticSet& qs, bool as_json, std::ostream& out) {
  const auto rep = check_conditions(qs);
  const auto fixed = fixed_points(qs);
  const auto orbits = r_orbits(qs);
  if (as_json) {
    ojson j;
    j["base"] = 0;
    j["n"] = qs.size();
    j["order_of_r"] = order_of_r(qs);
    ojson fp = ojson::array();
    for (auto p : fixed) fp.push_back({p.first, p.second});
    j["fixed_points"] = fp;
    j["orbit_lengths"] = orbits.lengths;
    ojson flags;
    for (Property p : all_properties()) {
      ojson f;
      f["holds"] = rep.holds(p);
      f["witness"] = rep[p].witness;
      flags[std::string(property_name(p))] = f;
    }
    j["flags"] = flags;
    out << j.dump() << "\n";
    return;
  }
  out << "base " << kHumanBase << "\n";
  out << "n " << qs.size() << "\n";
  out << "order_of_r " << order_of_r(qs) << "\n";
  out << "fixed_points " << fixed.size() << ":";
  for (auto p : fixed) out << " " << pair_text(p);
  out << "\n";
  out << "r_orbits " << orbits.count() << " (nontrivial " << orbits.q << ", fixed " << orbits.fixed_count << ")\n";
  for (Property p : all_properties()) {
    out << property_name(p) << " " << (rep.holds(p) ? "true" : "false");
    if (!rep.holds(p)) out << "  witness " << witness_text(p, rep[p].witness);
    out << "\n";
  }
}

// dims

void cmd_dims(const QuadraticSet& qs, int max_degree, bool dual, std::ostream& out) {
  const auto dims = graded_dims(qs, max_degree);
  out << joined(dims) << "\n";
  out << "growth " << growth_estimate(dims).describe() << "\n";
  if (dual) {
    const auto pres = reduced_relations(qs);
    const auto dd = dual_graded_dims(pres, max_degree);
    out << "dual " << joined(dd) << "\n";
    const auto res = koszul_hilbert_check(dims, dd, max_degree);
    out << "hilbert_residual";
    for (auto c : res) out << " " << c;
    out << "\n";
  }
}

// orbits

void cmd_orbits(const QuadraticSet& qs, int degree, bool as_json, std::ostream& out) {
  const auto part = dm_orbits(qs, degree);
  if (as_json) {
    ojson j;
    j["base"] = 0;
    j["degree"] = degree;
    j["count"] = part.count();
    ojson list = ojson::array();
    for (std::size_t id = 0; id < part.count(); ++id)
      list.push_back({{"rep", part.rep_word(static_cast<std::uint32_t>(id))}, {"length", part.lengths[id]}});
    j["orbits"] = list;
    out << j.dump() << "\n";
    return;
  }
  out << "base " << kHumanBase << "\n";
  out << "degree " << degree << " orbits " << part.count() << " (nontrivial " << part.q << ", fixed "
      << part.fixed_count << ")\n";
  for (std::size_t id = 0; id < part.count(); ++id)
    out << word_text(part.rep_word(static_cast<std::uint32_t>(id)), qs.size()) << " " << part.lengths[id] << "\n";
}

// groebner

void cmd_groebner(const QuadraticSet& qs, int max_degree, const std::string& order, std::ostream& out) {
  const auto pres = reduced_relations(qs, parse_ordering(order, qs.size()));
  const auto gb = groebner(pres, max_degree);
  out << "base " << kHumanBase << "\n";
  out << "relations " << pres.s() << "\n";
  const auto extras = gb.of_degree_at_least(3);
  out << "extras " << extras.size() << "\n";
  for (const auto& p : extras) out << format_polynomial(p, qs.size(), kHumanBase) << "\n";
  out << "complete_to_degree " << gb.complete_to_degree << "\n";
  out << "complete " << (gb.complete ? "true" : "false") << "\n";
  if (gb.first_unresolved_degree) out << "first_unresolved_degree " << *gb.first_unresolved_degree << "\n";
}

// pbw

void cmd_pbw(const QuadraticSet& qs, std::ostream& out) {
  const auto res = is_pbw(qs);
  out << "base " << kHumanBase << "\n";
  out << "pbw " << (res.pbw ? "true" : "false") << "\n";
  if (res.ordering) {
    out << "ordering";
    for (int x : *res.ordering) out << " " << label(x);
    out << "\n";
  }
  out << "orderings_tried " << res.orderings_tried << "\n";
}

// extend

void cmd_extend(const QuadraticSet& x, const QuadraticSet& y, const std::string& sigma, const std::string& tau,
                bool emit, const std::string& path, std::ostream& out) {
  ExtensionSpec spec{x, y, Permutation::from_cycles(x.size(), sigma), Permutation::from_cycles(y.size(), tau)};
  const auto z = build_sigma_tau(spec);
  if (emit || !path.empty()) {
    write_solution(z, {{"name", "sigma-tau extension"}, {"sigma", spec.sigma.to_cycles()}, {"tau", spec.tau.to_cycles()}},
                   path, out);
    if (!path.empty() && path != "-") out << "wrote " << path << "\n";
    if (emit) return;
  }
  const auto cond = check_extension_conditions(spec);
  const auto prof = predicted_orbit_profile(spec);
  const auto rep = check_conditions(z);
  out << "base " << kHumanBase << "\n";
  out << "n " << z.size() << "\n";
  out << "order_of_r " << prof.direct_order << " (predicted " << prof.predicted_order << ")\n";
  for (Property p : {Property::Nondegenerate, Property::SquareFree, Property::Involutive, Property::TwoCancellative,
                     Property::Braided})
    out << property_name(p) << " " << (rep.holds(p) ? "true" : "false") << "\n";
  out << "predicted_braided " << (cond.predicted_braided ? "true" : "false");
  if (!cond.first_failure.empty()) out << " (" << cond.first_failure << ")";
  out << "\n";
  out << "mixed_orbit_lengths";
  for (auto l : prof.direct_mixed_lengths) out << " " << l;
  out << "\n";
}

// quandle

QuadraticSet make_quandle(const std::string& kind, const std::vector<int>& params) {
  if (kind == "dihedral") {
    if (params.size() != 1) fail(ErrorKind::Parse, "dihedral takes one parameter");
    return dihedral_quandle(params[0]).base;
  }
  if (kind == "affine") {
    if (params.size() != 2) fail(ErrorKind::Parse, "affine takes two parameters");
    return affine_quandle(params[0], params[1]).base;
  }
  fail(ErrorKind::Parse, "unknown quandle family '" + kind + "'");
}

// enumerate

ojson enumerate_record(std::size_t index, const QuadraticSet& qs) {
  const auto rep = check_conditions(qs);
  const auto orbits = r_orbits(qs);
  ojson j;
  j["index"] = index;
  j["n"] = qs.size();
  j["base"] = 0;
  j["r"] = table_json(qs);
  j["dim2"] = orbits.count();
  j["order_of_r"] = order_of_r(qs);
  for (Property p : {Property::Nondegenerate, Property::Involutive, Property::SquareFree, Property::TwoCancellative,
                     Property::Braided, Property::SD})
    j[std::string(property_name(p))] = rep.holds(p);
  return j;
}

SearchFilter build_filter(const std::string& require, const std::string& forbid, bool minimality) {
  SearchFilter f = SearchFilter::parse(require);
  const SearchFilter no = SearchFilter::parse(forbid);
  if (no.minimality) fail(ErrorKind::Parse, "minimality can only be required");
  for (Property p : all_properties()) {
    const auto& w = no.want[static_cast<std::size_t>(p)];
    if (!w) continue;
    auto& slot = f.want[static_cast<std::size_t>(p)];
    const bool value = !*w;
    if (slot && *slot != value)
      fail(ErrorKind::Parse, "property '" + std::string(property_name(p)) + "' both required and forbidden");
    slot = value;
  }
  f.minimality = f.minimality || minimality;
  return f;
}

void cmd_enumerate(int n, const SearchFilter& filter, std::ostream& out, std::ostream& err) {
  std::size_t index = 0;
  const auto stats = enumerate(n, filter, [&](const QuadraticSet& qs) {
    out << enumerate_record(index++, qs).dump() << "\n";
    out.flush();
  });
  err << "candidates " << stats.candidates << " classes " << stats.classes << "\n";
}

// survey

void cmd_survey(int n, bool sd_only, std::ostream& out) {
  std::size_t index = 0;
  for (const auto& e : minimality_survey(n, sd_only)) {
    ojson j;
    j["index"] = index++;
    j["n"] = e.qs.size();
    j["base"] = 0;
    j["r"] = table_json(e.qs);
    j["dim2"] = e.dim2;
    j["orbit_lengths_n"] = e.orbit_lengths_n;
    j["relation_shape"] = e.relation_shape;
    j["dual3_zero"] = e.dual3_zero;
    j["gk_estimate"] = e.gk_estimate ? ojson(*e.gk_estimate) : ojson(nullptr);
    j["growth_at_most_2"] = e.growth_at_most_2;
    j["indecomposable"] = e.indecomposable;
    j["all_checks"] = e.all_checks();
    out << j.dump() << "\n";
  }
}

// stu

void cmd_stu(const QuadraticSet& qs, const std::string& blocks, int length, std::ostream& out) {
  Partition part;
  if (blocks.empty()) {
    auto sys = invariant_block_system(qs);
    if (sys.empty()) fail(ErrorKind::BlocksNotInvariant, "no r-invariant block system found; pass --blocks");
    part.blocks = std::move(sys);
  } else {
    part = Partition::parse(blocks, qs.size());
  }
  require_invariant_partition(qs, part);
  out << "base " << kHumanBase << "\n";
  out << "blocks " << part.to_string(kHumanBase) << "\n";
  const auto ground = is_generalized_stu(qs, part);
  out << "stu " << (ground.holds ? "true" : "false");
  if (!ground.holds) {
    out << " " << ground.failing_tag << " blocks " << ground.witness[0] + kHumanBase << "," << ground.witness[1] + kHumanBase
        << " at";
    for (std::size_t i = 2; i < ground.witness.size(); ++i) out << " " << label(ground.witness[i]);
  }
  out << "\n";
  if (length > 0) {
    const auto mono = stu_monoid_bounded(qs, part, length);
    out << "stu_monoid_length_" << length << " " << (mono.holds ? "true" : "false");
    if (!mono.holds) out << " " << mono.failing_tag;
    out << "\n";
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::DegreeBudgetExceeded:
      return kExitBudget;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quadratic sets and their Yang-Baxter algebras", "ybe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string path, path2, order, sigma, tau, blocks, output, require, forbid, kind;
  int max_degree = 0, degree = 2, n = 0, length = 0;
  bool as_json = false, dual = false, emit = false, sd_only = false, minimality = false;
  std::vector<int> params;

  auto* check = app.add_subcommand("check", "Report every property flag with witnesses");
  check->add_option("file", path, "Solution file, or - for stdin")->required();
  check->add_flag("--json", as_json, "Print a machine-readable record");

  auto* dims = app.add_subcommand("dims", "Graded dimensions of the algebra");
  dims->add_option("file", path)->required();
  dims->add_option("--max-degree,-M", max_degree)->default_val(4)->check(CLI::NonNegativeNumber);
  dims->add_flag("--dual", dual, "Also print dual dimensions and the Hilbert residual");

  auto* orbits = app.add_subcommand("orbits", "Orbits of the braid action on words of one length");
  orbits->add_option("file", path)->required();
  orbits->add_option("--degree,-m", degree)->default_val(2)->check(CLI::NonNegativeNumber);
  orbits->add_flag("--json", as_json);

  auto* gb = app.add_subcommand("groebner", "Degree-bounded Groebner basis of the reduced relations");
  gb->add_option("file", path)->default_val("-");
  gb->add_option("--max-degree,-D", max_degree)->default_val(6)->check(CLI::Range(2, 12));
  gb->add_option("--order", order, "Generator ranks, e.g. \"0 2 1\"");

  auto* pbw = app.add_subcommand("pbw", "Search generator orderings for a PBW basis");
  pbw->add_option("file", path)->required();

  auto* quandle = app.add_subcommand("quandle", "Emit a dihedral or affine quandle as a solution file");
  quandle->add_option("family", kind, "dihedral or affine")->required();
  quandle->add_option("params", params, "p, or n g")->required();
  quandle->add_option("-o,--output", output);

  auto* extend = app.add_subcommand("extend", "Glue two solutions along sigma and tau");
  extend->add_option("x", path)->required();
  extend->add_option("y", path2)->required();
  extend->add_option("--sigma", sigma)->default_val("()");
  extend->add_option("--tau", tau)->default_val("()");
  extend->add_flag("--emit", emit, "Print the glued solution file instead of the report");
  extend->add_option("-o,--output", output);

  auto* en = app.add_subcommand("enumerate", "One record per isomorphism class");
  en->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  en->add_option("--require", require, "Comma-separated property names");
  en->add_option("--forbid", forbid, "Comma-separated property names");
  en->add_flag("--minimality", minimality, "Require dim A_2 = 2n - 1");

  auto* stu = app.add_subcommand("stu", "Check the twisted-union conditions for a block partition");
  stu->add_option("file", path)->required();
  stu->add_option("--blocks", blocks, "e.g. \"0 1 2|3 4 5\"; default: the finest invariant block system");
  stu->add_option("--length,-L", length, "Also check words up to this length in the monoid")->default_val(0);

  auto* survey = app.add_subcommand("survey", "Sets of order n with dim A_2 = 2n - 1");
  survey->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  survey->add_flag("--sd-only", sd_only, "Restrict to racks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (check->parsed()) cmd_check(load(path, in).qs, as_json, out);
    if (dims->parsed()) cmd_dims(load(path, in).qs, max_degree, dual, out);
    if (orbits->parsed()) cmd_orbits(load(path, in).qs, degree, as_json, out);
    if (gb->parsed()) cmd_groebner(load(path, in).qs, max_degree, order, out);
    if (pbw->parsed()) cmd_pbw(load(path, in).qs, out);
    if (quandle->parsed()) {
      auto qs = make_quandle(kind, params);
      std::string name = kind;
      for (int p : params) name += " " + std::to_string(p);
      write_solution(qs, {{"name", name + " quandle"}}, output, out);
    }
    if (extend->parsed()) cmd_extend(load(path, in).qs, load(path2, in).qs, sigma, tau, emit, output, out);
    if (en->parsed()) cmd_enumerate(n, build_filter(require, forbid, minimality), out, err);
    if (stu->parsed()) cmd_stu(load(path, in).qs, blocks, length, out);
    if (survey->parsed()) cmd_survey(n, sd_only, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace ybe::cli
