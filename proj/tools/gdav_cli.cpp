// gdav: Davenport constants, geodesic atoms and directed Cayley diameters of
// small finite groups.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdav/gdav.hpp"
#include "gdav/oracle.hpp"

namespace {

enum ExitCode : int { kOk = 0, kOther = 1, kInput = 2, kIncomplete = 3, kInvariant = 4 };

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

gdav::ElementSet parse_gens(const gdav::Group& g, const std::string& text) {
  gdav::ElementSet b;
  for (const auto& item : split_list(text)) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw gdav::InputError("bad element index '" + item + "'");
    if (v >= g.order()) throw gdav::InputError("element index " + item + " is out of range");
    b.insert(static_cast<gdav::Element>(v));
  }
  return b;
}

int run_analyze(const std::vector<std::string>& specs, const gdav::AnalysisConfig& cfg, const std::string& format) {
  std::vector<gdav::AnalysisReport> reports;
  for (const auto& spec : specs) reports.push_back(gdav::analyze(spec, cfg));
  gdav::sort_reports(reports);
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(gdav::to_json(r));
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    gdav::write_csv(std::cout, reports);
  } else {
    gdav::write_table(std::cout, reports);
  }
  for (const auto& r : reports)
    if (!r.complete()) return kIncomplete;
  return kOk;
}

int run_atoms(const std::string& spec, bool geodesic, std::optional<std::size_t> max_len, unsigned threads) {
  const gdav::Group g = gdav::build_group(spec);
  const auto aut = gdav::automorphisms(g, g.order());
  gdav::SearchOptions opts;
  opts.max_len = max_len;
  opts.threads = threads;
  const gdav::LevelSets levels = geodesic ? gdav::geodesic_levels(g, aut, opts).levels : gdav::enumerate_atoms(g, aut, opts);
  for (std::size_t k = 1; k <= levels.closed_through(); ++k) {
    const auto& level = levels.at(k);
    std::cout << "level " << k << ": " << level.reps.size() << " representatives, " << level.orbit_union.size()
              << " sequences\n";
    for (const auto& s : level.reps) std::cout << "  " << s.to_string() << '\n';
  }
  if (!levels.complete()) {
    std::cout << "stopped at length " << levels.closed_through() << " before an empty level\n";
    return kIncomplete;
  }
  std::cout << "level " << *levels.exhausted_at << ": empty\n";
  std::cout << (geodesic ? "GD = " : "D = ") << levels.max_length() << '\n';
  return kOk;
}

int run_diameter(const std::string& spec, const std::string& gens, bool via_ga, unsigned threads) {
  const gdav::Group g = gdav::build_group(spec);
  const gdav::ElementSet b = parse_gens(g, gens);
  std::size_t diameter = 0;
  if (via_ga) {
    const auto aut = gdav::automorphisms(g, g.order());
    gdav::SearchOptions opts;
    opts.threads = threads;
    diameter = gdav::diameter_via_ga(g, b, gdav::geodesic_levels(g, aut, opts).levels);
  } else {
    diameter = gdav::digraph_diameter(g, b);
  }
  std::cout << diameter << '\n';
  return kOk;
}

int run_oracle_check(const std::string& spec) {
  namespace oracle = gdav::oracle;
  const gdav::Group g = gdav::build_group(spec);
  const auto aut = gdav::automorphisms(g, g.order());
  const std::size_t cap = g.order() + 1;
  const auto atoms = gdav::enumerate_atoms(g, aut);
  const auto geo = gdav::geodesic_levels(g, aut).levels;
  const auto flat = [](const gdav::LevelSets& levels) {
    std::vector<gdav::Sequence> out;
    for (const auto& level : levels.levels) out.insert(out.end(), level.orbit_union.begin(), level.orbit_union.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  bool ok = true;
  const auto report = [&](const std::string& what, bool pass, std::size_t engine, std::size_t brute) {
    ok = ok && pass;
    std::cout << (pass ? "ok       " : "MISMATCH ") << what << ": engine " << engine << ", oracle " << brute << '\n';
  };
  const auto brute_atoms = oracle::brute_atoms(g, cap);
  const auto brute_geo = oracle::brute_geodesic_atoms(g, cap);
  const auto engine_atoms = flat(atoms), engine_geo = flat(geo);
  report("atoms", engine_atoms == brute_atoms, engine_atoms.size(), brute_atoms.size());
  report("geodesic atoms", engine_geo == brute_geo, engine_geo.size(), brute_geo.size());
  const std::size_t d = gdav::small_davenport(g, aut), bd = oracle::brute_small_davenport(g);
  report("d", d == bd, d, bd);
  const std::size_t big_d = gdav::large_davenport(atoms), bbig_d = oracle::longest(brute_atoms);
  report("D", big_d == bbig_d, big_d, bbig_d);
  const std::size_t gd = geo.max_length(), bgd = oracle::longest(brute_geo);
  report("GD", gd == bgd, gd, bgd);
  const std::size_t dcd = gdav::dcd_star(g, geo), bdcd = oracle::brute_dcd_star(g);
  report("dcd*", dcd == bdcd, dcd, bdcd);
  const std::size_t dd = gdav::directed_cayley_diameter(g, aut), bdd = oracle::brute_ddiam(g);
  report("ddiam", dd == bdd, dd, bdd);
  return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Davenport constants, geodesic atoms and directed Cayley diameters of small finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gdav::kEngineVersion));

  unsigned threads = 1;
  std::optional<std::size_t> max_len;

  auto* analyze = app.add_subcommand("analyze", "Compute d, D, GD, dcd* and ddiam for one or more groups");
  std::vector<std::string> analyze_specs;
  std::string stats_text = "d,D,GD,dcdstar,ddiam";
  std::optional<std::string> cache_dir;
  std::optional<double> timeout;
  std::string format = "table";
  std::size_t aut_cap = gdav::kDefaultAutomorphismCap;
  analyze->add_option("--group", analyze_specs, "Group spec (repeatable)")->required();
  analyze->add_option("--stats", stats_text, "Comma-separated subset of d,D,GD,dcdstar,ddiam")->capture_default_str();
  analyze->add_option("--max-length", max_len, "Largest sequence length searched");
  analyze->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  analyze->add_option("--cache-dir", cache_dir, "Directory for resumable level caches");
  analyze->add_option("--timeout", timeout, "Wall-clock budget in seconds, checked between levels")->check(CLI::NonNegativeNumber);
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  analyze->add_option("--max-order", aut_cap, "Refuse groups larger than this");

  auto* atoms = app.add_subcommand("atoms", "List atom (or geodesic atom) representatives per length");
  std::string atoms_spec;
  bool geodesic = false;
  atoms->add_option("--group", atoms_spec, "Group spec")->required();
  atoms->add_flag("--geodesic", geodesic, "Directed geodesic atoms instead of atoms");
  atoms->add_option("--max-length", max_len, "Largest sequence length searched");
  atoms->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* diameter = app.add_subcommand("diameter", "Diameter of the Cayley digraph Cay(G, B)");
  std::string diameter_spec, gens;
  bool via_ga = false;
  diameter->add_option("--group", diameter_spec, "Group spec")->required();
  diameter->add_option("--gens", gens, "Comma-separated element indices of B")->required();
  diameter->add_flag("--via-ga", via_ga, "Read the diameter off the directed geodesic atoms");
  diameter->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* oracle_check = app.add_subcommand("oracle-check", "Compare the engines with brute-force definitions");
  std::string oracle_spec;
  oracle_check->add_option("--group", oracle_spec, "Group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) {
      gdav::AnalysisConfig cfg;
      cfg.stats.clear();
      for (const auto& name : split_list(stats_text))
        if (!name.empty()) cfg.stats.insert(gdav::parse_stat(name));
      cfg.max_len = max_len;
      cfg.threads = threads;
      if (cache_dir) cfg.cache_dir = std::filesystem::path(*cache_dir);
      if (timeout) cfg.timeout = std::chrono::milliseconds(static_cast<long long>(*timeout * 1000.0));
      cfg.automorphism_cap = aut_cap;
      return run_analyze(analyze_specs, cfg, format);
    }
    if (*atoms) return run_atoms(atoms_spec, geodesic, max_len, threads);
    if (*diameter) return run_diameter(diameter_spec, gens, via_ga, threads);
    if (*oracle_check) return run_oracle_check(oracle_spec);
  } catch (const gdav::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const gdav::NotGeneratedError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const gdav::LimitError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const gdav::IncompleteError& e) {
    std::cerr << "incomplete: " << e.what() << '\n';
    return kIncomplete;
  } catch (const gdav::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
