#pragma once

// Per-group analysis: runs the requested invariant computations, reuses and
// refreshes level caches, and renders the results as JSON, CSV or a text
// table with columns dcd*, d, GD, D, ddiam.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gdav/atoms.hpp"
#include "gdav/automorphisms.hpp"
#include "gdav/cache.hpp"
#include "gdav/cayley.hpp"
#include "gdav/errors.hpp"
#include "gdav/fingerprint.hpp"
#include "gdav/geodesic.hpp"
#include "gdav/group.hpp"
#include "gdav/group_spec.hpp"
#include "gdav/level_sets.hpp"
#include "gdav/parallel.hpp"

namespace gdav {

inline constexpr std::string_view kEngineVersion = "gdav 0.1.0";

enum class Stat { d, D, GD, dcd_star, ddiam };

inline constexpr Stat kAllStats[] = {Stat::d, Stat::D, Stat::GD, Stat::dcd_star, Stat::ddiam};
/// Column order of the table and CSV emitters.
inline constexpr Stat kColumnOrder[] = {Stat::dcd_star, Stat::d, Stat::GD, Stat::D, Stat::ddiam};

inline std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::d: return "d";
    case Stat::D: return "D";
    case Stat::GD: return "GD";
    case Stat::dcd_star: return "dcd_star";
    case Stat::ddiam: return "ddiam";
  }
  return "?";
}

/// Accepts d, D, GD, dcd_star (or dcdstar, dcd*), ddiam.
inline Stat parse_stat(std::string_view name) {
  if (name == "d") return Stat::d;
  if (name == "D") return Stat::D;
  if (name == "GD") return Stat::GD;
  if (name == "dcdstar" || name == "dcd_star" || name == "dcd*") return Stat::dcd_star;
  if (name == "ddiam") return Stat::ddiam;
  throw InputError("unknown statistic '" + std::string(name) + "'");
}

struct AnalysisConfig {
  std::set<Stat> stats{std::begin(kAllStats), std::end(kAllStats)};
  std::optional<std::size_t> max_len;
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::chrono::milliseconds> timeout;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
};

struct LevelCount {
  std::size_t length = 0;
  std::size_t reps = 0;
  std::size_t orbit_size = 0;
  friend bool operator==(const LevelCount&, const LevelCount&) = default;
};

struct AnalysisReport {
  std::string group_spec;
  std::size_t order = 0;
  std::string fingerprint;
  /// Requested statistics; nullopt marks an incomplete computation.
  std::map<Stat, std::optional<std::size_t>> stats;
  std::vector<LevelCount> atom_levels;
  std::vector<LevelCount> geodesic_levels;
  std::map<Stat, double> timings_ms;
  std::vector<std::string> flags;
  std::string engine_version{kEngineVersion};

  bool complete() const {
    return std::all_of(stats.begin(), stats.end(), [](const auto& kv) { return kv.second.has_value(); });
  }
  std::optional<std::size_t> value(Stat s) const {
    auto it = stats.find(s);
    return it == stats.end() ? std::nullopt : it->second;
  }
};

/// Checks dcd* <= ddiam <= GD - 1 <= D - 1 and D >= d + 1 on whichever
/// values are present. Throws InvariantError on a violation.
inline void check_report_invariants(const AnalysisReport& r) {
  auto v = [&](Stat s) { return r.value(s); };
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw InvariantError(r.group_spec + ": invariant violated: " + what);
  };
  if (v(Stat::dcd_star) && v(Stat::ddiam)) require(*v(Stat::dcd_star) <= *v(Stat::ddiam), "dcd* <= ddiam");
  if (v(Stat::ddiam) && v(Stat::GD)) require(*v(Stat::ddiam) + 1 <= *v(Stat::GD), "ddiam <= GD - 1");
  if (v(Stat::dcd_star) && v(Stat::GD)) require(*v(Stat::dcd_star) + 1 <= *v(Stat::GD), "dcd* <= GD - 1");
  if (v(Stat::GD) && v(Stat::D)) require(*v(Stat::GD) <= *v(Stat::D), "GD - 1 <= D - 1");
  if (v(Stat::d) && v(Stat::D)) require(*v(Stat::D) >= *v(Stat::d) + 1, "D >= d + 1");
}

namespace detail {

inline std::vector<LevelCount> level_counts(const LevelSets& levels) {
  std::vector<LevelCount> out;
  for (std::size_t k = 1; k <= levels.closed_through(); ++k)
    out.push_back({k, levels.at(k).reps.size(), levels.at(k).orbit_union.size()});
  return out;
}

/// Drops cached levels beyond `cap` so that results only depend on the cap.
inline LevelSets clamp_levels(LevelSets levels, std::size_t cap) {
  if (levels.closed_through() > cap) levels.levels.resize(cap);
  if (levels.exhausted_at && *levels.exhausted_at > cap) levels.exhausted_at.reset();
  return levels;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

/// Runs `search` from the cached levels (if any) and writes the result back.
template <typename Search>
LevelSets cached_levels(const AnalysisConfig& cfg, LevelKind kind, const std::string& fingerprint, const Automorphisms& aut,
                        std::size_t cap, Search&& search) {
  LevelSets start;
  std::optional<std::filesystem::path> path;
  if (cfg.cache_dir) {
    std::filesystem::create_directories(*cfg.cache_dir);
    path = *cfg.cache_dir / (fingerprint + "." + std::string(to_string(kind)) + ".levels");
    if (std::filesystem::exists(*path)) start = clamp_levels(load_levels(*path, kind, fingerprint, aut), cap);
  }
  LevelSets result = search(std::move(start));
  if (path) {
    bool write = true;
    if (std::filesystem::exists(*path)) {
      const LevelSets on_disk = load_levels(*path, kind, fingerprint, aut);
      write = on_disk.closed_through() < result.closed_through() || (!on_disk.complete() && result.complete());
    }
    if (write) save_levels(result, kind, fingerprint, *path);
  }
  return result;
}

}  // namespace detail

/// Analyzes an already built group. `spec` is only used for labeling.
inline AnalysisReport analyze_group(const Group& g, std::string spec, const AnalysisConfig& cfg) {
  AnalysisReport report;
  report.group_spec = std::move(spec);
  report.order = g.order();
  report.fingerprint = group_fingerprint(g);

  SearchOptions opts;
  opts.max_len = cfg.max_len;
  opts.threads = cfg.threads;
  if (cfg.timeout) opts.deadline = Clock::now() + *cfg.timeout;

  const Automorphisms aut = automorphisms(g, cfg.automorphism_cap);
  const auto wants = [&](Stat s) { return cfg.stats.contains(s); };

  if (wants(Stat::d)) {
    detail::Stopwatch sw;
    const LevelSets free = product_one_free_levels(g, aut, opts);
    report.stats[Stat::d] = free.complete() ? std::optional(free.max_length()) : std::nullopt;
    report.timings_ms[Stat::d] = sw.elapsed_ms();
  }

  if (wants(Stat::D)) {
    detail::Stopwatch sw;
    const std::size_t cap = cfg.max_len.value_or(g.order() + 1);
    const LevelSets atoms = detail::cached_levels(cfg, LevelKind::atoms, report.fingerprint, aut, cap,
                                                  [&](LevelSets start) { return enumerate_atoms(g, aut, opts, std::move(start)); });
    report.stats[Stat::D] = atoms.complete() ? std::optional(atoms.max_length()) : std::nullopt;
    report.atom_levels = detail::level_counts(atoms);
    report.timings_ms[Stat::D] = sw.elapsed_ms();
  }

  if (wants(Stat::GD) || wants(Stat::dcd_star)) {
    detail::Stopwatch sw;
    const std::size_t cap = cfg.max_len.value_or(g.order() + 1);
    const LevelSets geo = detail::cached_levels(cfg, LevelKind::geodesic, report.fingerprint, aut, cap, [&](LevelSets start) {
      return geodesic_levels(g, aut, opts, std::move(start)).levels;
    });
    report.geodesic_levels = detail::level_counts(geo);
    if (wants(Stat::GD)) {
      report.stats[Stat::GD] = geo.complete() ? std::optional(geo.max_length()) : std::nullopt;
      report.timings_ms[Stat::GD] = sw.elapsed_ms();
    }
    if (wants(Stat::dcd_star)) {
      detail::Stopwatch sw2;
      report.stats[Stat::dcd_star] = geo.complete() ? std::optional(dcd_star(g, geo)) : std::nullopt;
      report.timings_ms[Stat::dcd_star] = sw2.elapsed_ms() + (wants(Stat::GD) ? 0.0 : sw.elapsed_ms());
    }
  }

  if (wants(Stat::ddiam)) {
    detail::Stopwatch sw;
    try {
      report.stats[Stat::ddiam] = directed_cayley_diameter(g, aut, opts);
    } catch (const IncompleteError&) {
      report.stats[Stat::ddiam] = std::nullopt;
    }
    report.timings_ms[Stat::ddiam] = sw.elapsed_ms();
  }

  const auto dcd = report.value(Stat::dcd_star), dd = report.value(Stat::ddiam);
  if (dcd && dd && *dcd != *dd) report.flags.push_back("dcd_star differs from ddiam");
  check_report_invariants(report);
  return report;
}

inline AnalysisReport analyze(std::string_view spec, const AnalysisConfig& cfg) {
  return analyze_group(build_group(spec), std::string(spec), cfg);
}

/// Sorts reports by (order, spec), the row order of the emitters.
inline void sort_reports(std::vector<AnalysisReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const AnalysisReport& a, const AnalysisReport& b) {
    return std::tie(a.order, a.group_spec) < std::tie(b.order, b.group_spec);
  });
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["group_spec"] = r.group_spec;
  j["order"] = r.order;
  j["fingerprint"] = r.fingerprint;
  nlohmann::json stats = nlohmann::json::object();
  for (const auto& [s, v] : r.stats) {
    if (v) {
      stats[std::string(stat_name(s))] = *v;
    } else {
      stats[std::string(stat_name(s))] = "incomplete";
    }
  }
  j["stats"] = stats;
  auto counts = [](const std::vector<LevelCount>& levels) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : levels) a.push_back({{"length", c.length}, {"reps", c.reps}, {"orbit_size", c.orbit_size}});
    return a;
  };
  j["level_counts"] = {{"atoms", counts(r.atom_levels)}, {"geodesic", counts(r.geodesic_levels)}};
  nlohmann::json timings = nlohmann::json::object();
  for (const auto& [s, ms] : r.timings_ms) timings[std::string(stat_name(s))] = ms;
  j["timings_ms"] = timings;
  j["flags"] = r.flags;
  j["engine_version"] = r.engine_version;
  return j;
}

namespace detail {

inline std::string cell(const AnalysisReport& r, Stat s) {
  auto it = r.stats.find(s);
  if (it == r.stats.end()) return "-";
  return it->second ? std::to_string(*it->second) : "incomplete";
}

}  // namespace detail

inline void write_csv(std::ostream& out, const std::vector<AnalysisReport>& reports) {
  out << "group,order";
  for (Stat s : kColumnOrder) out << ',' << stat_name(s);
  out << '\n';
  for (const auto& r : reports) {
    const bool quote = r.group_spec.find_first_of(",\"") != std::string::npos;
    if (quote) {
      out << '"';
      for (char c : r.group_spec) out << (c == '"' ? "\"\"" : std::string(1, c));
      out << '"';
    } else {
      out << r.group_spec;
    }
    out << ',' << r.order;
    for (Stat s : kColumnOrder) out << ',' << detail::cell(r, s);
    out << '\n';
  }
}

inline void write_table(std::ostream& out, const std::vector<AnalysisReport>& reports) {
  std::size_t name_width = 5;
  for (const auto& r : reports) name_width = std::max(name_width, r.group_spec.size());
  const char* headers[] = {"dcd*", "d", "GD", "D", "ddiam"};
  out << std::left << std::setw(static_cast<int>(name_width)) << "group" << "  " << std::right << std::setw(5) << "order";
  for (const char* h : headers) out << std::setw(11) << h;
  out << '\n';
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(name_width)) << r.group_spec << "  " << std::right << std::setw(5) << r.order;
    for (Stat s : kColumnOrder) out << std::setw(11) << detail::cell(r, s);
    out << '\n';
  }
}

}  // namespace gdav
