#pragma once

// Resumable level caches.
//
//   gdav-levels 1
//   kind geodesic
//   fingerprint <sha256 hex of the group table>
//   closed <last closed length>
//   exhausted <first empty length | none>
//   level <length> <number of representatives>
//   <one representative per line, in sequence text form>
//   ...
//   end
//
// Orbit unions are not stored; they are recomputed from the representatives
// on load.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "gdav/automorphisms.hpp"
#include "gdav/canonical.hpp"
#include "gdav/errors.hpp"
#include "gdav/level_sets.hpp"
#include "gdav/sequence.hpp"

namespace gdav {

inline constexpr int kCacheFormatVersion = 1;

enum class LevelKind { atoms, geodesic };

inline std::string_view to_string(LevelKind k) { return k == LevelKind::atoms ? "atoms" : "geodesic"; }

class CacheError : public Error {
 public:
  enum class Reason { version_mismatch, fingerprint_mismatch, kind_mismatch, truncated, malformed, io };

  CacheError(Reason reason, const std::string& what) : Error("level cache: " + what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Writes `levels` to `path` (via a temporary file renamed into place).
inline void save_levels(const LevelSets& levels, LevelKind kind, const std::string& fingerprint,
                        const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError(CacheError::Reason::io, "cannot write " + tmp.string());
    out << "gdav-levels " << kCacheFormatVersion << '\n';
    out << "kind " << to_string(kind) << '\n';
    out << "fingerprint " << fingerprint << '\n';
    out << "closed " << levels.closed_through() << '\n';
    out << "exhausted ";
    if (levels.exhausted_at) {
      out << *levels.exhausted_at;
    } else {
      out << "none";
    }
    out << '\n';
    for (std::size_t k = 1; k <= levels.closed_through(); ++k) {
      const auto& reps = levels.at(k).reps;
      out << "level " << k << ' ' << reps.size() << '\n';
      for (const auto& s : reps) out << s.to_string() << '\n';
    }
    out << "end\n";
    if (!out) throw CacheError(CacheError::Reason::io, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace detail {

class CacheReader {
 public:
  explicit CacheReader(std::istream& in) : in_(in) {}

  std::string line() {
    std::string l;
    if (!std::getline(in_, l)) throw CacheError(CacheError::Reason::truncated, "file ends unexpectedly");
    return l;
  }

  /// Reads "<key> <value>" and returns value.
  std::string field(std::string_view key) {
    const std::string l = line();
    if (l.size() <= key.size() + 1 || l.compare(0, key.size(), key) != 0 || l[key.size()] != ' ')
      throw CacheError(CacheError::Reason::malformed, "expected '" + std::string(key) + "' line, got '" + l + "'");
    return l.substr(key.size() + 1);
  }

  static std::size_t number(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw CacheError(CacheError::Reason::malformed, "expected a number, got '" + s + "'");
    return std::stoul(s);
  }

 private:
  std::istream& in_;
};

}  // namespace detail

/// Reads a cache written by save_levels. The header must match `kind` and
/// `fingerprint`; orbit unions are rebuilt with `aut`.
inline LevelSets load_levels(const std::filesystem::path& path, LevelKind kind, const std::string& fingerprint,
                             const Automorphisms& aut) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CacheError(CacheError::Reason::io, "cannot open " + path.string());
  std::ostringstream contents;
  contents << file.rdbuf();
  const std::string text = contents.str();
  if (text.size() < 4 || text.compare(text.size() - 4, 4, "end\n") != 0)
    throw CacheError(CacheError::Reason::truncated, path.string() + " does not end with the end marker");
  std::istringstream in(text);
  detail::CacheReader r(in);

  const std::string magic = r.line();
  if (magic.rfind("gdav-levels ", 0) != 0) throw CacheError(CacheError::Reason::malformed, "not a level cache file");
  if (magic != "gdav-levels " + std::to_string(kCacheFormatVersion))
    throw CacheError(CacheError::Reason::version_mismatch, "unsupported format '" + magic + "'");
  if (r.field("kind") != to_string(kind)) throw CacheError(CacheError::Reason::kind_mismatch, "cache holds a different level kind");
  if (r.field("fingerprint") != fingerprint)
    throw CacheError(CacheError::Reason::fingerprint_mismatch, "cache belongs to a different group table");
  const std::size_t closed = detail::CacheReader::number(r.field("closed"));
  const std::string exhausted = r.field("exhausted");

  LevelSets levels;
  if (exhausted != "none") levels.exhausted_at = detail::CacheReader::number(exhausted);
  for (std::size_t k = 1; k <= closed; ++k) {
    std::istringstream header(r.field("level"));
    std::size_t length = 0, count = 0;
    if (!(header >> length >> count) || length != k)
      throw CacheError(CacheError::Reason::malformed, "bad level header for length " + std::to_string(k));
    Level level;
    for (std::size_t i = 0; i < count; ++i) {
      Sequence s;
      const std::string item = r.line();
      if (item == "end") throw CacheError(CacheError::Reason::truncated, "level " + std::to_string(k) + " is cut short");
      try {
        s = Sequence::parse(item);
      } catch (const InputError& e) {
        throw CacheError(CacheError::Reason::malformed, e.what());
      }
      if (s.length() != k || canonical_rep(aut, s) != s)
        throw CacheError(CacheError::Reason::malformed, "'" + item + "' is not a canonical sequence of length " + std::to_string(k));
      level.reps.push_back(std::move(s));
    }
    level.orbit_union = detail::orbit_union_of(aut, level.reps, 1);
    levels.levels.push_back(std::move(level));
  }
  if (r.line() != "end") throw CacheError(CacheError::Reason::malformed, "missing end marker");
  if (levels.exhausted_at && *levels.exhausted_at != closed + 1)
    throw CacheError(CacheError::Reason::malformed, "exhaustion length does not follow the last level");
  return levels;
}

}  // namespace gdav
