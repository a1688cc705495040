#pragma once

// Command-line front end: argument parsing, output formats and the
// persistent value cache.

#include "sumkit/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sumkit::cli {

inline constexpr const char* kEngineVersion = "sumkit-1";

/// One JSON-lines file per table under the cache directory. Entries written
/// by another engine version are ignored; unreadable lines are skipped with a
/// warning on `warn`.
class Cache {
 public:
  /// An empty directory disables the cache.
  Cache(std::filesystem::path dir, std::ostream& warn);

  bool enabled() const { return enabled_; }
  std::optional<Rational> load(const std::string& table, const std::string& key);
  /// Rewrites the table file through a temporary file and a rename. Any
  /// failure disables the cache; the value is still returned to the caller.
  void store(const std::string& table, const std::string& key, const Rational& value);

 private:
  std::map<std::string, Rational>& table(const std::string& name);

  std::filesystem::path dir_;
  std::ostream& warn_;
  bool enabled_ = false;
  std::map<std::string, std::map<std::string, Rational>> tables_;
};

using Field = std::variant<long, std::string, Rational>;
using Record = std::vector<std::pair<std::string, Field>>;

enum class Format { Json, Csv, Table };

/// JSON: one object (single record) or an array; rationals as "p/q" strings.
/// CSV: header row, rationals split into _num/_den columns. Table: aligned
/// columns.
void emit(std::ostream& out, const std::vector<Record>& records, Format format, bool single = false);

/// Exit codes: 0 success, 1 failed invariant or check, 2 bad arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace sumkit::cli
