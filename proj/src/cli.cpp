#include "sumkit/cli.hpp"

#include "sumkit/acceptance.hpp"
#include "sumkit/catalog.hpp"
#include "sumkit/elliptic.hpp"
#include "sumkit/errors.hpp"
#include "sumkit/hurwitz.hpp"
#include "sumkit/oracles.hpp"
#include "sumkit/severi.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

namespace sumkit::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Cache.

Cache::Cache(fs::path dir, std::ostream& warn) : dir_(std::move(dir)), warn_(warn) {
  if (dir_.empty()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    warn_ << "warning: cache directory " << dir_.string() << " unusable, cache disabled\n";
    return;
  }
  enabled_ = true;
}

std::map<std::string, Rational>& Cache::table(const std::string& name) {
  auto [it, inserted] = tables_.try_emplace(name);
  if (!inserted) return it->second;
  std::ifstream in(dir_ / (name + ".jsonl"));
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (j.at("engineVersion").get<std::string>() != kEngineVersion) continue;
      it->second[j.at("key").get<std::string>()] = parse_rational(j.at("value").get<std::string>());
    } catch (const std::exception&) {
      warn_ << "warning: skipping corrupt cache line " << lineno << " in " << name << ".jsonl\n";
    }
  }
  return it->second;
}

std::optional<Rational> Cache::load(const std::string& name, const std::string& key) {
  if (!enabled_) return std::nullopt;
  const auto& t = table(name);
  auto it = t.find(key);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

void Cache::store(const std::string& name, const std::string& key, const Rational& value) {
  if (!enabled_) return;
  auto& t = table(name);
  t[key] = value;
  const fs::path target = dir_ / (name + ".jsonl");
  const fs::path temp = dir_ / (name + ".jsonl.tmp");
  {
    std::ofstream out(temp, std::ios::trunc);
    for (const auto& [k, v] : t) {
      ojson j;
      j["key"] = k;
      j["value"] = to_string(v);
      j["engineVersion"] = kEngineVersion;
      out << j.dump() << '\n';
    }
    if (!out) {
      warn_ << "warning: cannot write cache file " << temp.string() << ", cache disabled\n";
      enabled_ = false;
      return;
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    warn_ << "warning: cannot update cache file " << target.string() << ", cache disabled\n";
    enabled_ = false;
  }
}

// ---------------------------------------------------------------------------
// Emission.

namespace {

std::string field_text(const Field& f) {
  if (const auto* n = std::get_if<long>(&f)) return std::to_string(*n);
  if (const auto* s = std::get_if<std::string>(&f)) return *s;
  return to_string(std::get<Rational>(f));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void emit(std::ostream& out, const std::vector<Record>& records, Format format, bool single) {
  switch (format) {
    case Format::Json: {
      ojson arr = ojson::array();
      for (const auto& rec : records) {
        ojson obj = ojson::object();
        for (const auto& [name, f] : rec) {
          if (const auto* n = std::get_if<long>(&f)) {
            obj[name] = *n;
          } else {
            obj[name] = field_text(f);
          }
        }
        arr.push_back(std::move(obj));
      }
      out << ((single && arr.size() == 1) ? arr[0] : arr).dump(2) << '\n';
      return;
    }
    case Format::Csv: {
      if (records.empty()) return;
      std::vector<std::string> header;
      for (const auto& [name, f] : records.front()) {
        if (std::holds_alternative<Rational>(f)) {
          header.push_back(name + "_num");
          header.push_back(name + "_den");
        } else {
          header.push_back(name);
        }
      }
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
      out << '\n';
      for (const auto& rec : records) {
        bool first = true;
        for (const auto& [name, f] : rec) {
          if (const auto* q = std::get_if<Rational>(&f)) {
            out << (first ? "" : ",") << q->get_num().get_str() << ',' << q->get_den().get_str();
          } else {
            out << (first ? "" : ",") << csv_quote(field_text(f));
          }
          first = false;
        }
        out << '\n';
      }
      return;
    }
    case Format::Table: {
      if (records.empty()) return;
      const std::size_t cols = records.front().size();
      std::vector<std::size_t> width(cols, 0);
      for (std::size_t c = 0; c < cols; ++c) width[c] = records.front()[c].first.size();
      for (const auto& rec : records) {
        for (std::size_t c = 0; c < cols && c < rec.size(); ++c) {
          width[c] = std::max(width[c], field_text(rec[c].second).size());
        }
      }
      auto row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cols; ++c) {
          std::string cell = c < cells.size() ? cells[c] : "";
          if (c + 1 < cols) cell.resize(width[c], ' ');
          line += (c ? "  " : "") + cell;
        }
        out << line << '\n';
      };
      std::vector<std::string> head;
      for (const auto& [name, f] : records.front()) head.push_back(name);
      row(head);
      for (const auto& rec : records) {
        std::vector<std::string> cells;
        for (const auto& [name, f] : rec) cells.push_back(field_text(f));
        row(cells);
      }
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Subcommands.

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "table";
  int order = 10;
  std::string cache_dir;

  // severi
  int degree = 0;
  int delta = -1;
  std::string alpha;
  std::string beta;
  bool beta_given = false;
  bool table = false;
  bool disconnected = false;

  // hurwitz / oracle
  int genus = 0;
  std::string partition;
  long n = 0;
  std::string oracle_kind;

  // elliptic
  bool check = false;

  // catalog
  std::string entry;
  std::string family = "df-absolute";
  bool point = false;
  bool branch = false;

  // check
  bool all = false;
  std::uint64_t seed = acceptance::kDefaultSeed;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw Usage("unknown format '" + s + "'");
}

hurwitz::Partition parse_partition(const std::string& text) {
  hurwitz::Partition p;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int a = 0;
    try {
      a = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Usage("partition part '" + item + "' is not an integer");
    }
    if (used != item.size() || a < 1) throw Usage("partition part '" + item + "' must be a positive integer");
    p.push_back(a);
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::string partition_text(const hurwitz::Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

Rational cached(Cache& cache, const std::string& table, const std::string& key,
                const std::function<Rational()>& compute) {
  if (auto v = cache.load(table, key)) return *v;
  const Rational v = compute();
  cache.store(table, key, v);
  return v;
}

int cmd_severi(const Options& o, Cache& cache, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  if (o.degree < 1) throw Usage("--degree must be >= 1");
  auto value = [&](int d, int delta, const severi::Profile& a, const severi::Profile& b) {
    const std::string key = std::string(o.disconnected ? "tw" : "conn") + '|' + std::to_string(d) + '|' +
                            std::to_string(delta) + '|' + severi::to_string(a) + '|' + severi::to_string(b);
    return cached(cache, "severi", key, [&] {
      return Rational(o.disconnected ? severi::tw_severi_number(d, delta, a, b) : severi::severi_number(d, delta, a, b));
    });
  };
  std::vector<Record> recs;
  if (o.table) {
    const int delta_max = o.delta >= 0 ? o.delta : static_cast<int>(severi::genus_of(o.degree, 0));
    for (int d = 1; d <= o.degree; ++d) {
      const long top = o.disconnected ? delta_max : std::min<long>(delta_max, severi::genus_of(d, 0));
      for (int delta = 0; delta <= top; ++delta) {
        const severi::Profile beta(1, d);
        const long r = severi::point_count(d, severi::genus_of(d, delta), {}, beta);
        if (r < 0) continue;
        recs.push_back({{"d", long{d}}, {"delta", long{delta}}, {"alpha", std::string()},
                        {"beta", severi::to_string(beta)}, {"r", r}, {"value", value(d, delta, {}, beta)}});
      }
    }
    emit(out, recs, fmt);
    return 0;
  }
  if (o.delta < 0) throw Usage("--delta is required unless --table is given");
  const severi::Profile alpha = severi::parse_profile(o.alpha);
  severi::Profile beta;
  if (o.beta_given) {
    beta = severi::parse_profile(o.beta);
  } else {
    const long rest = o.degree - severi::weighted_sum(alpha);
    if (rest < 0) throw Usage("alpha has weighted size above the degree");
    beta = severi::Profile(1, rest);
    beta = severi::make_profile(beta);
  }
  if (severi::weighted_sum(alpha) + severi::weighted_sum(beta) != o.degree) {
    throw Usage("I alpha + I beta must equal the degree");
  }
  const long r = severi::point_count(o.degree, severi::genus_of(o.degree, o.delta), alpha, beta);
  recs.push_back({{"d", long{o.degree}},
                  {"delta", long{o.delta}},
                  {"alpha", severi::to_string(alpha)},
                  {"beta", severi::to_string(beta)},
                  {"r", r},
                  {"value", value(o.degree, o.delta, alpha, beta)}});
  emit(out, recs, fmt, true);
  return 0;
}

int cmd_hurwitz(const Options& o, Cache& cache, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  if (o.degree < 1) throw Usage("--degree must be >= 1");
  if (o.genus < 0) throw Usage("--genus must be >= 0");
  const hurwitz::Partition alpha = parse_partition(o.partition);
  long total = 0;
  for (int a : alpha) total += a;
  if (total != o.degree) throw Usage("--partition must sum to the degree");
  const long r = hurwitz::branch_count(o.degree, o.genus, alpha);
  const std::string key = std::to_string(o.degree) + '|' + std::to_string(o.genus) + '|' + partition_text(alpha);
  const Rational v = cached(cache, "hurwitz", key, [&] { return hurwitz::hurwitz_number(o.degree, o.genus, alpha); });
  emit(out,
       {{{"d", long{o.degree}}, {"g", long{o.genus}}, {"partition", partition_text(alpha)}, {"r", r}, {"value", v}}},
       fmt, true);
  return 0;
}

std::vector<Record> series_records(const Series& s, int order) {
  std::vector<Record> recs;
  for (int n = 0; n <= order; ++n) {
    recs.push_back({{"n", long{n}}, {"coefficient", coefficient(s, Monomial({n}))}});
  }
  return recs;
}

int cmd_elliptic(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  if (o.order < 0) throw Usage("--order must be >= 0");
  if (o.genus < 0) throw Usage("--genus must be >= 0");
  if (o.check) {
    std::vector<Record> recs;
    bool ok = true;
    for (const auto& r : elliptic::identity_suite(std::max(o.genus, 1), o.order)) {
      ok = ok && r.zero();
      recs.push_back({{"identity", r.identity}, {"genus", long{r.genus}}, {"residual", r.zero() ? "zero" : "NONZERO"}});
    }
    emit(out, recs, fmt);
    return ok ? 0 : 1;
  }
  emit(out, series_records(elliptic::fg(o.genus, o.order), o.order), fmt);
  return 0;
}

std::vector<Record> rel_records(const RelSeries& s) {
  std::vector<Record> recs;
  for (const auto& [k, c] : s.terms()) {
    std::string cls = "(";
    for (std::size_t i = 0; i < k.cls.size(); ++i) cls += (i ? "," : "") + std::to_string(k.cls[i]);
    cls += ")";
    std::string contacts;
    for (std::size_t e = 0; e < k.contacts.size(); ++e) contacts += (e ? " | " : "") + k.contacts[e].to_string();
    recs.push_back({{"class", cls}, {"chi", long{k.chi}}, {"contacts", contacts}, {"tag", k.tag}, {"coefficient", c}});
  }
  return recs;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  if (o.order < 0) throw Usage("--order must be >= 0");
  const catalog::CatalogEntry entry = catalog::parse_entry(o.entry);
  if (entry.name == "p1") {
    emit(out, rel_records(catalog::p1_series(o.order, o.branch)), fmt);
  } else if (entry.name == "torus") {
    emit(out, series_records(catalog::torus_rel_series(o.order), o.order), fmt);
  } else if (entry.name == "t2xs2") {
    const auto family = catalog::parse_t2s2_family(o.family);
    auto recs = series_records(catalog::t2s2_series(family, o.order), o.order);
    const std::string two_fiber = catalog::t2s2_two_fiber_supported(family) ? "R=0" : "zero";
    for (auto& r : recs) r.emplace_back("two_fiber", two_fiber);
    emit(out, recs, fmt);
  } else {
    emit(out, rel_records(catalog::ruled_series(entry.parameters.at(0), o.order, o.point)), fmt);
  }
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  if (o.oracle_kind == "sigma") {
    if (o.n < 1) throw Usage("--n must be >= 1");
    emit(out, {{{"n", o.n}, {"value", Rational(oracles::divisor_sum(o.n))}}}, fmt, true);
  } else if (o.oracle_kind == "kontsevich") {
    if (o.degree < 1) throw Usage("--degree must be >= 1");
    emit(out, {{{"d", long{o.degree}}, {"value", Rational(oracles::kontsevich_oracle(o.degree))}}}, fmt, true);
  } else if (o.oracle_kind == "hurwitz") {
    const auto alpha = parse_partition(o.partition);
    emit(out,
         {{{"d", long{o.degree}},
           {"g", long{o.genus}},
           {"partition", partition_text(alpha)},
           {"r", hurwitz::branch_count(o.degree, o.genus, alpha)},
           {"value", oracles::hurwitz_oracle(o.degree, o.genus, alpha)}}},
         fmt, true);
  } else {
    throw Usage("oracle kind must be hurwitz, kontsevich or sigma");
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  std::vector<Record> recs;
  bool ok = true;
  if (o.all) {
    for (const auto& r : acceptance::run_all(o.seed)) {
      ok = ok && r.pass();
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
      recs.push_back({{"criterion", long{r.id}},
                      {"name", r.name},
                      {"status", r.pass() ? "PASS" : "FAIL"},
                      {"seconds", std::string(secs)},
                      {"detail", r.detail}});
    }
  } else {
    const int order = o.order;
    for (const auto& r : elliptic::identity_suite(3, order)) {
      ok = ok && r.zero();
      recs.push_back({{"suite", "elliptic"}, {"genus", r.genus < 0 ? std::string("-") : std::to_string(r.genus)}, {"identity", r.identity}, {"status", r.zero() ? "zero" : "NONZERO"}});
    }
    const bool cut_join = hurwitz::cut_join_residual(4, 4).is_zero();
    ok = ok && cut_join;
    recs.push_back({{"suite", "hurwitz"}, {"genus", "-"}, {"identity", "cut-join d<=4 r<=4"}, {"status", cut_join ? "zero" : "NONZERO"}});
    const auto rep = catalog::dimension_consistency(2, 2, 4, 1);
    ok = ok && rep.failures.empty();
    recs.push_back({{"suite", "catalog"},
                    {"genus", "-"},
                    {"identity", "dimension filter"},
                    {"status", rep.failures.empty() ? "zero" : "NONZERO"}});
  }
  emit(out, recs, fmt);
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating-function computations for curve counts on symplectic sums", "sumkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("SUMKIT_CACHE_DIR")) o.cache_dir = env;
  app.add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--order", o.order, "truncation order");
  app.add_option("--cache-dir", o.cache_dir, "persistent cache directory (default $SUMKIT_CACHE_DIR)");

  auto* sev = app.add_subcommand("severi", "Severi degrees with tangency to a line");
  sev->add_option("--degree", o.degree, "degree d")->required();
  sev->add_option("--delta", o.delta, "number of nodes");
  sev->add_option("--alpha", o.alpha, "fixed contacts k:c,...");
  auto* beta_opt = sev->add_option("--beta", o.beta, "moving contacts k:c,... (default: the rest as order 1)");
  sev->add_flag("--table", o.table, "all (d, delta) up to the given bounds with beta = d e_1");
  sev->add_flag("--disconnected", o.disconnected, "count possibly reducible curves");

  auto* hur = app.add_subcommand("hurwitz", "Hurwitz numbers of P^1");
  hur->add_option("--degree", o.degree, "degree d")->required();
  hur->add_option("--genus", o.genus, "genus g")->required();
  hur->add_option("--partition", o.partition, "branching profile a,b,...")->required();

  auto* ell = app.add_subcommand("elliptic", "rational elliptic surface series F_g");
  ell->add_option("--genus", o.genus, "genus g");
  ell->add_flag("--check", o.check, "residuals of the identity suite");

  auto* cat = app.add_subcommand("catalog", "relative invariants of simple spaces");
  cat->add_option("entry", o.entry, "p1, torus, t2xs2 or ruled:n")->required();
  cat->add_option("--family", o.family, "t2xs2 family: df-absolute, df-relF, s+df-absolute, s+df-relF");
  cat->add_flag("--point", o.point, "ruled:n: include point-constrained invariants (tag p)");
  cat->add_flag("--branch", o.branch, "p1: include the fixed-branch-point invariants (tag b)");

  auto* ora = app.add_subcommand("oracle", "brute-force reference values");
  ora->add_option("kind", o.oracle_kind, "hurwitz, kontsevich or sigma")->required();
  ora->add_option("--degree", o.degree, "degree");
  ora->add_option("--genus", o.genus, "genus");
  ora->add_option("--partition", o.partition, "branching profile");
  ora->add_option("--n", o.n, "argument of sigma");

  auto* chk = app.add_subcommand("check", "identity suites; --all runs the acceptance criteria");
  chk->add_flag("--all", o.all, "run every acceptance criterion");
  chk->add_option("--seed", o.seed, "seed for the randomized criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.beta_given = beta_opt->count() > 0;

  try {
    Cache cache(o.cache_dir, err);
    if (sev->parsed()) return cmd_severi(o, cache, out);
    if (hur->parsed()) return cmd_hurwitz(o, cache, out);
    if (ell->parsed()) return cmd_elliptic(o, out);
    if (cat->parsed()) return cmd_catalog(o, out);
    if (ora->parsed()) return cmd_oracle(o, out);
    if (chk->parsed()) return cmd_check(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace sumkit::cli
