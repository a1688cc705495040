#include "doctest.h"

#include "sumkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace sumkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sumkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sumkit-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("severi output formats") {
  auto r = invoke({"--format", "json", "severi", "--degree", "3", "--delta", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\": \"12\"") != std::string::npos);
  CHECK(r.out.find("\"r\": 8") != std::string::npos);

  r = invoke({"--format", "csv", "severi", "--degree", "4", "--delta", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "d,delta,alpha,beta,r,value_num,value_den\n4,3,,1:4,11,620,1\n");

  r = invoke({"severi", "--degree", "2", "--delta", "0", "--alpha", "2:1", "--beta", ""});
  CHECK(r.code == 0);
  CHECK(r.out.find("2:1") != std::string::npos);
}

TEST_CASE("hurwitz and elliptic commands") {
  auto r = invoke({"--format", "json", "hurwitz", "--degree", "2", "--genus", "0", "--partition", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\": \"1/2\"") != std::string::npos);
  CHECK(r.out.find("\"r\": 1") != std::string::npos);

  r = invoke({"--format", "csv", "--order", "3", "elliptic", "--genus", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,coefficient_num,coefficient_den\n0,1,1\n1,12,1\n2,90,1\n3,520,1\n");

  r = invoke({"--order", "20", "elliptic", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NONZERO") == std::string::npos);
}

TEST_CASE("catalog and oracle commands") {
  auto r = invoke({"--format", "csv", "--order", "4", "catalog", "torus"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n4,7,1\n") != std::string::npos);
  r = invoke({"--order", "3", "catalog", "t2xs2", "--family", "s+df-relF"});
  CHECK(r.code == 0);
  r = invoke({"--order", "2", "catalog", "ruled:1", "--point"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" p ") != std::string::npos);
  r = invoke({"--format", "json", "oracle", "sigma", "--n", "12"});
  CHECK(r.out.find("\"28\"") != std::string::npos);
  r = invoke({"--format", "json", "oracle", "kontsevich", "--degree", "4"});
  CHECK(r.out.find("\"620\"") != std::string::npos);
}

TEST_CASE("argument errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"severi"}).code == 2);
  CHECK(invoke({"severi", "--degree", "3"}).code == 2);
  CHECK(invoke({"hurwitz", "--degree", "3", "--genus", "0", "--partition", "2,2"}).code == 2);
  CHECK(invoke({"hurwitz", "--degree", "3", "--genus", "0", "--partition", "a"}).code == 2);
  CHECK(invoke({"--format", "xml", "severi", "--degree", "1", "--delta", "0"}).code == 2);
  CHECK(invoke({"catalog", "k3"}).code == 2);
  CHECK(invoke({"oracle", "nothing"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"--format", "json", "--order", "3", "catalog", "ruled:1", "--point"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("cache round trip") {
  TempDir dir;
  const std::vector<std::string> args = {"--cache-dir", dir.path.string(), "severi", "--degree", "4", "--delta", "3"};
  const auto first = invoke(args);
  CHECK(first.code == 0);
  CHECK(fs::exists(dir.path / "severi.jsonl"));
  const auto second = invoke(args);
  CHECK(second.out == first.out);
  CHECK(second.err.empty());

  std::ostringstream warn;
  cli::Cache cache(dir.path, warn);
  CHECK(cache.enabled());
  REQUIRE(cache.load("severi", "conn|4|3||1:4"));
  CHECK(*cache.load("severi", "conn|4|3||1:4") == 620);
}

TEST_CASE("cache values are served from disk") {
  TempDir dir;
  {
    std::ostringstream warn;
    cli::Cache cache(dir.path, warn);
    cache.store("severi", "conn|3|1||1:3", 99);
  }
  const auto r = invoke({"--cache-dir", dir.path.string(), "severi", "--degree", "3", "--delta", "1"});
  CHECK(r.out.find("99") != std::string::npos);
}

TEST_CASE("cache skips corrupt lines and other engine versions") {
  TempDir dir;
  {
    std::ofstream f(dir.path / "hurwitz.jsonl");
    f << "{not json\n";
    f << R"({"key":"a","value":"5","engineVersion":"older"})" << '\n';
    f << R"({"key":"b","value":"7/3","engineVersion":")" << cli::kEngineVersion << "\"}\n";
  }
  std::ostringstream warn;
  cli::Cache cache(dir.path, warn);
  CHECK_FALSE(cache.load("hurwitz", "a"));
  REQUIRE(cache.load("hurwitz", "b"));
  CHECK(*cache.load("hurwitz", "b") == make_rational(7, 3));
  CHECK(warn.str().find("corrupt") != std::string::npos);
}

TEST_CASE("unwritable cache directory disables the cache") {
  TempDir dir;
  const fs::path blocker = dir.path / "file";
  std::ofstream(blocker) << "x";
  std::ostringstream warn;
  cli::Cache cache(blocker / "sub", warn);
  CHECK_FALSE(cache.enabled());
  CHECK_FALSE(warn.str().empty());
  cache.store("severi", "k", 1);
  CHECK_FALSE(cache.load("severi", "k"));
}
