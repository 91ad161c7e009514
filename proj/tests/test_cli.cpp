#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "aszeta/cache.hpp"
#include "aszeta/cli.hpp"

using namespace aszeta;
using namespace aszeta::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "as_zeta");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("aszeta-test-" + std::to_string(std::rand()) + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("count") {
  auto r = invoke({"count", "--family", "C0", "--p", "3", "--n", "1"});
  CHECK(r.code == kPass);
  CHECK(r.out == "7\n");
  r = invoke({"count", "--family", "B", "--p", "3", "--k", "1", "--n", "4", "--method", "brute"});
  CHECK(r.out == "28\n");
  r = invoke({"count", "--family", "B", "--p", "3", "--k", "1", "--n", "4", "--method", "rank", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("count") == "28");
  CHECK(j.at("n") == 4);
}

TEST_CASE("golden lpoly") {
  const auto r = invoke({"lpoly", "--family", "B", "--p", "3", "--k", "2"});
  CHECK(r.code == kPass);
  CHECK(r.out == "1 + 3*T^2 - 162*T^8 - 486*T^10 + 6561*T^16 + 19683*T^18\n");
}

TEST_CASE("lpoly comparison against a reference") {
  auto r = invoke({"lpoly", "--family", "C", "--p", "3", "--k", "2", "--expect",
                   "1 - 3*T + 3*T^2 + 81*T^8 - 243*T^9 + 243*T^10 + 6561*T^16 - 19683*T^17 + 19683*T^18"});
  CHECK(r.code == kVerificationFailure);
  CHECK(r.err.find("opposite sign") != std::string::npos);
  r = invoke({"lpoly", "--family", "B", "--p", "3", "--k", "2", "--expect",
              "1 + 3*T^2 - 162*T^8 - 486*T^10 + 6561*T^16 + 19683*T^18"});
  CHECK(r.code == kPass);
}

TEST_CASE("verification commands") {
  auto r = invoke({"verify-divides", "--p", "3", "--k", "1", "--m", "2"});
  CHECK(r.code == kPass);
  CHECK(r.out == "L(C_1) | L(C_2): PASS\n");
  r = invoke({"verify-divides", "--p", "3", "--k", "2", "--m", "1"});
  CHECK(r.code == kPass);
  r = invoke({"verify-nondivides", "--p", "3", "--k", "3", "--l", "2"});
  CHECK(r.code == kPass);
  CHECK(r.out.find("sqrt-p") != std::string::npos);
  r = invoke({"verify-nondivides", "--p", "3", "--k", "1", "--l", "2"});
  CHECK(r.code == kVerificationFailure);
  CHECK(r.err.find("counterexample") != std::string::npos);
  r = invoke({"verify-oracle", "--family", "C", "--p", "5", "--k", "1", "--n", "6"});
  CHECK(r.code == kPass);
}

TEST_CASE("error exit codes") {
  CHECK(invoke({"count", "--p", "4"}).code == kBadInput);
  CHECK(invoke({"count", "--family", "D"}).code == kBadInput);
  CHECK(invoke({"count", "--method", "guess"}).code == kBadInput);
  CHECK(invoke({"frobnicate"}).code == kBadInput);
  CHECK(invoke({"count", "--p", "3", "--n", "20", "--method", "brute", "--budget", "1000"}).code == kBudgetExceeded);
  CHECK(invoke({"lpoly", "--family", "C", "--p", "3", "--k", "4", "--budget", "100"}).code == kBudgetExceeded);
  CHECK(invoke({"verify-divides", "--family", "B0"}).code == kBadInput);
}

TEST_CASE("tables") {
  const CurveSpec c2 = CurveSpec::ck(3, 2);
  CHECK(emit_table(c2, 0, Format::Csv) == "n,d,case,deficit_u,deficit_v,count\n");
  const std::string csv = emit_table(c2, 24, Format::Csv);
  std::istringstream lines(csv);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 25);
  CHECK(rows[1].rfind("1,1,", 0) == 0);
  CHECK(rows[1].find(",0,-1,7") != std::string::npos);

  const auto j = nlohmann::json::parse(emit_table(CurveSpec::b0(5), 4, Format::Json));
  REQUIRE(j.size() == 4);
  const char* expected[] = {"0", "4", "0", "4"};
  for (int i = 0; i < 4; ++i) {
    CHECK(j[i].at("deficit_u") == expected[i]);
    CHECK(j[i].at("deficit_v") == "0");
  }
  CHECK(nlohmann::json::parse(emit_table(c2, 0, Format::Json)).empty());
}

TEST_CASE("cache round trip") {
  TempDir dir;
  const std::string d = dir.path.string();
  const auto first = invoke({"lpoly", "--family", "C", "--p", "3", "--k", "2", "--cache-dir", d});
  CHECK(first.code == kPass);
  const LPolyCache cache(dir.path);
  const fs::path file = cache.path_for("C:3:2:1:1");
  REQUIRE(fs::exists(file));
  const auto entry = cache.load_entry("C:3:2:1:1");
  REQUIRE(entry.has_value());
  CHECK(entry->lpoly + "\n" == first.out);
  CHECK(entry->tool_version == kToolVersion);
  const auto second = invoke({"lpoly", "--family", "C", "--p", "3", "--k", "2", "--cache-dir", d});
  CHECK(second.out == first.out);

  // Base change entries are cached under their own r.
  CHECK(invoke({"lpoly", "--family", "C", "--p", "3", "--k", "2", "--m", "3", "--cache-dir", d}).code == kPass);
  CHECK(fs::exists(cache.path_for("C:3:2:1:3")));
}

TEST_CASE("cache corruption is detected") {
  TempDir dir;
  const std::string d = dir.path.string();
  REQUIRE(invoke({"lpoly", "--family", "B", "--p", "3", "--k", "1", "--cache-dir", d}).code == kPass);
  const fs::path file = LPolyCache(dir.path).path_for("B:3:1:1:1");

  auto rewrite = [&](const std::string& text) {
    std::ofstream out(file, std::ios::trunc);
    out << text;
  };
  auto lpoly = [&] { return invoke({"lpoly", "--family", "B", "--p", "3", "--k", "1", "--cache-dir", d}).code; };

  rewrite("{not json");
  CHECK(lpoly() == kCacheCorruption);

  nlohmann::json j = {{"key", "B:3:1:1:1"}, {"lpoly", "1 + 3*T^2 + 5*T^4"}, {"tool_version", kToolVersion},
                      {"timestamp", "2026-01-01T00:00:00Z"}};
  rewrite(j.dump());
  CHECK(lpoly() == kCacheCorruption);  // fails the functional equation

  j["lpoly"] = "1 + 3*T^2";
  rewrite(j.dump());
  CHECK(lpoly() == kCacheCorruption);  // valid shape, wrong genus

  j["lpoly"] = "1 + 3*T^2 + 9*T^4 + 27*T^6";
  j["key"] = "C:3:1:1:1";
  rewrite(j.dump());
  CHECK(lpoly() == kCacheCorruption);  // filed under another key
}

TEST_CASE("cache directory resolution") {
  ::setenv("AS_ZETA_CACHE", "/tmp/from-env", 1);
  CHECK(resolve_cache_dir("") == fs::path("/tmp/from-env"));
  CHECK(resolve_cache_dir("/tmp/from-flag") == fs::path("/tmp/from-flag"));
  ::unsetenv("AS_ZETA_CACHE");
  CHECK_FALSE(resolve_cache_dir("").has_value());
}
