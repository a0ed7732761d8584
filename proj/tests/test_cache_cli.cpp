#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "../tools/cli.hpp"
#include "monomialis/cache.hpp"

using namespace monomialis;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("monomialis-test-" + std::to_string(std::rand()) + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cache stores and retrieves entries") {
  TempDir dir;
  ResultCache cache(dir.path);
  const std::string key = ResultCache::make_key("ass", 1, 2, 1, 1, 3);
  CHECK(!cache.get(key).has_value());
  nlohmann::json value = {{"count", 5}};
  cache.put(key, value);
  auto hit = cache.get(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == value);
  // a different engine key misses
  CHECK(!cache.get(key + ";other").has_value());
  // no temporary files are left behind
  for (const auto& entry : std::filesystem::directory_iterator(dir.path))
    CHECK(entry.path().extension() == ".json");
}

TEST_CASE("cache rejects entries whose stored key differs") {
  TempDir dir;
  ResultCache cache(dir.path);
  const std::string key = ResultCache::make_key("ass", 1, 2, 1, 1, 1);
  // write garbage at the hashed location
  std::ofstream(dir.path / (ResultCache::key_hash(key) + ".json")) << "{\"key\":\"elsewhere\"}";
  CHECK(!cache.get(key).has_value());
}

TEST_CASE("key hashing is stable") {
  CHECK(ResultCache::key_hash("abc") == ResultCache::key_hash("abc"));
  CHECK(ResultCache::key_hash("abc") != ResultCache::key_hash("abd"));
  CHECK(ResultCache::key_hash("abc").size() == 16);
}

TEST_CASE("cli formula table reproduces a slice of the reference grid") {
  const auto result = run({"table", "-r", "2", "--m-max", "2", "--n-max", "6",
                           "--source", "formula", "--no-cache"});
  CHECK(result.code == 0);
  CHECK(result.out.find("3  2  1  0  0  0") != std::string::npos);
  CHECK(result.out.find("9  8  9  4  1  0") != std::string::npos);
}

TEST_CASE("cli output is byte-deterministic") {
  const std::vector<std::string> args = {"table", "-r", "4", "--m-max", "3", "--n-max", "8",
                                         "--source", "formula", "--no-cache"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const std::vector<std::string> depth_args = {"depth", "-m", "1", "-r", "2", "-s", "1",
                                               "--n-max", "6", "--strategy", "formula"};
  CHECK(run(depth_args).out == run(depth_args).out);
}

TEST_CASE("cli ass command verdicts and cache round trip") {
  TempDir dir;
  const std::vector<std::string> args = {"ass", "-m", "1", "-r", "2", "-s", "1", "-n", "3",
                                         "--containing-c", "--cache-dir", dir.path.string()};
  const auto cold = run(args);
  CHECK(cold.code == 0);
  CHECK(cold.out.find("containing c: 1  formula: 1  MATCH") != std::string::npos);

  // warm hit must produce identical bytes
  const auto warm = run(args);
  CHECK(warm.out == cold.out);

  // verified warm hit recomputes and still matches
  auto verify_args = args;
  verify_args.push_back("--verify-cache");
  const auto verified = run(verify_args);
  CHECK(verified.code == 0);
  CHECK(verified.out == cold.out);

  // a corrupted cache entry fails verification with the mismatch exit code
  const std::string key = ResultCache::make_key("ass", 1, 2, 1, 1, 3);
  {
    ResultCache cache(dir.path);
    auto entry = cache.get(key);
    REQUIRE(entry.has_value());
    (*entry)["count_containing_c"] = 99;
    cache.put(key, *entry);
  }
  const auto corrupted = run(verify_args);
  CHECK(corrupted.code == 2);
}

TEST_CASE("cli depth strategies agree on the zero pattern") {
  TempDir dir;
  const auto formula = run({"depth", "-m", "1", "-r", "2", "-s", "1", "--n-max", "4",
                            "--strategy", "formula"});
  CHECK(formula.code == 0);
  CHECK(formula.out.find("depth: 0 1 0 1") != std::string::npos);
  const auto zero = run({"depth", "-m", "1", "-r", "2", "-s", "1", "--n-max", "4", "--strategy",
                         "zero-detect", "--cache-dir", dir.path.string()});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("zero:  Z N Z N") != std::string::npos);
}

TEST_CASE("cli witness and identity and maxima") {
  const auto witness = run({"witness", "--kind", "first-power", "-m", "1", "-r", "2",
                            "--rows", "1", "--no-cache"});
  CHECK(witness.code == 0);
  CHECK(witness.out.find("PASS") != std::string::npos);

  const auto identity = run({"identity", "--m-max", "6"});
  CHECK(identity.code == 0);
  CHECK(identity.out.find("identity holds for all") != std::string::npos);

  const auto maxima = run({"maxima", "-m", "5"});
  CHECK(maxima.code == 0);
  CHECK(maxima.out.find("(n=3, 487) (n=5, 487)") != std::string::npos);
  CHECK(maxima.out.find("PASS") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  // precondition error: r < 2
  const auto bad = run({"ass", "-m", "1", "-r", "1", "-s", "1", "-n", "1", "--no-cache"});
  CHECK(bad.code == 4);
  // usage error: unknown strategy
  const auto usage = run({"depth", "-m", "1", "-r", "2", "--n-max", "2", "--strategy", "bogus"});
  CHECK(usage.code == 4);
  // witness hypothesis violation
  const auto witness = run({"witness", "--kind", "first-power", "-m", "1", "-r", "2",
                            "--rows", "1,2", "--no-cache"});
  CHECK(witness.code == 4);
  // help is a success
  const auto help = run({"--help"});
  CHECK(help.code == 0);
}

TEST_CASE("cli oracle table agrees with the formula on a small grid") {
  TempDir dir;
  const auto both = run({"table", "-r", "2", "--m-max", "2", "--n-max", "4", "--source", "both",
                         "--cache-dir", dir.path.string()});
  CHECK(both.code == 0);
  CHECK(both.out.find("mismatches: none") != std::string::npos);
}
