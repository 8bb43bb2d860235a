#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "halin/cache.hpp"
#include "halin/cli.hpp"
#include "halin/constructions.hpp"
#include "halin/enumeration.hpp"
#include "halin/serialize.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace halin;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("halin-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

Json without_timestamp(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("computed_at");
  return j;
}

Json golden(const std::string& name) {
  std::ifstream in(fs::path(HALIN_GOLDEN_DIR) / name);
  REQUIRE(in);
  return Json::parse(in);
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("record text round trip") {
  CachedRecord r{extremal_number(13, 4), "2026-01-01T00:00:00Z"};
  const auto back = decode_record(encode_record(r));
  REQUIRE(back);
  CHECK(back->record == r.record);
  CHECK(back->computed_at == r.computed_at);

  CachedRecord none{extremal_number(9, 4), "x"};
  REQUIRE_FALSE(none.record.max_edges);
  CHECK(Json::parse(encode_record(none))["max_edges"].is_null());
  CHECK(decode_record(encode_record(none))->record == none.record);
}

TEST_CASE("stale or malformed records are ignored") {
  CachedRecord r{extremal_number(10, 4), "t"};
  Json j = Json::parse(encode_record(r));
  j["format_version"] = kCacheFormatVersion + 1;
  CHECK_FALSE(decode_record(j.dump()));
  CHECK_FALSE(decode_record("{ not json"));
  CHECK_FALSE(decode_record("{\"format_version\": 1}"));
}

TEST_CASE("store and load") {
  TempDir dir;
  const RecordCache cache(dir.path / "nested");
  CHECK_FALSE(cache.load(10, 4));
  const CachedRecord r{extremal_number(10, 4), utc_timestamp()};
  cache.store(r);
  CHECK(fs::exists(cache.path_for(10, 4)));
  CHECK(cache.path_for(10, 4).filename() == "extremal-v1-n10-k4.json");
  const auto back = cache.load(10, 4);
  REQUIRE(back);
  CHECK(back->record == r.record);
  CHECK_FALSE(cache.load(10, 5));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("construct") {
  auto r = invoke({"construct", "--family", "wheel", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "halin1 (()()())\n");
  r = invoke({"construct", "--family", "extremal", "--n", "19", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["edges"] == 30);
  CHECK(parse(j["graph"].get<std::string>()) == parse(serialize(extremal_family(19))));
  r = invoke({"construct", "--family", "t18"});
  CHECK(parse(r.out).edge_count() == 28);
  r = invoke({"construct", "--family", "random", "--n", "30", "--seed", "5"});
  CHECK(r.out == serialize(random_c4free_halin(30, 5)) + "\n");
  CHECK(invoke({"construct", "--family", "t16", "--n", "17"}).code == cli::kFailed);
  CHECK(invoke({"construct", "--family", "extremal", "--n", "12"}).code == cli::kFailed);
  CHECK(invoke({"construct", "--family", "extremal"}).code == cli::kUsage);
}

TEST_CASE("check") {
  TempDir dir;
  const auto k4 = dir.file("k4.halin", "halin1 (()()())\n");
  auto r = invoke({"check", "--input", k4, "--forbid", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("contains C4: ", 0) == 0);
  const auto h16 = dir.file("h16.halin", serialize(extremal_family(16)));
  r = invoke({"check", "--input", h16, "--forbid", "4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["contains"] == false);
  r = invoke({"check", "--input", h16, "--forbid", "5", "--format", "json"});
  const Json j = Json::parse(r.out);
  CHECK(j["contains"] == true);
  CHECK(j["witness"].size() == 5);
}

TEST_CASE("faces json is stable") {
  TempDir dir;
  const auto t16 = dir.file("t16.halin", serialize(build_halin(base_tree(BaseTreeId::T16).tree)));
  const auto r = invoke({"faces", "--input", t16, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == golden("faces_t16.json"));
}

TEST_CASE("reduce") {
  TempDir dir;
  const HalinGraph g = extremal_family(21);
  const auto in = dir.file("g.halin", serialize(g));
  auto r = invoke({"reduce", "--input", in, "--format", "json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["before_edges"].get<int>() - j["after_edges"].get<int>() == j["delta"].get<int>());
  CHECK(parse(j["result"].get<std::string>()).edge_count() == j["after_edges"].get<int>());

  const auto t16 = dir.file("t16.halin", serialize(extremal_family(16)));
  CHECK(invoke({"reduce", "--input", t16}).code == cli::kFailed);
  CHECK(invoke({"reduce", "--input", t16, "--rule", "contraction", "--site", "0,1"}).code == cli::kFailed);
  CHECK(invoke({"reduce", "--input", t16, "--site", "0,1"}).code == cli::kUsage);
  CHECK(invoke({"reduce", "--input", t16, "--rule", "contraction", "--site", "0,x"}).code == cli::kUsage);
}

TEST_CASE("extremal: golden record, cache hit identical to fresh run") {
  TempDir dir;
  const std::string cache = dir.path.string();
  const auto fresh = invoke({"extremal", "--n", "16", "--forbid", "4", "--format", "json", "--cache-dir", cache});
  REQUIRE(fresh.code == 0);
  CHECK(without_timestamp(fresh.out) == golden("extremal_n16_k4.json"));
  CHECK(fresh.err.find("cache hit") == std::string::npos);

  const auto hit = invoke({"extremal", "--n", "16", "--forbid", "4", "--format", "json", "--cache-dir", cache});
  CHECK(hit.err.find("cache hit") != std::string::npos);
  CHECK(hit.out == fresh.out);

  const auto again = invoke({"extremal", "--n", "16", "--forbid", "4", "--format", "json", "--no-cache"});
  CHECK(without_timestamp(again.out) == without_timestamp(fresh.out));

  const auto text = invoke({"extremal", "--n", "16", "--forbid", "4", "--cache-dir", cache, "--witnesses"});
  CHECK(text.out.rfind("ex_H(16, C4) = 25\n", 0) == 0);
  CHECK(text.out.find("halin1 ") != std::string::npos);
}

TEST_CASE("extremal honours HALIN_CACHE_DIR") {
  TempDir dir;
  ::setenv("HALIN_CACHE_DIR", dir.path.c_str(), 1);
  const auto r = invoke({"extremal", "--n", "10", "--forbid", "4"});
  ::unsetenv("HALIN_CACHE_DIR");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir.path / "extremal-v1-n10-k4.json"));
}

TEST_CASE("audit") {
  TempDir dir;
  auto r = invoke({"audit", "--n", "16", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == golden("audit_n16.json"));
  r = invoke({"audit", "--n", "17", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,k,count,min_edges,max_edges\n17,5,1,26,26\n17,6,2,26,26\n");
  CHECK(invoke({"audit", "--n", "19"}).code == cli::kUsage);
}

TEST_CASE("conjecture") {
  TempDir dir;
  const std::string cache = dir.path.string();
  auto r = invoke({"conjecture", "--forbid", "6", "--n-min", "7", "--n-max", "9", "--format", "csv", "--cache-dir", cache});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,value,bound,gap,in_stated_range,exceeds_bound\n"
        "7,,9.6,,0,0\n8,,11.2,,0,0\n9,,12.8,,0,0\n");
  r = invoke({"conjecture", "--forbid", "6", "--n-min", "7", "--n-max", "8", "--format", "json", "--cache-dir", cache});
  const Json j = Json::parse(r.out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["counterexample_found"] == false);
  // K4 and the 4-spoke wheel sit above the bound but below the stated range.
  r = invoke({"conjecture", "--forbid", "6", "--n-min", "4", "--n-max", "5", "--format", "json", "--no-cache"});
  const Json tiny = Json::parse(r.out);
  CHECK(tiny["rows"][0]["exceeds_bound"] == true);
  CHECK(tiny["rows"][1]["value"] == 8);
  CHECK(tiny["counterexample_found"] == false);
  CHECK(invoke({"conjecture", "--forbid", "4", "--n-min", "7", "--n-max", "8"}).code == cli::kUsage);
  CHECK(invoke({"conjecture", "--forbid", "6", "--n-min", "18", "--n-max", "19", "--cache-dir", cache}).code ==
        cli::kLimit);
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "--n", "9"});
  CHECK(r.code == 0);
  std::string want;
  for (const auto& g : enumerate_halin(9)) want += serialize(g) + "\n";
  CHECK(r.out == want);
  r = invoke({"enumerate", "--n", "12", "--count-only"});
  CHECK(r.out == "50\n");
  r = invoke({"enumerate", "--n", "8", "--format", "json", "--jobs", "3"});
  CHECK(Json::parse(r.out)["count"] == 4);
}

TEST_CASE("exit codes and usage") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"construct", "--family", "wheel", "--n", "5", "--bogus"}).code == cli::kUsage);
  CHECK(invoke({"construct", "--family", "wheel", "--n", "5", "--format", "csv"}).code == cli::kUsage);
  CHECK(invoke({"check", "--input", "/nonexistent/x.halin", "--forbid", "4"}).code == cli::kFailed);
  TempDir dir;
  const auto bad = dir.file("bad.halin", "halin1 (()");
  const auto r = invoke({"check", "--input", bad, "--forbid", "4"});
  CHECK(r.code == cli::kFailed);
  CHECK(r.err.find("parse error at byte") != std::string::npos);
  const auto limit = invoke({"extremal", "--n", "19", "--forbid", "4", "--no-cache"});
  CHECK(limit.code == cli::kLimit);
  CHECK(invoke({"enumerate", "--n", "30", "--limit", "30"}).code == cli::kUsage);
  const auto v = invoke({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(std::string(kToolVersion)) != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}

}  // TEST_SUITE
