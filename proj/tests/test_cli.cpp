#include "cache.hpp"
#include "cli.hpp"
#include "rtint/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using rtint::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rtint::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rtint_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--type", "A1", "--r", "5"}).code == 0);
  const Result not_prime = run({"verify", "--type", "A1", "--r", "4"});
  CHECK(not_prime.code == 2);
  CHECK(not_prime.err.find("prime") != std::string::npos);
  const Result too_small = run({"verify", "--type", "B2", "--r", "3"});
  CHECK(too_small.code == 2);
  CHECK(too_small.err.find("m(B2) = 4") != std::string::npos);
  CHECK(run({"verify", "--type", "E8", "--r", "31"}).code == 2);
  CHECK(run({"fusion", "--type", "A2"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--json", "--csv", "alcove", "--type", "A1", "--r", "5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"invariant", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("table commands") {
  Result r = run({"--json", "alcove", "--type", "A2", "--r", "7"});
  REQUIRE(r.code == 0);
  const json alc = json::parse(r.out);
  CHECK(alc["alcove_labels"].size() == 5);
  r = run({"--json", "fusion", "--type", "A1", "--r", "5"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).contains("labels"));
  r = run({"--csv", "smatrix", "--type", "A1", "--r", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find(',') != std::string::npos);
  r = run({"smatrix", "--type", "B2", "--r", "7"});
  CHECK(r.code == 0);
  r = run({"--json", "sl2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["n"] == 4);
}

TEST_CASE("invariant files") {
  const fs::path dir = scratch("inv");
  const fs::path s1s2 = write_file(dir, "s1s2.json", R"({"lie_type":"A","rank":1,"r":5,"weight":0,"pieces":[{"unknot":0}]})");
  Result r = run({"--json", "invariant", s1s2.string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rpow"] == 0);
  CHECK(rtint::cyclotomic_from_json(j["value"]).is_one());
  CHECK(j["checks"]["passed"] == true);

  const fs::path bad = write_file(dir, "bad.json", "{\n \"lie_type\": \"A\",\n \"rank\": 1,\n \"r\": 5,\n \"pieces\": [{\"unknot\": 1},]\n}");
  r = run({"invariant", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5") != std::string::npos);
  const fs::path schema = write_file(dir, "schema.json", R"({"lie_type":"A","rank":1,"r":5,"pieces":[{"hopf":[1,2,3]}]})");
  r = run({"invariant", schema.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("/pieces/0/hopf") != std::string::npos);
  const fs::path inadmissible = write_file(dir, "c3.json", R"({"lie_type":"C","rank":3,"r":7,"pieces":[]})");
  CHECK(run({"invariant", inadmissible.string()}).code == 2);
}

TEST_CASE("sweep") {
  const Result r = run({"--csv", "sweep-lens", "--type", "A1", "--r", "5", "--pmax", "12"});
  CHECK(r.code == 0);
  size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 1 + 24);
}

TEST_CASE("determinism") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "smatrix", "--type", "A2", "--r", "7"},
        std::vector<std::string>{"--csv", "fusion", "--type", "B2", "--r", "7"},
        std::vector<std::string>{"--json", "sweep-lens", "--pmax", "6"}}) {
    const Result a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache") {
  const fs::path dir = scratch("cache");
  const std::vector<std::string> args{"--json", "--cache-dir", dir.string(), "smatrix", "--type", "A2", "--r", "7"};
  const Result cold = run({"--json", "smatrix", "--type", "A2", "--r", "7"});
  const Result miss = run(args);
  CHECK(fs::exists(dir / "A2_r7.json"));
  const Result hit = run(args);
  CHECK(miss.out == cold.out);
  CHECK(hit.out == cold.out);
  CHECK(hit.err.empty());

  rtint::cli::TableCache cache(dir);
  const rtint::RootSystem rs(rtint::LieType::parse("A2"));
  std::ostringstream log;
  cache.load(rs, 7, log);
  CHECK(cache.last_status() == "hit");

  // tamper with the payload: the hash no longer matches
  json doc = json::parse(std::ifstream(dir / "A2_r7.json"));
  doc["payload"]["fusion"][1] = 7;
  std::ofstream(dir / "A2_r7.json") << doc.dump();
  cache.load(rs, 7, log);
  CHECK(cache.last_status() == "corrupt");
  CHECK(log.str().find("hash") != std::string::npos);
  // the entry was rewritten
  cache.load(rs, 7, log);
  CHECK(cache.last_status() == "hit");

  // a consistent hash over wrong data is caught by re-verification
  doc = json::parse(std::ifstream(dir / "A2_r7.json"));
  doc["payload"]["S"][1][1] = rtint::to_json(rtint::Cyclotomic::from_int(7, 3));
  doc["sha256"] = rtint::cli::sha256_hex(doc["payload"].dump());
  std::ofstream(dir / "A2_r7.json") << doc.dump();
  std::ostringstream log2;
  cache.load(rs, 7, log2);
  CHECK(cache.last_status() == "corrupt");
  const Result after = run(args);
  CHECK(after.out == cold.out);

  // environment variable
  const fs::path env_dir = scratch("cache_env");
  setenv("RTINT_CACHE_DIR", env_dir.string().c_str(), 1);
  CHECK(run({"alcove", "--type", "A1", "--r", "5"}).code == 0);
  CHECK(run({"smatrix", "--type", "A1", "--r", "5"}).code == 0);
  unsetenv("RTINT_CACHE_DIR");
  CHECK(fs::exists(env_dir / "A1_r5.json"));
  CHECK(rtint::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
