// Copyright 2026 The fekete Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fekete/cache.hpp"
#include "fekete/cli.hpp"
#include "fekete/serialize.hpp"
#include "fekete/table.hpp"

using namespace fekete;
namespace fs = std::filesystem;

namespace {

const IntPoly kF44{1, -1, 2, 0, 3, 0, 2, -1, 1};
const IntPoly kG44{1, 3, -2, -1, 1};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fekete");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(FEKETE_TEST_DATA) + "/" + name; }

ParsedTable parse_file(const std::string& name) {
  std::ifstream in(data_file(name));
  REQUIRE(in);
  return parse_published_table(in);
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fekete-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

GaloisCertificate kernel76() {
  return *certify(fekete_compact(QuadDisc::from_discriminant(76)), Mode::TwoPlusFourCycle, kDefaultBound);
}

}  // namespace

TEST_CASE("polynomial JSON uses decimal strings and round-trips") {
  const IntPoly big(std::vector<Integer>{Integer("-98765432109876543210987654321"), 0, 7});
  const Json j = poly_to_json(big);
  CHECK(j[0] == "-98765432109876543210987654321");
  CHECK(poly_from_json(j) == big);
  CHECK(poly_from_json(Json::parse(j.dump())) == big);
  CHECK_THROWS(poly_from_json(Json::parse("[\"1\", \"abc\"]")));
}

TEST_CASE("bundle JSON") {
  const Json j = bundle_to_json(fekete_compact(QuadDisc::from_discriminant(44)));
  CHECK(j["delta"] == 44);
  CHECK(j["family"] == "FourP");
  CHECK(j["f_text"] == "x^8 - x^7 + 2*x^6 + 3*x^4 + 2*x^2 - x + 1");
  CHECK(j["g_text"] == "x^4 - x^3 - 2*x^2 + 3*x + 1");
  CHECK(poly_from_json(j["f"]) == kF44);
  CHECK(j["conjectural"] == false);
}

TEST_CASE("certificate JSON round trip") {
  const GaloisCertificate k = kernel76();
  const Json j = certificate_to_json(k);
  CHECK(j["group"] == "ker(Σ') ⋊ S_8");
  CHECK(j["witnesses"][0]["q"] == 227);
  CHECK(j["disc"]["square"] == true);
  CHECK(j.contains("trace"));
  CHECK(certificate_from_json(Json::parse(j.dump())) == k);

  const auto quad = certify(fekete_compact(QuadDisc::from_discriminant(44)), Mode::Quadruple, kDefaultBound);
  REQUIRE(quad);
  const Json jq = certificate_to_json(*quad);
  CHECK(jq["disc"].is_null());
  CHECK(certificate_from_json(jq) == *quad);

  FactorShape s;
  s.q = 227;
  s.squarefree = true;
  s.degrees = {{2, 1}, {4, 1}, {5, 2}};
  CHECK(shape_from_json(shape_to_json(s)) == s);
}

TEST_CASE("certificate cache") {
  TempDir dir;
  const CacheKey key{76, "kernel", kDefaultBound};
  CHECK(cache_key_text(key) == "v1|76|kernel|100000");
  CHECK_FALSE(cache_load(dir.path, key));

  const GaloisCertificate k = kernel76();
  cache_store(dir.path, key, k);
  const auto hit = cache_load(dir.path, key);
  REQUIRE(hit);
  CHECK(*hit == k);

  // different bound, mode or version miss
  CHECK_FALSE(cache_load(dir.path, CacheKey{76, "kernel", 1000}));
  CHECK_FALSE(cache_load(dir.path, CacheKey{76, "quadruple", kDefaultBound}));
  CHECK_FALSE(cache_load(dir.path, CacheKey{76, "kernel", kDefaultBound, kCacheVersion + 1}));

  // corrupt entries are ignored, then overwritten
  {
    std::ofstream f(cache_path(dir.path, key), std::ios::trunc);
    f << "{ not json";
  }
  CHECK_FALSE(cache_load(dir.path, key));
  cache_store(dir.path, key, k);
  CHECK(cache_load(dir.path, key));

  // cached lookups revalidate and return the same certificate
  const FeketeBundle b = fekete_compact(QuadDisc::from_discriminant(76));
  const auto first = certify_cached(b, Mode::TwoPlusFourCycle, kDefaultBound, dir.path);
  const auto second = certify_cached(b, Mode::TwoPlusFourCycle, kDefaultBound, dir.path);
  REQUIRE(first);
  REQUIRE(second);
  CHECK(*first == *second);
}

TEST_CASE("modes and family qualification") {
  for (Mode m : {Mode::Quadruple, Mode::Triple, Mode::TwoCycle, Mode::TwoPlusFourCycle}) {
    CHECK(parse_mode(mode_name(m)) == m);
  }
  CHECK(parse_mode("two-cycle") == Mode::TwoCycle);
  CHECK_THROWS_AS(parse_mode("sextuple"), InvalidInput);
  CHECK(mode_uses_trace(Mode::Triple));
  CHECK_FALSE(mode_uses_trace(Mode::Quadruple));

  CHECK(family_delta(Family::FourP, 11) == 44);
  CHECK(family_delta(Family::MinusThreeP, 13) == -39);
  CHECK(family_admits(Family::FourP, Mode::Triple, 11));
  CHECK_FALSE(family_admits(Family::FourP, Mode::Triple, 13));
  CHECK(family_admits(Family::MinusThreeP, Mode::TwoPlusFourCycle, 13));
  CHECK_FALSE(family_admits(Family::MinusThreeP, Mode::TwoPlusFourCycle, 17));
  CHECK_FALSE(family_admits(Family::FourP, Mode::TwoPlusFourCycle, 11));
}

TEST_CASE("table runs are deterministic and sorted") {
  TableSpec spec;
  spec.family = Family::FourP;
  spec.mode = Mode::Triple;
  spec.p_lo = 2;
  spec.p_hi = 60;
  spec.bound = 10000;
  spec.jobs = 1;
  const auto serial = run_table(spec);
  spec.jobs = 4;
  const auto parallel = run_table(spec);
  REQUIRE(serial.size() == parallel.size());
  REQUIRE_FALSE(serial.empty());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].p == parallel[i].p);
    CHECK(serial[i].cert == parallel[i].cert);
    if (i) CHECK(serial[i - 1].p < serial[i].p);
  }
  CHECK(serial[0].p == 11);
  REQUIRE(serial[0].cert);
  CHECK(slot_primes(*serial[0].cert) == std::vector<std::uint32_t>{3, 7, 43});

  auto body = [&](const std::vector<TableRow>& rows) {
    std::ostringstream s;
    write_table_csv(s, spec, rows);
    std::string text = s.str();
    return text.substr(text.find('\n') + 1);  // drop the timestamp line
  };
  CHECK(body(serial) == body(parallel));
  CHECK(body(serial).rfind("p,delta,q1,q2,q3,q4,group,ms\n11,44,3,7,43,,S_4,\n", 0) == 0);

  const Json j = table_to_json(spec, serial);
  CHECK(j["rows"].size() == serial.size());
}

TEST_CASE("published table parsing") {
  const ParsedTable ok = parse_file("fourp_quadruple.csv");
  CHECK(ok.errors.empty());
  REQUIRE(ok.rows.size() == 3);
  CHECK(ok.rows[0].line == 5);
  CHECK(ok.rows[0].primes == std::vector<std::uint32_t>{3, 31, 97, 647});

  const ParsedTable none = parse_file("fourp_quadruple_none.csv");
  REQUIRE(none.rows.size() == 1);
  CHECK(none.rows[0].none);
  CHECK(none.rows[0].bound == 100000);

  const ParsedTable bad = parse_file("malformed.csv");
  REQUIRE(bad.errors.size() == 3);
  CHECK(bad.errors[0].line == 4);
  CHECK(bad.errors[1].line == 5);
  CHECK(bad.errors[2].line == 6);

  std::istringstream no_header("11,44,triple,3,7,43,,\n");
  CHECK_FALSE(parse_published_table(no_header).errors.empty());
}

TEST_CASE("row verification") {
  const ParsedTable t = parse_file("fourp_triple.csv");
  for (const RowCheck& c : verify_rows(t.rows, true, 2)) {
    CHECK_MESSAGE(c.ok, "p=" << c.row.p);
    REQUIRE(c.reproduced);
    CHECK(*c.reproduced);
  }

  const ParsedTable corrupt = parse_file("corrupted.csv");
  REQUIRE(corrupt.rows.size() == 1);
  const RowCheck bad = verify_row(corrupt.rows[0]);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.problems.empty());

  PublishedRow wrong_delta = t.rows[0];
  wrong_delta.delta = 45;
  CHECK_FALSE(verify_row(wrong_delta).ok);

  PublishedRow composite = t.rows[0];
  composite.primes[2] = 45;
  CHECK_FALSE(verify_row(composite).ok);
}

TEST_CASE("CLI: construction commands") {
  auto r = cli({"construct", "44"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["f_text"] == "x^8 - x^7 + 2*x^6 + 3*x^4 + 2*x^2 - x + 1");

  r = cli({"compact", "44", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "x^8 - x^7 + 2*x^6 + 3*x^4 + 2*x^2 - x + 1\n");
  r = cli({"trace", "-15", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("x^3") == 0);

  r = cli({"mults", "92"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["agree"] == true);

  r = cli({"factor-mod", "227", "--delta", "76", "--which", "f", "--factors"});
  CHECK(r.code == kExitOk);
  const Json fj = Json::parse(r.out);
  CHECK(fj["text"] == "{2:1, 4:1, 5:2}");
  CHECK(fj["factors"].size() == 4);

  r = cli({"factor-mod", "7", "--poly", "x^4 - x^3 - 2*x^2 + 3*x + 1"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["text"] == "{1:1, 3:1}");
}

TEST_CASE("CLI: exit codes") {
  CHECK(cli({"construct", "20"}).code == kExitInvalidInput);  // not fundamental
  CHECK(cli({"construct", "abc"}).code == kExitInvalidInput);
  CHECK(cli({"certify", "44", "--mode", "sextuple"}).code == kExitInvalidInput);
  CHECK(cli({"factor-mod", "9", "--poly", "x^2 + 1"}).code == kExitInvalidInput);
  CHECK(cli({"factor-mod", "5", "--poly", "5*x^2 + 1"}).code == kExitInvalidInput);
  CHECK(cli({"factor-mod", "5"}).code == kExitInvalidInput);
  CHECK(cli({"table", "--family", "8"}).code == kExitInvalidInput);
  CHECK(cli({"bogus"}).code == kExitInvalidInput);
  CHECK(cli({"verify-table", "/nonexistent/table.csv"}).code == kExitInvalidInput);

  auto r = cli({"certify", "76", "--mode", "quadruple", "--bound", "2000"});
  CHECK(r.code == kExitNotFound);
  CHECK(Json::parse(r.out)["certificate"].is_null());

  r = cli({"certify", "-15", "--mode", "kernel"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["witnesses"][0]["q"] == 5);

  r = cli({"verify-table", data_file("malformed.csv")});
  CHECK(r.code == kExitInvalidInput);
  CHECK(r.err.find("malformed.csv:4:") != std::string::npos);
  CHECK(r.err.find("malformed.csv:6:") != std::string::npos);

  r = cli({"verify-table", data_file("corrupted.csv")});
  CHECK(r.code == kExitVerificationFailure);
  CHECK(r.out.find("0/1 rows verified") != std::string::npos);

  r = cli({"verify-table", data_file("minus3p_kernel.csv"), "--check-minimal"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("4/4 rows verified") != std::string::npos);
}

TEST_CASE("CLI: table output to a file") {
  TempDir dir;
  const std::string path = (dir.path / "t.csv").string();
  auto r = cli({"table", "--family", "-3p", "--mode", "kernel", "--from", "5", "--to", "40", "--format", "csv",
                "--out", path, "--cache-dir", (dir.path / "cache").string()});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().rfind("# generated ", 0) == 0);
  CHECK(text.str().find("\n5,-15,5,,,,ker(Σ') ⋊ S_3,\n") != std::string::npos);
  CHECK(text.str().find("\n13,-39,47,") != std::string::npos);
  CHECK(text.str().find("\n37,-111,149,") != std::string::npos);
  CHECK(fs::exists(dir.path / "cache"));
}
