#include "refsev/chrecursion.hpp"
#include "refsev/cli.hpp"
#include "refsev/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace refsev;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("Laurent JSON round trip") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int n = 0; n < 100; ++n) {
    std::vector<LaurentPoly::Term> terms;
    for (int k = 0; k < 5; ++k) terms.emplace_back(e(rng), BigInt(e(rng)) * BigInt("123456789012345678901234567890"));
    const LaurentPoly p = LaurentPoly::from_terms(terms);
    CHECK(laurent_from_json(to_json(p)) == p);
    CHECK(laurent_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
  }
  CHECK(to_json(LaurentPoly::y_pow(-1) + 10 + LaurentPoly::y_pow(1)).dump() == R"({"-2":"1","0":"10","2":"1"})");
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"x":"1"})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"1":2})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse("[1]")), std::invalid_argument);
}

TEST_CASE("cache file round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "refsev-test-cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "memo.json").string();
  CHECK(load_cache(path).empty());
  CHRecursion a;
  a.severi(Surface::p2(4), 2);
  save_cache(path, a.export_records());
  const auto records = load_cache(path);
  CHECK(records.size() == a.cache_size());
  CHRecursion b;
  b.import_records(records);
  CHECK(b.severi(Surface::p2(4), 2) == a.severi(Surface::p2(4), 2));
  {
    std::ofstream bad(path);
    bad << R"({"schema":"other","version":1,"records":[]})";
  }
  CHECK_THROWS_AS(load_cache(path), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("severi command") {
  Result r = run({"severi", "--surface", "p2", "--d", "4", "--delta", "1", "--y", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "27\n");
  r = run({"severi", "--surface", "p2", "--d", "3", "--delta", "1"});
  CHECK(r.out == "y^-1 + 10 + y\n");
  r = run({"severi", "--surface", "p2", "--d", "3", "--delta", "1", "--json"});
  CHECK(r.out == "{\"-2\":\"1\",\"0\":\"10\",\"2\":\"1\"}\n");
  r = run({"severi", "--d", "3", "--delta", "1", "--json", "--record"});
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("engine") == "ch");
  CHECK(rec.at("request").at("delta") == 1);
  CHECK(laurent_from_json(rec.at("result")) == severi(Surface::p2(3), 1));
  for (const char* engine : {"ch", "template", "floor", "gf"}) {
    r = run({"severi", "--d", "5", "--delta", "2", "--engine", engine});
    CHECK(r.status == 0);
    CHECK(r.out == to_string(severi(Surface::p2(5), 2)) + "\n");
  }
}

TEST_CASE("text and JSON outputs agree") {
  const std::vector<std::vector<std::string>> requests{
      {"severi", "--d", "5", "--delta", "3"},
      {"severi", "--surface", "hirzebruch", "--m", "1", "--c", "2", "--d", "3", "--delta", "2"},
      {"relative", "--d", "3", "--alpha", "1", "--beta", "0,1", "--delta", "0"},
      {"irreducible", "--d", "4", "--delta", "3"}};
  for (const auto& req : requests) {
    Result text = run(req);
    auto with_json = req;
    with_json.push_back("--json");
    Result js = run(with_json);
    CHECK(text.status == 0);
    CHECK(js.status == 0);
    CHECK(to_string(laurent_from_json(nlohmann::json::parse(js.out))) + "\n" == text.out);
  }
}

TEST_CASE("evaluation flag matches the symbolic output") {
  const std::vector<std::vector<std::string>> requests{
      {"severi", "--d", "5", "--delta", "3"},
      {"severi", "--surface", "p11m", "--m", "3", "--d", "3", "--delta", "2"},
      {"relative", "--d", "4", "--alpha", "0,1", "--beta", "2", "--delta", "1"},
      {"irreducible", "--d", "5", "--delta", "4"}};
  for (const auto& req : requests) {
    const LaurentPoly p = laurent_from_json(nlohmann::json::parse(run([&] {
                                                                       auto r = req;
                                                                       r.push_back("--json");
                                                                       return r;
                                                                     }())
                                                                      .out));
    auto at = [&](const char* y) {
      auto r = req;
      r.push_back("--y");
      r.push_back(y);
      return run(r).out;
    };
    CHECK(at("1") == p.sum_of_coefficients().str() + "\n");
    CHECK(at("-1") == eval_special(p, -1).str() + "\n");
  }
  Result w = run({"welschinger", "--d", "3", "--delta", "1"});
  CHECK(w.out == "8\n");
  Result np = run({"nodepoly", "--delta", "1", "--y", "1"});
  CHECK(np.out == "(3)*d^2 + (-6)*d + (3)\n");
}

TEST_CASE("listing commands") {
  Result t = run({"templates", "--delta", "2", "--json"});
  CHECK(t.status == 0);
  CHECK(nlohmann::json::parse(t.out).size() == 7);
  t = run({"templates", "--max-delta", "2"});
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 9);
  Result d = run({"diagrams", "--d", "4", "--delta", "2"});
  CHECK(d.status == 0);
  CHECK(d.out.find("d=4; edges=[(1,2,1),(2,3,2),(3,4,1),(3,4,1)]; s=[0,0,0,0]; cogenus=2; mult=y^-1 + 2 + y; nu=7") !=
        std::string::npos);
  CHECK(d.out.find("total=" + to_string(severi(Surface::p2(4), 2))) != std::string::npos);
  Result dj = run({"diagrams", "--d", "4", "--delta", "2", "--json"});
  CHECK(laurent_from_json(nlohmann::json::parse(dj.out).at("total")) == severi(Surface::p2(4), 2));
}

TEST_CASE("checks and cross-checks") {
  Result c = run({"crosscheck"});
  CHECK(c.status == 0);
  CHECK(c.out.find("DISAGREE") == std::string::npos);
  Result g = run({"gfcheck", "--d", "5", "--max-delta", "5"});
  CHECK(g.status == 0);
  CHECK(g.out.find("delta=5 agree") != std::string::npos);
  Result h = run({"crosscheck", "--surface", "hirzebruch", "--m", "1", "--c", "4", "--grid", "1..3", "--max-delta", "2"});
  CHECK(h.status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"severi", "--d", "x"}).status == 2);
  CHECK(run({"severi", "--delta", "1"}).status == 2);
  CHECK(run({"severi", "--surface", "cube", "--d", "2", "--delta", "1"}).status == 2);
  CHECK(run({"severi", "--d", "2", "--delta", "1", "--engine", "magic"}).status == 2);
  CHECK(run({"relative", "--d", "3", "--alpha", "1", "--beta", "1", "--delta", "0"}).status == 2);
  CHECK(run({"severi", "--d", "3", "--delta", "1", "--y", "2"}).status == 2);
  Result dom = run({"severi", "--surface", "hirzebruch", "--m", "1", "--c", "0", "--d", "2", "--delta", "2",
                    "--engine", "template"});
  CHECK(dom.status == 3);
  CHECK(dom.err.find("c + m >= 2*delta") != std::string::npos);
  CHECK(run({"severi", "--d", "2", "--delta", "6", "--engine", "gf"}).status == 3);
  CHECK(run({"irreducible", "--surface", "p11m", "--m", "2", "--d", "2", "--delta", "1"}).status == 3);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("output is deterministic and the cache directory is honoured") {
  const auto dir = std::filesystem::temp_directory_path() / "refsev-cli-cache";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> req{"severi", "--d", "6", "--delta", "4", "--cache-dir", dir.string()};
  Result a = run(req);
  CHECK(std::filesystem::exists(dir / "ch-memo.json"));
  Result b = run(req);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == to_string(severi(Surface::p2(6), 4)) + "\n");
  std::filesystem::remove_all(dir);
}
