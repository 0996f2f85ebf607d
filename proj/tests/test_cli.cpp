#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using qshapo::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qshapo-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("theta output formats") {
  ::setenv("QSHAPO_CACHE", (scratch() / "env").c_str(), 1);
  auto r = call({"theta", "--n", "2", "--method", "sum", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "f[1,2]f[2,3] + f[1,3]·h1\n");
  CHECK(call({"theta", "--n", "1", "--method", "sum"}).out == "f[1,2]\n");

  auto j = call({"theta", "--n", "3", "--method", "det", "--lambda", "1,0,-3", "--format", "json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["terms"].size() == 4);
  CHECK(doc["method"] == "det");

  // sum and det agree at a hyperplane weight, as text
  auto s = call({"theta", "--n", "3", "--method", "sum", "--lambda", "1,0,-3"});
  auto d = call({"theta", "--n", "3", "--method", "det", "--lambda", "1,0,-3"});
  CHECK(s.out == d.out);

  auto tex = call({"theta", "--n", "2", "--format", "latex"});
  CHECK(tex.out.find("\\begin{document}") != std::string::npos);

  auto w = call({"theta", "--n", "3", "--root", "2,4"});
  CHECK(w.out == "f[2,3]f[3,4] + f[2,4]·h2\n");
}

TEST_CASE("inductive and power methods") {
  auto a = call({"theta", "--n", "2", "--m", "2", "--method", "power", "--lambda", "1,-1", "--format", "json"});
  REQUIRE(a.code == 0);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["m"] == 2);
  // pi^0 normalization: the all-simple monomial carries 1
  bool found = false;
  for (const auto& t : doc["terms"])
    if (t["pbw"] == nlohmann::json::parse("[[1,2],[1,2],[2,3],[2,3]]")) {
      found = true;
      CHECK(t["coeff"] == "1");
    }
  CHECK(found);
  auto b = call({"theta", "--n", "3", "--method", "inductive", "--lambda", "2,0,-3", "--m", "2"});
  auto c = call({"theta", "--n", "3", "--method", "power", "--lambda", "2,0,-3", "--m", "2"});
  CHECK(b.code == 0);
  CHECK(b.out == c.out);
}

TEST_CASE("exit codes") {
  CHECK(call({"theta", "--n", "2", "--method", "det", "--lambda", "1,2,3"}).code == 2);
  CHECK(call({"theta", "--n", "2", "--method", "det", "--lambda", "1,x"}).code == 2);
  CHECK(call({"theta", "--n", "2", "--method", "inductive"}).code == 2);
  // r = 0 at the only step
  auto r0 = call({"theta", "--n", "2", "--method", "inductive", "--lambda", "0,-1"});
  CHECK(r0.code == 2);
  CHECK(r0.err.find("r = 0") != std::string::npos);
  CHECK(call({"theta", "--n", "2", "--method", "power", "--m", "2", "--lambda", "1,0"}).code == 2);
  CHECK(call({"verify", "--suite", "nope", "--n", "2"}).code == 2);
  CHECK(call({}).code == 2);

  auto cap = call({"--cap", "3", "theta", "--n", "3", "--method", "power", "--m", "2", "--lambda", "2,0,-3"});
  CHECK(cap.code == 3);
  CHECK(cap.err.find("needed cap 6") != std::string::npos);
  qshapo::set_cap_limit(64);

  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify reports") {
  auto h = call({"verify", "--suite", "hwv", "--n", "3", "--m", "1", "--mode", "symbolic"});
  CHECK(h.code == 0);
  auto doc = nlohmann::json::parse(h.out);
  CHECK(doc["failed"] == 0);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("check_name"));
    CHECK(c["status"] == "pass");
    CHECK(c.contains("witness"));
  }
  CHECK(call({"verify", "--suite", "section2", "--n", "4"}).code == 0);
  CHECK(call({"verify", "--suite", "index-sums", "--n", "3"}).code == 0);
  CHECK(call({"verify", "--suite", "shift", "--n", "2", "--p", "2"}).code == 0);
  CHECK(call({"verify", "--suite", "powers", "--n", "2", "--m", "2", "--lambda", "1,-1"}).code == 0);
  CHECK(call({"verify", "--suite", "hwv", "--n", "2", "--mode", "sampled", "--samples", "3", "--seed", "4"}).code == 0);
  CHECK(call({"verify", "--suite", "doot", "--n", "3", "--p", "2"}).code == 0);

  // off the hyperplane the e_N check fails and the command exits 1
  auto off = call({"verify", "--suite", "hwv", "--n", "2", "--lambda", "1,1"});
  CHECK(off.code == 1);
  auto od = nlohmann::json::parse(off.out);
  CHECK(od["failed"] == 1);

  // identical configuration, identical bytes
  auto a = call({"verify", "--suite", "inductive", "--n", "3", "--samples", "4", "--seed", "9"});
  auto b = call({"verify", "--suite", "inductive", "--n", "3", "--samples", "4", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("rewrite system cache") {
  ::unsetenv("QSHAPO_CACHE");
  fs::path dir = scratch() / "cache";
  std::string d = dir.string();
  auto first = call({"--cache-dir", d, "cache", "--n", "3"});
  CHECK(first.code == 0);
  CHECK(first.out.rfind("built, 7 rules, cached", 0) == 0);
  auto second = call({"--cache-dir", d, "cache", "--n", "3"});
  CHECK(second.out.rfind("loaded from cache", 0) == 0);
  CHECK(call({"--cache-dir", d, "cache", "--n", "3", "--cap", "4"}).out.rfind("built", 0) == 0);
  CHECK(call({"--cache-dir", d, "cache", "--n", "3", "--cap", "9"}).out.rfind("built", 0) == 0);

  // corrupt file: warning, rebuild, exit 0
  fs::path f = dir / "serre-N3-cap8.txt";
  { std::ofstream(f) << "qshapo-rewrite-system 1\nrank 3\ncap 8\nrules 7\nrule"; }
  auto bad = call({"--cache-dir", d, "cache", "--n", "3"});
  CHECK(bad.code == 0);
  CHECK(bad.err.find("corrupt") != std::string::npos);
  CHECK(bad.out.rfind("rebuilt", 0) == 0);
  CHECK(call({"--cache-dir", d, "cache", "--n", "3"}).out.rfind("loaded", 0) == 0);

  // another format version is rebuilt without a warning
  { std::ofstream(f) << "qshapo-rewrite-system 999\n"; }
  auto old = call({"--cache-dir", d, "cache", "--n", "3"});
  CHECK(old.err.empty());
  CHECK(old.out.rfind("rebuilt", 0) == 0);

  // the cached system is the one the library builds
  auto loaded = qshapo::cli::load_or_build(dir, 3, 8, std::cerr);
  CHECK(loaded.status == "loaded");
  CHECK(loaded.system.serialize() == qshapo::build_serre_system(3, 8).serialize());

  // QSHAPO_CACHE is used when no flag is given
  ::setenv("QSHAPO_CACHE", (scratch() / "env2").c_str(), 1);
  CHECK(qshapo::cli::default_cache_dir() == scratch() / "env2");
  call({"cache", "--n", "2"});
  CHECK(fs::exists(scratch() / "env2" / "serre-N2-cap8.txt"));
  // and it wins over --cache-dir
  CHECK(qshapo::cli::resolve_cache_dir(d) == scratch() / "env2");
  call({"--cache-dir", d, "cache", "--n", "1"});
  CHECK(fs::exists(scratch() / "env2" / "serre-N1-cap8.txt"));
  CHECK(!fs::exists(dir / "serre-N1-cap8.txt"));
  ::unsetenv("QSHAPO_CACHE");
  CHECK(qshapo::cli::resolve_cache_dir(d) == dir);
}
