#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ibc/reports/cli.hpp"

using namespace ibc::reports;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ibc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ibc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("eigs prints the analytic table") {
  const Run r = run({"eigs", "--family", "sobolev-min", "--count", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("j,alpha,lambda,beta\n1,0.86033358901937", 0) == 0);
  CHECK(r.out.find("1.35103388687837") != std::string::npos);

  const Run j = run({"eigs", "--family", "korobov", "--alpha", "1", "--beta", "1", "--count", "3", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto rows = nlohmann::json::parse(j.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row["lambda"].get<double>() == 1.0);
}

TEST_CASE("exit codes") {
  CHECK(run({"eigs", "--family", "gaussian"}).code == kExitInvalidArguments);
  CHECK(run({"eigs", "--family", "sobolev-min", "--count", "0"}).code == kExitInvalidArguments);
  CHECK(run({"eigs", "--family", "sobolev-min", "--count", "2000000"}).code == kExitResourceGuard);
  CHECK(run({"complexity", "--family", "sobolev-min", "--d", "2", "--eps", "1.5"}).code ==
        kExitInvalidArguments);
  CHECK(run({"oracle-eigs", "--family", "sobolev-min", "--points", "9000"}).code == kExitResourceGuard);
  CHECK(run({"no-such-command"}).code == kExitInvalidArguments);
  CHECK(run({}).code == kExitInvalidArguments);
  const Run bad = run({"eigs", "--family", "korobov", "--alpha", "0.3"});
  CHECK(bad.code == kExitInvalidArguments);
  CHECK(bad.err.rfind("ibc: ", 0) == 0);
}

TEST_CASE("complexity and classify") {
  const Run c = run({"complexity", "--family", "sobolev-min", "--d", "2", "--eps", "0.25", "--format", "json"});
  REQUIRE(c.code == kExitOk);
  const auto rows = nlohmann::json::parse(c.out);
  CHECK(rows[0]["count"] == 3);

  const Run k = run({"classify", "--family", "sobolev-min", "--format", "json"});
  REQUIRE(k.code == kExitOk);
  CHECK(k.out.find("qpt-not-pt") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags win") {
  const fs::path cfg = scratch("eigs.ini");
  {
    std::ofstream os(cfg);
    os << "family=sobolev-cosh\ncount=3\n";
  }
  const Run a = run({"eigs", "--config", cfg.string()});
  REQUIRE(a.code == kExitOk);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 4);
  CHECK(a.out.find("0.09199966835037") != std::string::npos);

  const Run b = run({"eigs", "--config", cfg.string(), "--count", "1"});
  REQUIRE(b.code == kExitOk);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 2);
}

TEST_CASE("density files are byte-identical across runs") {
  const fs::path first = scratch("first"), second = scratch("second");
  REQUIRE(run({"density", "--samples", "257", "--out", first.string()}).code == kExitOk);
  REQUIRE(run({"density", "--samples", "257", "--out", second.string()}).code == kExitOk);
  const std::string csv = slurp(first.string() + ".csv");
  CHECK(csv.rfind("x,g1\n", 0) == 0);
  CHECK(csv == slurp(second.string() + ".csv"));
  CHECK(slurp(first.string() + ".svg") == slurp(second.string() + ".svg"));
}

TEST_CASE("verify-thm1 on a random problem") {
  const Run r = run({"verify-thm1", "--m", "5", "--k", "3", "--n", "2", "--trials", "20", "--samples", "10"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("reproduce honours --only and --perturb") {
  const Run ok = run({"reproduce", "--only", "1", "--only", "3", "--format", "json"});
  REQUIRE(ok.code == kExitOk);
  const auto rows = nlohmann::json::parse(ok.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["criterion_id"] == 1);
  CHECK(rows[1]["pass"] == true);

  const Run bad = run({"reproduce", "--only", "3", "--perturb", "3"});
  CHECK(bad.code == kExitAcceptanceFailure);
}
