// Integration tests driving the built CLI binary. The binary path arrives in
// the OBAV_CLI environment variable (wired in CMake).

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "obav/csv.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("OBAV_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("obav_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

int run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  REQUIRE(run("") == 2);
  REQUIRE(run("simulate --mu 2 --epsilon 3 --paths 0 --seed 1") == 2);
  REQUIRE(run("simulate --mu 2 --epsilon 3 --paths 10 --seed 1 --quantity bogus") == 2);
  REQUIRE(run("exact --target nonsense") == 2);
  REQUIRE(run("exact --target t1") == 2);  // missing --mu
}

TEST_CASE("simulate writes a distribution and an identical rerun") {
  TempDir a, b;
  const std::string flags =
      "simulate --mu 2 --epsilon 3 --paths 20000 --seed 7 --quantity full --threads 2 --out ";
  REQUIRE(run(flags + a.path.string()) == 0);
  REQUIRE(run(flags + b.path.string()) == 0);
  const std::string csv_a = slurp(a.path / "distribution.csv");
  REQUIRE(!csv_a.empty());
  REQUIRE(csv_a == slurp(b.path / "distribution.csv"));
  REQUIRE(csv_a.rfind("value,count,p_hat,ci_low,ci_high", 0) == 0);

  // Collision is refused without --force, allowed with it.
  REQUIRE(run(flags + a.path.string()) == 3);
  REQUIRE(run(flags + a.path.string() + " --force") == 0);
}

TEST_CASE("manifest round-trip reproduces identical digests") {
  TempDir a, b;
  REQUIRE(run("simulate --mu 1 --epsilon 2 --paths 30000 --seed 99 --quantity simplified --out " +
              a.path.string()) == 0);
  REQUIRE(run("simulate --from-manifest " + (a.path / "manifest.json").string() + " --out " +
              b.path.string()) == 0);
  REQUIRE(obav::file_digest(a.path / "distribution.csv") ==
          obav::file_digest(b.path / "distribution.csv"));
}

TEST_CASE("exact t1 emits the table row") {
  TempDir d;
  REQUIRE(run("exact --target t1 --mu 3 --order 10 --out " + d.path.string()) == 0);
  const std::string csv = slurp(d.path / "t1.csv");
  // Row n=7 carries 5/128.
  REQUIRE(csv.find("7,5,128") != std::string::npos);
}

TEST_CASE("exact q and moments") {
  TempDir d;
  REQUIRE(run("exact --target q --mu 5 --epsilon 9 --out " + d.path.string()) == 0);
  REQUIRE(slurp(d.path / "q.csv").find("5,9,63,256") != std::string::npos);

  TempDir m;
  REQUIRE(run("exact --target moments --epsilon 1 --out " + m.path.string()) == 0);
  const std::string csv = slurp(m.path / "moments.csv");
  REQUIRE(csv.find("mean,1,1") != std::string::npos);
  REQUIRE(csv.find("variance,2,1") != std::string::npos);
}

TEST_CASE("limit transforms and hyperbolic table") {
  TempDir d;
  REQUIRE(run("limit --target simplified --lambda-grid 1 --epsilon 1 --out " + d.path.string()) ==
          0);
  const std::string csv = slurp(d.path / "limit_simplified.csv");
  const double value = std::stod(csv.substr(csv.rfind(',') + 1));
  REQUIRE(value == Catch::Approx(0.537192).margin(1e-5));

  TempDir h;
  REQUIRE(run("limit --target hyperbolic --mu 1 --lambda-grid 0.5 1 2 --out " + h.path.string()) ==
          0);
  std::istringstream is(slurp(h.path / "limit_hyperbolic.csv"));
  std::string line;
  std::getline(is, line);  // header
  int rows = 0;
  while (std::getline(is, line)) {
    const auto pos = line.rfind(',');
    REQUIRE(std::stod(line.substr(pos + 1)) < 1e-12);
    ++rows;
  }
  REQUIRE(rows == 3);
}

TEST_CASE("limit convergence study emits a fitted order in range") {
  TempDir d;
  REQUIRE(run("limit --target converge-simplified --epsilon 1 --lambda-grid 1 "
              "--n-grid 100 1000 10000 --out " +
              d.path.string()) == 0);
  std::istringstream is(slurp(d.path / "limit_converge-simplified.csv"));
  std::string line;
  std::getline(is, line);
  double fitted = 0;
  while (std::getline(is, line)) fitted = std::stod(line.substr(line.rfind(',') + 1));
  REQUIRE(fitted > 0.35);
  REQUIRE(fitted < 0.65);
}

TEST_CASE("verify quick tables suite passes") {
  REQUIRE(run("verify --suite tables --budget quick") == 0);
}
