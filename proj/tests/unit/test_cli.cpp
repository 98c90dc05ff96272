#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = vlp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "vlp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

const std::string kSqrtLog = "q(t)=sqrt(ln(1/t)) on (0, exp(-1)) dec";
const std::string kSqrtLog2 = "p(t)=2*sqrt(ln(1/t)) on (0, exp(-1)) dec";

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == vlp::cli::usage);
  CHECK(invoke({"bogus"}).code == vlp::cli::usage);
  CHECK(invoke({"norm", "f(t)=1 on (0,1", "p(t)=2 on (0,1)"}).code == vlp::cli::usage);
  CHECK(invoke({"classify-left-infty", "p(t)=(2+sin(1/t))*ln(e/t)^0.9 on (0,1)"}).code == vlp::cli::indeterminate);
  const auto pre = invoke({"witness", "p(t)=3 on (0,1)", "q(t)=2 on (0,1)"});
  CHECK(pre.code == vlp::cli::precondition);
  CHECK(pre.err.find("ZERO") != std::string::npos);
  CHECK(invoke({"examples", "no-such-fixture"}).code == vlp::cli::precondition);
}

TEST_CASE("norm prints ten decimals") {
  const auto r = invoke({"norm", "f(t)=1 on (0,1)", "p(t)=2 on (0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.0000000000\n");
}

TEST_CASE("pair reports") {
  auto r = invoke({"classify-pair", kSqrtLog2, kSqrtLog});
  CHECK(r.code == 0);
  CHECK(r.out.find("DSS: true (") != std::string::npos);

  r = invoke({"classify-pair", "p(t)=2 on (0,1)", "q(t)=2 on (0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no DSS question: equality set has full measure; inclusion is the identity") != std::string::npos);
}

TEST_CASE("evidence csv round trip") {
  const auto r = invoke({"--csv", "classify-pair", "p(t)=2/t on (0,1) dec", "q(t)=1/t on (0,1) dec"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "limit,offset,x,g_star,log_value");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == 5);
    if (cells[0] != "\"(p-q)/(pq)\"") continue;
    const double offset = std::stod(cells[1]), x = std::stod(cells[2]);
    const double g = std::stod(cells[3]), log_value = std::stod(cells[4]);
    CHECK(offset + x == doctest::Approx(1.0));
    CHECK(g == doctest::Approx(offset / 2));
    CHECK(log_value == doctest::Approx(g * std::log(offset)));
    ++rows;
  }
  CHECK(rows >= 8);
}

TEST_CASE("fixture table") {
  const auto r = invoke({"examples", "log-power/left"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4/4 fixtures pass") != std::string::npos);
  std::size_t rows = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("log-power/left/", 0) == 0) {
      CHECK(line.find(" pass ") != std::string::npos);
      ++rows;
    }
  CHECK(rows == 4);
}

TEST_CASE("output file") {
  const fs::path out = scratch("norm.txt");
  fs::remove(out);
  const auto r = invoke({"--out", out.string(), "norm", "f(t)=t on (0,1) inc", "p(t)=3 on (0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  double v = 0.0;
  in >> v;
  CHECK(v == doctest::Approx(std::pow(4.0, -1.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("config from the environment") {
  const fs::path cfg = scratch("defaults.ini");
  write(cfg, "witness-n = 2\n");
  setenv("VLP_CONFIG", cfg.c_str(), 1);
  const auto r = invoke({"witness", "p(t)=2/t on (0,1) dec", "q(t)=1/t on (0,1) dec", "--trials", "3"});
  unsetenv("VLP_CONFIG");
  CHECK(r.code == 0);
  CHECK(r.out.find(", 2 elements,") != std::string::npos);
}

TEST_CASE("exponent documents from files") {
  const fs::path p = scratch("p.spec"), q = scratch("q.spec");
  write(p, "name = \"p\"\ndomain = [0, 1]\n[[piece]]\nexpr = \"3\"\n");
  write(q, "name = \"q\"\ndomain = [0, 1]\n[[piece]]\non = [0, 0.5]\nexpr = \"2\"\nmonotone = \"const\"\n"
           "[[piece]]\non = [0.5, 1]\nexpr = \"2 + (t - 0.5)\"\nmonotone = \"inc\"\n");
  const auto r = invoke({"classify-pair", p.string(), q.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("DSS: true (") != std::string::npos);

  write(q, "domain = [0, 1]\n[[piece]]\nexpr = \"2 +\"\n");
  CHECK(invoke({"classify-pair", p.string(), q.string()}).code == vlp::cli::usage);
}
