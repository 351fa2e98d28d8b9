// Drives the installed command-line surface end to end: flags, exit codes,
// output formats, byte determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ellmean/special.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("ellmean-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = scratch_dir() / "stdout.txt";
  const std::string cmd =
      std::string(ELLMEAN_CLI) + " " + args + " > " + out_file.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  for (std::string line; std::getline(ss, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("eval prints full-precision values") {
  const RunResult r = run_cli("eval --r 0 --target E,K");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "E 1.5707963267948966");
  CHECK(lines[1] == "K 1.5707963267948966");
}

TEST_CASE("eval at r = 1 reports the A5 limit and its signed error") {
  const RunResult r = run_cli("eval --r 1 --target A5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("A5 0.6363636363636364") == 0);
  CHECK(r.out.find("signed_error -0.000256136") != std::string::npos);
}

TEST_CASE("eval output matches the AGM oracle") {
  const RunResult r = run_cli("eval --r 0.5 --target E");
  CHECK(r.exit_code == 0);
  const std::string value = lines_of(r.out)[0].substr(2);
  const double e = std::stod(value);
  CHECK(std::fabs(e - ellmean::ellip_e_agm(ellmean::Modulus::from_r(0.5))) <= 1e-12);
}

TEST_CASE("eval domain and flag errors exit 2") {
  CHECK(run_cli("eval --r 2 --target E").exit_code == 2);
  CHECK(run_cli("eval --r 0.5 --target Q9").exit_code == 2);
  CHECK(run_cli("eval --r 0.5").exit_code == 2);          // missing --target
  CHECK(run_cli("eval --bogus 1").exit_code == 2);
  CHECK(run_cli("eval --r 0.5 --target S:2.4").exit_code == 2);  // p > 9/4
  CHECK(run_cli("eval --r 0.5 --target S:abc").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("table emits a deterministic CSV with summary rows") {
  const fs::path out1 = scratch_dir() / "t1.csv";
  const fs::path out2 = scratch_dir() / "t2.csv";
  CHECK(run_cli("table --grid 2 --ids A1 --out " + out1.string()).exit_code == 0);
  CHECK(run_cli("table --grid 2 --ids A1 --out " + out2.string()).exit_code == 0);
  const std::string csv1 = slurp(out1);
  CHECK(csv1 == slurp(out2));  // byte determinism
  const auto lines = lines_of(csv1);
  REQUIRE(lines.size() == 7);  // header + 2 data rows + 4 summary rows
  CHECK(lines[0] == "r,rprime,two_over_pi_E,A1_value,A1_error");
  CHECK(lines[1].substr(0, 4) == "0,1,");
  CHECK(lines[2].substr(0, 4) == "1,0,");
  CHECK(lines[3].substr(0, 14) == "max_abs_error,");
  CHECK(lines[4].substr(0, 9) == "argmax_r,");
  CHECK(lines[5].substr(0, 7) == "fit_n0,");
  CHECK(lines[6].substr(0, 8) == "fit_eps,");
}

TEST_CASE("table max errors land on the closed forms") {
  const fs::path out = scratch_dir() / "t3.csv";
  CHECK(run_cli("table --grid 1001 --ids A5,A8 --out " + out.string()).exit_code == 0);
  const auto lines = lines_of(slurp(out));
  std::string max_row;
  for (const auto& l : lines)
    if (l.rfind("max_abs_error,", 0) == 0) max_row = l;
  REQUIRE(!max_row.empty());
  std::stringstream ss(max_row);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  // columns: label,rprime,two_over_pi_E,A5_value,A5_error,A8_value,A8_error
  const double max5 = std::stod(fields[3]);
  const double max8 = std::stod(fields[5]);
  CHECK(max5 == doctest::Approx(ellmean::two_over_pi - 7.0 / 11.0).epsilon(1e-9));
  CHECK(max8 == doctest::Approx(16.0 / 25.0 - ellmean::two_over_pi).epsilon(1e-9));
}

TEST_CASE("table I/O failure exits 3") {
  CHECK(run_cli("table --grid 2 --ids A1 --out /nonexistent-dir/x.csv").exit_code == 3);
}

TEST_CASE("scan-p classifies the family directions") {
  const fs::path out = scratch_dir() / "scan.csv";
  const RunResult r =
      run_cli("scan-p --lo 1.75 --hi 2.25 --steps 3 --grid 64 --out " + out.string());
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(slurp(out));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "p,direction,max_violation,sign_pattern,expected,agrees");
  CHECK(lines[1].rfind("1.75,increasing,", 0) == 0);
  CHECK(lines[1].find("all_positive,increasing,yes") != std::string::npos);
  CHECK(lines[2].rfind("2,decreasing,", 0) == 0);
  CHECK(lines[2].find("all_negative,decreasing,yes") != std::string::npos);
  CHECK(lines[3].rfind("2.25,decreasing,", 0) == 0);

  // the gap interval (7/4, 2) is reported without an expected direction
  const fs::path out2 = scratch_dir() / "scan2.csv";
  CHECK(run_cli("scan-p --lo 1.9 --hi 1.9 --steps 1 --grid 64 --out " + out2.string())
            .exit_code == 0);
  CHECK(lines_of(slurp(out2))[1].find("unclassified,") != std::string::npos);

  CHECK(run_cli("scan-p --lo 1 --hi 2.3 --steps 2 --grid 64 --out " + out.string())
            .exit_code == 2);
}

TEST_CASE("conjecture explorer") {
  const fs::path out = scratch_dir() / "conj.csv";
  const RunResult r = run_cli("conjecture --grid 120 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p0 1.7631350") != std::string::npos);
  CHECK(r.out.find("pointwise_inequality holds") != std::string::npos);
  CHECK(r.out.find("unimodal yes") != std::string::npos);
  const auto lines = lines_of(slurp(out));
  CHECK(lines[0] == "r,H");
  CHECK(lines.size() == 121);
}

TEST_CASE("verify reports the documented catalog defect and exits 1") {
  const RunResult r = run_cli("verify --level fast");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL leading_order_fit_A4") != std::string::npos);
  CHECK(r.out.find("failing checks:") != std::string::npos);
  // everything else passes at the fast level
  const auto lines = lines_of(r.out);
  int fails = 0;
  for (const auto& l : lines)
    if (l.rfind("FAIL ", 0) == 0) ++fails;
  CHECK(fails == 1);
}
