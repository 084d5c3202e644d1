#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "shiftbell/analytics.hpp"
#include "shiftbell/cli.hpp"
#include "shiftbell/report.hpp"

using namespace shiftbell;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<CurveCsvRow> rows_of(const std::string& csv) {
  std::istringstream in(csv);
  return read_curve_csv(in);
}

// Fields of the machine-readable CHSH record (first output line).
std::vector<std::string> record_fields(const std::string& out) {
  std::istringstream in(out.substr(0, out.find('\n')));
  std::vector<std::string> f;
  for (std::string cell; std::getline(in, cell, ',');) f.push_back(cell);
  return f;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "shiftbell_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("curve: fixed shift pi/2") {
  const auto r = run({"curve", "--protocol", "fixed-shift", "--delta", "1.5707963", "--grid", "61", "--n", "100000",
                      "--seed", "42"});
  REQUIRE(r.code == 0);
  const auto rows = rows_of(r.out);
  REQUIRE(rows.size() == 61);
  for (const auto& row : rows) {
    CHECK(*row.e_analytic == fixed_shift_correlation(SeparationAngle(row.theta), 1.5707963));
    CHECK(row.seed == 42);
    CHECK(row.n == 100000);
  }
  CHECK(max_abs_deviation(rows) <= 0.02);
}

TEST_CASE("curve: two-share uses the averaged law") {
  const auto r = run({"curve", "--protocol", "two-share", "--grid", "61", "--n", "100000", "--seed", "7"});
  REQUIRE(r.code == 0);
  for (const auto& row : rows_of(r.out)) {
    CHECK(*row.e_analytic == averaged_shift_correlation(SeparationAngle(row.theta)));
  }
}

TEST_CASE("curve: plain protocol on three points") {
  const auto r = run({"curve", "--protocol", "plain", "--grid", "3", "--n", "1000", "--seed", "1"});
  REQUIRE(r.code == 0);
  const auto rows = rows_of(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(*rows[0].e_analytic == -1.0);
  CHECK(*rows[1].e_analytic == 0.0);
  CHECK(*rows[2].e_analytic == 1.0);
}

TEST_CASE("curve: files and formats") {
  const auto dir = scratch_dir();
  const auto csv = (dir / "curve.csv").string();
  const auto r = run({"curve", "--protocol", "random-shift", "--grid", "9", "--n", "2000", "--out", csv, "--format",
                      "both"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(csv));
  CHECK(std::filesystem::exists(dir / "curve.svg"));

  const auto svg_only = (dir / "only.svg").string();
  CHECK(run({"curve", "--protocol", "quantum", "--grid", "5", "--n", "100", "--out", svg_only, "--format", "svg"})
            .code == 0);
  std::ifstream in(svg_only);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("<?xml", 0) == 0);

  CHECK(run({"curve", "--protocol", "quantum", "--grid", "5", "--n", "100", "--format", "svg"}).code == kExitUsage);
  CHECK(run({"curve", "--protocol", "plain", "--grid", "5", "--n", "100", "--out", "/nonexistent/dir/x.csv"}).code ==
        kExitIo);
}

TEST_CASE("curve: usage errors exit 2") {
  CHECK(run({"curve", "--grid", "5"}).code == kExitUsage);
  CHECK(run({"curve", "--protocol", "fixed-shift", "--delta", "2.0"}).code == kExitUsage);
  CHECK(run({"curve", "--protocol", "fixed-shift"}).code == kExitUsage);
  CHECK(run({"curve", "--protocol", "plain", "--grid", "1"}).code == kExitUsage);
  CHECK(run({"curve", "--protocol", "plain", "--n", "0"}).code == kExitUsage);
  CHECK(run({"curve", "--protocol", "banana"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("chsh: fixed shift pi/2 is superquantum") {
  const auto r = run({"chsh", "--protocol", "fixed-shift", "--delta", "1.5707963", "--n", "1000000"});
  REQUIRE(r.code == 0);
  const auto f = record_fields(r.out);
  REQUIRE(f.size() == 6);
  CHECK(f[0] == "fixed-shift");
  CHECK(std::stod(f[2]) >= 3.99);
  CHECK(f[3] == "Superquantum");
  CHECK(f[5] == "0");
  CHECK(r.out.find("Tsirelson") != std::string::npos);
}

TEST_CASE("chsh: quantum reference near Tsirelson") {
  const auto r = run({"chsh", "--protocol", "quantum", "--n", "1000000"});
  REQUIRE(r.code == 0);
  CHECK(std::fabs(std::stod(record_fields(r.out)[2]) - 2.8284) <= 0.01);
}

TEST_CASE("chsh: plain protocol on the local bound") {
  const auto r = run({"chsh", "--protocol", "plain", "--n", "1000000"});
  REQUIRE(r.code == 0);
  const auto f = record_fields(r.out);
  CHECK(std::fabs(std::stod(f[2]) - 2.0) <= 0.01);
}

TEST_CASE("chsh: custom settings in degrees and CSV output") {
  const auto dir = scratch_dir();
  const auto out = (dir / "chsh.csv").string();
  const auto r = run({"chsh", "--protocol", "adaptive", "--k", "3", "--n", "1000", "--degrees", "--a", "90",
                      "--a-prime", "0", "--b", "45", "--b-prime", "135", "--out", out, "--seed", "9"});
  REQUIRE(r.code == 0);
  CHECK(record_fields(r.out)[2] == "4");
  std::ifstream in(out);
  std::string header, record;
  std::getline(in, header);
  std::getline(in, record);
  CHECK(header == "protocol,s,abs_s,classification,stderr_s,seed");
  CHECK(record == r.out.substr(0, r.out.find('\n')));
}

TEST_CASE("trial command") {
  SUBCASE("fixed shift") {
    const auto r = run({"trial", "--protocol", "fixed-shift", "--a", "0", "--b", "0", "--lambda",
                        format_real(kPi / 6), "--delta", "0"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("product: -1") != std::string::npos);
  }
  SUBCASE("two-share") {
    const auto r = run({"trial", "--protocol", "two-share", "--a", "0", "--b", "0", "--lambda", "30", "--lambda2",
                        "60", "--degrees"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("comm_bits (1): +1") != std::string::npos);
    CHECK(r.out.find("alpha: +1") != std::string::npos);
    CHECK(r.out.find("beta: -1") != std::string::npos);
  }
  SUBCASE("adaptive") {
    const auto r = run({"trial", "--protocol", "adaptive", "--k", "3", "--a", format_real(kHalfPi), "--b",
                        format_real(0.25 * kPi)});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("product: -1") != std::string::npos);
    CHECK(r.out.find("comm_bits (3): -1 +1 -1") != std::string::npos);
  }
  SUBCASE("random shift takes the per-trial delta") {
    const auto r = run({"trial", "--protocol", "random-shift", "--a", "0", "--b", "0", "--lambda", "1", "--delta",
                        "0.5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("delta: 0.5") != std::string::npos);
  }
  SUBCASE("quantum") {
    const auto r = run({"trial", "--protocol", "quantum", "--a", "0", "--b", "0", "--u", "0.1", "--v", "0.2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("product: -1") != std::string::npos);
  }
  SUBCASE("missing angles") {
    CHECK(run({"trial", "--protocol", "plain", "--a", "0", "--b", "0"}).code == kExitUsage);
    CHECK(run({"trial", "--protocol", "plain", "--a", "0"}).code == kExitUsage);
    CHECK(run({"trial", "--protocol", "two-share", "--a", "0", "--b", "0", "--lambda", "1"}).code == kExitUsage);
  }
}

TEST_CASE("verify command and its fault hooks") {
  const auto clean = run({"verify", "--n", "20000"});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("FAIL") == std::string::npos);

  const auto flipped = run({"verify", "--n", "20000", "--inject-bob-sign-flip"});
  CHECK(flipped.code == kExitVerifyFailed);
  const auto line_start = flipped.out.find("FAIL mc-fixed-shift-delta=0 ");
  REQUIRE(line_start != std::string::npos);
  const auto line = flipped.out.substr(line_start, flipped.out.find('\n', line_start) - line_start);
  CHECK(line.find("observed=2 ") != std::string::npos);
  CHECK(line.find("theta = 0)") != std::string::npos);
  // Protocols that do not use the fixed-shift path are untouched.
  CHECK(flipped.out.find("PASS mc-two-share") != std::string::npos);

  const auto h1 = run({"verify", "--n", "20000", "--inject-heaviside-one"});
  CHECK(h1.out.find("PASS step-form-equals-fixed-shift-at-pi/2") != std::string::npos);
  CHECK(h1.code == 0);
}
