#pragma once

// Flat-file output for curve sweeps: CSV data and SVG line plots.
//
// CSV header: theta,E_analytic,E_mc,stderr,n,protocol,delta,seed
// Reals use 17 significant digits, '.' decimal separator, '\n' endings.
// Empty E_analytic / delta cells mean "not applicable".

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shiftbell/bell.hpp"
#include "shiftbell/montecarlo.hpp"

namespace shiftbell {

inline constexpr std::string_view kCurveCsvHeader = "theta,E_analytic,E_mc,stderr,n,protocol,delta,seed";
inline constexpr std::string_view kChshCsvHeader = "protocol,s,abs_s,classification,stderr_s,seed";

struct CurveCsvRow {
  double theta = 0.0;
  std::optional<double> e_analytic;
  double e_mc = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
  std::string protocol;
  std::optional<double> delta;
  std::uint64_t seed = 0;
};

// Shortest round-trip form is not used; always 17 significant digits.
std::string format_real(double x);

std::vector<CurveCsvRow> curve_rows(const CurveSweep& sweep);
void write_curve_csv(const CurveSweep& sweep, std::ostream& out);
// Throws UsageError on a missing/wrong header or malformed row.
std::vector<CurveCsvRow> read_curve_csv(std::istream& in);
// max |E_mc - E_analytic| over rows; throws UsageError if any row lacks E_analytic.
double max_abs_deviation(const std::vector<CurveCsvRow>& rows);

// One line, no header.
std::string chsh_record(std::string_view protocol, const ChshResult& result, std::uint64_t seed);

// 800x500 SVG 1.1. One polyline per series: Monte Carlo estimates, the
// analytic law (when the protocol has one) and the -cos reference.
void write_curve_svg(const CurveSweep& sweep, std::ostream& out);

}  // namespace shiftbell
