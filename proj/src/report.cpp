#include "shiftbell/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "shiftbell/errors.hpp"

namespace shiftbell {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

double parse_real(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
}

std::uint64_t parse_uint(const std::string& s, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

std::optional<double> parse_optional(const std::string& s, std::size_t line_no) {
  if (s.empty()) return std::nullopt;
  return parse_real(s, line_no);
}

std::string optional_cell(std::optional<double> v) { return v ? format_real(*v) : std::string(); }

// Plot geometry.
constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr int kCurveSamples = 401;

double px(double theta) { return kLeft + theta / kPi * (kWidth - kLeft - kRight); }
double py(double e) { return kTop + (1.0 - e) / 2.0 * (kHeight - kTop - kBottom); }

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

template <class Fn>
void polyline(std::ostream& out, const std::string& id, const std::string& colour, const std::string& dash,
              int samples, Fn&& point) {
  out << "  <polyline id=\"" << id << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"";
  if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
  out << " points=\"";
  for (int i = 0; i < samples; ++i) {
    const auto [t, e] = point(i);
    if (i > 0) out << ' ';
    out << fixed2(px(t)) << ',' << fixed2(py(e));
  }
  out << "\"/>\n";
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<CurveCsvRow> curve_rows(const CurveSweep& sweep) {
  std::vector<CurveCsvRow> rows;
  rows.reserve(sweep.grid.size());
  for (std::size_t j = 0; j < sweep.grid.size(); ++j) {
    const auto& e = sweep.estimates[j];
    CurveCsvRow row{.theta = sweep.grid[j].value(),
                    .e_mc = e.mean,
                    .std_error = e.std_error,
                    .n = e.n,
                    .protocol = std::string(sweep.protocol.name()),
                    .delta = sweep.protocol.delta(),
                    .seed = sweep.seed};
    if (sweep.analytic_reference) row.e_analytic = (*sweep.analytic_reference)(sweep.grid[j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_curve_csv(const CurveSweep& sweep, std::ostream& out) {
  out << kCurveCsvHeader << '\n';
  for (const auto& r : curve_rows(sweep)) {
    out << format_real(r.theta) << ',' << optional_cell(r.e_analytic) << ',' << format_real(r.e_mc) << ','
        << format_real(r.std_error) << ',' << r.n << ',' << r.protocol << ',' << optional_cell(r.delta) << ','
        << r.seed << '\n';
  }
}

std::vector<CurveCsvRow> read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCurveCsvHeader) throw UsageError("csv: missing or unexpected header");
  std::vector<CurveCsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw UsageError("csv line " + std::to_string(line_no) + ": expected 8 fields");
    rows.push_back({.theta = parse_real(f[0], line_no),
                    .e_analytic = parse_optional(f[1], line_no),
                    .e_mc = parse_real(f[2], line_no),
                    .std_error = parse_real(f[3], line_no),
                    .n = parse_uint(f[4], line_no),
                    .protocol = f[5],
                    .delta = parse_optional(f[6], line_no),
                    .seed = parse_uint(f[7], line_no)});
  }
  return rows;
}

double max_abs_deviation(const std::vector<CurveCsvRow>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) {
    if (!r.e_analytic) throw UsageError("csv row has no analytic value");
    worst = std::fmax(worst, std::fabs(r.e_mc - *r.e_analytic));
  }
  return worst;
}

std::string chsh_record(std::string_view protocol, const ChshResult& result, std::uint64_t seed) {
  std::string rec(protocol);
  rec += ',' + format_real(result.s) + ',' + format_real(result.abs_s) + ',' +
         std::string(to_string(result.classification)) + ',' + optional_cell(result.stderr_s) + ',' +
         std::to_string(seed);
  return rec;
}

void write_curve_svg(const CurveSweep& sweep, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // Axes and gridlines at E = -1, 0, 1 and theta = 0, pi/2, pi.
  for (double e : {-1.0, 0.0, 1.0}) {
    out << "  <line x1=\"" << fixed2(px(0)) << "\" y1=\"" << fixed2(py(e)) << "\" x2=\"" << fixed2(px(kPi))
        << "\" y2=\"" << fixed2(py(e)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << fixed2(kLeft - 10) << "\" y=\"" << fixed2(py(e) + 5)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"14\">" << fixed2(e) << "</text>\n";
  }
  const char* theta_labels[] = {"0", "&#960;/2", "&#960;"};
  for (int i = 0; i < 3; ++i) {
    const double t = 0.5 * kPi * i;
    out << "  <line x1=\"" << fixed2(px(t)) << "\" y1=\"" << fixed2(py(1)) << "\" x2=\"" << fixed2(px(t))
        << "\" y2=\"" << fixed2(py(-1)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << fixed2(px(t)) << "\" y=\"" << fixed2(py(-1) + 25)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << theta_labels[i]
        << "</text>\n";
  }
  out << "  <text x=\"" << fixed2(kWidth / 2) << "\" y=\"" << fixed2(kHeight - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">&#952;</text>\n";
  out << "  <text x=\"" << fixed2(kWidth / 2) << "\" y=\"25\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">E(&#952;), protocol "
      << sweep.protocol.name() << "</text>\n";

  const auto curve_point = [](const auto& law) {
    return [law](int i) {
      const double t = i + 1 == kCurveSamples ? kPi : i * kPi / (kCurveSamples - 1);
      return std::pair{t, law(SeparationAngle(t))};
    };
  };
  polyline(out, "quantum-reference", "#999999", "6,4", kCurveSamples, curve_point(quantum_correlation));
  if (sweep.analytic_reference) {
    const CorrelationLaw& law = *sweep.analytic_reference;
    polyline(out, "analytic", "#1f5fbf", "", kCurveSamples, curve_point(law));
  }
  polyline(out, "monte-carlo", "#d62728", "2,3", static_cast<int>(sweep.grid.size()), [&](int j) {
    return std::pair{sweep.grid[j].value(), sweep.estimates[j].mean};
  });
  out << "</svg>\n";
}

}  // namespace shiftbell
