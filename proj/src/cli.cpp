#include "shiftbell/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "shiftbell/bell.hpp"
#include "shiftbell/errors.hpp"
#include "shiftbell/montecarlo.hpp"
#include "shiftbell/protocols.hpp"
#include "shiftbell/report.hpp"
#include "shiftbell/verify.hpp"

namespace shiftbell {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct CommonFlags {
  std::string protocol;
  std::optional<double> delta;
  std::optional<int> k_bits;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  bool degrees = false;

  double angle(double v) const { return degrees ? v * kPi / 180.0 : v; }
  std::optional<double> angle(std::optional<double> v) const {
    if (!v) return v;
    return angle(*v);
  }
  ProtocolSpec spec() const { return ProtocolSpec::parse(protocol, angle(delta), k_bits); }
  Parallelism par() const { return Parallelism{threads}; }
};

void add_protocol_flags(CLI::App* cmd, CommonFlags& f, bool with_n) {
  cmd->add_option("--protocol", f.protocol, "plain | fixed-shift | random-shift | two-share | adaptive | quantum")
      ->required();
  cmd->add_option("--delta", f.delta, "shift angle for fixed-shift, in [0, pi/2]");
  cmd->add_option("--k", f.k_bits, "bits per trial for adaptive");
  if (with_n) {
    cmd->add_option("--n", f.n, "trials per estimate")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "base seed");
    cmd->add_option("--threads", f.threads, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  }
  cmd->add_flag("--degrees", f.degrees, "read angles in degrees instead of radians");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void close_output(std::ofstream& file, const std::string& path) {
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string svg_path_for(const std::string& csv_path) {
  return std::filesystem::path(csv_path).replace_extension(".svg").string();
}

int cmd_curve(const CommonFlags& f, int grid, const std::string& out_path, const std::string& format,
              std::ostream& out) {
  const auto protocol = f.spec();
  const CurveSweep sweep = sweep_curve(protocol, grid, f.n, f.seed, f.par());
  const bool want_csv = format != "svg";
  const bool want_svg = format != "csv";
  if (want_svg && out_path.empty()) throw UsageError("--format " + format + " needs --out");

  if (want_csv) {
    if (out_path.empty()) {
      write_curve_csv(sweep, out);
    } else {
      auto file = open_output(out_path);
      write_curve_csv(sweep, file);
      close_output(file, out_path);
    }
  }
  if (want_svg) {
    const std::string path = format == "svg" ? out_path : svg_path_for(out_path);
    auto file = open_output(path);
    write_curve_svg(sweep, file);
    close_output(file, path);
  }
  return kExitOk;
}

struct SettingFlags {
  std::optional<double> a, a_prime, b, b_prime;
};

int cmd_chsh(const CommonFlags& f, const SettingFlags& sf, const std::string& out_path, std::ostream& out) {
  const auto protocol = f.spec();
  ChshSettings settings = ChshSettings::standard();
  if (sf.a) settings.a = PolarAngle(f.angle(*sf.a));
  if (sf.a_prime) settings.a_prime = PolarAngle(f.angle(*sf.a_prime));
  if (sf.b) settings.b = PolarAngle(f.angle(*sf.b));
  if (sf.b_prime) settings.b_prime = PolarAngle(f.angle(*sf.b_prime));

  const ChshResult r = chsh_sampled(protocol, settings, f.n, f.seed, f.par());
  const std::string record = chsh_record(protocol.name(), r, f.seed);
  out << record << '\n';
  out << "E(a,b) = " << format_real(r.e_ab) << ", E(a,b') = " << format_real(r.e_abp)
      << ", E(a',b) = " << format_real(r.e_apb) << ", E(a',b') = " << format_real(r.e_apbp) << '\n';
  out << "|S| = " << format_real(r.abs_s) << " +/- " << format_real(r.stderr_s.value_or(0.0)) << " -> "
      << to_string(r.classification) << " (local bound 2, Tsirelson bound " << format_real(kTsirelsonBound)
      << ", algebraic maximum 4)\n";
  if (const auto law = reference_law(protocol)) {
    try {
      out << "closed-form " << law->name() << ": |S| = " << format_real(chsh_analytic(*law, settings).abs_s) << '\n';
    } catch (const BoundaryAmbiguityError&) {
    }
  }
  if (!out_path.empty()) {
    auto file = open_output(out_path);
    file << kChshCsvHeader << '\n' << record << '\n';
    close_output(file, out_path);
  }
  return kExitOk;
}

std::string sign_text(Sign s) { return s.is_plus() ? "+1" : "-1"; }

struct TrialFlags {
  std::optional<double> a, b, lambda, lambda2, u, v;
};

int cmd_trial(const CommonFlags& f, const TrialFlags& t, std::ostream& out) {
  const auto need = [](const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError(std::string("trial needs ") + flag);
    return *v;
  };
  const PolarAngle a(f.angle(need(t.a, "--a")));
  const PolarAngle b(f.angle(need(t.b, "--b")));

  TrialRecord rec;
  if (f.protocol == "random-shift") {
    // --delta is this trial's shared shift draw.
    rec = run_trial_random_shift(a, b, PolarAngle(f.angle(need(t.lambda, "--lambda"))),
                                 f.angle(need(f.delta, "--delta")));
  } else {
    const auto protocol = f.spec();
    switch (protocol.kind()) {
      case ProtocolKind::PlainLhv:
        rec = run_trial_plain(a, b, PolarAngle(f.angle(need(t.lambda, "--lambda"))));
        break;
      case ProtocolKind::FixedShift:
        rec = run_trial_fixed(a, b, PolarAngle(f.angle(need(t.lambda, "--lambda"))), *protocol.delta());
        break;
      case ProtocolKind::TwoShare:
        rec = run_trial_twoshare(a, b, PolarAngle(f.angle(need(t.lambda, "--lambda"))),
                                 PolarAngle(f.angle(need(t.lambda2, "--lambda2"))));
        break;
      case ProtocolKind::AdaptiveK:
        rec = run_trial_adaptive(a, b, *protocol.k_bits(), PolarAngle(f.angle(t.lambda.value_or(0.0))));
        break;
      case ProtocolKind::QuantumReference:
        rec = run_trial_quantum(a, b, need(t.u, "--u"), need(t.v, "--v"));
        break;
      case ProtocolKind::RandomShift:
        break;
    }
  }

  out << "protocol: " << f.protocol << '\n';
  out << "a: " << format_real(rec.a.value()) << '\n';
  out << "b: " << format_real(rec.b.value()) << '\n';
  out << "theta: " << format_real(separation(rec.a, rec.b).value()) << '\n';
  out << "shares:";
  for (PolarAngle s : rec.shares) out << ' ' << format_real(s.value());
  out << '\n';
  if (rec.delta) out << "delta: " << format_real(*rec.delta) << '\n';
  out << "comm_bits (" << rec.comm_bits.size() << "):";
  for (Sign s : rec.comm_bits) out << ' ' << sign_text(s);
  out << '\n';
  out << "alpha: " << sign_text(rec.alpha) << '\n';
  out << "beta: " << sign_text(rec.beta) << '\n';
  out << "product: " << sign_text(rec.product()) << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const auto checks = run_verification(options);
  print_checks(checks, out);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;
  out << (checks.size() - failed) << '/' << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical communication protocols and CHSH correlations in the plane", "shiftbell"};
  app.require_subcommand(1);

  CommonFlags curve_flags;
  int grid = 61;
  std::string curve_out;
  std::string format = "csv";
  auto* curve = app.add_subcommand("curve", "Monte Carlo correlation curve over a theta grid");
  add_protocol_flags(curve, curve_flags, true);
  curve->add_option("--grid", grid, "grid points on [0, pi]")->check(CLI::Range(2, 1000000));
  curve->add_option("--out", curve_out, "output file (CSV; stdout if omitted)");
  curve->add_option("--format", format, "csv | svg | both")->check(CLI::IsMember({"csv", "svg", "both"}));

  CommonFlags chsh_flags;
  SettingFlags settings;
  std::string chsh_out;
  auto* chsh = app.add_subcommand("chsh", "Sampled CHSH value (defaults: a=pi/2 a'=0 b=pi/4 b'=3pi/4)");
  add_protocol_flags(chsh, chsh_flags, true);
  chsh->add_option("--a", settings.a);
  chsh->add_option("--a-prime", settings.a_prime);
  chsh->add_option("--b", settings.b);
  chsh->add_option("--b-prime", settings.b_prime);
  chsh->add_option("--out", chsh_out, "also write the record as CSV");

  VerifyOptions verify_opts;
  bool inject_flip = false;
  bool inject_h1 = false;
  auto* verify = app.add_subcommand("verify", "Run the identity and Monte Carlo self-checks");
  verify->add_option("--n", verify_opts.n, "trials per Monte Carlo point")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opts.seed);
  verify->add_option("--threads", verify_opts.par.threads)->check(CLI::NonNegativeNumber);
  verify->add_flag("--inject-bob-sign-flip", inject_flip)->group("");
  verify->add_flag("--inject-heaviside-one", inject_h1)->group("");

  CommonFlags trial_flags;
  TrialFlags trial_args;
  auto* trial = app.add_subcommand("trial", "Run a single trial with explicit settings and shares");
  add_protocol_flags(trial, trial_flags, false);
  trial->add_option("--a", trial_args.a)->required();
  trial->add_option("--b", trial_args.b)->required();
  trial->add_option("--lambda", trial_args.lambda);
  trial->add_option("--lambda2", trial_args.lambda2);
  trial->add_option("--u", trial_args.u);
  trial->add_option("--v", trial_args.v);

  std::vector<const char*> argv{"shiftbell"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*curve) return cmd_curve(curve_flags, grid, curve_out, format, out);
    if (*chsh) return cmd_chsh(chsh_flags, settings, chsh_out, out);
    if (*trial) return cmd_trial(trial_flags, trial_args, out);
    if (*verify) {
      verify_opts.flip_bob_fixed_sign = inject_flip;
      verify_opts.heaviside_at_zero = inject_h1 ? HeavisideAtZero::One : HeavisideAtZero::Zero;
      return cmd_verify(verify_opts, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shiftbell
