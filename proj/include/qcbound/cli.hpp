#ifndef QCBOUND_CLI_HPP
#define QCBOUND_CLI_HPP

// Command-line front end. run_cli is the whole program; tools/qcbound.cpp
// only forwards argv and the standard streams.
//
// Output convention: with --out, machine output goes to the file and a short
// human summary to stdout; without --out, stdout carries the machine output
// only. `verify` always prints its summary and writes JSON only to --out.
//
// Exit codes: 0 success, 1 computation failure, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcbound/bounds.hpp"
#include "qcbound/json_io.hpp"
#include "qcbound/verify.hpp"

namespace qcbound::cli {

inline constexpr double kDefaultTolerance = 1e-6;

/// Usage-level failure: bad flags, bad parameter values, unreadable input.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct CliConfig {
  std::string subcommand;
  std::string out;
  std::string format = "json";
  std::string family;
  std::string bound;
  std::string rho_path, sigma_path, choi_path;
  std::string alpha = "1";
  std::string suite = "all";
  std::string sweep;
  int d = 2;
  double p = 0.1;
  double gamma = 0.1;
  int n = 20;
  int l = 16;
  std::uint64_t seed = 42;
  double tolerance = kDefaultTolerance;
};

inline double parse_alpha(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return kAlphaInfinity;
  std::size_t used = 0;
  double a = 0.0;
  try {
    a = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("--alpha: expected a number or \"inf\", got \"" + s + "\"");
  }
  if (used != s.size()) throw UsageError("--alpha: trailing characters in \"" + s + "\"");
  if (!(a >= 1.0)) throw UsageError("--alpha must be >= 1 (or inf)");
  return a;
}

inline double tolerance_from_env() {
  const char* v = std::getenv("QCBOUND_TOL");
  if (v == nullptr || *v == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double t = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(t > 0.0) || !std::isfinite(t)) {
    throw UsageError(std::string("QCBOUND_TOL must be a positive number, got \"") + v + "\"");
  }
  return t;
}

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
};

inline Sweep parse_sweep(const std::string& s) {
  Sweep sw;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> sw.start >> c1 >> sw.stop >> c2 >> sw.count) || c1 != ':' || c2 != ':' ||
      sw.count < 1 || !is.eof()) {
    throw UsageError("--sweep: expected start:stop:count, got \"" + s + "\"");
  }
  return sw;
}

inline ChoiMatrix build_channel(const CliConfig& cfg) {
  const std::string& f = cfg.family;
  if (f == "flower") return flower_channel(cfg.d);
  if (f == "pbit") return pbit_channel(cfg.d);
  if (f == "depolarizing") return depolarizing(cfg.d, cfg.p);
  if (f == "erasure") return erasure(cfg.d, cfg.p);
  if (f == "ad") return amplitude_damping(cfg.gamma);
  if (f == "switch") return switch_channel(identity_channel(cfg.d), depolarizing(cfg.d, cfg.p));
  if (f == "file") return channel_from_json(read_json_file(cfg.choi_path));
  throw UsageError("unknown channel family \"" + f + "\"");
}

inline DensityMatrix build_state(const CliConfig& cfg) {
  const std::string& f = cfg.family;
  if (f == "flower") return flower_state(cfg.d);
  if (f == "pbit") return approx_pbit(cfg.d);
  if (f == "gamma2") return gamma2(cfg.d).state();
  if (f == "omega") return max_entangled(cfg.d);
  if (f == "antisym") return antisymmetric_state(cfg.d);
  if (f == "random") return random_state({cfg.d, cfg.d}, cfg.seed);
  if (f == "file") return state_from_json(read_json_file(cfg.rho_path));
  throw UsageError("unknown state family \"" + f + "\"");
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kCsvHeader = "bound,targets,direction,method,relaxation,bits,finite,param";

inline std::string csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << csv_escape(r.bound_name) << ',' << csv_escape(r.targets) << ',' << to_string(r.direction)
     << ',' << to_string(r.method) << ',' << (r.relaxation ? *r.relaxation : "") << ',';
  if (r.value_bits.is_finite()) {
    os << r.value_bits.value();
  } else {
    os << "inf";
  }
  os << ',' << (r.value_bits.is_finite() ? "true" : "false") << ',';
  const auto it = r.diagnostics.find("param");
  if (it != r.diagnostics.end()) os << it->second;
  return os.str();
}

class Emitter {
 public:
  Emitter(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(const std::string& machine, const std::string& summary) {
    if (cfg_.out.empty()) {
      out_ << machine;
      if (machine.empty() || machine.back() != '\n') out_ << '\n';
      return;
    }
    std::ofstream f(cfg_.out);
    if (!f) throw UsageError("cannot write " + cfg_.out);
    f << machine;
    if (machine.empty() || machine.back() != '\n') f << '\n';
    out_ << summary;
    if (summary.empty() || summary.back() != '\n') out_ << '\n';
  }

  void emit_reports(const std::vector<BoundReport>& reports, bool as_array) {
    std::ostringstream summary;
    summary << std::setprecision(10);
    for (const auto& r : reports) {
      summary << r.bound_name << " (" << to_string(r.direction) << " on " << r.targets
              << "): " << r.value_bits.as_double() << " bits\n";
    }
    if (cfg_.format == "csv") {
      std::string body = std::string(kCsvHeader) + "\n";
      for (const auto& r : reports) body += csv_row(r) + "\n";
      emit(body, summary.str());
      return;
    }
    Json j;
    if (as_array) {
      j = Json::array();
      for (const auto& r : reports) j.push_back(to_json(r));
    } else {
      j = to_json(reports.front());
    }
    emit(j.dump(2), summary.str());
  }

 private:
  const CliConfig& cfg_;
  std::ostream& out_;
};

inline int cmd_state(const CliConfig& cfg, std::ostream& out) {
  const DensityMatrix rho = build_state(cfg);
  std::ostringstream s;
  s << std::setprecision(10) << "state " << cfg.family << " dims [";
  for (std::size_t i = 0; i < rho.dims().size(); ++i) s << (i ? "," : "") << rho.dims()[i];
  s << "] min eigenvalue " << min_eigenvalue(rho.matrix()) << "\n";
  Emitter(cfg, out).emit(to_json(rho).dump(2), s.str());
  return 0;
}

inline int cmd_channel(const CliConfig& cfg, std::ostream& out) {
  const ChoiMatrix c = build_channel(cfg);
  const PptCheck ppt = is_ppt_choi(c);
  std::ostringstream s;
  s << std::setprecision(10) << "channel " << cfg.family << " d_in " << c.d_in() << " d_out "
    << c.d_out() << " PPT " << (ppt.ppt ? "yes" : "no") << " (min eigenvalue of C^{T_B} "
    << ppt.min_eigenvalue << ")\n";
  Emitter(cfg, out).emit(to_json(c).dump(2), s.str());
  return 0;
}

inline int cmd_divergence(const CliConfig& cfg, std::ostream& out) {
  const double alpha = parse_alpha(cfg.alpha);
  const DensityMatrix rho = state_from_json(read_json_file(cfg.rho_path));
  const DensityMatrix sigma = state_from_json(read_json_file(cfg.sigma_path));
  if (rho.dim() != sigma.dim()) throw UsageError("rho and sigma have different dimensions");
  const DivergenceValue v = renyi_divergence(rho, sigma, alpha);
  Json j;
  j["alpha"] = std::isinf(alpha) ? Json("inf") : Json(alpha);
  j["bits"] = v.finite() ? Json(v.value()) : Json("inf");
  j["finite"] = v.finite();
  std::ostringstream s;
  s << std::setprecision(12) << "D_" << cfg.alpha << "(rho||sigma) = " << v.bits.as_double()
    << " bits\n";
  if (cfg.format == "csv") {
    std::ostringstream c;
    c << std::setprecision(17) << "alpha,bits,finite\n" << cfg.alpha << ',';
    if (v.finite()) {
      c << v.value();
    } else {
      c << "inf";
    }
    c << ',' << (v.finite() ? "true" : "false") << "\n";
    Emitter(cfg, out).emit(c.str(), s.str());
  } else {
    Emitter(cfg, out).emit(j.dump(2), s.str());
  }
  return 0;
}

// The replacement channel rho -> tr(rho) 1/d_out: entanglement breaking,
// with Choi 1/(d_in d_out) and a product-basis certificate.
inline std::pair<ChoiMatrix, SeparableDecomposition> replacement_channel(const ChoiMatrix& c) {
  const int din = c.d_in(), dout = c.d_out();
  SeparableDecomposition dec{din, dout, {}, {}, {}};
  for (int a = 0; a < din; ++a) {
    for (int b = 0; b < dout; ++b) {
      dec.add(1.0 / (din * dout), detail::basis_vector(din, a), detail::basis_vector(dout, b));
    }
  }
  Dims joined = c.in_dims();
  joined.insert(joined.end(), c.out_dims().begin(), c.out_dims().end());
  return {ChoiMatrix(DensityMatrix(identity(din * dout) / static_cast<double>(din * dout), joined),
                     c.in_dims(), c.out_dims()),
          std::move(dec)};
}

inline std::vector<BoundReport> compute_bound(const CliConfig& cfg, double tol) {
  const std::string& b = cfg.bound;
  if (b == "flower-formulas") return flower_reports(cfg.d);
  if (b == "pbit-gap") {
    const PbitGap g = pbit_capacity_gap(cfg.d);
    return {g.lower, g.upper};
  }
  if (b == "appendix") {
    const AppendixTable t = appendix_dichotomy(cfg.n, cfg.l);
    auto make = [&](const std::string& name, const std::string& target, Direction dir, double v) {
      BoundReport r;
      r.bound_name = name;
      r.targets = target;
      r.direction = dir;
      r.method = Method::Formula;
      r.value_bits = ExtendedReal::finite(v);
      r.diagnostics["n"] = t.n;
      r.diagnostics["l"] = t.l;
      return r;
    };
    // The printed lower bound on E_R(tau0) can be negative; it is carried in
    // diagnostics since report values are nonnegative by construction.
    BoundReport er0 = make("appendix-er-tau0", "E_R(tau0)", Direction::Lower,
                           std::max(0.0, t.er_tau0_lower));
    er0.diagnostics["printed_value"] = t.er_tau0_lower;
    BoundReport er1 = make("appendix-er-tau1", "E_R(tau1)", Direction::Upper, t.er_tau1_upper);
    BoundReport sq0 = make("appendix-esq-tau0", "E_sq(tau0)", Direction::Upper, t.esq_tau0_upper);
    BoundReport sq1 = make("appendix-esq-tau1", "E_sq(tau1)", Direction::Exact, t.esq_tau1);
    er0.diagnostics["er_flag"] = t.er_flag;
    sq1.diagnostics["esq_flag"] = t.esq_flag;
    return {er0, er1, sq0, sq1};
  }

  const ChoiMatrix c = build_channel(cfg);
  if (b == "transposition") {
    BoundReport r = transposition_bound(c);
    if (r.bits() < r.diagnostics.at("log_negativity") - tol) {
      throw NumericalError("transposition bound below its log-negativity lower bound");
    }
    return {r};
  }
  if (b == "lognegativity") return {log_negativity(c)};
  if (b == "bmax-ppt") return {bmax_ppt(c)};
  if (b == "emax-ppt") return {dmax_over_ppt(c.state(), c.out_systems())};
  if (b == "bmax-fixed") {
    if (cfg.family == "pbit") {
      // The repeater bound: transpose o T_d against the printed C_S.
      return {pbit_capacity_gap(cfg.d).upper};
    }
    const auto [cs, cert] = replacement_channel(c);
    return {bmax_upper_fixed(c, cs, cert)};
  }
  throw UsageError("unknown bound \"" + b + "\"");
}

inline int cmd_bound(CliConfig cfg, std::ostream& out) {
  const double tol = cfg.tolerance;
  if (cfg.sweep.empty()) {
    const auto reports = compute_bound(cfg, tol);
    Emitter(cfg, out).emit_reports(reports, reports.size() > 1);
    return 0;
  }
  // Sweep the family's noise parameter: --gamma for ad, --p otherwise.
  const Sweep sw = parse_sweep(cfg.sweep);
  std::vector<BoundReport> all;
  for (int i = 0; i < sw.count; ++i) {
    const double x = sw.count == 1 ? sw.start : sw.start + (sw.stop - sw.start) * i / (sw.count - 1);
    CliConfig point = cfg;
    (cfg.family == "ad" ? point.gamma : point.p) = x;
    point.seed = cfg.seed + static_cast<std::uint64_t>(i);
    for (auto r : compute_bound(point, tol)) {
      r.diagnostics["param"] = x;
      all.push_back(std::move(r));
    }
  }
  Emitter(cfg, out).emit_reports(all, true);
  return 0;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  auto print = [&](const VerificationReport& r) {
    out << std::left << std::setw(18) << r.suite << (r.all_pass() ? "PASS" : "FAIL") << "  "
        << (r.cases.size() - r.failures()) << "/" << r.cases.size() << "\n";
    for (const auto& c : r.cases) {
      if (!c.pass) out << "  failed: " << c.name << " observed " << c.observed << " " << c.note << "\n";
    }
    out.flush();
  };
  VerificationReport rep;
  if (cfg.suite == "all") {
    rep = reproduce_all(cfg.seed, print);
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
      throw UsageError("unknown suite \"" + cfg.suite + "\"");
    }
    rep = run_suite(cfg.suite, cfg.seed);
    print(rep);
  }
  out << "total " << (rep.cases.size() - rep.failures()) << "/" << rep.cases.size() << " passed\n";
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << to_json(rep).dump(2) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

inline void check_out_path(const std::string& path) {
  if (path.empty()) return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw UsageError("--out: directory " + parent.string() + " does not exist");
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"qcbound: bounds on two-way assisted quantum and private capacities"};
  app.require_subcommand(1);
  app.footer(
      "Output: with --out, machine output goes to the file and a summary to stdout;\n"
      "otherwise stdout carries the machine output. CSV columns (bound reports):\n"
      "  bound,targets,direction,method,relaxation,bits,finite,param\n"
      "Environment: QCBOUND_TOL overrides the 1e-6 consistency tolerance.\n"
      "Exit codes: 0 success, 1 computation failure, 2 usage or input error.");

  const std::vector<std::string> channel_families{"flower", "pbit",   "depolarizing", "erasure",
                                                  "ad",     "switch", "file"};
  const std::vector<std::string> state_families{"flower", "pbit",   "gamma2", "omega",
                                                "antisym", "random", "file"};
  const std::vector<std::string> bounds{"transposition", "bmax-ppt",        "bmax-fixed",
                                        "emax-ppt",      "lognegativity",   "flower-formulas",
                                        "pbit-gap",      "appendix"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write machine output here");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "seed for all stochastic output");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "dimension parameter")->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "noise probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--gamma", cfg.gamma, "damping parameter")->check(CLI::Range(0.0, 1.0));
  };

  auto* st = app.add_subcommand("state", "construct a state");
  st->add_option("--family", cfg.family, "state family")
      ->required()
      ->check(CLI::IsMember(state_families));
  st->add_option("--rho", cfg.rho_path, "state JSON for --family file")->check(CLI::ExistingFile);
  params(st);
  common(st);

  auto* ch = app.add_subcommand("channel", "construct a channel (Choi state)");
  ch->add_option("--channel-family", cfg.family, "channel family")
      ->required()
      ->check(CLI::IsMember(channel_families));
  ch->add_option("--choi", cfg.choi_path, "channel JSON for family file")->check(CLI::ExistingFile);
  params(ch);
  common(ch);

  auto* dv = app.add_subcommand("divergence", "sandwiched Renyi divergence D_alpha(rho||sigma)");
  dv->add_option("--alpha", cfg.alpha, "alpha >= 1, or inf")->required();
  dv->add_option("--rho", cfg.rho_path, "state JSON")->required()->check(CLI::ExistingFile);
  dv->add_option("--sigma", cfg.sigma_path, "state JSON")->required()->check(CLI::ExistingFile);
  common(dv);

  auto* bd = app.add_subcommand("bound", "compute a capacity bound report");
  bd->add_option("--bound", cfg.bound, "bound name")->required()->check(CLI::IsMember(bounds));
  bd->add_option("--channel-family", cfg.family, "channel family")
      ->check(CLI::IsMember(channel_families));
  bd->add_option("--choi", cfg.choi_path, "channel JSON for family file")->check(CLI::ExistingFile);
  bd->add_option("--n", cfg.n, "copies (appendix)")->check(CLI::PositiveNumber);
  bd->add_option("--l", cfg.l, "local parameter (appendix)")->check(CLI::PositiveNumber);
  bd->add_option("--sweep", cfg.sweep, "start:stop:count over --p (or --gamma for ad)");
  params(bd);
  common(bd);

  auto* vf = app.add_subcommand("verify", "run verification suites");
  vf->add_option("--suite", cfg.suite, "suite name or all");
  vf->add_option("--out", cfg.out, "write the JSON report here");
  vf->add_option("--seed", cfg.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.tolerance = tolerance_from_env();
    check_out_path(cfg.out);
    if (st->parsed()) {
      if (cfg.family == "file" && cfg.rho_path.empty()) throw UsageError("--family file needs --rho");
      return cmd_state(cfg, out);
    }
    if (ch->parsed()) {
      if (cfg.family == "file" && cfg.choi_path.empty()) throw UsageError("family file needs --choi");
      return cmd_channel(cfg, out);
    }
    if (dv->parsed()) return cmd_divergence(cfg, out);
    if (bd->parsed()) {
      const bool needs_channel = cfg.bound != "flower-formulas" && cfg.bound != "pbit-gap" &&
                                 cfg.bound != "appendix";
      if (needs_channel && cfg.family.empty()) {
        throw UsageError("--bound " + cfg.bound + " needs --channel-family");
      }
      if (cfg.family == "file" && cfg.choi_path.empty()) throw UsageError("family file needs --choi");
      if (!cfg.sweep.empty() && !needs_channel) {
        throw UsageError("--sweep applies to channel bounds only");
      }
      return cmd_bound(cfg, out);
    }
    if (vf->parsed()) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qcbound::cli

#endif  // QCBOUND_CLI_HPP
