#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tsirelson/construct.hpp"
#include "tsirelson/engine.hpp"
#include "tsirelson/errors.hpp"
#include "tsirelson/io.hpp"
#include "tsirelson/lab.hpp"
#include "tsirelson/oracle.hpp"
#include "tsirelson/sample.hpp"

namespace tsirelson::cli {
namespace {

// Thrown by subcommands when a check they ran came out false.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::function<Scalar(int)> parse_coefficients(const std::string& text) {
  if (text == "one") return [](int) { return Scalar(1); };
  if (text == "tail") return [](int k) -> Scalar { return 1 - pow2(-k); };
  if (text.rfind("const:", 0) == 0) {
    Scalar c = parse_scalar(text.substr(6));
    return [c](int) { return c; };
  }
  throw Error(ErrorKind::Parse, "coefficients must be one, tail or const:p/q, got '" + text + "'");
}

struct NormOptions {
  std::string def = "tsirelson";
  int n = 1;
  int j = 0;
  int k = 1;
  int m = 1;
  long scale = 1;
  std::string theta = "1/2";
  std::string coef = "one";
  std::string base = "sup";
  bool cert = false;
  std::string file;
};

NormDef build_def(const NormOptions& o) {
  NormDef d;
  if (o.def == "tsirelson") {
    d = defs::tsirelson();
  } else if (o.def == "norm_n") {
    d = defs::norm_n(o.n);
  } else if (o.def == "norm_jn") {
    d = defs::norm_jn(o.j, o.n);
  } else if (o.def == "seminorm_jn") {
    d = defs::seminorm_jn(o.j, o.n);
  } else if (o.def == "implicit") {
    d = defs::implicit(o.k, parse_scalar(o.theta));
  } else if (o.def == "mixed") {
    d = defs::mixed(parse_coefficients(o.coef), parse_scalar(o.theta));
  } else if (o.def == "tree") {
    d = defs::tree_over(o.base == "tsirelson" ? lab::tsirelson_base() : lab::sup_base());
  } else {
    throw Error(ErrorKind::InvalidDef, "unknown definition '" + o.def + "'");
  }
  d.scale = o.scale;
  return d;
}

void cmd_norm(const NormOptions& o, std::ostream& out) {
  FinVec x = io::read_vector_file(o.file);
  if (o.def == "schreier") {
    out << io::format_value(engine::schreier_norm(x, o.m)) << '\n';
    return;
  }
  NormDef def = build_def(o);
  NormResult r = engine::eval(x, def);
  out << io::format_value(r.value) << '\n';
  if (o.cert) {
    Scalar checked = check_certificate(x, def, r.certificate);
    if (checked != r.value) throw VerificationFailure("certificate value " + to_exact_string(checked) + " differs");
    out << r.certificate.render();
  }
}

void print_average(const construct::Average& a, std::ostream& out) {
  const auto& c = a.certificate;
  out << "# (" << c.n << ", " << to_exact_string(c.epsilon) << ") average (" << c.k << ")\n";
  out << "# A = " << io::format_set(c.index_set) << '\n';
  Scalar sum = 0;
  for (const auto& [i, alpha] : c.coeffs) sum += alpha;
  out << "# sum alpha = " << to_exact_string(sum) << '\n';
  out << "# max subfamily sum = " << io::format_value(c.max_subfamily_sum) << '\n';
  out << "# norm = " << io::format_value(c.norm_lower) << '\n';
  out << io::format_vector(a.z);
}

void write_rows(const std::vector<io::CsvRow>& rows, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    io::write_csv(out, rows);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot write " + path);
  io::write_csv(file, rows);
}

std::vector<io::CsvRow> stability_rows(const lab::StabilityReport& r) {
  std::vector<io::CsvRow> rows;
  for (const auto& [j, v] : r.values) rows.push_back({"stabilize", r.n, j, v, r.d, r.ratio});
  return rows;
}

void print_stability(const lab::StabilityReport& r, std::ostream& out) {
  out << "n = " << r.n << ", eps = " << to_exact_string(r.epsilon) << (r.relaxed ? " (relaxed)" : "") << '\n';
  for (std::size_t i = 0; i < r.part_epsilons.size(); ++i) {
    out << "z_" << i + 1 << " eps " << io::format_value(r.part_epsilons[i]) << '\n';
  }
  for (const auto& [j, v] : r.values) out << "j = " << j << "  " << io::format_value(v) << '\n';
  out << "d = " << io::format_value(r.d) << '\n';
  out << "ratio = " << io::format_value(r.ratio) << '\n';
  out << "||z|| = " << io::format_value(r.norm_of_z) << '\n';
}

std::vector<io::CsvRow> theta_rows(const lab::DistortionReport& r, int n) {
  return {{"distort-theta-high", n, 0, r.ratio_high, std::nullopt, r.ratio_high},
          {"distort-theta-low", n, 0, r.ratio_low, std::nullopt, r.ratio_low}};
}

void print_theta(const lab::DistortionReport& r, std::ostream& out) {
  out << "ratio_high = " << io::format_value(r.ratio_high) << "  witness support " << r.witness_high.min_support()
      << ".." << r.witness_high.max_support() << '\n';
  out << "ratio_low = " << io::format_value(r.ratio_low) << "  witness support " << r.witness_low.min_support()
      << ".." << r.witness_low.max_support() << '\n';
  out << "evaluated " << r.evaluated << " vectors\n";
}

struct OracleSweep {
  std::size_t support = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 7;
};

void cmd_oracle_check(const OracleSweep& o, std::ostream& out) {
  if (o.support > oracle::kMaxSupport) throw Error(ErrorKind::SupportTooLarge, "oracle sweeps need support <= 10");
  const std::vector<NormDef> defs_list{
      defs::tsirelson(),      defs::implicit(1, Scalar(1, 2)), defs::implicit(2, Scalar(1, 4)),
      defs::seminorm_jn(1, 2), defs::norm_jn(1, 2),
      defs::mixed([](int k) -> Scalar { return 1 - pow2(-k); }, Scalar(1, 2))};
  VectorSampler sampler(o.seed);
  std::size_t matches = 0;
  std::ostringstream failures;
  for (std::size_t t = 0; t < o.trials; ++t) {
    FinVec x = sampler.vector(o.support);
    bool ok = true;
    for (const auto& d : defs_list) {
      NormResult r = engine::eval(x, d);
      Scalar brute = oracle::brute_norm(x, d);
      Scalar checked = check_certificate(x, d, r.certificate);
      if (r.value != brute || checked != r.value) {
        ok = false;
        failures << "trial " << t << ' ' << d.name << ": engine " << to_exact_string(r.value) << ", oracle "
                 << to_exact_string(brute) << ", certificate " << to_exact_string(checked) << '\n';
      }
    }
    for (int m = 0; m <= 2; ++m) {
      Scalar e = engine::schreier_norm(x, m), b = oracle::brute_schreier_norm(x, m);
      if (e != b) {
        ok = false;
        failures << "trial " << t << " schreier " << m << ": engine " << to_exact_string(e) << ", oracle "
                 << to_exact_string(b) << '\n';
      }
    }
    if (ok) ++matches;
  }
  out << failures.str();
  out << matches << '/' << o.trials << " exact matches\n";
  if (matches != o.trials) throw VerificationFailure("engine and oracle disagree");
}

void cmd_run(const std::string& path, std::ostream& out) {
  io::Config cfg = io::Config::read_file(path);
  const std::string experiment = cfg.get("experiment", "");
  const int n = static_cast<int>(cfg.get_int("n", 1));
  const std::string csv = cfg.get("csv", "-");
  const auto basis = construct::BlockBasis::unit(static_cast<std::size_t>(cfg.get_int("basis_size", 2048)));
  engine::Limits limits;
  limits.max_support = static_cast<std::size_t>(cfg.get_int("max_support", 256));
  std::vector<io::CsvRow> rows;
  if (experiment == "stabilize") {
    auto r = lab::stabilization_experiment(n, cfg.get_scalar("eps", Scalar(1, 8)), basis, limits,
                                           cfg.get("relaxed", "false") == "true");
    rows = stability_rows(r);
  } else if (experiment == "delta") {
    lab::SearchBudget budget;
    budget.max_support = limits.max_support;
    auto r = lab::delta_n_estimate(basis, lab::tsirelson_base(), n, budget);
    rows.push_back({"delta", n, 0, r.value, std::nullopt, std::nullopt});
  } else if (experiment == "distort-theta") {
    lab::SearchBudget budget;
    budget.max_intervals = static_cast<std::size_t>(cfg.get_int("intervals", 8));
    rows = theta_rows(lab::theta_distortion_experiment(cfg.get_scalar("theta", Scalar(1, 2)), n, budget), n);
  } else if (experiment == "distort-mixed") {
    auto ratios = lab::mixed_weight_experiment(parse_coefficients(cfg.get("coef", "tail")));
    int index = 0;
    for (const auto& r : ratios) rows.push_back({"distort-mixed", n, index++, r.ratio, std::nullopt, r.ratio});
  } else if (experiment == "average") {
    auto a = construct::n_eps_average(basis, n, cfg.get_scalar("eps", Scalar(1, 4)),
                                      static_cast<Pos>(cfg.get_int("k", 1)), 1, limits);
    rows.push_back({"average", n, 0, a.certificate.norm_lower, std::nullopt, std::nullopt});
  } else {
    throw Error(ErrorKind::Parse, path + ": unknown experiment '" + experiment + "'");
  }
  write_rows(rows, csv, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact norms on Tsirelson-type spaces"};
  app.require_subcommand(1);

  NormOptions norm;
  auto* norm_cmd = app.add_subcommand("norm", "Exact norm of a vector file");
  norm_cmd->add_option("--def", norm.def, "tsirelson|norm_n|norm_jn|seminorm_jn|schreier|mixed|tree|implicit")
      ->check(CLI::IsMember({"tsirelson", "norm_n", "norm_jn", "seminorm_jn", "schreier", "mixed", "tree",
                             "implicit"}));
  norm_cmd->add_option("--n", norm.n, "Period n");
  norm_cmd->add_option("--j", norm.j, "Offset j");
  norm_cmd->add_option("--k", norm.k, "Admissibility level of an implicit norm");
  norm_cmd->add_option("--m", norm.m, "Schreier level m");
  norm_cmd->add_option("--theta", norm.theta, "Weight base p/q");
  norm_cmd->add_option("--coef", norm.coef, "Mixed coefficients: one|tail|const:p/q");
  norm_cmd->add_option("--base", norm.base, "Leaf of the tree norm: sup|tsirelson")
      ->check(CLI::IsMember({"sup", "tsirelson"}));
  norm_cmd->add_option("--scale", norm.scale, "Admissibility scale");
  norm_cmd->add_flag("--cert", norm.cert, "Print and check the certificate");
  norm_cmd->add_option("file", norm.file, "Vector file")->required();

  auto* schreier_cmd = app.add_subcommand("schreier", "Schreier family checks");
  schreier_cmd->require_subcommand(1);
  int level = 1;
  long scale = 1;
  std::string set_text;
  auto* member_cmd = schreier_cmd->add_subcommand("member", "Is the set in S_n");
  member_cmd->add_option("--n", level)->required();
  member_cmd->add_option("set", set_text, "{a,b,...}")->required();
  auto* maximal_cmd = schreier_cmd->add_subcommand("maximal", "Is the set maximal in S_n");
  maximal_cmd->add_option("--n", level)->required();
  maximal_cmd->add_option("set", set_text, "{a,b,...}")->required();
  auto* admissible_cmd = schreier_cmd->add_subcommand("admissible", "Is the sequence k-admissible");
  admissible_cmd->add_option("--k", level)->required();
  admissible_cmd->add_option("--scale", scale);
  admissible_cmd->add_option("sequence", set_text, "[{a,..},{b,..}]")->required();

  int avg_n = 1;
  long avg_k = 1;
  std::string avg_eps = "1/4";
  bool relaxed = false;
  std::size_t avg_start = 0;
  auto* average_cmd = app.add_subcommand("average", "Build and certify an (n, eps) average (k) on the unit basis");
  average_cmd->add_option("--n", avg_n)->required();
  average_cmd->add_option("--eps", avg_eps);
  average_cmd->add_option("--k", avg_k);
  average_cmd->add_flag("--relaxed", relaxed, "Repeated average at --start; report the epsilon reached");
  average_cmd->add_option("--start", avg_start, "Start index for --relaxed");

  int stab_n = 1;
  std::string stab_eps = "1/8", stab_csv;
  bool stab_relaxed = false;
  auto* stabilize_cmd = app.add_subcommand("stabilize", "Stability report for the stabilized vector");
  stabilize_cmd->add_option("--n", stab_n)->required();
  stabilize_cmd->add_option("--eps", stab_eps);
  stabilize_cmd->add_flag("--relaxed", stab_relaxed, "Use the best averages that fit the support bound");
  stabilize_cmd->add_option("--csv", stab_csv, "Also write CSV here ('-' for stdout)");

  auto* distort_cmd = app.add_subcommand("distort", "Distortion experiments");
  distort_cmd->require_subcommand(1);
  std::string theta = "1/2", coef = "tail";
  int distort_n = 1;
  auto* theta_cmd = distort_cmd->add_subcommand("theta", "Ratios |.|/||.|| in T(S_n, theta^n)");
  theta_cmd->add_option("--theta", theta);
  theta_cmd->add_option("--n", distort_n);
  auto* mixed_cmd = distort_cmd->add_subcommand("mixed", "Mixed norm over Tsirelson norm");
  mixed_cmd->add_option("--coef", coef, "one|tail|const:p/q");

  OracleSweep sweep;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Engine against exhaustive search on random vectors");
  oracle_cmd->add_option("--support", sweep.support);
  oracle_cmd->add_option("--trials", sweep.trials);
  oracle_cmd->add_option("--seed", sweep.seed);

  std::string config;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment configuration, CSV out");
  run_cmd->add_option("--config", config)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*norm_cmd) {
      cmd_norm(norm, out);
    } else if (*schreier_cmd) {
      if (*member_cmd) {
        out << (schreier::is_member(io::parse_set(set_text), level) ? "true" : "false") << '\n';
      } else if (*maximal_cmd) {
        out << (schreier::is_maximal(io::parse_set(set_text), level) ? "true" : "false") << '\n';
      } else {
        out << (schreier::is_admissible(io::parse_sequence(set_text), level, scale) ? "true" : "false") << '\n';
      }
    } else if (*average_cmd) {
      auto basis = construct::BlockBasis::unit(2048);
      construct::Average a = relaxed ? construct::realized_average(basis, avg_n, avg_k, avg_start ? avg_start : 2)
                                     : construct::n_eps_average(basis, avg_n, parse_scalar(avg_eps), avg_k);
      print_average(a, out);
      auto check = construct::check_average(basis, a.z, a.certificate);
      if (!relaxed && !check.ok()) throw VerificationFailure("average certificate does not re-validate");
    } else if (*stabilize_cmd) {
      auto basis = construct::BlockBasis::unit(2048);
      auto r = lab::stabilization_experiment(stab_n, parse_scalar(stab_eps), basis, {}, stab_relaxed);
      print_stability(r, out);
      if (!stab_csv.empty()) write_rows(stability_rows(r), stab_csv, out);
    } else if (*distort_cmd) {
      if (*theta_cmd) {
        print_theta(lab::theta_distortion_experiment(parse_scalar(theta), distort_n), out);
      } else {
        for (const auto& r : lab::mixed_weight_experiment(parse_coefficients(coef))) {
          out << r.label << "  " << io::format_value(r.ratio) << '\n';
        }
      }
    } else if (*oracle_cmd) {
      cmd_oracle_check(sweep, out);
    } else if (*run_cmd) {
      cmd_run(config, out);
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const BadTree& e) {
    err << e.what() << '\n';
    return kVerification;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace tsirelson::cli
