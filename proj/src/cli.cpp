#include "progdisc/cli.hpp"

#include "progdisc/oracle.hpp"
#include "progdisc/output.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace progdisc {

namespace {

struct Options {
  int n = 1;
  int m = 1;
  std::string eta = "1/2";
  double eta_min = 0.0;
  double eta_max = 1.0;
  int steps = 101;
  int total = -1;
  int n_max = 2;
  int m_max = 2;
  long long samples = 100000;
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::string format = "json";
  std::string output;
};

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::left: return "left";
    case Branch::middle: return "middle";
    case Branch::right: return "right";
  }
  return "";
}

Priors parse_eta(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    return Priors::from_rational(parse_fraction(text));
  }
  double value = 0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse eta value '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("cannot parse eta value '" + text + "'");
  }
  return Priors::from_double(value);
}

// Relative output paths land in PROGDISC_OUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& requested) {
  std::filesystem::path path(requested);
  if (path.is_relative()) {
    const char* dir = std::getenv("PROGDISC_OUT_DIR");
    if (dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

// Appends text to the terminal output or writes the requested file.
bool deliver(const std::string& text, const std::string& requested,
             CliResult& result) {
  if (requested.empty()) {
    result.out += text;
    return true;
  }
  const std::filesystem::path path = resolve_output(requested);
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.flush();
  if (!file) {
    result.err += "cannot write output file: " + path.string() + "\n";
    result.exit_code = kExitOutputError;
    return false;
  }
  return true;
}

Json spectrum_record(const ProblemSize& size) {
  Json record = make_record("spectrum");
  record["parameters"]["n"] = size.n;
  record["parameters"]["m"] = size.m;
  Json rows = Json::array();
  for (const JordanEntry& entry : spectrum(size)) {
    Json row;
    row["k"] = entry.k;
    row["kappa"] = rational_node(entry.kappa);
    row["multiplicity"] = entry.mult;
    rows.push_back(row);
  }
  record["results"]["rows"] = rows;
  return record;
}

std::string spectrum_csv(const ProblemSize& size) {
  std::string text = "k,kappa_exact,kappa,multiplicity\n";
  for (const JordanEntry& entry : spectrum(size)) {
    text += std::to_string(entry.k) + "," + to_fraction_string(entry.kappa) +
            "," + csv_double(to_double(entry.kappa)) + "," +
            std::to_string(entry.mult) + "\n";
  }
  return text;
}

Json report_record(const std::string& command, const DiscriminationReport& r) {
  Json record = make_record(command);
  record["parameters"]["n"] = r.size.n;
  record["parameters"]["m"] = r.size.m;
  record["parameters"]["eta"] = number_node(
      r.priors.eta(),
      r.priors.exact() ? std::optional<Rational>(r.priors.eta_rational())
                       : std::nullopt);

  Json& results = record["results"];
  results["q_fail"] = number_node(r.unamb.q_fail, r.unamb.q_exact);
  results["p_success"] = number_node(
      r.unamb.p_success, r.unamb.q_exact
                             ? std::optional<Rational>(1 - *r.unamb.q_exact)
                             : std::nullopt);
  results["p_error"] = r.p_error;
  results["validity_interval"]["lo"] = rational_node(r.validity.first);
  results["validity_interval"]["hi"] = rational_node(r.validity.second);
  results["eta_in_validity"] = r.unamb.eta_in_validity;
  if (r.unamb.exact_form_valid) {
    results["exact_form"]["base"] = rational_node(r.unamb.base);
    results["exact_form"]["radical_coefficient"] =
        rational_node(r.unamb.radical_coeff);
  }
  Json pairs = Json::array();
  for (const PairTerm& pair : r.unamb.pairs) {
    Json row;
    row["k"] = pair.k;
    row["kappa"] = rational_node(pair.kappa);
    row["multiplicity"] = pair.mult;
    row["branch"] = branch_name(pair.branch);
    row["q_value"] = pair.q_value;
    pairs.push_back(row);
  }
  results["pairs"] = pairs;
  return record;
}

std::string report_csv(const DiscriminationReport& r) {
  auto exact_cell = [](const std::optional<Rational>& q) {
    return q ? to_fraction_string(*q) : std::string();
  };
  std::string text = "field,value,exact\n";
  text += "n," + std::to_string(r.size.n) + ",\n";
  text += "m," + std::to_string(r.size.m) + ",\n";
  text += "eta," + csv_double(r.priors.eta()) + "," +
          (r.priors.exact() ? to_fraction_string(r.priors.eta_rational())
                            : std::string()) +
          "\n";
  text += "q_fail," + csv_double(r.unamb.q_fail) + "," +
          exact_cell(r.unamb.q_exact) + "\n";
  text += "p_success," + csv_double(r.unamb.p_success) + "," +
          exact_cell(r.unamb.q_exact
                         ? std::optional<Rational>(1 - *r.unamb.q_exact)
                         : std::nullopt) +
          "\n";
  text += "p_error," + csv_double(r.p_error) + ",\n";
  text += "validity_lo," + csv_double(to_double(r.validity.first)) + "," +
          to_fraction_string(r.validity.first) + "\n";
  text += "validity_hi," + csv_double(to_double(r.validity.second)) + "," +
          to_fraction_string(r.validity.second) + "\n";
  text += std::string("eta_in_validity,") +
          (r.unamb.eta_in_validity ? "true" : "false") + ",\n";
  text += "\nk,kappa_exact,kappa,multiplicity,branch,q_value\n";
  for (const PairTerm& pair : r.unamb.pairs) {
    text += std::to_string(pair.k) + "," + to_fraction_string(pair.kappa) +
            "," + csv_double(to_double(pair.kappa)) + "," +
            std::to_string(pair.mult) + "," + branch_name(pair.branch) + "," +
            csv_double(pair.q_value) + "\n";
  }
  return text;
}

struct ScanRow {
  double eta;
  double q_fail;
  double p_success;
  double p_error;
  bool in_validity;
};

std::vector<ScanRow> scan_rows(const ProblemSize& size, double eta_min,
                               double eta_max, int steps) {
  std::vector<ScanRow> rows;
  for (int i = 0; i < steps; ++i) {
    const double eta =
        eta_min + (eta_max - eta_min) * i / static_cast<double>(steps - 1);
    const Priors priors = Priors::from_double(eta);
    const UnambiguousResult unamb = unambiguous(size, priors);
    rows.push_back({eta, unamb.q_fail, unamb.p_success,
                    min_error(size, priors), unamb.eta_in_validity});
  }
  return rows;
}

Json scan_record(const ProblemSize& size, double eta_min, double eta_max,
                 int steps, const std::vector<ScanRow>& rows) {
  Json record = make_record("scan");
  record["parameters"]["n"] = size.n;
  record["parameters"]["m"] = size.m;
  record["parameters"]["eta_min"] = eta_min;
  record["parameters"]["eta_max"] = eta_max;
  record["parameters"]["steps"] = steps;
  Json out_rows = Json::array();
  for (const ScanRow& row : rows) {
    Json node;
    node["eta"] = row.eta;
    node["q_fail"] = row.q_fail;
    node["p_success"] = row.p_success;
    node["p_error"] = row.p_error;
    node["in_validity"] = row.in_validity;
    out_rows.push_back(node);
  }
  record["results"]["rows"] = out_rows;
  return record;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string text = "eta,q_fail,p_success,p_error,in_validity\n";
  for (const ScanRow& row : rows) {
    text += csv_double(row.eta) + "," + csv_double(row.q_fail) + "," +
            csv_double(row.p_success) + "," + csv_double(row.p_error) + "," +
            (row.in_validity ? "true" : "false") + "\n";
  }
  return text;
}

Json chain_node(const ChainPair& chain) {
  Json node;
  node["total"] = chain.N;
  node["size"] = chain.length();
  node["invariant"] = rational_node(invariant_from_gram(chain));
  node["mirror"] = verify_mirror(chain);
  Json h1 = Json::array();
  Json h2 = Json::array();
  for (int i = 0; i < chain.length(); ++i) {
    h1.push_back({{"j", chain.v[i].j}, {"k", chain.v[i].k}});
    h2.push_back({{"j", chain.vp[i].j}, {"k", chain.vp[i].k}});
  }
  node["h1_elements"] = h1;
  node["h2_elements"] = h2;
  Json gram = Json::array();
  for (int i = 0; i < chain.length(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < chain.length(); ++j) {
      const SqrtRational& entry = chain.gram[i][j];
      const Rational signed_square =
          entry.sign() < 0 ? Rational(-entry.square()) : entry.square();
      Json cell;
      cell["signed_square"] = rational_node(signed_square);
      cell["value"] = entry.value();
      row.push_back(cell);
    }
    gram.push_back(row);
  }
  node["gram"] = gram;
  return node;
}

Json chains_record(const ProblemSize& size, int total) {
  Json record = make_record("chains");
  record["parameters"]["n"] = size.n;
  record["parameters"]["m"] = size.m;
  if (total >= 0) record["parameters"]["total"] = total;
  Json list = Json::array();
  if (total >= 0) {
    list.push_back(chain_node(build_chain_pair(total, size)));
  } else {
    for (int N = 0; N <= 2 * size.n + size.m; ++N) {
      list.push_back(chain_node(build_chain_pair(N, size)));
    }
  }
  record["results"]["chains"] = list;
  return record;
}

// One verification check row: measured deviation against its tolerance.
struct CheckRow {
  std::string name;
  int n;
  int m;
  double deviation;
  double tolerance;
  std::string status;
};

Eigen::MatrixXd embedded_side(Side side, const ProblemSize& size) {
  const int j_hi = side == Side::H1 ? size.n + size.m : size.n;
  const int k_hi = side == Side::H1 ? size.n : size.n + size.m;
  Eigen::MatrixXd cols(dense_side(size), size.support_dim());
  int col = 0;
  for (int j = 0; j <= j_hi; ++j) {
    for (int k = 0; k <= k_hi; ++k) {
      cols.col(col++) = embed_basis_vector(basis_vector(side, j, k, size));
    }
  }
  return cols;
}

double orthonormality_defect(const ProblemSize& size) {
  double worst = 0;
  for (Side side : {Side::H1, Side::H2}) {
    Eigen::MatrixXd cols = embedded_side(side, size);
    Eigen::MatrixXd gram = cols.transpose() * cols;
    worst = std::max(
        worst, (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                   .cwiseAbs()
                   .maxCoeff());
  }
  return worst;
}

double mean_state_defect(const ProblemSize& size) {
  const Eigen::MatrixXd r1 = rho_exact(Side::H1, size);
  const Eigen::MatrixXd r2 = rho_exact(Side::H2, size);
  double worst = std::max(std::abs(r1.trace() - 1.0), std::abs(r2.trace() - 1.0));

  Eigen::MatrixXd mirrored(r1.rows(), r1.cols());
  for (int a = 0; a <= size.n; ++a) {
    for (int b = 0; b <= size.m; ++b) {
      for (int c = 0; c <= size.n; ++c) {
        for (int a2 = 0; a2 <= size.n; ++a2) {
          for (int b2 = 0; b2 <= size.m; ++b2) {
            for (int c2 = 0; c2 <= size.n; ++c2) {
              mirrored(dense_coord(c, b, a, size),
                       dense_coord(c2, b2, a2, size)) =
                  r1(dense_coord(a, b, c, size), dense_coord(a2, b2, c2, size));
            }
          }
        }
      }
    }
  }
  worst = std::max(worst, (mirrored - r2).cwiseAbs().maxCoeff());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r1, Eigen::EigenvaluesOnly);
  worst = std::max(worst, std::max(0.0, -solver.eigenvalues().minCoeff()));
  worst = std::max(worst, (r1 * r2).trace() > 0.0 ? 0.0 : 1.0);
  return worst;
}

double exact_spectrum_defect(const ProblemSize& size) {
  for (int k = 1; k <= size.n; ++k) {
    if (kappa_from_invariants(k, size) != kappa_closed(k, size)) return 1.0;
  }
  return 0.0;
}

double chain_defect(const ProblemSize& size) {
  int total_positions = 0;
  for (int N = 0; N <= 2 * size.n + size.m; ++N) {
    const ChainPair chain = build_chain_pair(N, size);
    if (!verify_mirror(chain)) return 1.0;
    if (invariant_from_gram(chain) != invariant_S(N, size)) return 1.0;
    total_positions += chain.length();
  }
  return total_positions == size.support_dim() ? 0.0 : 1.0;
}

double svd_spectrum_defect(const ProblemSize& size) {
  const std::vector<double> values = global_jordan_svd(size);
  std::vector<double> expected;
  for (const JordanEntry& entry : spectrum(size)) {
    expected.insert(expected.end(), entry.mult,
                    std::abs(to_double(entry.kappa)));
  }
  std::sort(expected.rbegin(), expected.rend());
  double worst = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    worst = std::max(worst, std::abs(values[i] - expected[i]));
  }
  return worst;
}

double helstrom_defect(const ProblemSize& size) {
  double worst = 0;
  for (int tick = 0; tick <= 10; ++tick) {
    const Priors priors = Priors::from_double(tick / 10.0);
    worst = std::max(worst, std::abs(helstrom_numeric(size, priors) -
                                     min_error(size, priors)));
  }
  return worst;
}

double montecarlo_defect(const ProblemSize& size, long long samples,
                         std::uint64_t seed) {
  double worst = 0;
  int stream = 0;
  for (Side side : {Side::H1, Side::H2}) {
    const Eigen::MatrixXcd sampled =
        rho_montecarlo(side, size, samples, seed + 1000003ULL * stream++);
    const Eigen::MatrixXd exact = rho_exact(side, size);
    worst = std::max(worst, (sampled.real() - exact).cwiseAbs().maxCoeff());
    worst = std::max(worst, sampled.imag().cwiseAbs().maxCoeff());
  }
  return worst;
}

Json verify_record(const Options& opt, int& exit_code) {
  const double spectral_tol = opt.tol > 0 ? opt.tol : 1e-10;
  const double helstrom_tol = opt.tol > 0 ? opt.tol : 1e-9;
  const double montecarlo_tol = 5.0 / std::sqrt(static_cast<double>(opt.samples));

  std::vector<CheckRow> rows;
  std::uint64_t stream = 0;
  for (int n = 1; n <= opt.n_max; ++n) {
    for (int m = 1; m <= opt.m_max; ++m) {
      const ProblemSize size(n, m);
      rows.push_back({"embedding-orthonormality", n, m,
                      orthonormality_defect(size), 1e-12, ""});
      rows.push_back({"mean-state-structure", n, m, mean_state_defect(size),
                      1e-10, ""});
      rows.push_back({"spectrum-recurrence", n, m, exact_spectrum_defect(size),
                      0.0, ""});
      rows.push_back({"chain-mirror-invariants", n, m, chain_defect(size), 0.0,
                      ""});
      rows.push_back({"global-svd-spectrum", n, m, svd_spectrum_defect(size),
                      spectral_tol, ""});
      rows.push_back({"helstrom-grid", n, m, helstrom_defect(size),
                      helstrom_tol, ""});
      rows.push_back({"montecarlo-mean-state", n, m,
                      montecarlo_defect(size, opt.samples,
                                        opt.seed + 7919 * stream++),
                      montecarlo_tol, ""});
    }
  }

  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  for (CheckRow& row : rows) {
    if (row.name == "montecarlo-mean-state" && row.tolerance >= 0.1) {
      row.status = "inconclusive";
      ++inconclusive;
    } else if (row.deviation <= row.tolerance) {
      row.status = "pass";
      ++passed;
    } else {
      row.status = "fail";
      ++failed;
    }
  }

  Json record = make_record("verify");
  record["parameters"]["n_max"] = opt.n_max;
  record["parameters"]["m_max"] = opt.m_max;
  record["parameters"]["samples"] = opt.samples;
  record["parameters"]["seed"] = opt.seed;
  record["parameters"]["tol"] = opt.tol;
  record["provenance"]["seed"] = opt.seed;
  record["provenance"]["samples"] = opt.samples;
  record["provenance"]["tolerances"]["orthonormality"] = 1e-12;
  record["provenance"]["tolerances"]["mean_state"] = 1e-10;
  record["provenance"]["tolerances"]["exact_equality"] = 0.0;
  record["provenance"]["tolerances"]["spectral"] = spectral_tol;
  record["provenance"]["tolerances"]["helstrom"] = helstrom_tol;
  record["provenance"]["tolerances"]["montecarlo"] = montecarlo_tol;

  Json checks = Json::array();
  for (const CheckRow& row : rows) {
    Json node;
    node["name"] = row.name;
    node["n"] = row.n;
    node["m"] = row.m;
    node["deviation"] = row.deviation;
    node["tolerance"] = row.tolerance;
    node["status"] = row.status;
    checks.push_back(node);
  }
  record["results"]["checks"] = checks;
  record["results"]["summary"]["checks"] = static_cast<int>(rows.size());
  record["results"]["summary"]["passed"] = passed;
  record["results"]["summary"]["failed"] = failed;
  record["results"]["summary"]["inconclusive"] = inconclusive;

  exit_code = failed > 0 ? kExitVerifyFailed : kExitOk;
  return record;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  Options opt;

  CLI::App app{"programmable discrimination of unknown qubit states"};
  app.name("progdisc");
  app.require_subcommand(1);

  const auto add_size = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "program copies per side")->required();
    sub->add_option("--m", opt.m, "data copies")->required();
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output,
                    "write to this file instead of stdout (relative paths "
                    "resolve under PROGDISC_OUT_DIR)");
  };

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "overlap spectrum with multiplicities");
  add_size(spectrum_cmd);
  add_format(spectrum_cmd);
  add_output(spectrum_cmd);

  CLI::App* unamb_cmd = app.add_subcommand(
      "unambiguous", "optimal unambiguous discrimination report");
  CLI::App* minerr_cmd =
      app.add_subcommand("min-error", "minimum-error discrimination report");
  for (CLI::App* sub : {unamb_cmd, minerr_cmd}) {
    add_size(sub);
    sub->add_option("--eta", opt.eta,
                    "prior of the first hypothesis, decimal or p/q");
    add_format(sub);
    add_output(sub);
  }

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "tabulate probabilities over an eta grid");
  add_size(scan_cmd);
  scan_cmd->add_option("--eta-min", opt.eta_min, "grid start");
  scan_cmd->add_option("--eta-max", opt.eta_max, "grid end");
  scan_cmd->add_option("--steps", opt.steps, "grid points");
  add_format(scan_cmd);
  add_output(scan_cmd);

  CLI::App* chains_cmd = app.add_subcommand(
      "chains", "basis-vector chains with exact cross overlaps (JSON)");
  add_size(chains_cmd);
  chains_cmd->add_option("--total", opt.total,
                         "only the chain at this total excitation");
  add_output(chains_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check closed forms against the dense oracle (JSON)");
  verify_cmd->add_option("--n-max", opt.n_max, "largest n to sweep");
  verify_cmd->add_option("--m-max", opt.m_max, "largest m to sweep");
  verify_cmd->add_option("--samples", opt.samples, "Monte-Carlo sample count");
  verify_cmd->add_option("--seed", opt.seed, "Monte-Carlo seed");
  verify_cmd->add_option("--tol", opt.tol,
                         "override the spectral and Helstrom tolerances");
  add_output(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out_stream;
    std::ostringstream err_stream;
    const int code = app.exit(e, out_stream, err_stream);
    result.out = out_stream.str();
    result.err = err_stream.str();
    result.exit_code = code == 0 ? kExitOk : kExitBadArguments;
    return result;
  }

  try {
    if (app.got_subcommand(spectrum_cmd)) {
      const ProblemSize size(opt.n, opt.m);
      const std::string text = opt.format == "csv"
                                   ? spectrum_csv(size)
                                   : render_json(spectrum_record(size));
      deliver(text, opt.output, result);
    } else if (app.got_subcommand(unamb_cmd) || app.got_subcommand(minerr_cmd)) {
      const ProblemSize size(opt.n, opt.m);
      const DiscriminationReport report =
          discrimination_report(size, parse_eta(opt.eta));
      const std::string command =
          app.got_subcommand(unamb_cmd) ? "unambiguous" : "min-error";
      const std::string text = opt.format == "csv"
                                   ? report_csv(report)
                                   : render_json(report_record(command, report));
      deliver(text, opt.output, result);
    } else if (app.got_subcommand(scan_cmd)) {
      const ProblemSize size(opt.n, opt.m);
      if (opt.steps < 2) {
        throw std::invalid_argument("scan needs at least 2 steps");
      }
      if (!(opt.eta_min < opt.eta_max)) {
        throw std::invalid_argument("scan needs eta-min < eta-max");
      }
      (void)Priors::from_double(opt.eta_min);
      (void)Priors::from_double(opt.eta_max);
      const std::vector<ScanRow> rows =
          scan_rows(size, opt.eta_min, opt.eta_max, opt.steps);
      const std::string text =
          opt.format == "csv"
              ? scan_csv(rows)
              : render_json(
                    scan_record(size, opt.eta_min, opt.eta_max, opt.steps, rows));
      deliver(text, opt.output, result);
    } else if (app.got_subcommand(chains_cmd)) {
      const ProblemSize size(opt.n, opt.m);
      deliver(render_json(chains_record(size, opt.total)), opt.output, result);
    } else if (app.got_subcommand(verify_cmd)) {
      if (opt.n_max < 1 || opt.m_max < 1) {
        throw std::invalid_argument("verify needs n-max >= 1 and m-max >= 1");
      }
      if (opt.samples < 1) {
        throw std::invalid_argument("verify needs a positive sample count");
      }
      int exit_code = kExitOk;
      const Json record = verify_record(opt, exit_code);
      if (deliver(render_json(record), opt.output, result)) {
        result.exit_code = exit_code;
      }
    }
  } catch (const std::invalid_argument& e) {
    result.err += std::string(e.what()) + "\n";
    result.exit_code = kExitBadArguments;
  } catch (const std::out_of_range& e) {
    result.err += std::string(e.what()) + "\n";
    result.exit_code = kExitBadArguments;
  }
  return result;
}

}  // namespace progdisc
