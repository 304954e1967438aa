#include "cli.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <random>

#include <CLI11/CLI11.hpp>

#include "hypocert/error.h"
#include "hypocert/hcindex.h"
#include "hypocert/io.h"
#include "hypocert/staircase.h"

namespace hypocert::cli {

namespace {

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
  } else {
    write_text_file(config.output, text);
  }
}

OperatorSplit load_split(const RunConfig& config) {
  return hermitian_split(read_matrix_file(config.input), config.accretivity_tol);
}

CertifyOptions certify_options(const RunConfig& config) {
  CertifyOptions options;
  options.accretivity_tol = config.accretivity_tol;
  options.coercivity_tol = config.coercivity_tol;
  options.rank_tol = config.rank_tol;
  options.max_m = config.max_m;
  return options;
}

int run_index(const RunConfig& config, std::ostream& out) {
  const OperatorSplit split = load_split(config);
  const HcIndexResult index_C =
      hc_index(split, HcVariant::kCBased, config.max_m, config.coercivity_tol);
  const HcIndexResult index_S =
      hc_index(split, HcVariant::kSBased, config.max_m, config.coercivity_tol);
  const double k1 = min_eigenvalue(
      hermitian_part(split.R + split.J * split.R * split.J.adjoint()));
  Json j = index_fragment(index_C, index_S, k1);
  j["C_based"] = to_json(index_C);
  j["S_based"] = to_json(index_S);
  if (index_C.m_hc) {
    const LyapunovP P = build_P(split, *index_C.m_hc);
    j["lyapunov"] = {{"P", matrix_to_json(P.P)},
                     {"norm_P", P.norm_P},
                     {"rate_C", P.rate_C},
                     {"rate_S", P.rate_S}};
  }
  emit(config, dump(j), out);
  return kExitPass;
}

int run_staircase(const RunConfig& config, std::ostream& out) {
  const OperatorSplit split = load_split(config);
  emit(config, dump(to_json(staircase_form(split, config.rank_tol))), out);
  return kExitPass;
}

int run_certify(const RunConfig& config, std::ostream& out) {
  const Certification cert = certify(load_split(config), certify_options(config));
  emit(config, dump(certification_to_json(cert)), out);
  return kExitPass;
}

// Random initial data per eta, propagated and compared with the aggregate
// bounds on the direct sum of the modes.
Json aggregate_check(const OperatorSplit& split, const LongTimeCertificate& lc,
                     const ShortTimeCertificate& sc,
                     const std::vector<double>& etas,
                     const std::vector<double>& grid, std::uint64_t seed,
                     double tol) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const Eigen::Index n = split.dim();
  std::vector<std::vector<ComplexVector>> trajectories;
  std::vector<double> initial_norms;
  for (double eta : etas) {
    ComplexVector x0(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      x0(i) = Complex(re, normal(rng));
    }
    initial_norms.push_back(x0.norm());
    trajectories.push_back(simulate_mode(build_C_eta(split, eta), x0, grid));
  }
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double sum = 0.0;
    for (const auto& traj : trajectories) sum += traj[k].squaredNorm();
    const AggregateBound bound = aggregate_envelope(initial_norms, lc, sc, grid[k]);
    const double measured = std::sqrt(sum);
    min_margin = std::min(min_margin, bound.exponential - measured);
    if (bound.short_time) {
      min_margin = std::min(min_margin, *bound.short_time - measured);
    }
  }
  return {{"seed", seed},
          {"min_margin", min_margin},
          {"pass", min_margin >= -tol}};
}

int run_envelope(const RunConfig& config, std::ostream& out) {
  const OperatorSplit input = load_split(config);
  LongTimeCertificate lc;
  ShortTimeCertificate sc;
  double time_scale = 0.0;
  const OperatorSplit split = normalize(input, &time_scale);
  if (config.certificate.empty()) {
    const Certification cert = certify(input, certify_options(config));
    lc = cert.long_cert;
    sc = cert.short_cert;
  } else {
    const Json j = read_json_file(config.certificate);
    if (!j.contains("long_time") || !j.contains("short_time") ||
        !j.contains("time_scale")) {
      throw Error(ErrorCode::kParse,
                  "certificate needs long_time, short_time and time_scale");
    }
    lc = long_certificate_from_json(j.at("long_time"));
    sc = short_certificate_from_json(j.at("short_time"));
    const double cert_scale = j.at("time_scale").get<double>();
    if (std::abs(cert_scale - time_scale) > 1e-12 * time_scale) {
      throw Error(ErrorCode::kInvalidArgument,
                  "certificate time_scale does not match the input matrix");
    }
  }
  sc.c *= config.c_scale;

  std::vector<double> grid;
  if (config.tmax > 0.0) {
    const double t_max = config.tmax * time_scale;
    grid = default_time_grid(lc, sc, config.points);
    // Rescale the default geometric grid onto (0, t_max].
    const double factor = t_max / grid.back();
    for (double& t : grid) t *= factor;
  } else {
    grid = default_time_grid(lc, sc, config.points);
  }
  // Dense coverage of [0, tau] for the short-time envelope.
  const std::vector<double> short_grid = linear_grid(0.0, sc.tau, config.points);
  std::vector<double> merged = grid;
  merged.insert(merged.end(), short_grid.begin(), short_grid.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  const EnvelopeReport report = check_envelopes(split, lc, sc, config.etas,
                                                merged, config.envelope_tol);
  Json summary = envelope_summary(report, time_scale);
  summary["c_scale"] = config.c_scale;
  summary["time_scale"] = time_scale;
  const Json aggregate = aggregate_check(split, lc, sc, config.etas, merged,
                                         config.seed, config.envelope_tol);
  summary["aggregate"] = aggregate;
  const bool pass = report.pass && aggregate.at("pass").get<bool>();
  summary["pass"] = pass;

  if (!config.csv.empty()) {
    write_text_file(config.csv, envelope_csv(report, time_scale));
  }
  emit(config, dump(summary), out);
  return pass ? kExitPass : kExitEnvelopeFailure;
}

int run_lorentz(const RunConfig& config, std::ostream& out) {
  const std::vector<ModeVector> modes = mode_classes(config.nmax);
  if (modes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nmax must be >= 1");
  }
  std::vector<double> grid;
  if (config.tmax > 0.0) {
    // Geometric grid in the caller's time units.
    grid.push_back(0.0);
    const double t_min = config.tmax * 1e-6;
    const double ratio = std::log(config.tmax / t_min) / (config.points - 1);
    for (int i = 0; i < config.points; ++i) {
      grid.push_back(i == config.points - 1 ? config.tmax
                                            : t_min * std::exp(ratio * i));
    }
  }
  const Lemma1Report report = reproduce_lemma1(config.sigma, modes, config.K,
                                               grid, config.envelope_tol);
  const std::string summary = dump(lemma1_summary(report));
  if (config.out_prefix.empty()) {
    out << summary;
  } else {
    write_text_file(config.out_prefix + ".json", summary);
    write_text_file(config.out_prefix + ".csv", lemma1_csv(report));
  }
  return report.pass ? kExitPass : kExitEnvelopeFailure;
}

}  // namespace

void validate(const RunConfig& config) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be > 0");
    }
  };
  positive(config.accretivity_tol, "accretivity tolerance");
  positive(config.coercivity_tol, "coercivity tolerance");
  positive(config.rank_tol, "rank tolerance");
  positive(config.envelope_tol, "envelope tolerance");
  if (config.max_m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max-m must be >= 1");
  }
  if (config.subcommand == Subcommand::kLorentz) {
    positive(config.sigma, "sigma");
    positive(config.nmax, "nmax");
    if (config.K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  } else if (config.input.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an input matrix is required");
  }
  if (config.subcommand == Subcommand::kEnvelope) {
    if (config.etas.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "eta grid must be nonempty");
    }
    for (double eta : config.etas) {
      if (!(eta >= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "every eta must be >= 1");
      }
    }
    positive(config.c_scale, "c-scale");
  }
  if (config.points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "points must be >= 2");
  }
  if (config.tmax < 0.0 || !std::isfinite(config.tmax)) {
    throw Error(ErrorCode::kInvalidArgument, "tmax must be >= 0");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.subcommand) {
      case Subcommand::kIndex:
        return run_index(config, out);
      case Subcommand::kStaircase:
        return run_staircase(config, out);
      case Subcommand::kCertify:
        return run_certify(config, out);
      case Subcommand::kEnvelope:
        return run_envelope(config, out);
      case Subcommand::kLorentz:
        return run_lorentz(config, out);
    }
  } catch (const std::exception& e) {
    err << "hypocert: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypocoercivity certificates for finite-dimensional accretive "
               "operators"};
  app.require_subcommand(1);
  RunConfig config;

  const auto add_tolerances = [&config](CLI::App* sub) {
    sub->add_option("--accretivity-tol", config.accretivity_tol,
                    "Relative tolerance on negative eigenvalues of the "
                    "Hermitian part");
    sub->add_option("--coercivity-tol", config.coercivity_tol,
                    "Relative threshold for a coercive partial sum");
    sub->add_option("--rank-tol", config.rank_tol,
                    "Relative threshold for the kernel of the Hermitian part");
    sub->add_option("--max-m", config.max_m, "Largest index searched");
  };
  const auto add_matrix = [&config](CLI::App* sub) {
    sub->add_option("input", config.input, "Matrix JSON file")->required();
    sub->add_option("-o,--output", config.output,
                    "Write JSON here instead of standard output");
  };

  CLI::App* index = app.add_subcommand("index", "Hypocoercivity index");
  add_matrix(index);
  add_tolerances(index);
  CLI::App* staircase = app.add_subcommand("staircase", "Staircase form");
  add_matrix(staircase);
  add_tolerances(staircase);
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "Long- and short-time certificates");
  add_matrix(certify_cmd);
  add_tolerances(certify_cmd);

  CLI::App* envelope =
      app.add_subcommand("envelope", "Check measured norms against envelopes");
  add_matrix(envelope);
  add_tolerances(envelope);
  envelope->add_option("--certificate", config.certificate,
                       "Certificate JSON from `certify` (default: recompute)");
  envelope->add_option("--csv", config.csv, "Write the (eta, t) table here");
  envelope->add_option("--eta", config.etas, "Eta values (>= 1)")
      ->delimiter(',');
  envelope->add_option("--points", config.points, "Time grid points");
  envelope->add_option("--tmax", config.tmax,
                       "Time horizon in input units (default: certificate)");
  envelope->add_option("--c-scale", config.c_scale,
                       "Multiply the certified c before checking");
  envelope->add_option("--tol", config.envelope_tol, "Pass tolerance");
  envelope->add_option("--seed", config.seed,
                       "Seed for random multi-mode initial data");

  CLI::App* lorentz =
      app.add_subcommand("lorentz", "Lorentz kinetic model mode by mode");
  lorentz->add_option("--sigma", config.sigma, "Relaxation rate");
  lorentz->add_option("--nmax", config.nmax, "Largest mode magnitude |n|");
  lorentz->add_option("--K", config.K, "Velocity Fourier truncation");
  lorentz->add_option("--tmax", config.tmax,
                      "Time horizon (default: certificate)");
  lorentz->add_option("--points", config.points, "Time grid points");
  lorentz->add_option("--tol", config.envelope_tol, "Pass tolerance");
  lorentz->add_option("--out", config.out_prefix,
                      "Write <out>.csv and <out>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests print usage and succeed; other parse errors are input
    // errors.
    return app.exit(e, out, err) == 0 ? kExitPass : kExitInputError;
  }

  if (index->parsed()) config.subcommand = Subcommand::kIndex;
  if (staircase->parsed()) config.subcommand = Subcommand::kStaircase;
  if (certify_cmd->parsed()) config.subcommand = Subcommand::kCertify;
  if (envelope->parsed()) config.subcommand = Subcommand::kEnvelope;
  if (lorentz->parsed()) config.subcommand = Subcommand::kLorentz;
  return run(config, out, err);
}

}  // namespace hypocert::cli
