#include "hypocert/lorentz.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "hypocert/envelope.h"
#include "hypocert/error.h"
#include "hypocert/hcindex.h"

namespace hypocert {

namespace {

constexpr Complex kI{0.0, 1.0};

int index_or_minus_one(const HcIndexResult& r) {
  return r.m_hc.has_value() ? *r.m_hc : -1;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

double LorentzMode::n_abs() const { return std::hypot(n[0], n[1]); }

ComplexMatrix lorentz_generator(double sigma, ModeVector n, int K) {
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  if (!(sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  }
  const Eigen::Index dim = 2 * K + 1;
  ComplexMatrix M = ComplexMatrix::Zero(dim, dim);
  // cos(phi) e^{ik phi} and sin(phi) e^{ik phi} couple k to k +- 1.
  const Complex up = 0.5 * Complex(n[0], -n[1]);    // k -> k + 1
  const Complex down = 0.5 * Complex(n[0], n[1]);  // k -> k - 1
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    M(i + 1, i) = up;
    M(i, i + 1) = down;
  }
  ComplexMatrix C = sigma * ComplexMatrix::Identity(dim, dim);
  C(K, K) = 0.0;
  C += kI * M;
  return C;
}

LorentzMode lorentz_mode_operator(double sigma, ModeVector n, int K) {
  if (n[0] == 0 && n[1] == 0) {
    throw Error(ErrorCode::kZeroMode,
                "n = 0 is the conserved mode and carries no decay");
  }
  LorentzMode mode;
  mode.sigma = sigma;
  mode.n = n;
  mode.K = K;
  mode.split = hermitian_split(lorentz_generator(sigma, n, K));
  return mode;
}

double lemma1_envelope(double n_abs, double lambda0, double t) {
  if (!(n_abs >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "|n| must be >= 1");
  }
  const double prefactor = std::sqrt((2.0 * n_abs + 1.0) / (2.0 * n_abs - 1.0));
  return std::min(1.0, prefactor * std::exp(-lambda0 * t));
}

std::vector<ModeVector> mode_classes(double nmax) {
  std::map<int, ModeVector> classes;
  const int bound = static_cast<int>(std::floor(nmax));
  for (int a = 1; a <= bound; ++a) {
    for (int b = 0; b <= a; ++b) {
      const int norm2 = a * a + b * b;
      if (norm2 > nmax * nmax) continue;
      classes.emplace(norm2, ModeVector{a, b});
    }
  }
  std::vector<ModeVector> out;
  for (const auto& [norm2, n] : classes) out.push_back(n);
  return out;
}

std::vector<std::pair<std::string, double>> certificate_constants(
    const Certification& cert) {
  const LongTimeCertificate& l = cert.long_cert;
  const ShortTimeCertificate& s = cert.short_cert;
  return {{"kappa1", l.kappa1},       {"gamma", l.gamma},
          {"lam_min_J21", l.lam_min_J21}, {"lam_max_J21", l.lam_max_J21},
          {"omega", l.omega},         {"eps", l.eps},
          {"kappa2", l.kappa2},       {"alpha", l.alpha},
          {"lambda0", l.lambda0},     {"beta", s.beta},
          {"kappa3", s.kappa3},       {"delta_short", s.delta_short},
          {"tau1", s.tau1},           {"tau2", s.tau2},
          {"tau3", s.tau3},           {"tau", s.tau},
          {"r", s.r},                 {"c", s.c}};
}

Lemma1Report reproduce_lemma1(double sigma, std::span<const ModeVector> n_list,
                              int K, std::span<const double> time_grid,
                              double tol, double truncation_guard) {
  Lemma1Report report;
  report.sigma = sigma;
  report.K = K;
  report.tolerance = tol;

  report.cert = certify(lorentz_mode_operator(sigma, {1, 0}, K).split);
  report.cert_2K = certify(lorentz_mode_operator(sigma, {1, 0}, 2 * K).split);

  const auto base = certificate_constants(report.cert);
  const auto refined = certificate_constants(report.cert_2K);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double change = std::abs(refined[i].second - base[i].second) /
                          std::max(std::abs(base[i].second),
                                   std::numeric_limits<double>::min());
    report.relative_changes.emplace_back(base[i].first, change);
    report.max_relative_change = std::max(report.max_relative_change, change);
  }
  if (report.max_relative_change > truncation_guard) {
    throw Error(ErrorCode::kTruncationUnstable,
                "certificate constants moved by " +
                    std::to_string(report.max_relative_change) +
                    " between K and 2K");
  }

  const LongTimeCertificate& long_cert = report.cert.long_cert;
  const ShortTimeCertificate& short_cert = report.cert.short_cert;
  // Normalized time is sigma * t.
  const double scale = report.cert.time_scale;
  std::vector<double> grid_norm;
  if (time_grid.empty()) {
    grid_norm = default_time_grid(long_cert, short_cert);
  } else {
    grid_norm.assign(time_grid.begin(), time_grid.end());
    for (double& t : grid_norm) t *= scale;
  }
  const std::vector<double> short_norm = linear_grid(0.0, short_cert.tau, 200);
  for (double t : grid_norm) report.time_grid.push_back(t / scale);
  for (double t : short_norm) report.short_time_grid.push_back(t / scale);

  report.pass = long_cert.lambda0 > 0.0;
  for (const ModeVector& n : n_list) {
    const LorentzMode mode = lorentz_mode_operator(sigma, n, K);
    Lemma1Mode result;
    result.n = n;
    result.n_abs = mode.n_abs();

    const OperatorSplit normalized = normalize(mode.split, nullptr);
    result.m_hc_C = index_or_minus_one(
        hc_index(normalized, HcVariant::kCBased, 4));
    result.m_hc_S = index_or_minus_one(
        hc_index(normalized, HcVariant::kSBased, 4));

    // Scale the skew part so that eta = |n| reproduces this mode.
    OperatorSplit family;
    family.R = normalized.R;
    family.J = normalized.J / result.n_abs;
    family.C = family.R - family.J;
    family.norm_R = normalized.norm_R;
    const std::vector<double> eta{result.n_abs};

    const EnvelopeReport long_report =
        check_envelopes(family, long_cert, short_cert, eta, grid_norm, tol);
    const EnvelopeReport short_report =
        check_envelopes(family, long_cert, short_cert, eta, short_norm, tol);

    result.measured = long_report.measured[0];
    result.measured_short = short_report.measured[0];
    result.min_margin_long = long_report.min_margin_long;
    result.min_margin_short = short_report.min_margin_short;
    result.min_margin_lemma1 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid_norm.size(); ++j) {
      const double env =
          lemma1_envelope(result.n_abs, long_cert.lambda0, grid_norm[j]);
      result.min_margin_lemma1 =
          std::min(result.min_margin_lemma1, env - result.measured[j]);
    }
    result.pass = result.m_hc_C == 1 && result.m_hc_S == 1 &&
                  result.min_margin_long >= -tol &&
                  result.min_margin_lemma1 >= -tol &&
                  result.min_margin_short >= -tol;
    report.pass = report.pass && result.pass;
    report.modes.push_back(std::move(result));
  }
  return report;
}

std::string lemma1_csv(const Lemma1Report& report) {
  const LongTimeCertificate& long_cert = report.cert.long_cert;
  const ShortTimeCertificate& short_cert = report.cert.short_cert;
  const double scale = report.cert.time_scale;
  std::string out = "n1,n2,n_abs,t,measured,env_long,env_lemma1,env_short\n";
  auto emit = [&](const Lemma1Mode& mode, double t, double measured) {
    const double tn = t * scale;
    const double env_short =
        tn <= short_cert.tau ? envelope_short(short_cert, tn)
                             : std::numeric_limits<double>::quiet_NaN();
    out += std::to_string(mode.n[0]) + ',' + std::to_string(mode.n[1]) + ',' +
           format_number(mode.n_abs) + ',' + format_number(t) + ',' +
           format_number(measured) + ',' +
           format_number(envelope_long(long_cert, mode.n_abs, tn)) + ',' +
           format_number(lemma1_envelope(mode.n_abs, long_cert.lambda0, tn)) +
           ',' + (std::isnan(env_short) ? "nan" : format_number(env_short)) +
           '\n';
  };
  for (const Lemma1Mode& mode : report.modes) {
    for (std::size_t j = 0; j < report.short_time_grid.size(); ++j) {
      emit(mode, report.short_time_grid[j], mode.measured_short[j]);
    }
    for (std::size_t j = 0; j < report.time_grid.size(); ++j) {
      emit(mode, report.time_grid[j], mode.measured[j]);
    }
  }
  return out;
}

}  // namespace hypocert
