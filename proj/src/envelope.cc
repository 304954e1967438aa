#include "hypocert/envelope.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "hypocert/error.h"
#include "hypocert/parallel.h"

namespace hypocert {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_grid(std::span<const double> grid) {
  if (grid.empty() || grid.front() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "time grid must start at 0");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "time grid must be increasing");
    }
  }
}

void append_number(std::string& out, double value) {
  if (std::isnan(value)) {
    out += "nan";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

}  // namespace

std::vector<ComplexVector> simulate_mode(const ComplexMatrix& C_eta,
                                         const ComplexVector& x0,
                                         std::span<const double> time_grid) {
  require_grid(time_grid);
  std::vector<ComplexVector> trajectory;
  trajectory.reserve(time_grid.size());
  for (double t : time_grid) trajectory.push_back(propagator(C_eta, t) * x0);
  return trajectory;
}

EnvelopeReport check_envelopes(const OperatorSplit& split,
                               const LongTimeCertificate& long_cert,
                               const ShortTimeCertificate& short_cert,
                               std::span<const double> etas,
                               std::span<const double> time_grid, double tol) {
  if (time_grid.empty() || etas.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty eta or time grid");
  }
  EnvelopeReport report;
  report.etas.assign(etas.begin(), etas.end());
  report.time_grid.assign(time_grid.begin(), time_grid.end());
  report.tolerance = tol;

  const std::size_t ne = etas.size();
  const std::size_t nt = time_grid.size();
  const std::vector<double> row(nt, kNaN);
  report.measured.assign(ne, row);
  report.env_long.assign(ne, row);
  report.env_short.assign(ne, row);
  report.margin_long.assign(ne, row);
  report.margin_short.assign(ne, row);

  std::vector<ComplexMatrix> generators;
  generators.reserve(ne);
  for (double eta : etas) generators.push_back(build_C_eta(split, eta));

  parallel_for(ne * nt, [&](std::size_t k) {
    const std::size_t i = k / nt;
    const std::size_t j = k % nt;
    const double t = time_grid[j];
    const double eta = etas[i];
    const double measured = propagator_norm(generators[i], t);
    report.measured[i][j] = measured;
    report.env_long[i][j] = envelope_long(long_cert, eta, t);
    report.margin_long[i][j] = report.env_long[i][j] - measured;
    if (t <= short_cert.tau) {
      report.env_short[i][j] = envelope_short(short_cert, t);
      report.margin_short[i][j] = report.env_short[i][j] - measured;
    }
  });

  report.min_margin_long = std::numeric_limits<double>::infinity();
  report.min_margin_short = std::numeric_limits<double>::infinity();
  report.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double ml = report.margin_long[i][j];
      const double ms = report.margin_short[i][j];
      report.min_margin_long = std::min(report.min_margin_long, ml);
      if (!std::isnan(ms)) {
        report.min_margin_short = std::min(report.min_margin_short, ms);
      }
      const double cell = std::isnan(ms) ? ml : std::min(ml, ms);
      if (cell < report.min_margin) {
        report.min_margin = cell;
        report.worst_eta = i;
        report.worst_t = j;
      }
    }
  }
  report.pass = report.min_margin >= -tol;
  return report;
}

std::vector<double> default_time_grid(const LongTimeCertificate& long_cert,
                                      const ShortTimeCertificate& short_cert,
                                      int points) {
  if (points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two grid points");
  }
  const double t_max = std::max(10.0 / long_cert.lambda0, 2.0 * short_cert.tau);
  const double t_min = std::min(short_cert.tau / 100.0, t_max * 1e-6);
  std::vector<double> grid{0.0};
  const double ratio = std::log(t_max / t_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    grid.push_back(i == points - 1 ? t_max : t_min * std::exp(ratio * i));
  }
  return grid;
}

std::vector<double> linear_grid(double a, double b, int points) {
  if (points < 2 || !(b > a)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid linear grid");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = i == points - 1 ? b : a + (b - a) * i / (points - 1);
  }
  return grid;
}

AggregateBound aggregate_envelope(std::span<const double> mode_norms,
                                  const LongTimeCertificate& long_cert,
                                  const ShortTimeCertificate& short_cert,
                                  double t) {
  const double alpha = long_cert.alpha;
  if (!(alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "aggregate bound needs alpha < 1");
  }
  double sum = 0.0;
  for (double m : mode_norms) sum += m * m;

  AggregateBound out;
  out.initial_norm = std::sqrt(sum);
  const double prefactor = std::sqrt((1.0 + alpha) / (1.0 - alpha));
  out.exponential =
      std::min(1.0, prefactor * std::exp(-long_cert.lambda0 * t)) *
      out.initial_norm;
  if (t >= 0.0 && t <= short_cert.tau) {
    out.short_time = envelope_short(short_cert, t) * out.initial_norm;
  }
  return out;
}

std::string envelope_csv(const EnvelopeReport& report, double time_scale) {
  std::string out =
      "eta,t,measured,env_long,env_short,margin_long,margin_short\n";
  for (std::size_t i = 0; i < report.etas.size(); ++i) {
    for (std::size_t j = 0; j < report.time_grid.size(); ++j) {
      append_number(out, report.etas[i]);
      out += ',';
      append_number(out, report.time_grid[j] / time_scale);
      for (const auto* column :
           {&report.measured, &report.env_long, &report.env_short,
            &report.margin_long, &report.margin_short}) {
        out += ',';
        append_number(out, (*column)[i][j]);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace hypocert
