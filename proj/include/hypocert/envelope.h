#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypocert/linops.h"
#include "hypocert/longtime.h"
#include "hypocert/shorttime.h"

namespace hypocert {

inline constexpr double kDefaultEnvelopeTol = 1e-9;

/// x(t_i) = e^{-t_i C} x0 for an increasing grid starting at 0.
std::vector<ComplexVector> simulate_mode(const ComplexMatrix& C_eta,
                                         const ComplexVector& x0,
                                         std::span<const double> time_grid);

/// Measured ||P_eta(t)|| against both certified envelopes on an (eta, t)
/// grid. Rows are indexed by eta, columns by t. Short-time entries beyond
/// tau are NaN and excluded from the margins.
struct EnvelopeReport {
  std::vector<double> etas;
  std::vector<double> time_grid;
  std::vector<std::vector<double>> measured;
  std::vector<std::vector<double>> env_long;
  std::vector<std::vector<double>> env_short;
  std::vector<std::vector<double>> margin_long;
  std::vector<std::vector<double>> margin_short;
  double tolerance = kDefaultEnvelopeTol;
  double min_margin_long = 0.0;
  double min_margin_short = 0.0;
  double min_margin = 0.0;
  std::size_t worst_eta = 0;
  std::size_t worst_t = 0;
  bool pass = true;
};

EnvelopeReport check_envelopes(const OperatorSplit& split,
                               const LongTimeCertificate& long_cert,
                               const ShortTimeCertificate& short_cert,
                               std::span<const double> etas,
                               std::span<const double> time_grid,
                               double tol = kDefaultEnvelopeTol);

/// t = 0 followed by `points` geometrically spaced times up to
/// max(10 / lambda0, 2 tau).
std::vector<double> default_time_grid(const LongTimeCertificate& long_cert,
                                      const ShortTimeCertificate& short_cert,
                                      int points = 200);

/// `points` equally spaced values from a to b inclusive.
std::vector<double> linear_grid(double a, double b, int points);

/// Bounds on ||x(t)||_H for the direct sum of modes, given each mode's
/// initial norm. short_time is empty beyond tau.
struct AggregateBound {
  double initial_norm = 0.0;
  double exponential = 0.0;
  std::optional<double> short_time;
};

AggregateBound aggregate_envelope(std::span<const double> mode_norms,
                                  const LongTimeCertificate& long_cert,
                                  const ShortTimeCertificate& short_cert,
                                  double t);

/// Columns eta,t,measured,env_long,env_short,margin_long,margin_short.
/// Times are divided by time_scale to report them in the caller's units.
std::string envelope_csv(const EnvelopeReport& report, double time_scale = 1.0);

}  // namespace hypocert
