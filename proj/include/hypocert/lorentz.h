#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypocert/linops.h"
#include "hypocert/pipeline.h"

namespace hypocert {

using ModeVector = std::array<int, 2>;

inline constexpr int kDefaultLorentzTruncation = 32;
inline constexpr double kTruncationGuard = 0.05;

/// One spatial Fourier mode of the Lorentz kinetic equation on T^2 x S^1,
/// discretized in velocity by e^{ik phi}, |k| <= K (index k + K).
///
/// C = sigma (I - P0) + i M, with P0 the projector onto k = 0 and M the
/// multiplication by v . n = n1 cos(phi) + n2 sin(phi).
struct LorentzMode {
  double sigma = 1.0;
  ModeVector n{1, 0};
  int K = kDefaultLorentzTruncation;
  OperatorSplit split;

  double n_abs() const;
};

/// The mode generator without the n != 0 check.
ComplexMatrix lorentz_generator(double sigma, ModeVector n, int K);

/// Throws kZeroMode for n = (0, 0).
LorentzMode lorentz_mode_operator(double sigma, ModeVector n, int K);

/// min(1, sqrt((2|n| + 1) / (2|n| - 1)) e^{-lambda0 t}).
double lemma1_envelope(double n_abs, double lambda0, double t);

/// One representative (n1 >= n2 >= 0) per rotation class |n| <= nmax,
/// sorted by |n|.
std::vector<ModeVector> mode_classes(double nmax);

struct Lemma1Mode {
  ModeVector n{};
  double n_abs = 0.0;
  int m_hc_C = -1;  // -1: not found up to the search limit
  int m_hc_S = -1;
  double min_margin_long = 0.0;
  double min_margin_lemma1 = 0.0;
  double min_margin_short = 0.0;
  std::vector<double> measured;        // on Lemma1Report::time_grid
  std::vector<double> measured_short;  // on Lemma1Report::short_time_grid
  bool pass = false;
};

struct Lemma1Report {
  double sigma = 1.0;
  int K = kDefaultLorentzTruncation;
  double tolerance = 0.0;
  Certification cert;     // truncation K, base direction (1, 0)
  Certification cert_2K;  // truncation 2K, convergence check
  /// Relative change of each certificate constant between K and 2K.
  std::vector<std::pair<std::string, double>> relative_changes;
  double max_relative_change = 0.0;
  std::vector<double> time_grid;        // caller's time units
  std::vector<double> short_time_grid;  // [0, tau] in caller's units
  std::vector<Lemma1Mode> modes;
  bool pass = false;
};

/// Columns n1,n2,n_abs,t,measured,env_long,env_lemma1,env_short.
std::string lemma1_csv(const Lemma1Report& report);

/// Certificate constants paired with names, in a fixed order.
std::vector<std::pair<std::string, double>> certificate_constants(
    const Certification& cert);

/// Certifies the base mode once and checks every mode in n_list against the
/// eta = |n| envelopes. An empty time_grid selects the default grid.
/// Throws kTruncationUnstable if a constant moves by more than
/// truncation_guard (relative) between K and 2K.
Lemma1Report reproduce_lemma1(double sigma, std::span<const ModeVector> n_list,
                              int K, std::span<const double> time_grid = {},
                              double tol = 1e-9,
                              double truncation_guard = kTruncationGuard);

}  // namespace hypocert
