#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypocert/envelope.h"
#include "hypocert/linops.h"
#include "hypocert/lorentz.h"
#include "hypocert/pipeline.h"

namespace hypocert::cli {

enum class Subcommand { kIndex, kStaircase, kCertify, kEnvelope, kLorentz };

inline constexpr int kExitPass = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitEnvelopeFailure = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::kCertify;
  std::string input;        // matrix JSON (all but lorentz)
  std::string certificate;  // envelope: certificate JSON from `certify`
  std::string output;       // JSON output; empty writes to the output stream
  std::string csv;          // envelope: CSV output path
  std::string out_prefix;   // lorentz: writes <prefix>.csv and <prefix>.json

  double accretivity_tol = kDefaultAccretivityTol;
  double coercivity_tol = kDefaultCoercivityTol;
  double rank_tol = kDefaultRankTol;
  double envelope_tol = kDefaultEnvelopeTol;
  int max_m = 4;

  // envelope
  std::vector<double> etas{1.0, 2.0, 4.0, 8.0, 16.0};
  int points = 200;
  double tmax = 0.0;     // 0 selects the default horizon
  double c_scale = 1.0;  // multiplies the certified c (falsification runs)
  std::uint64_t seed = 0;

  // lorentz
  double sigma = 1.0;
  double nmax = 8.0;
  int K = kDefaultLorentzTruncation;
};

/// Throws Error(kInvalidArgument) if a tolerance or grid setting is invalid.
void validate(const RunConfig& config);

/// Executes one subcommand. Returns 0 on pass, 2 when an envelope check
/// fails and 1 on input errors; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config and runs it. --help exits 0.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hypocert::cli
