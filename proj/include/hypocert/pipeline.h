#pragma once

#include <vector>

#include "hypocert/hcindex.h"
#include "hypocert/linops.h"
#include "hypocert/longtime.h"
#include "hypocert/shorttime.h"
#include "hypocert/staircase.h"

namespace hypocert {

struct CertifyOptions {
  double accretivity_tol = kDefaultAccretivityTol;
  double coercivity_tol = kDefaultCoercivityTol;
  double rank_tol = kDefaultRankTol;
  int max_m = 4;
  std::vector<double> delta_schur_grid = default_delta_schur_grid();
};

/// Long- and short-time certificates for the family C_eta = R - eta J.
///
/// All certificate quantities refer to the normalized operator C / ||R||,
/// whose time variable is time_scale * t. Use the *_user helpers for values
/// in the caller's time units.
struct Certification {
  double time_scale = 1.0;  // ||R|| of the input operator
  OperatorSplit split;      // normalized: ||R|| = 1
  HcIndexResult index_C;
  HcIndexResult index_S;
  StaircaseForm staircase;
  LongTimeCertificate long_cert;
  ShortTimeCertificate short_cert;

  double lambda0_user() const { return long_cert.lambda0 * time_scale; }
  double tau_user() const { return short_cert.tau / time_scale; }
  double c_user() const {
    return short_cert.c * time_scale * time_scale * time_scale;
  }
};

/// Divides C by ||R|| so that the normalized Hermitian part has unit norm.
OperatorSplit normalize(const OperatorSplit& split, double* scale);

/// Full pipeline: normalization, index check (must be 1 under both
/// conditions), staircase form, long- and short-time certificates.
/// Throws kCoerciveCase for index 0 and kIndexTooHigh otherwise.
Certification certify(const OperatorSplit& split,
                      const CertifyOptions& options = {});

}  // namespace hypocert
