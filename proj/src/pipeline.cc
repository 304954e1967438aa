#include "hypocert/pipeline.h"

#include <string>

#include "hypocert/error.h"

namespace hypocert {

OperatorSplit normalize(const OperatorSplit& split, double* scale) {
  const double s = split.norm_R;
  if (!(s > 0.0)) {
    throw Error(ErrorCode::kIndexTooHigh,
                "Hermitian part vanishes; the operator is not hypocoercive");
  }
  if (scale != nullptr) *scale = s;
  OperatorSplit out;
  out.C = split.C / s;
  out.R = split.R / s;
  out.J = split.J / s;
  out.norm_R = max_eigenvalue(out.R);
  return out;
}

Certification certify(const OperatorSplit& split, const CertifyOptions& options) {
  Certification cert;
  cert.split = normalize(split, &cert.time_scale);

  cert.index_C = hc_index(cert.split, HcVariant::kCBased, options.max_m,
                          options.coercivity_tol);
  cert.index_S = hc_index(cert.split, HcVariant::kSBased, options.max_m,
                          options.coercivity_tol);
  for (const HcIndexResult* index : {&cert.index_C, &cert.index_S}) {
    if (index->m_hc == 0) {
      throw Error(ErrorCode::kCoerciveCase,
                  "Hermitian part is coercive; decay rate is lambda_min(R)");
    }
    if (index->m_hc != 1) {
      throw Error(ErrorCode::kIndexTooHigh,
                  std::string("hypocoercivity index (") + to_string(index->variant) +
                      ") is not 1");
    }
  }

  cert.staircase = staircase_form(cert.split, options.rank_tol);
  cert.long_cert = long_time_certificate(cert.split, cert.staircase,
                                         options.delta_schur_grid);
  cert.short_cert = short_time_certificate(cert.split, cert.long_cert);
  return cert;
}

}  // namespace hypocert
