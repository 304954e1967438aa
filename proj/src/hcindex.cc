#include "hypocert/hcindex.h"

#include <algorithm>
#include <string>

#include "hypocert/error.h"

namespace hypocert {

namespace {

// Running sum of the chosen coercivity series; term(j) is the j-th summand.
class CoercivitySeries {
 public:
  CoercivitySeries(const OperatorSplit& split, HcVariant variant)
      : R_(split.R), variant_(variant) {
    // C_S = -J; for the S-based sum the factor applied on the left is C_S.
    step_ = variant == HcVariant::kCBased ? split.C : ComplexMatrix(-split.J);
    power_ = ComplexMatrix::Identity(split.dim(), split.dim());
    sum_ = ComplexMatrix::Zero(split.dim(), split.dim());
  }

  // Adds the next summand and returns the updated sum.
  const ComplexMatrix& advance() {
    if (variant_ == HcVariant::kCBased) {
      sum_ += power_.adjoint() * R_ * power_;
      power_ = power_ * step_;
    } else {
      sum_ += power_ * R_ * power_.adjoint();
      power_ = step_ * power_;
    }
    return sum_;
  }

 private:
  const ComplexMatrix& R_;
  HcVariant variant_;
  ComplexMatrix step_;
  ComplexMatrix power_;
  ComplexMatrix sum_;
};

}  // namespace

const char* to_string(HcVariant variant) {
  return variant == HcVariant::kCBased ? "C_based" : "S_based";
}

HcIndexResult hc_index(const OperatorSplit& split, HcVariant variant, int max_m,
                       double coercivity_tol) {
  if (max_m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_m must be >= 1");
  }
  HcIndexResult result;
  result.variant = variant;
  const double threshold = coercivity_tol * split.norm_R;

  CoercivitySeries series(split, variant);
  for (int m = 0; m <= max_m; ++m) {
    const double lam = min_eigenvalue(series.advance());
    result.partial_sums_min_eigs.push_back(lam);
    result.kappa = lam;
    if (split.norm_R > 0.0 && lam > threshold) {
      result.m_hc = m;
      break;
    }
  }
  return result;
}

double kappa1(const OperatorSplit& split, double coercivity_tol) {
  const ComplexMatrix sum = split.R + split.J * split.R * split.J.adjoint();
  const double k1 = min_eigenvalue(sum);
  if (!(k1 > coercivity_tol * split.norm_R) || split.norm_R == 0.0) {
    throw Error(ErrorCode::kIndexTooHigh,
                "lambda_min(R + J R J*) = " + std::to_string(k1) +
                    " is not positive; the index exceeds 1");
  }
  return k1;
}

LyapunovP build_P(const OperatorSplit& split, int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be >= 0");
  const Eigen::Index n = split.dim();
  LyapunovP out;
  out.P = ComplexMatrix::Zero(n, n);
  ComplexMatrix power = ComplexMatrix::Identity(n, n);
  for (int j = 0; j <= m; ++j) {
    out.P += power.adjoint() * power;
    power = power * split.C;
  }
  out.P = hermitian_part(out.P);
  out.norm_P = max_eigenvalue(out.P);

  CoercivitySeries c_series(split, HcVariant::kCBased);
  CoercivitySeries s_series(split, HcVariant::kSBased);
  const ComplexMatrix* c_sum = nullptr;
  const ComplexMatrix* s_sum = nullptr;
  for (int j = 0; j <= m; ++j) {
    c_sum = &c_series.advance();
    s_sum = &s_series.advance();
  }
  out.kappa_C = min_eigenvalue(*c_sum);
  out.kappa_S = min_eigenvalue(*s_sum);
  out.rate_C = out.kappa_C / out.norm_P;
  out.rate_S = out.kappa_S / out.norm_P;
  return out;
}

}  // namespace hypocert
