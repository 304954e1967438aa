#include "hypocert/io.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hypocert/error.h"

namespace hypocert {

namespace {

Json m_hc_value(const HcIndexResult& index) {
  if (index.m_hc) return *index.m_hc;
  return "inf";
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& M) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      entries.push_back({M(i, j).real(), M(i, j).imag()});
    }
  }
  return {{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "matrix must be an object");
  const auto rows = field<long long>(j, "rows");
  const auto cols = field<long long>(j, "cols");
  if (rows <= 0 || cols <= 0) {
    throw Error(ErrorCode::kParse, "rows and cols must be positive");
  }
  const Json& entries = j.at("entries");
  if (!entries.is_array() ||
      static_cast<long long>(entries.size()) != rows * cols) {
    throw Error(ErrorCode::kParse,
                "expected " + std::to_string(rows * cols) + " entries");
  }
  ComplexMatrix M(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const Json& e = entries[k];
    double re = 0.0;
    double im = 0.0;
    if (e.is_number()) {
      re = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() &&
               e[1].is_number()) {
      re = e[0].get<double>();
      im = e[1].get<double>();
    } else {
      throw Error(ErrorCode::kParse,
                  "entry " + std::to_string(k) + " is not [re, im]");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw Error(ErrorCode::kParse, "non-finite entry");
    }
    M(k / cols, k % cols) = Complex(re, im);
  }
  return M;
}

Json index_fragment(const HcIndexResult& index_C, const HcIndexResult& index_S,
                    double kappa1) {
  return {{"m_hc", m_hc_value(index_C)},
          {"m_hc_S", m_hc_value(index_S)},
          {"kappa_C", index_C.kappa},
          {"kappa_S", index_S.kappa},
          {"kappa1", kappa1}};
}

Json to_json(const HcIndexResult& index) {
  return {{"variant", to_string(index.variant)},
          {"m_hc", m_hc_value(index)},
          {"kappa", index.kappa},
          {"partial_sums_min_eigs", index.partial_sums_min_eigs}};
}

Json to_json(const StaircaseForm& sf) {
  return {{"dims", {sf.n0, sf.n1, sf.n2}},
          {"gamma", sf.gamma},
          {"rank_tol", sf.rank_tol},
          {"U", matrix_to_json(sf.U)},
          {"R00", matrix_to_json(sf.R00)},
          {"R11", matrix_to_json(sf.R11)},
          {"J00", matrix_to_json(sf.J00)},
          {"J10", matrix_to_json(sf.J10)},
          {"J11", matrix_to_json(sf.J11)},
          {"J21", matrix_to_json(sf.J21)},
          {"J22", matrix_to_json(sf.J22)}};
}

Json to_json(const LongTimeCertificate& c) {
  return {{"eps", c.eps},
          {"delta_schur", c.delta_schur},
          {"kappa1", c.kappa1},
          {"kappa2", c.kappa2},
          {"omega", c.omega},
          {"gamma", c.gamma},
          {"lam_min_J21", c.lam_min_J21},
          {"lam_max_J21", c.lam_max_J21},
          {"alpha", c.alpha},
          {"lambda0", c.lambda0},
          {"dims", {c.n0, c.n1, c.n2}},
          {"delta_schur_grid", c.delta_grid}};
}

Json to_json(const ShortTimeCertificate& c) {
  return {{"beta", c.beta},         {"theta", c.theta},
          {"kappa1", c.kappa1},     {"kappa3", c.kappa3},
          {"delta_short", c.delta_short},
          {"tau1", c.tau1},         {"tau2", c.tau2},
          {"tau3", c.tau3},         {"tau", c.tau},
          {"r", c.r},               {"r_found", c.r_found},
          {"c", c.c},               {"alpha", c.alpha},
          {"lambda0", c.lambda0}};
}

LongTimeCertificate long_certificate_from_json(const Json& j) {
  LongTimeCertificate c;
  c.eps = field<double>(j, "eps");
  c.delta_schur = field<double>(j, "delta_schur");
  c.kappa1 = field<double>(j, "kappa1");
  c.kappa2 = field<double>(j, "kappa2");
  c.omega = field<double>(j, "omega");
  c.gamma = field<double>(j, "gamma");
  c.lam_min_J21 = field<double>(j, "lam_min_J21");
  c.lam_max_J21 = field<double>(j, "lam_max_J21");
  c.alpha = field<double>(j, "alpha");
  c.lambda0 = field<double>(j, "lambda0");
  if (j.contains("dims")) {
    const auto dims = field<std::vector<long long>>(j, "dims");
    if (dims.size() == 3) {
      c.n0 = dims[0];
      c.n1 = dims[1];
      c.n2 = dims[2];
    }
  }
  if (j.contains("delta_schur_grid")) {
    c.delta_grid = field<std::vector<double>>(j, "delta_schur_grid");
  }
  return c;
}

ShortTimeCertificate short_certificate_from_json(const Json& j) {
  ShortTimeCertificate c;
  c.beta = field<double>(j, "beta");
  c.theta = field<double>(j, "theta");
  c.kappa1 = field<double>(j, "kappa1");
  c.kappa3 = field<double>(j, "kappa3");
  c.delta_short = field<double>(j, "delta_short");
  c.tau1 = field<double>(j, "tau1");
  c.tau2 = field<double>(j, "tau2");
  c.tau3 = field<double>(j, "tau3");
  c.tau = field<double>(j, "tau");
  c.r = field<double>(j, "r");
  c.r_found = j.value("r_found", true);
  c.c = field<double>(j, "c");
  c.alpha = field<double>(j, "alpha");
  c.lambda0 = field<double>(j, "lambda0");
  return c;
}

Json certification_to_json(const Certification& cert) {
  Json j;
  j["index"] = index_fragment(cert.index_C, cert.index_S, cert.long_cert.kappa1);
  j["time_scale"] = cert.time_scale;
  j["staircase_dims"] = {cert.staircase.n0, cert.staircase.n1, cert.staircase.n2};
  j["long_time"] = to_json(cert.long_cert);
  j["short_time"] = to_json(cert.short_cert);
  j["input_units"] = {{"lambda0", cert.lambda0_user()},
                      {"tau", cert.tau_user()},
                      {"c", cert.c_user()}};
  return j;
}

Json envelope_summary(const EnvelopeReport& report, double time_scale) {
  const auto worst_t = report.time_grid.empty()
                           ? 0.0
                           : report.time_grid[report.worst_t] / time_scale;
  const auto worst_eta = report.etas.empty() ? 0.0 : report.etas[report.worst_eta];
  return {{"pass", report.pass},
          {"tolerance", report.tolerance},
          {"min_margin", report.min_margin},
          {"min_margin_long", report.min_margin_long},
          {"min_margin_short", std::isfinite(report.min_margin_short)
                                   ? Json(report.min_margin_short)
                                   : Json(nullptr)},
          {"worst_eta", worst_eta},
          {"worst_t", worst_t},
          {"etas", report.etas},
          {"time_points", report.time_grid.size()}};
}

Json lemma1_summary(const Lemma1Report& report) {
  Json modes = Json::array();
  for (const Lemma1Mode& m : report.modes) {
    modes.push_back({{"n", {m.n[0], m.n[1]}},
                     {"n_abs", m.n_abs},
                     {"m_hc_C", m.m_hc_C},
                     {"m_hc_S", m.m_hc_S},
                     {"min_margin_long", m.min_margin_long},
                     {"min_margin_lemma1", m.min_margin_lemma1},
                     {"min_margin_short", m.min_margin_short},
                     {"pass", m.pass}});
  }
  Json changes = Json::object();
  for (const auto& [name, value] : report.relative_changes) changes[name] = value;
  return {{"sigma", report.sigma},
          {"K", report.K},
          {"tolerance", report.tolerance},
          {"pass", report.pass},
          {"certificate", certification_to_json(report.cert)},
          {"certificate_2K", certification_to_json(report.cert_2K)},
          {"relative_changes_K_to_2K", changes},
          {"max_relative_change", report.max_relative_change},
          {"modes", modes}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

ComplexMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json(read_json_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hypocert
