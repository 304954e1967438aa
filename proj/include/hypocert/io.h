#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hypocert/envelope.h"
#include "hypocert/hcindex.h"
#include "hypocert/linops.h"
#include "hypocert/longtime.h"
#include "hypocert/lorentz.h"
#include "hypocert/pipeline.h"
#include "hypocert/shorttime.h"
#include "hypocert/staircase.h"

namespace hypocert {

using Json = nlohmann::json;

/// {"rows": n, "cols": m, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ComplexMatrix& M);
/// Throws kParse on malformed input or an entry count other than rows*cols.
ComplexMatrix matrix_from_json(const Json& j);

/// {"m_hc": int | "inf", "m_hc_S": ..., "kappa_C", "kappa_S", "kappa1"}
Json index_fragment(const HcIndexResult& index_C, const HcIndexResult& index_S,
                    double kappa1);

Json to_json(const HcIndexResult& index);
Json to_json(const StaircaseForm& sf);
Json to_json(const LongTimeCertificate& cert);
Json to_json(const ShortTimeCertificate& cert);
LongTimeCertificate long_certificate_from_json(const Json& j);
ShortTimeCertificate short_certificate_from_json(const Json& j);

/// Long- and short-time certificates, index fragment, staircase dims and
/// the time normalization, plus the same rates and times in input units.
Json certification_to_json(const Certification& cert);

Json envelope_summary(const EnvelopeReport& report, double time_scale = 1.0);
Json lemma1_summary(const Lemma1Report& report);

Json read_json_file(const std::string& path);
ComplexMatrix read_matrix_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace hypocert
