#include "hypocert/error.h"

namespace hypocert {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNotAccretive: return "NotAccretive";
    case ErrorCode::kEtaOutOfRange: return "EtaOutOfRange";
    case ErrorCode::kIndexTooHigh: return "IndexTooHigh";
    case ErrorCode::kNoGap: return "NoGap";
    case ErrorCode::kCoerciveCase: return "CoerciveCase";
    case ErrorCode::kNotIndexOne: return "NotIndexOne";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kBracketFailure: return "BracketFailure";
    case ErrorCode::kEmptyFeasible: return "EmptyFeasible";
    case ErrorCode::kOutOfWindow: return "OutOfWindow";
    case ErrorCode::kZeroMode: return "ZeroMode";
    case ErrorCode::kTruncationUnstable: return "TruncationUnstable";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace hypocert
