#pragma once

#include <stdexcept>
#include <string>

namespace pivotlab {

enum class ErrorCode {
    DimensionMismatch,
    RankDeficient,
    SingularBasis,
    ZeroColumn,
    OptimalDictionary,
    InfeasibleStart,
    Infeasible,
    UnboundedLp,
    NoSecondValue,
    TooLarge,
    DualInfeasibleCert,
    ParseError,
    GenerationExhausted,
    Precondition,
    NoNegativeCosts,
};

/// Stable identifier used in CLI messages and reports, e.g. "RANK_DEFICIENT".
const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace pivotlab
