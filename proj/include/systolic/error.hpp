#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace systolic {

enum class Errc {
    UnknownVertex,
    SelfLoop,
    InvalidCycle,
    InvalidDisc,
    PathNotOnBoundary,
    NotFlag,
    NotSystolicDisc,
    NotGeodesic,
    BudgetExhausted,
    NotBijective,
    EdgeNotPreserved,
    RelationViolated,
    NotInvolution,
    MissingEdge,
    WrongDistance,
    NoSuchPath,
    GroupEnumerationBudgetExceeded,
    HypothesisViolated,
    DichotomyViolated,
    EmptyIntersection,
    InvalidLabeling,
    MoveInvalid,
    MissingAmbientEdge,
    DefectPatternMismatch,
    PreconditionFailed,
    ParameterOutOfRange,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Error raised by every library operation. The code is stable and is what
/// the CLI and the tests dispatch on; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace systolic
