#include "systolic/error.hpp"

namespace systolic {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::InvalidCycle: return "InvalidCycle";
    case Errc::InvalidDisc: return "InvalidDisc";
    case Errc::PathNotOnBoundary: return "PathNotOnBoundary";
    case Errc::NotFlag: return "NotFlag";
    case Errc::NotSystolicDisc: return "NotSystolicDisc";
    case Errc::NotGeodesic: return "NotGeodesic";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::NotBijective: return "NotBijective";
    case Errc::EdgeNotPreserved: return "EdgeNotPreserved";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::WrongDistance: return "WrongDistance";
    case Errc::NoSuchPath: return "NoSuchPath";
    case Errc::GroupEnumerationBudgetExceeded: return "GroupEnumerationBudgetExceeded";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::DichotomyViolated: return "DichotomyViolated";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::InvalidLabeling: return "InvalidLabeling";
    case Errc::MoveInvalid: return "MoveInvalid";
    case Errc::MissingAmbientEdge: return "MissingAmbientEdge";
    case Errc::DefectPatternMismatch: return "DefectPatternMismatch";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace systolic
