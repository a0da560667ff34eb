#include "fibcat/error.hpp"

namespace fibcat {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MissingComposite: return "MissingComposite";
        case ErrorCode::IllTypedComposite: return "IllTypedComposite";
        case ErrorCode::NonAssociative: return "NonAssociative";
        case ErrorCode::IdentityLawBroken: return "IdentityLawBroken";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::UnknownObject: return "UnknownObject";
        case ErrorCode::UnknownMorphism: return "UnknownMorphism";
        case ErrorCode::NotAFunctor: return "NotAFunctor";
        case ErrorCode::NotNatural: return "NotNatural";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::CodomainMismatch: return "CodomainMismatch";
        case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorCode::SizeExceeded: return "SizeExceeded";
        case ErrorCode::SquareDoesNotCommute: return "SquareDoesNotCommute";
        case ErrorCode::NotAPullback: return "NotAPullback";
        case ErrorCode::PastingMismatch: return "PastingMismatch";
        case ErrorCode::NoSuchTwoCell: return "NoSuchTwoCell";
        case ErrorCode::IncompatibleData: return "IncompatibleData";
        case ErrorCode::InvalidCleavage: return "InvalidCleavage";
        case ErrorCode::NotProne: return "NotProne";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownReference: return "UnknownReference";
    }
    return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& vs) {
    std::string msg = std::to_string(vs.size()) + " violation(s)";
    for (std::size_t i = 0; i < vs.size() && i < 8; ++i) {
        msg += "; ";
        msg += to_string(vs[i].code);
        msg += " ";
        msg += vs[i].detail;
    }
    return msg;
}

ErrorCode first_code(const std::vector<Violation>& vs) {
    return vs.empty() ? ErrorCode::MissingComposite : vs.front().code;
}

}  // namespace

CategoryError::CategoryError(std::vector<Violation> violations)
    : Error(first_code(violations), summarize(violations)), violations_(std::move(violations)) {}

}  // namespace fibcat
