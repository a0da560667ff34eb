#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibcat {

enum class ErrorCode {
    MissingComposite,
    IllTypedComposite,
    NonAssociative,
    IdentityLawBroken,
    DuplicateName,
    UnknownObject,
    UnknownMorphism,
    NotAFunctor,
    NotNatural,
    DomainMismatch,
    CodomainMismatch,
    BoundaryMismatch,
    SizeExceeded,
    SquareDoesNotCommute,
    NotAPullback,
    PastingMismatch,
    NoSuchTwoCell,
    IncompatibleData,
    InvalidCleavage,
    NotProne,
    TheoremViolation,
    SyntaxError,
    UnknownReference,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// One law violation found while validating a category description.
struct Violation {
    ErrorCode code;
    std::string detail;
};

/// Raised by category validation; carries every violation found, not just the first.
class CategoryError : public Error {
public:
    explicit CategoryError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

}  // namespace fibcat
