#pragma once

#include <stdexcept>

namespace quadpower {

// Domain-rule violations. The CLI maps these to exit code 1.
struct Error : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParityViolation : Error { using Error::Error; };
struct DiscMismatch : Error { using Error::Error; };
struct NotFundamental : Error { using Error::Error; };
struct InvalidLucasPair : Error { using Error::Error; };
struct FactoringLimitExceeded : Error { using Error::Error; };
struct UnsupportedDiscriminant : Error { using Error::Error; };
struct UnsupportedBranch : Error { using Error::Error; };
struct InvalidSeed : Error { using Error::Error; };
struct GenerationLimitExceeded : Error { using Error::Error; };

}  // namespace quadpower
