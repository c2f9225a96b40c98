#pragma once

#include <stdexcept>
#include <string>

namespace fgap {

// Base for all contract violations raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveDeterminant final : Error { using Error::Error; };
struct NotElliptic final : Error { using Error::Error; };
struct NotHyperbolic final : Error { using Error::Error; };
struct ZeroAngle final : Error { using Error::Error; };
struct PoleOverflow final : Error { using Error::Error; };
struct CoincidentPoints final : Error { using Error::Error; };
struct BadParameter final : Error { using Error::Error; };
struct NotHyperbolicSignature final : Error { using Error::Error; };
struct BudgetExceeded final : Error { using Error::Error; };
struct InsufficientPoints final : Error { using Error::Error; };
struct NoHyperbolicElements final : Error { using Error::Error; };
struct ElementaryPair final : Error { using Error::Error; };
struct WrongOrders final : Error { using Error::Error; };
struct CoincidentFixedPoints final : Error { using Error::Error; };

} // namespace fgap
