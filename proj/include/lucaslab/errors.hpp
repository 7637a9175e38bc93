#pragma once

#include <stdexcept>
#include <string>

namespace lucaslab {

// Base class for everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct EvenDenominator : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct UndefinedForUnity : Error { using Error::Error; };
struct DegenerateTerm : Error { using Error::Error; };
struct RankAbsent : Error { using Error::Error; };
struct NotDivisorOfDelta : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct NoWitnessFound : Error { using Error::Error; };
struct ExcludedModulus : Error { using Error::Error; };
struct ExcludedCase : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct EnumerationOverflow : Error { using Error::Error; };

} // namespace lucaslab
