#pragma once

#include <stdexcept>
#include <string>

namespace padico {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NotPrime : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };

// ring arithmetic
struct ParamMismatch : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct InvalidDigitSystem : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };

// string encoding
struct UnknownSymbol : Error { using Error::Error; };
struct HoleDigit : Error { using Error::Error; };
struct MalformedFasta : Error { using Error::Error; };

// dendrograms
struct IndistinguishablePoints : Error { using Error::Error; };
struct BranchingExceedsQ : Error { using Error::Error; };
struct NotInteriorEdge : Error { using Error::Error; };

// moduli
struct DegenerateTriple : Error { using Error::Error; };
struct CollisionDetected : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };

// genus 1
struct NotInUnitBall : Error { using Error::Error; };
struct ZeroParameter : Error { using Error::Error; };
struct DegenerateLambda : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };

} // namespace padico
