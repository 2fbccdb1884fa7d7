#pragma once

#include <stdexcept>
#include <string>

namespace hklat {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct NotDegreeZero : Error { using Error::Error; };
struct IsotropicClass : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct SplitFailure : Error { using Error::Error; };
struct NotHodgeType : Error { using Error::Error; };
struct ZeroRank : Error { using Error::Error; };
struct NotAtomicError : Error { using Error::Error; };
struct WitnessAmbiguous : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };
struct InvalidPeriod : Error { using Error::Error; };

}  // namespace hklat
