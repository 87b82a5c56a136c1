#ifndef DIRAC1D_ERRORS_HPP
#define DIRAC1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirac1d {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- core ------------------------------------------------------------------
struct DegenerateChannel : Error { using Error::Error; };
struct SingularMatching  : Error { using Error::Error; };

// -- expression DSL ---------------------------------------------------------
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t off, std::string expect)
        : Error(msg + " at offset " + std::to_string(off) +
                (expect.empty() ? "" : " (expected " + expect + ")")),
          offset(off), expected(std::move(expect)) {}
    std::size_t offset;
    std::string expected;
};
struct UnknownFunction   : Error { using Error::Error; };
struct UnknownIdentifier : Error { using Error::Error; };
struct UnboundParameter  : Error { using Error::Error; };
struct EvaluationPole    : Error { using Error::Error; };

// -- potentials --------------------------------------------------------------
struct ZeroShift     : Error { using Error::Error; };
struct PoleOnAxis    : Error { using Error::Error; };
struct LimitMismatch : Error { using Error::Error; };

// -- integrator ---------------------------------------------------------------
struct StepLimitExceeded   : Error { using Error::Error; };
struct SingularBasis       : Error { using Error::Error; };
struct WrongPotentialClass : Error { using Error::Error; };

// -- analytic -----------------------------------------------------------------
struct NotScattering     : Error { using Error::Error; };
struct OutOfStatedDomain : Error { using Error::Error; };
struct UnsupportedModel  : Error { using Error::Error; };
struct ShiftDomain       : Error { using Error::Error; };

// -- susy -----------------------------------------------------------------------
struct SingularMap     : Error { using Error::Error; };
struct ThresholdEnergy : Error { using Error::Error; };
struct GridTooCoarse   : Error { using Error::Error; };

// -- boundstates ------------------------------------------------------------------
struct NoBracket      : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };

} // namespace dirac1d

#endif
