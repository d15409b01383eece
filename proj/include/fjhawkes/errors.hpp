#pragma once

#include <stdexcept>
#include <string>

namespace fjhawkes {

// Root of the library's failure taxonomy. Callers that only need coarse
// handling can catch this; the CLI maps subtypes onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// dense kernels
class DimensionMismatch : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class NoConvergence : public Error { public: using Error::Error; };
class ZeroRow : public Error { public: using Error::Error; };

// model and simulation
class ValidationError : public Error { public: using Error::Error; };
class EmptyHistory : public Error { public: using Error::Error; };

// equilibrium
class SingularSystem : public Error { public: using Error::Error; };
class DegenerateDenominator : public Error { public: using Error::Error; };

// stability
class ExcludedPoint : public Error { public: using Error::Error; };
class NoBracket : public Error { public: using Error::Error; };

// configuration and reporting
class InvalidSpec : public Error { public: using Error::Error; };
// Degenerate or reversed sampling interval; a special case of a bad spec.
class InvalidRange : public InvalidSpec { public: using InvalidSpec::InvalidSpec; };
class ParseError : public Error { public: using Error::Error; };
class EmptySeries : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

}  // namespace fjhawkes
