#ifndef MODATLAS_ERRORS_HPP
#define MODATLAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modatlas {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// q-series truncation cannot honour the requested tolerance at this point.
struct InsufficientTruncation : Error { using Error::Error; };

// Fundamental-domain reduction did not terminate (point too close to the real axis).
struct NonTermination : Error { using Error::Error; };

// Tessellation depth above the supported limit.
struct DepthExceeded : Error { using Error::Error; };

// Point lies outside the branch domain W of E4^{1/2}.
struct OutsideW : Error { using Error::Error; };

// Analytic continuation could not keep the branch single-valued along the path.
struct ContinuationFailure : Error { using Error::Error; };

// 0/0 or similar local indeterminacy in a map value.
struct Indeterminate : Error { using Error::Error; };

// Requested value sits on (or too close to) a pole.
struct PoleAtPoint : Error { using Error::Error; };

// Target function vanishes on an integration contour.
struct OnContourZero : Error { using Error::Error; };

// Winding integral refused to settle near an integer.
struct NonIntegerWinding : Error { using Error::Error; };

struct CountMismatch : Error { using Error::Error; };

struct SingularPoint : Error { using Error::Error; };

// Horocycle cuts at the requested height swallow the whole tile.
struct DegenerateTile : Error { using Error::Error; };

// Evaluation too close to a singular point of an ODE (J = 0, 1, infinity; u = +-1).
struct NearSingular : Error { using Error::Error; };

// Locus tracing could not be started or continued.
struct StartNotOnLocus : Error { using Error::Error; };
struct DerivativeVanishes : Error { using Error::Error; };
struct StepCollapse : Error { using Error::Error; };

// Malformed request (CLI or API argument domain errors).
struct InvalidInput : Error { using Error::Error; };

} // namespace modatlas

#endif
