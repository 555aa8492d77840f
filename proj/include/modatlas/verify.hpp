#pragma once
// Verification suites: boundary-mapping checks for the conformal mapping
// theorems, seeded identity sweeps, and tile-by-tile count checks.

#include <functional>
#include <string>
#include <vector>

#include "modatlas/polymorphic.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

enum class CheckStatus { Pass, Fail, Skipped };

// Uniform pass rule: status == Pass iff worst < tol.  Inequality-style
// checks store a signed margin in `worst` with tol = 0, so loosening a
// tolerance can never turn a pass into a fail.
struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::Skipped;
    double worst = 0.0;
    double tol = 0.0;
    int samples = 0;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckEntry> entries;
    bool overall = false;  // all non-skipped entries pass
};

enum class MapTheorem { S4, S6, S2plus, S2minus };

// Boundary mapping of T0 (s4, s6) or U0 (s2+-) onto the target arc
// triangle: per-side carrier membership, strict monotonicity of the target
// parameter, vertex correspondence, interior containment, and the
// side-specific inequalities (angle above/below t, 0 < h(t) < t).
CheckReport mapping_check(MapTheorem theorem, int samples_per_side,
                          double tol);

enum class TolProfile { Default, Strict };  // Strict halves every tolerance

// Transformation laws, Ramanujan derivative identities, equivariance,
// closed-form derivatives and Schwarzians against finite differences, ODE
// residuals, special values, positivity certificates.  Deterministic for a
// fixed seed and profile.
CheckReport identity_suite(unsigned seed, TolProfile profile = TolProfile::Default);

// Single derivative-formula check against a caller-supplied candidate for
// d s_fn / d tau; identity_suite uses the closed forms through this.
CheckEntry derivative_identity_check(SMap fn,
                                     const std::function<cplx(const cplx&)>& deriv,
                                     unsigned seed, double tol);

// Winding counts of DE2/DE4/DE6 zeros over every tessellation tile at the
// given depth (expected (0,0,1) at cusp tiles, (1,1,2) otherwise), plus the
// s6 preimage degree and the two-branch s2 uniqueness spot checks.
CheckReport count_suite(int depth);

} // namespace modatlas
