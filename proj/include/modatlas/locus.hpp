#pragma once
// Real-locus tracing: curves where s_k takes real values in a prescribed
// interval, followed by predictor-corrector continuation.

#include <iosfwd>
#include <vector>

#include "modatlas/polymorphic.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

enum class LocusInterval { Neg, Unit, Pos };  // (-inf,0), (0,1), (1,inf)

struct LocusCurve {
    SMap fn;
    LocusInterval interval;
    std::vector<cplx> points;
    std::vector<cplx> values;     // s(tau) per point
    std::vector<double> residuals;  // |Im s| per point
    double step;
};

// Traces in both directions from start. Stops at max_points, when Im(tau)
// leaves [im_lo, im_hi] (cusp windows), or when Re(s) leaves the interval.
// The default ceiling keeps |s_k| small enough that the 1e-8 residual is
// meaningful in double precision.
LocusCurve trace(SMap fn, LocusInterval interval, cplx start, double step,
                 int max_points, double im_lo = 0.05, double im_hi = 2.5);

// Canned bisection probes; supported for (s4, neg/pos) and (s6, neg/pos).
cplx find_start(SMap fn, LocusInterval interval);

// Start on the locus arm running through a pole of s_fn: bisects Im s on a
// small circle around the pole and returns the crossing whose value sign
// matches the interval.
cplx find_start_near_pole(SMap fn, LocusInterval interval, cplx pole,
                          double radius = 0.02);

void export_csv(const LocusCurve& curve, std::ostream& out);

}  // namespace modatlas
