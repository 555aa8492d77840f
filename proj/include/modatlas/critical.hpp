#pragma once
// Counting and locating critical points of E2, E4, E6 per tile: winding
// integrals of f'/f over cusp-truncated tile boundaries, then Newton.

#include <functional>
#include <string>
#include <vector>

#include "modatlas/geometry.hpp"
#include "modatlas/modular.hpp"
#include "modatlas/polymorphic.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

enum class TargetForm { E2, E4, E6 };

struct CriticalRecord {
    TargetForm form;
    cplx location;
    double residual;            // |target| at the location
    double simplicity_witness;  // |target derivative| at the location
    std::string tile_word;
    int grid;
    int newton_iterations;
};

// One smooth piece of a contour, parametrized over t in [0,1].
struct ContourSegment {
    std::function<cplx(double)> z;
    std::function<cplx(double)> dz;
};

struct TruncatedContour {
    std::vector<ContourSegment> segments;
    double cusp_truncation_height;
};

// Tile boundary with every cusp vertex cut along the pushed-forward
// horocycle Im = h. Positively oriented.
TruncatedContour truncated_boundary(const Tile& tile, double h);
// Same for a base region (V0, T0 or U0) without a group element.
TruncatedContour truncated_boundary_region(RegionName region, double h);

// A holomorphic target whose zeros are counted, with its tau-derivative.
struct ZeroTarget {
    std::string name;
    std::function<cplx(cplx)> f;
    std::function<cplx(cplx)> df;
};

// Zeros of D(E_k) as entire functions: E2^2-E4 (for E2), E2E4-E6 (for E4),
// E2E6-E4^2 (for E6).
ZeroTarget crit_target(TargetForm form);
// s_k(tau) - w; meromorphic, so the winding is zeros minus poles.
ZeroTarget smap_shift_target(SMap k, cplx w);

// (1/2pi i) contour integral of f'/f, refined until within 0.1 of an
// integer and stable under one further refinement.
int count_zeros(const ZeroTarget& target, const TruncatedContour& contour,
                int quad_points = 16);

std::vector<CriticalRecord> locate(TargetForm form, const Tile& tile,
                                   int grid = 40, double tol = 1e-12,
                                   double h = 3.0);

struct PoleReport {
    double m_r1;
    double m_r2;
    double ratio;  // ~1 for a simple pole, ~r2/r1 for a double one
};

PoleReport pole_simplicity(SMap k, cplx pole, double r1, double r2);
PoleReport pole_simplicity_fn(const std::function<cplx(cplx)>& s, cplx pole,
                              double r1, double r2);

}  // namespace modatlas
