#ifndef MODATLAS_GEOMETRY_HPP
#define MODATLAS_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "modatlas/modular.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

// Circle or line (a line is the circle through infinity).
struct Circline {
    bool is_line = true;
    cplx point{0.0, 0.0};  // a point on the line
    cplx dir{0.0, 1.0};    // unit direction of the line
    cplx center{0.0, 0.0};
    double radius = 1.0;
};

Circline line_pd(const cplx& point, const cplx& dir);
Circline circle_cr(const cplx& center, double radius);
// Circline through three extended points (at most one infinite).
Circline through(const cplx& A, const cplx& B, const cplx& C);

// Signed offset: 0 on the carrier, sign distinguishes the two sides.
double circ_value(const Circline& c, const cplx& z);
cplx reflect_point(const Circline& c, const cplx& z);

// Named reflections by letter: a, b, g, d.
cplx reflect(char letter, const cplx& tau);
GroupElement named_reflection(char letter);
// Word over {a,b,g,d}, first letter applied first.
GroupElement word_element(const std::string& word);

Circline map_circline(const GroupElement& g, const Circline& c);

struct Side {
    Circline carrier;
    cplx v0, v1;        // arc endpoints (extended points)
    double sign = 1.0;  // interior where sign * circ_value >= 0
};

enum class RegionName { T0, V0, U0, W, X0, Y0, Z0, Z0p };

struct ArcTriangle {
    std::vector<cplx> vertices;
    std::vector<Side> sides;
    bool interior_orientation = true; // interior on the left of the listed cycle
    std::optional<RegionName> named;  // canonical regions use explicit predicates
    cplx sample{0.0, 2.0};            // an interior point
};

ArcTriangle canonical(RegionName name);

// Negative inside, positive outside, ~0 on the boundary.
double membership_violation(const ArcTriangle& tri, const cplx& tau);
bool contains(const ArcTriangle& tri, const cplx& tau, double slack = 0.0);

struct Tile {
    std::string word;   // over the reflection alphabet, first letter applied first
    GroupElement g;     // tile = g(base)
    ArcTriangle triangle;
    char family = 'V';  // 'T' or 'V'
};

// Base tile plus its closure under side reflections up to word length depth.
std::vector<Tile> tessellate(char family, int depth);

Tile tile_from_element(char family, const GroupElement& g, const std::string& word);
bool tile_has_cusp_infinity(const Tile& tile);

} // namespace modatlas

#endif
