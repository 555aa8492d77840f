#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "modatlas/critical.hpp"
#include "modatlas/errors.hpp"

using namespace modatlas;

namespace {
Tile base_tile_V() { return tile_from_element('V', identity_element(), ""); }
Tile noncusp_tile() { return tile_from_element('V', word_element("dad"), "dad"); }

ZeroTarget synthetic_root(cplx p) {
    return {"z-p", [p](cplx z) { return z - p; }, [](cplx) { return cplx{1.0, 0.0}; }};
}
}  // namespace

TEST_CASE("truncated boundaries close and cut on the sides") {
    TruncatedContour v0 = truncated_boundary(base_tile_V(), 3.0);
    CHECK(v0.segments.size() == 6);
    for (size_t i = 0; i < v0.segments.size(); ++i) {
        cplx a = v0.segments[i].z(1.0);
        cplx b = v0.segments[(i + 1) % v0.segments.size()].z(0.0);
        CHECK(std::abs(a - b) < 1e-12);
        CHECK(v0.segments[i].z(0.5).imag() > 0.0);
    }
    // Cut endpoints sit on the adjacent carriers.
    cplx q0 = v0.segments[0].z(0.0);
    CHECK(std::abs(std::abs(q0 - cplx(0.5, 0.0)) - 0.5) < 1e-12);
    CHECK(std::abs(std::abs(q0 - cplx(0.0, 1.0 / 6.0)) - 1.0 / 6.0) < 1e-12);

    TruncatedContour t0 = truncated_boundary(
        tile_from_element('T', identity_element(), ""), 3.0);
    CHECK(t0.segments.size() == 4);

    TruncatedContour u0 = truncated_boundary_region(RegionName::U0, 3.0);
    CHECK(u0.segments.size() == 5);
    for (size_t i = 0; i < u0.segments.size(); ++i)
        CHECK(std::abs(u0.segments[i].z(1.0) -
                       u0.segments[(i + 1) % u0.segments.size()].z(0.0)) < 1e-12);

    CHECK_THROWS_AS(truncated_boundary(base_tile_V(), 1.0), DegenerateTile);
}

TEST_CASE("winding orientation on synthetic targets") {
    TruncatedContour v0 = truncated_boundary(base_tile_V(), 3.0);
    CHECK(count_zeros(synthetic_root(cplx(0.5, 2.0)), v0) == 1);
    CHECK(count_zeros(synthetic_root(cplx(-1.0, 1.0)), v0) == 0);
    CHECK(count_zeros(synthetic_root(cplx(0.5, 10.0)), v0) == 0);  // above the cut

    // The mirror tile flips orientation once; the contour must be rewound.
    Tile dad = noncusp_tile();
    TruncatedContour mirror = truncated_boundary(dad, 3.0);
    cplx inside = dad.triangle.sample;
    CHECK(count_zeros(synthetic_root(inside), mirror) == 1);
    CHECK(count_zeros(synthetic_root(cplx(0.5, 2.0)), mirror) == 0);

    ZeroTarget two = {"(z-p)(z-q)",
                      [](cplx z) { return (z - cplx(0.3, 1.5)) * (z - cplx(0.7, 2.2)); },
                      [](cplx z) { return (z - cplx(0.3, 1.5)) + (z - cplx(0.7, 2.2)); }};
    CHECK(count_zeros(two, v0) == 2);

    CHECK_THROWS_AS(count_zeros(synthetic_root(v0.segments[2].z(0.5)), v0),
                    OnContourZero);
}

TEST_CASE("critical point counts per tile") {
    Tile v0 = base_tile_V();
    Tile dad = noncusp_tile();
    for (double h : {3.0, 4.0, 5.0}) {
        TruncatedContour cv = truncated_boundary(v0, h);
        TruncatedContour cd = truncated_boundary(dad, h);
        CHECK(count_zeros(crit_target(TargetForm::E4), cv) == 0);
        CHECK(count_zeros(crit_target(TargetForm::E2), cv) == 0);
        CHECK(count_zeros(crit_target(TargetForm::E6), cv) == 1);
        CHECK(count_zeros(crit_target(TargetForm::E4), cd) == 1);
        CHECK(count_zeros(crit_target(TargetForm::E2), cd) == 1);
        CHECK(count_zeros(crit_target(TargetForm::E6), cd) == 2);
    }
}

TEST_CASE("locating critical points") {
    Tile dad = noncusp_tile();
    auto e4_records = locate(TargetForm::E4, dad);
    REQUIRE(e4_records.size() == 1);
    CHECK(e4_records[0].residual < 1e-10);
    CHECK(e4_records[0].simplicity_witness > 1e-6);
    // Duality: a critical point of E4 is a pole of s4.
    CHECK(1.0 / std::abs(s_map(SMap::S4, e4_records[0].location)) < 1e-8);

    auto e6_records = locate(TargetForm::E6, dad);
    REQUIRE(e6_records.size() == 2);
    CHECK(std::abs(e6_records[0].location - e6_records[1].location) > 1e-6);
    for (const auto& r : e6_records) {
        CHECK(r.residual < 1e-10);
        CHECK(r.simplicity_witness > 1e-6);
        CHECK(1.0 / std::abs(s_map(SMap::S6, r.location)) < 1e-8);
    }

    CHECK(locate(TargetForm::E4, base_tile_V()).empty());

    // Translation invariance: V0 + 1 is the tile of the word "ag".
    auto v0_records = locate(TargetForm::E6, base_tile_V());
    REQUIRE(v0_records.size() == 1);
    Tile shifted = tile_from_element('V', word_element("ag"), "ag");
    auto shifted_records = locate(TargetForm::E6, shifted);
    REQUIRE(shifted_records.size() == 1);
    CHECK(std::abs(shifted_records[0].location - (v0_records[0].location + 1.0)) < 1e-10);
}

TEST_CASE("preimage counting for s6") {
    // s6 - w over V0: two preimages minus the one pole (the E6 critical
    // point) leaves winding 1.
    TruncatedContour cv = truncated_boundary(base_tile_V(), 3.0);
    cplx w{5.0, 5.0};
    int winding = count_zeros(smap_shift_target(SMap::S6, w), cv);
    int poles = count_zeros(crit_target(TargetForm::E6), cv);
    CHECK(winding + poles == 2);
}

TEST_CASE("pole simplicity by Laurent scaling") {
    cplx p{0.3, 1.2};
    auto simple = pole_simplicity_fn([p](cplx z) { return 1.0 / (z - p); }, p, 1e-3, 1e-4);
    CHECK(std::abs(simple.ratio - 1.0) < 1e-6);
    auto dbl = pole_simplicity_fn([p](cplx z) { return 1.0 / ((z - p) * (z - p)); }, p,
                                  1e-3, 1e-4);
    CHECK(std::abs(dbl.ratio - 10.0) < 1e-3);

    Tile dad = noncusp_tile();
    cplx pole = locate(TargetForm::E4, dad)[0].location;
    auto rep = pole_simplicity(SMap::S4, pole, 1e-3, 1e-4);
    CHECK(rep.ratio > 0.8);
    CHECK(rep.ratio < 1.25);

    cplx pole6 = locate(TargetForm::E6, base_tile_V())[0].location;
    auto rep6 = pole_simplicity(SMap::S6, pole6, 1e-3, 1e-4);
    CHECK(rep6.ratio > 0.8);
    CHECK(rep6.ratio < 1.25);
}
