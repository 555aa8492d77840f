#include "modatlas/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "modatlas/errors.hpp"

namespace modatlas {

Circline line_pd(const cplx& point, const cplx& dir) {
    Circline c;
    c.is_line = true;
    c.point = point;
    c.dir = dir / std::abs(dir);
    return c;
}

Circline circle_cr(const cplx& center, double radius) {
    if (!(radius > 0.0)) throw InvalidInput("circle radius must be positive");
    Circline c;
    c.is_line = false;
    c.center = center;
    c.radius = radius;
    return c;
}

Circline through(const cplx& A, const cplx& B, const cplx& C) {
    if (is_inf(A)) return line_pd(B, C - B);
    if (is_inf(B)) return line_pd(A, C - A);
    if (is_inf(C)) return line_pd(A, B - A);
    cplx d = B - A, e = C - A;
    double cross = d.real() * e.imag() - d.imag() * e.real();
    double scale = std::abs(d) * std::abs(e);
    if (std::abs(cross) <= 1e-12 * scale) return line_pd(A, d);
    double nd = std::norm(d) / 2.0, ne = std::norm(e) / 2.0;
    double x = (nd * e.imag() - d.imag() * ne) / cross;
    double y = (d.real() * ne - nd * e.real()) / cross;
    cplx center = A + cplx(x, y);
    return circle_cr(center, std::abs(center - A));
}

double circ_value(const Circline& c, const cplx& z) {
    if (c.is_line) return std::imag(std::conj(c.dir) * (z - c.point));
    return std::abs(z - c.center) - c.radius;
}

cplx reflect_point(const Circline& c, const cplx& z) {
    if (c.is_line) {
        if (is_inf(z)) return z;
        return c.point + c.dir * c.dir * std::conj(z - c.point);
    }
    if (is_inf(z)) return c.center;
    cplx w = std::conj(z - c.center);
    if (w == cplx(0.0, 0.0)) return infinity();
    return c.center + c.radius * c.radius / w;
}

GroupElement named_reflection(char letter) {
    switch (letter) {
        case 'a': return refl_alpha();
        case 'b': return refl_beta();
        case 'g': return refl_gamma();
        case 'd': return refl_delta();
    }
    throw InvalidInput("unknown reflection letter (expected one of a, b, g, d)");
}

cplx reflect(char letter, const cplx& tau) {
    return modatlas::apply(named_reflection(letter), tau);
}

GroupElement word_element(const std::string& word) {
    GroupElement g = identity_element();
    for (char ch : word) g = compose(named_reflection(ch), g);
    return g;
}

Circline map_circline(const GroupElement& g, const Circline& c) {
    cplx A, B, C;
    if (c.is_line) {
        A = c.point;
        B = c.point + c.dir;
        C = infinity();
    } else {
        A = c.center + c.radius;
        B = c.center + c.radius * kI;
        C = c.center - c.radius;
    }
    return through(modatlas::apply(g, A), modatlas::apply(g, B), modatlas::apply(g, C));
}

namespace {

Side make_side(const Circline& carrier, const cplx& v0, const cplx& v1, const cplx& sample) {
    Side s;
    s.carrier = carrier;
    s.v0 = v0;
    s.v1 = v1;
    double v = circ_value(carrier, sample);
    s.sign = v >= 0.0 ? 1.0 : -1.0;
    return s;
}

const Circline kUnit = circle_cr({0.0, 0.0}, 1.0);
const Circline kL0 = line_pd({0.0, 0.0}, {0.0, 1.0});
const Circline kLHalf = line_pd({0.5, 0.0}, {0.0, 1.0});

double predicate_violation(RegionName name, const cplx& z) {
    double x = z.real(), y = z.imag();
    switch (name) {
        case RegionName::T0:
            return std::max({-x, x - 0.5, 1.0 - std::abs(z)});
        case RegionName::V0:
            return std::max({-x, x - 1.0, 0.5 - std::abs(z - 0.5)});
        case RegionName::U0:
            return std::max({-x, x - 0.5, 1.0 - std::abs(z - 1.0)});
        case RegionName::W:
            return std::max({std::abs(x) - 0.5, 1.0 - std::abs(z - 1.0), 1.0 - std::abs(z + 1.0)});
        case RegionName::X0:
            // Angle pi at infinity: the region opens up on {Re<=0} below and
            // the full strip above.
            return std::max({x - 0.5, 1.0 - std::abs(z), std::min(x, -y)});
        case RegionName::Y0:
            return std::max({-x, 1.0 - std::abs(z), std::min(0.5 - x, -y)});
        case RegionName::Z0:
            return std::max({-x, x - 0.5, std::min(-y, std::abs(z - 1.0) - 1.0)});
        case RegionName::Z0p:
            return std::max(-x, std::min({-y, 0.5 - x, std::abs(z - 1.0) - 1.0}));
    }
    throw InvalidInput("unknown region");
}

} // namespace

ArcTriangle canonical(RegionName name) {
    ArcTriangle t;
    t.named = name;
    cplx r = rho();
    cplx rb = std::conj(r);
    cplx inf = infinity();
    switch (name) {
        case RegionName::T0:
            t.vertices = {inf, kI, r};
            t.sample = {0.25, 1.5};
            t.sides = {make_side(kL0, kI, inf, t.sample),
                       make_side(kUnit, kI, r, t.sample),
                       make_side(kLHalf, r, inf, t.sample)};
            break;
        case RegionName::V0:
            t.vertices = {0.0, 1.0, inf};
            t.sample = {0.5, 2.0};
            t.sides = {make_side(circle_cr({0.5, 0.0}, 0.5), 0.0, 1.0, t.sample),
                       make_side(line_pd({1.0, 0.0}, kI), 1.0, inf, t.sample),
                       make_side(kL0, inf, 0.0, t.sample)};
            break;
        case RegionName::U0:
            t.vertices = {inf, 0.0, r};
            t.sample = {0.25, 2.0};
            t.sides = {make_side(kL0, 0.0, inf, t.sample),
                       make_side(circle_cr({1.0, 0.0}, 1.0), r, 0.0, t.sample),
                       make_side(kLHalf, r, inf, t.sample)};
            break;
        case RegionName::W:
            t.vertices = {r - 1.0, r, inf};
            t.sample = {0.0, 2.0};
            t.sides = {make_side(line_pd({-0.5, 0.0}, kI), r - 1.0, inf, t.sample),
                       make_side(circle_cr({-1.0, 0.0}, 1.0), r - 1.0, 0.0, t.sample),
                       make_side(circle_cr({1.0, 0.0}, 1.0), 0.0, r, t.sample),
                       make_side(kLHalf, r, inf, t.sample)};
            break;
        case RegionName::X0:
            t.vertices = {inf, -kI, r};
            t.sample = {-2.0, 0.5};
            t.sides = {make_side(kL0, inf, -kI, t.sample),
                       make_side(kUnit, -kI, r, t.sample),
                       make_side(kLHalf, r, inf, t.sample)};
            break;
        case RegionName::Y0:
            t.vertices = {inf, kI, rb};
            t.sample = {2.0, 0.5};
            t.sides = {make_side(kL0, inf, kI, t.sample),
                       make_side(kUnit, kI, rb, t.sample),
                       make_side(kLHalf, rb, inf, t.sample)};
            break;
        case RegionName::Z0:
            t.vertices = {inf, 0.0, rb};
            t.sample = {0.25, 1.0};
            t.sides = {make_side(kL0, inf, 0.0, t.sample),
                       make_side(circle_cr({1.0, 0.0}, 1.0), 0.0, rb, t.sample),
                       make_side(kLHalf, rb, inf, t.sample)};
            break;
        case RegionName::Z0p:
            t.vertices = {inf, 0.0, rb};
            t.sample = {0.25, 1.0};
            t.sides = {make_side(kL0, inf, 0.0, t.sample),
                       make_side(circle_cr({1.0, 0.0}, 1.0), 0.0, rb, t.sample),
                       make_side(line_pd({0.5, 0.0}, -kI), rb, inf, t.sample)};
            break;
    }
    return t;
}

double membership_violation(const ArcTriangle& tri, const cplx& tau) {
    if (is_inf(tau)) {
        for (const cplx& v : tri.vertices)
            if (is_inf(v)) return 0.0;
        return 1.0;
    }
    if (tri.named) return predicate_violation(*tri.named, tau);
    double worst = -1e300;
    for (const Side& s : tri.sides)
        worst = std::max(worst, -s.sign * circ_value(s.carrier, tau));
    return worst;
}

bool contains(const ArcTriangle& tri, const cplx& tau, double slack) {
    return membership_violation(tri, tau) <= slack;
}

Tile tile_from_element(char family, const GroupElement& g, const std::string& word) {
    if (family != 'T' && family != 'V') throw InvalidInput("family must be T or V");
    ArcTriangle base = canonical(family == 'T' ? RegionName::T0 : RegionName::V0);
    Tile tile;
    tile.word = word;
    tile.g = g;
    tile.family = family;
    ArcTriangle img;
    img.sample = modatlas::apply(g, base.sample);
    for (const cplx& v : base.vertices) img.vertices.push_back(modatlas::apply(g, v));
    for (const Side& s : base.sides) {
        Side ms;
        ms.carrier = map_circline(g, s.carrier);
        ms.v0 = modatlas::apply(g, s.v0);
        ms.v1 = modatlas::apply(g, s.v1);
        double v = circ_value(ms.carrier, img.sample);
        ms.sign = v >= 0.0 ? 1.0 : -1.0;
        img.sides.push_back(ms);
    }
    img.interior_orientation = !g.conjugate_first;
    tile.triangle = img;
    return tile;
}

std::vector<Tile> tessellate(char family, int depth) {
    if (depth < 0 || depth > 8) throw DepthExceeded("tessellation depth must be in [0, 8]");
    if (family != 'T' && family != 'V') throw InvalidInput("family must be T or V");

    // Side reflections of the base tile, as words over the named letters.
    // For V0 the sides are mirrored by alpha (Re=0), gamma alpha gamma
    // (Re=1) and delta alpha delta (circle |tau-1/2|=1/2); letter order:
    // side opposite 0, side opposite 1, side opposite infinity.
    std::vector<std::string> gens;
    if (family == 'T') gens = {"a", "b", "g"};
    else gens = {"gag", "a", "dad"};

    std::vector<Tile> out;
    std::vector<GroupElement> seen;
    std::deque<std::pair<std::string, GroupElement>> queue;
    queue.emplace_back("", identity_element());
    seen.push_back(identity_element());
    out.push_back(tile_from_element(family, identity_element(), ""));

    int level = 0;
    std::size_t level_end = queue.size();
    while (!queue.empty() && level < depth) {
        std::deque<std::pair<std::string, GroupElement>> next;
        while (level_end-- > 0) {
            auto [word, g] = queue.front();
            queue.pop_front();
            for (const std::string& gen : gens) {
                GroupElement r = word_element(gen);
                GroupElement gnew = compose(g, r);
                bool dup = false;
                for (const GroupElement& s : seen)
                    if (same_element(s, gnew)) { dup = true; break; }
                if (dup) continue;
                std::string wnew = gen + word; // applied first, so listed first
                seen.push_back(gnew);
                out.push_back(tile_from_element(family, gnew, wnew));
                next.emplace_back(wnew, gnew);
            }
        }
        queue = std::move(next);
        level_end = queue.size();
        ++level;
    }
    return out;
}

bool tile_has_cusp_infinity(const Tile& tile) {
    for (const cplx& v : tile.triangle.vertices)
        if (is_inf(v)) return true;
    return false;
}

} // namespace modatlas
