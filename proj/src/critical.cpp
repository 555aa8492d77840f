#include "modatlas/critical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "modatlas/errors.hpp"

namespace modatlas {

namespace {

struct QuadRule {
    std::vector<double> node;    // on [0,1]
    std::vector<double> weight;
};

// Gauss-Legendre by Newton on P_n; shifted to [0,1].
QuadRule gauss_rule(int n) {
    QuadRule r;
    r.node.resize(n);
    r.weight.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.node[i] = 0.5 * (1.0 - x);  // cos is decreasing; order is irrelevant
        r.weight[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

ContourSegment line_segment(cplx a, cplx b) {
    return {[a, b](double t) { return a + t * (b - a); },
            [a, b](double) { return b - a; }};
}

ContourSegment arc_segment(cplx c, double r, double th0, double th1) {
    return {[=](double t) { return c + r * std::exp(cplx(0.0, th0 + t * (th1 - th0))); },
            [=](double t) {
                return cplx(0.0, r * (th1 - th0)) * std::exp(cplx(0.0, th0 + t * (th1 - th0)));
            }};
}

double ang(cplx p, cplx c) { return std::arg(p - c); }

// Base-frame truncated boundaries, positively oriented.
std::vector<ContourSegment> base_contour(RegionName region, double h) {
    if (h < 2.0) throw DegenerateTile("truncation height must be >= 2");
    const double b = 1.0 / (2.0 * h);
    std::vector<ContourSegment> segs;
    switch (region) {
        case RegionName::V0: {
            // Cusps at 0, 1, infinity.
            cplx p0{0.0, 2.0 * b}, p1{1.0, 2.0 * b};
            cplx q0{4.0 * b * b / (1.0 + 4.0 * b * b), 2.0 * b / (1.0 + 4.0 * b * b)};
            cplx q1{1.0 - q0.real(), q0.imag()};
            cplx side_c{0.5, 0.0}, hb0{0.0, b}, hb1{1.0, b};
            segs.push_back(arc_segment(side_c, 0.5, ang(q0, side_c), ang(q1, side_c)));
            segs.push_back(arc_segment(hb1, b, ang(q1, hb1), ang(p1, hb1)));
            segs.push_back(line_segment(p1, {1.0, h}));
            segs.push_back(line_segment({1.0, h}, {0.0, h}));
            segs.push_back(line_segment({0.0, h}, p0));
            segs.push_back(arc_segment(hb0, b, ang(p0, hb0), ang(q0, hb0)));
            break;
        }
        case RegionName::T0: {
            // Single cusp at infinity.
            cplx r = rho();
            segs.push_back(arc_segment({0.0, 0.0}, 1.0, kPi / 2.0, kPi / 3.0));
            segs.push_back(line_segment(r, {0.5, h}));
            segs.push_back(line_segment({0.5, h}, {0.0, h}));
            segs.push_back(line_segment({0.0, h}, kI));
            break;
        }
        case RegionName::U0: {
            // Cusps at 0 and infinity; bottom side on |tau - 1| = 1.
            cplx p0{0.0, 2.0 * b};
            double yu = 2.0 * b / (1.0 + b * b);
            cplx q0{b * yu, yu};
            cplx hb0{0.0, b}, circ1{1.0, 0.0};
            segs.push_back(arc_segment(circ1, 1.0, ang(q0, circ1), 2.0 * kPi / 3.0));
            segs.push_back(line_segment(rho(), {0.5, h}));
            segs.push_back(line_segment({0.5, h}, {0.0, h}));
            segs.push_back(line_segment({0.0, h}, p0));
            segs.push_back(arc_segment(hb0, b, ang(p0, hb0), ang(q0, hb0)));
            break;
        }
        default:
            throw InvalidInput("no truncated boundary for this region");
    }
    return segs;
}

std::vector<ContourSegment> push_forward(const std::vector<ContourSegment>& base,
                                         const GroupElement& g) {
    if (same_element(g, identity_element()) && !g.conjugate_first) return base;
    const double det = static_cast<double>(g.a * g.d - g.b * g.c);
    std::vector<ContourSegment> out;
    for (const ContourSegment& s : base) {
        auto z = [s, g](double t) { return modatlas::apply(g, s.z(t)); };
        auto dz = [s, g, det](double t) -> cplx {
            cplx w = s.z(t);
            if (g.conjugate_first) w = std::conj(w);
            cplx den = static_cast<double>(g.c) * w + static_cast<double>(g.d);
            cplx d = s.dz(t);
            if (g.conjugate_first) d = std::conj(d);
            return det * d / (den * den);
        };
        out.push_back({z, dz});
    }
    if (g.conjugate_first) {
        // Anti-conformal images run clockwise; flip back.
        std::vector<ContourSegment> rev;
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            ContourSegment s = *it;
            rev.push_back({[s](double t) { return s.z(1.0 - t); },
                           [s](double t) { return -s.dz(1.0 - t); }});
        }
        out = rev;
    }
    return out;
}

void check_closed(const std::vector<ContourSegment>& segs) {
    for (size_t i = 0; i < segs.size(); ++i) {
        cplx a = segs[i].z(1.0), b = segs[(i + 1) % segs.size()].z(0.0);
        if (std::abs(a - b) > 1e-12)
            throw DegenerateTile("truncated contour does not close");
    }
}

}  // namespace

TruncatedContour truncated_boundary_region(RegionName region, double h) {
    TruncatedContour c{base_contour(region, h), h};
    check_closed(c.segments);
    return c;
}

TruncatedContour truncated_boundary(const Tile& tile, double h) {
    RegionName base = tile.family == 'T' ? RegionName::T0 : RegionName::V0;
    TruncatedContour c{push_forward(base_contour(base, h), tile.g), h};
    check_closed(c.segments);
    return c;
}

ZeroTarget crit_target(TargetForm form) {
    switch (form) {
        case TargetForm::E2:
            // E2' = 0 iff E2^2 = E4; the combination is single-valued.
            return {"E2^2-E4",
                    [](cplx t) {
                        EisensteinTriple e = eval_eisenstein(t);
                        return e.e2 * e.e2 - e.e4;
                    },
                    [](cplx t) {
                        EisensteinTriple e = eval_eisenstein(t);
                        return 2.0 * kPi * kI *
                               (e.e2 * e.e2 * e.e2 - 3.0 * e.e2 * e.e4 + 2.0 * e.e6) / 6.0;
                    }};
        case TargetForm::E4:
            return {"E2E4-E6",
                    [](cplx t) {
                        EisensteinTriple e = eval_eisenstein(t);
                        return e.e2 * e.e4 - e.e6;
                    },
                    [](cplx t) {
                        EisensteinTriple e = eval_eisenstein(t);
                        return 2.0 * kPi * kI * (5.0 / 12.0) *
                               (e.e2 * e.e2 * e.e4 + e.e4 * e.e4 - 2.0 * e.e2 * e.e6);
                    }};
        case TargetForm::E6:
            return {"E2E6-E4^2",
                    [](cplx t) {
                        EisensteinTriple e = eval_eisenstein(t);
                        return e.e2 * e.e6 - e.e4 * e.e4;
                    },
                    [](cplx t) {
                        EisensteinTriple e = eval_eisenstein(t);
                        return 2.0 * kPi * kI * (7.0 / 12.0) *
                               (e.e2 * e.e2 * e.e6 - 2.0 * e.e2 * e.e4 * e.e4 + e.e4 * e.e6);
                    }};
    }
    throw InvalidInput("unknown form");
}

ZeroTarget smap_shift_target(SMap k, cplx w) {
    return {"s-w", [k, w](cplx t) { return s_map(k, t) - w; },
            [k](cplx t) { return s_derivative(k, t); }};
}

namespace {

double winding_once(const ZeroTarget& target, const TruncatedContour& contour,
                    int panels, int quad_points, double* min_mod, double* max_mod) {
    static const int kMaxCacheN = 64;
    QuadRule rule = gauss_rule(std::min(quad_points, kMaxCacheN));
    cplx acc{0.0, 0.0};
    double mm = 1e300, mx = 0.0;
    for (const ContourSegment& seg : contour.segments) {
        for (int p = 0; p < panels; ++p) {
            double t0 = static_cast<double>(p) / panels, dt = 1.0 / panels;
            for (size_t i = 0; i < rule.node.size(); ++i) {
                double t = t0 + dt * rule.node[i];
                cplx z = seg.z(t);
                cplx fv = target.f(z);
                mm = std::min(mm, std::abs(fv));
                mx = std::max(mx, std::abs(fv));
                acc += rule.weight[i] * dt * target.df(z) / fv * seg.dz(t);
            }
        }
    }
    if (min_mod) *min_mod = mm;
    if (max_mod) *max_mod = mx;
    return (acc / (2.0 * kPi * kI)).real();
}

}  // namespace

int count_zeros(const ZeroTarget& target, const TruncatedContour& contour,
                int quad_points) {
    double prev = 1e300;
    double min_mod = 1e300, max_mod = 0.0;
    for (int panels = 4; panels <= 256; panels *= 2) {
        double mm = 0.0, mx = 0.0;
        double w = winding_once(target, contour, panels, quad_points, &mm, &mx);
        min_mod = std::min(min_mod, mm);
        max_mod = std::max(max_mod, mx);
        if (mm == 0.0) throw OnContourZero("target vanishes on the contour");
        double nearest = std::round(w);
        // One forced refinement: accept only when two consecutive levels
        // agree on the same integer within 0.1.
        if (std::abs(w - nearest) < 0.1 && std::abs(prev - nearest) < 0.1)
            return static_cast<int>(nearest);
        prev = w;
    }
    // Non-settling with a deep modulus dip means a zero sits on (or at
    // quadrature distance from) the contour itself.
    if (min_mod < 1e-3 * max_mod)
        throw OnContourZero("target vanishes on the contour");
    throw NonIntegerWinding("winding integral failed to settle on an integer");
}

std::vector<CriticalRecord> locate(TargetForm form, const Tile& tile, int grid,
                                   double tol, double h) {
    ZeroTarget target = crit_target(form);
    TruncatedContour contour = truncated_boundary(tile, h);
    int expected = count_zeros(target, contour);
    if (expected == 0) return {};

    // Bounding box from contour samples.
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const ContourSegment& seg : contour.segments)
        for (int i = 0; i <= 16; ++i) {
            cplx z = seg.z(i / 16.0);
            xlo = std::min(xlo, z.real());
            xhi = std::max(xhi, z.real());
            ylo = std::min(ylo, z.imag());
            yhi = std::max(yhi, z.imag());
        }

    struct Seed {
        cplx z;
        double fv;
    };
    std::vector<Seed> seeds;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            cplx z{xlo + (xhi - xlo) * (i + 0.5) / grid,
                   ylo + (yhi - ylo) * (j + 0.5) / grid};
            if (!contains(tile.triangle, z, -1e-9)) continue;
            seeds.push_back({z, std::abs(target.f(z))});
        }
    std::sort(seeds.begin(), seeds.end(),
              [](const Seed& a, const Seed& b) { return a.fv < b.fv; });

    std::vector<CriticalRecord> records;
    for (const Seed& seed : seeds) {
        if (static_cast<int>(records.size()) == expected) break;
        cplx z = seed.z;
        int iters = 0;
        bool ok = false;
        for (; iters < 80; ++iters) {
            cplx fv = target.f(z);
            cplx dfv = target.df(z);
            if (std::abs(dfv) < 1e-14) break;
            cplx step = fv / dfv;
            z -= step;
            if (!(z.imag() > 0.0)) break;
            if (std::abs(step) > 1.0) break;  // wandered off
            if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) {
                ok = true;
                break;
            }
        }
        if (!ok) continue;
        if (!contains(tile.triangle, z, -1e-9)) continue;
        double witness = std::abs(target.df(z));
        if (witness <= 1e-6) continue;
        bool dup = false;
        for (const CriticalRecord& r : records)
            if (std::abs(r.location - z) < 1e-6) dup = true;
        if (dup) continue;
        records.push_back({form, z, std::abs(target.f(z)), witness, tile.word,
                           grid, iters});
    }
    if (static_cast<int>(records.size()) != expected)
        throw CountMismatch("Newton recovered " + std::to_string(records.size()) +
                            " zeros, winding count " + std::to_string(expected));
    (void)tol;
    return records;
}

PoleReport pole_simplicity_fn(const std::function<cplx(cplx)>& s, cplx pole,
                              double r1, double r2) {
    auto m = [&](double r) {
        double best = 0.0;
        for (int i = 0; i < 32; ++i) {
            cplx z = pole + r * std::exp(cplx(0.0, 2.0 * kPi * i / 32.0));
            best = std::max(best, r * std::abs(s(z)));
        }
        return best;
    };
    PoleReport rep{m(r1), m(r2), 0.0};
    // Orientation-free: ~1 for a simple pole, ~max(r)/min(r) for a double.
    rep.ratio = std::max(rep.m_r1, rep.m_r2) / std::min(rep.m_r1, rep.m_r2);
    return rep;
}

PoleReport pole_simplicity(SMap k, cplx pole, double r1, double r2) {
    return pole_simplicity_fn([k](cplx z) { return s_map(k, z); }, pole, r1, r2);
}

}  // namespace modatlas
