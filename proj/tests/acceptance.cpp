// Acceptance sweep: one line per criterion, nonzero exit when any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "modatlas/critical.hpp"
#include "modatlas/errors.hpp"
#include "modatlas/geometry.hpp"
#include "modatlas/locus.hpp"
#include "modatlas/modular.hpp"
#include "modatlas/ode.hpp"
#include "modatlas/polymorphic.hpp"
#include "modatlas/qseries.hpp"
#include "modatlas/verify.hpp"
#include "modatlas/xcomplex.hpp"

using namespace modatlas;

namespace {

int g_failed = 0;

void report(int num, const char* label, bool ok, double worst) {
    std::printf("%s  criterion %2d: %-55s  worst %.3g\n",
                ok ? "PASS" : "FAIL", num, label, worst);
    if (!ok) ++g_failed;
}

cplx rand_pt(std::mt19937& rng, double x0, double x1, double y0, double y1) {
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    double x = ux(rng), y = uy(rng);
    return {x, y};
}

GroupElement rand_mobius(std::mt19937& rng) {
    std::uniform_int_distribution<int> shift(-2, 2), coin(0, 1);
    GroupElement g = identity_element();
    for (int i = 0; i < 3; ++i) {
        g = compose(g, translation(shift(rng)));
        if (coin(rng)) g = compose(g, inversion_S());
    }
    return g;
}

// 1: special values of E2, E4, E6, J at the corner points
void criterion1() {
    const cplx r = rho();
    EisensteinTriple ei = eval_eisenstein(kI);
    EisensteinTriple er = eval_eisenstein(r);
    double w = 0.0;
    w = std::max(w, std::abs(ei.e2 - 3.0 / kPi));
    w = std::max(w, std::abs(er.e2 - 2.0 * std::sqrt(3.0) / kPi));
    w = std::max(w, std::abs(er.e4));
    w = std::max(w, std::abs(ei.e6));
    w = std::max(w, std::abs(eval_J(kI) - 1.0));
    w = std::max(w, std::abs(eval_J(r)));
    report(1, "special values at i and rho", w < 1e-12, w);
}

// 2: weight-4/6 transformation laws and the quasi-modular law for E2
void criterion2() {
    std::mt19937 rng(2101u);
    double w = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx tau = rand_pt(rng, -0.5, 0.5, 0.8, 2.0);
        GroupElement g = rand_mobius(rng);
        cplx gt = modatlas::apply(g, tau);
        cplx j = cplx(double(g.c)) * tau + cplx(double(g.d));
        EisensteinTriple e = eval_eisenstein(tau);
        EisensteinTriple eg = eval_eisenstein(gt);
        cplx j2 = j * j, j4 = j2 * j2;
        w = std::max(w, std::abs(eg.e4 - j4 * e.e4) / (1.0 + std::abs(j4 * e.e4)));
        w = std::max(w, std::abs(eg.e6 - j4 * j2 * e.e6) /
                            (1.0 + std::abs(j4 * j2 * e.e6)));
        cplx law = j2 * e.e2 - 6.0 * kI / kPi * double(g.c) * j;
        w = std::max(w, std::abs(eg.e2 - law) / (1.0 + std::abs(law)));
    }
    report(2, "transformation laws, 100 random (tau, g)", w < 1e-10, w);
}

// 3: Ramanujan derivative identities, series coefficients and sampled values
void criterion3() {
    const int ord = 36;
    QSeries e2 = named_series(Form::E2, ord);
    QSeries e4 = named_series(Form::E4, ord);
    QSeries e6 = named_series(Form::E6, ord);
    QSeries del = named_series(Form::Delta, ord);
    struct Pair {
        QSeries lhs, rhs;
    };
    Pair pairs[] = {
        {scale(d_operator(e2), 12.0), sub(mul(e2, e2), e4)},
        {scale(d_operator(e4), 3.0), sub(mul(e2, e4), e6)},
        {scale(d_operator(e6), 2.0), sub(mul(e2, e6), mul(e4, e4))},
        {d_operator(del), mul(e2, del)},
    };
    bool exact = true;
    for (const Pair& p : pairs)
        for (int n = 0; n <= 32; ++n)
            exact = exact && p.lhs.at(n) == p.rhs.at(n);

    // independent numeric check: series of the derivative against the
    // combination of direct evaluations
    std::mt19937 rng(2103u);
    double w = 0.0;
    for (int i = 0; i < 50; ++i) {
        cplx tau = rand_pt(rng, -0.5, 0.5, 0.9, 2.0);
        Reduction r = reduce(tau);
        EisensteinTriple e = eval_eisenstein(r.tau);
        cplx dd = eval_delta(r.tau);
        cplx v[4] = {(e.e2 * e.e2 - e.e4) / 12.0, (e.e2 * e.e4 - e.e6) / 3.0,
                     (e.e2 * e.e6 - e.e4 * e.e4) / 2.0, e.e2 * dd};
        QSeries ser[4] = {d_operator(named_series(Form::E2, 64)),
                          d_operator(named_series(Form::E4, 64)),
                          d_operator(named_series(Form::E6, 64)),
                          d_operator(named_series(Form::Delta, 64))};
        for (int kf = 0; kf < 4; ++kf) {
            cplx s = eval_series(ser[kf], r.tau).value;
            w = std::max(w, std::abs(s - v[kf]) / (1.0 + std::abs(v[kf])));
        }
    }
    report(3, "Ramanujan identities, series exact + 50 sampled tau",
           exact && w < 1e-10, w);
}

// 4: pinned s-map values and q-expansion leading terms at tau = 4i
void criterion4() {
    const cplx r = rho();
    const cplx rb = std::conj(r);
    double w = 0.0;
    w = std::max(w, std::abs(s_map(SMap::S4, kI) + kI));
    w = std::max(w, std::abs(s_map(SMap::S4, r) - r));
    w = std::max(w, std::abs(s_map(SMap::S6, kI) - kI));
    w = std::max(w, std::abs(s_map(SMap::S6, r) - rb));
    w = std::max(w, std::abs(s_map(SMap::S2plus, r) - rb));
    w = std::max(w, std::abs(s_map(SMap::S2minus, r) - rb));
    bool vals = w < 1e-10;

    cplx tau(0.0, 4.0);
    cplx q = std::exp(2.0 * kPi * kI * tau);
    cplx lead4 = -kI / (120.0 * kPi * q);
    cplx lead6 = kI / (168.0 * kPi * q);
    double a = std::abs(s_map(SMap::S4, tau) - lead4) / std::abs(lead4);
    a = std::max(a, std::abs(s_map(SMap::S6, tau) - lead6) / std::abs(lead6));
    // the -3i/pi tail belongs to the branch with denominator E2 + sqrt(E4);
    // the other branch blows up like i/(24 pi q), test it set-valued
    cplx tail = -3.0 * kI / kPi;
    auto pair = s2_pair(tau);
    a = std::max(a, std::min(std::abs(pair.first - tau - tail),
                             std::abs(pair.second - tau - tail)) /
                        std::abs(tail));
    cplx lead2 = kI / (24.0 * kPi * q);
    a = std::max(a, std::min(std::abs(pair.first - lead2),
                             std::abs(pair.second - lead2)) /
                        std::abs(lead2));
    report(4, "s-map vertex values and q-asymptotics at 4i",
           vals && a < 0.01, std::max(w, a));
}

// 5: closed-form derivatives at the corners and against finite differences
void criterion5() {
    const cplx r = rho();
    double w = 0.0;
    w = std::max(w, std::abs(s_derivative(SMap::S4, r) - 5.0));
    w = std::max(w, std::abs(s_derivative(SMap::S6, kI) - 7.0));
    w = std::max(w, std::abs(s_derivative(SMap::S6, r)));
    bool ok = w < 1e-9;
    for (SMap m : {SMap::S4, SMap::S6, SMap::S2plus, SMap::S2minus}) {
        CheckEntry e = derivative_identity_check(
            m, [m](const cplx& z) { return s_derivative(m, z); },
            2105u + unsigned(m), 1e-6);
        ok = ok && e.status == CheckStatus::Pass;
        w = std::max(w, e.worst);
    }
    report(5, "derivatives: corner values + FD at 20 points/map", ok, w);
}

// 6: Schwarzians against finite differences and via the chain rule
void criterion6() {
    std::mt19937 rng(2106u);
    double w = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (SMap m : {SMap::S4, SMap::S6, SMap::S2plus, SMap::S2minus}) {
            bool two = m == SMap::S2plus || m == SMap::S2minus;
            cplx tau = two ? rand_pt(rng, -0.4, 0.4, 1.0, 2.0)
                           : rand_pt(rng, 0.0, 1.0, 0.9, 1.6);
            double step = 1e-3 * (1.0 + std::abs(tau));
            cplx fd = fd_schwarzian([m](cplx z) { return s_map(m, z); }, tau, step);
            cplx closed = schwarzian(m, tau);
            w = std::max(w, std::abs(closed - fd) / (1.0 + std::abs(fd)));
        }
    }
    for (int i = 0; i < 10; ++i) {
        cplx tau = rand_pt(rng, 0.05, 0.45, 1.05, 2.0);
        cplx jv = eval_J(tau);
        cplx dj = 2.0 * kPi * kI * eval_DJ(tau);
        cplx lhs = (schwarzian_in_variable(VarSchwarzian::S4J, jv) -
                    schwarzian_in_variable(VarSchwarzian::TauJ, jv)) *
                   dj * dj;
        w = std::max(w, std::abs(lhs - schwarzian(SMap::S4, tau)) /
                            (1.0 + std::abs(lhs)));
    }
    report(6, "Schwarzians: FD at 10 points/map + chain rule", w < 1e-5, w);
}

// 7: equivariance for s4/s6, set-valued for s2, and the branch swap
void criterion7() {
    std::mt19937 rng(2107u);
    double w = 0.0;
    for (int i = 0; i < 50; ++i) {
        cplx tau = rand_pt(rng, -0.5, 0.5, 0.8, 2.0);
        GroupElement g = rand_mobius(rng);
        cplx gt = modatlas::apply(g, tau);
        for (SMap m : {SMap::S4, SMap::S6})
            w = std::max(w, chordal(s_map(m, gt),
                                    modatlas::apply(g, s_map(m, tau))));
        auto p = s2_pair(tau);
        auto q = s2_pair(gt);
        cplx a = modatlas::apply(g, p.first), b = modatlas::apply(g, p.second);
        double direct = std::max(chordal(q.first, a), chordal(q.second, b));
        double crossed = std::max(chordal(q.first, b), chordal(q.second, a));
        w = std::max(w, std::min(direct, crossed));
    }
    // branch swap s2+(-1/tau) = -1/s2-(tau), both points in W
    int kept = 0;
    for (int i = 0; i < 40 && kept < 20; ++i) {
        cplx tau = rand_pt(rng, -0.2, 0.2, 0.8, 1.4);
        try {
            cplx lhs = s_map(SMap::S2plus, -1.0 / tau);
            cplx rhs = -1.0 / s_map(SMap::S2minus, tau);
            w = std::max(w, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
            ++kept;
        } catch (const OutsideW&) {
        }
    }
    report(7, "equivariance (50 pairs) + s2 branch swap on W",
           kept >= 20 && w < 1e-9, w);
}

// 8: the four boundary-mapping theorems at 100 samples per side
void criterion8() {
    bool ok = true;
    double w = 0.0;
    for (MapTheorem th : {MapTheorem::S4, MapTheorem::S6, MapTheorem::S2plus,
                          MapTheorem::S2minus}) {
        CheckReport r = mapping_check(th, 100, 1e-8);
        ok = ok && r.overall;
        for (const CheckEntry& e : r.entries)
            if (e.status != CheckStatus::Skipped) w = std::max(w, e.worst - e.tol);
    }
    report(8, "mapping theorems, 100 boundary samples per side", ok, w);
}

std::vector<CriticalRecord> g_located[3];  // by TargetForm, filled in 9

// 9: critical-point counts and locations over all V-tiles at depth <= 2
void criterion9() {
    bool ok = true;
    double w = 0.0;
    std::vector<Tile> tiles = tessellate('V', 2);
    const TargetForm forms[3] = {TargetForm::E2, TargetForm::E4, TargetForm::E6};
    for (const Tile& tile : tiles) {
        bool cusp = tile_has_cusp_infinity(tile);
        int want[3] = {cusp ? 0 : 1, cusp ? 0 : 1, cusp ? 1 : 2};
        for (int f = 0; f < 3; ++f) {
            for (double h : {3.0, 4.0, 5.0}) {
                int n = count_zeros(crit_target(forms[f]),
                                    truncated_boundary(tile, h));
                if (n != want[f]) ok = false;
                w = std::max(w, std::abs(double(n - want[f])));
            }
            std::vector<CriticalRecord> recs =
                locate(forms[f], tile, 40, 1e-12, 3.0);
            if (int(recs.size()) != want[f]) ok = false;
            for (const CriticalRecord& rec : recs) {
                ok = ok && rec.residual < 1e-10 && rec.simplicity_witness > 1e-6;
                w = std::max(w, rec.residual);
                double inv;
                if (forms[f] == TargetForm::E2) {
                    auto p = s2_pair(rec.location);
                    inv = std::min(1.0 / std::abs(p.first),
                                   1.0 / std::abs(p.second));
                } else {
                    SMap m = forms[f] == TargetForm::E4 ? SMap::S4 : SMap::S6;
                    inv = 1.0 / std::abs(s_map(m, rec.location));
                }
                ok = ok && inv < 1e-6;
                w = std::max(w, inv);
                g_located[f].push_back(rec);
            }
        }
    }
    report(9, "critical counts/locations, V-tiles depth <= 2, h in {3,4,5}",
           ok, w);
}

// 10: Laurent-scaling simplicity of every pole located in criterion 9
void criterion10() {
    bool ok = true;
    double w = 0.0;
    auto grade = [&](const PoleReport& pr) {
        ok = ok && pr.ratio > 0.8 && pr.ratio < 1.25;
        w = std::max(w, std::abs(pr.ratio - 1.0));
    };
    for (const CriticalRecord& rec : g_located[0]) {
        // the singular s2 branch dominates near the pole
        auto branch_max = [](cplx z) {
            auto p = s2_pair(z);
            return std::abs(p.first) > std::abs(p.second) ? p.first : p.second;
        };
        grade(pole_simplicity_fn(branch_max, rec.location, 1e-3, 1e-4));
    }
    for (const CriticalRecord& rec : g_located[1])
        grade(pole_simplicity(SMap::S4, rec.location, 1e-3, 1e-4));
    for (const CriticalRecord& rec : g_located[2])
        grade(pole_simplicity(SMap::S6, rec.location, 1e-3, 1e-4));
    report(10, "pole simplicity ratios at every located pole", ok, w);
}

// 11: ODE representations: systems, hypergeometric, Fuchsian, ratios
void criterion11() {
    std::mt19937 rng(2111u);
    double wsys = 0.0, whyp = 0.0, wfuc = 0.0, wrat = 0.0;
    int nh = 0, nf = 0;
    for (int i = 0; i < 20; ++i) {
        cplx tau = rand_pt(rng, -0.4, 0.4, 1.0, 2.2);
        for (AuxFamily f : {AuxFamily::A, AuxFamily::B, AuxFamily::C})
            wsys = std::max(wsys, system_residual(f, tau));
        try {
            whyp = std::max(whyp, hypergeometric_residual(AuxFamily::A, tau));
            whyp = std::max(whyp, hypergeometric_residual(AuxFamily::B, tau));
            nh += 2;
        } catch (const NearSingular&) {
        }
        try {
            wfuc = std::max(wfuc, fuchsian_residual(tau));
            ++nf;
        } catch (const NearSingular&) {
        }
        AuxVector a = aux_vector(AuxFamily::A, tau);
        AuxVector b = aux_vector(AuxFamily::B, tau);
        AuxVector c = aux_vector(AuxFamily::C, tau);
        wrat = std::max(wrat, std::abs(a.w1 / a.w2 - s_map(SMap::S4, tau)));
        wrat = std::max(wrat, std::abs(b.w1 / b.w2 - s_map(SMap::S6, tau)));
        wrat = std::max(wrat, std::abs(c.w1 / c.w2 - s_map(SMap::S2plus, tau)));
    }
    bool ok = wsys < 1e-6 && whyp < 1e-5 && wfuc < 1e-5 && wrat < 1e-9 &&
              nh >= 20 && nf >= 10;
    report(11, "ODE systems/hypergeometric/Fuchsian/ratio identities", ok,
           std::max(std::max(wsys, whyp), std::max(wfuc, wrat)));
}

// 12: preimage degrees of s6 and of the two-branch s2 over the base tile
void criterion12() {
    Tile base = tile_from_element('V', identity_element(), "");
    TruncatedContour c = truncated_boundary(base, 3.0);
    cplx w(5.0, 5.0);
    // winding counts zeros minus poles; s6 has one pole inside, so the
    // preimage degree is the winding plus one
    int deg6 = count_zeros(smap_shift_target(SMap::S6, w), c) + 1;
    ZeroTarget t;
    t.name = "(s2+-w)(s2--w)";
    t.f = [w](cplx tau) {
        auto p = s2_pair(tau);
        return (p.first - w) * (p.second - w);
    };
    t.df = [w](cplx tau) {
        auto p = s2_pair(tau);
        EisensteinTriple e = eval_eisenstein(tau);
        cplx r = std::sqrt(e.e4);
        if (std::abs(e.e4) < 1e-12) r = 0.0;
        cplx dp = 2.0 * (e.e4 * r + e.e6) / (r * (e.e2 + r) * (e.e2 + r));
        cplx dm = 2.0 * (e.e4 * r - e.e6) / (r * (e.e2 - r) * (e.e2 - r));
        return dp * (p.second - w) + dm * (p.first - w);
    };
    int n2 = count_zeros(t, c);
    bool ok = deg6 == 2 && n2 == 1;
    report(12, "preimage degrees: s6 -> 2, s2 set-valued -> 1", ok,
           std::abs(double(deg6 - 2)) + std::abs(double(n2 - 1)));
}

// 13: traced s4 real-locus curve for (-inf, 0) joins the cusp windows
void criterion13() {
    cplx start = find_start(SMap::S4, LocusInterval::Neg);
    LocusCurve curve = trace(SMap::S4, LocusInterval::Neg, start, 0.01, 4000);
    ArcTriangle u0 = canonical(RegionName::U0);
    bool ok = curve.points.size() > 40;
    double w = 0.0;
    double ylo = 1e300, yhi = -1e300;
    for (size_t i = 0; i < curve.points.size(); ++i) {
        w = std::max(w, curve.residuals[i]);
        ok = ok && contains(u0, curve.points[i], 1e-9);
        ylo = std::min(ylo, curve.points[i].imag());
        yhi = std::max(yhi, curve.points[i].imag());
    }
    ok = ok && w < 1e-8 && ylo < 0.06 && yhi > 2.4;
    report(13, "s4 real locus in U0 joins the cusp windows at 0 and inf",
           ok, w);
}

// 14: positivity certificates behind the mapping theorems
void criterion14() {
    std::mt19937 rng(2114u);
    ArcTriangle t0 = canonical(RegionName::T0);
    ArcTriangle u0 = canonical(RegionName::U0);
    double w = -1e300;
    int done = 0;
    while (done < 500) {
        cplx z = rand_pt(rng, 0.0, 0.5, 0.55, 2.2);
        if (membership_violation(t0, z) < -1e-3) {
            w = std::max(w, -(1.0 / (z - s_map(SMap::S4, z))).real());
            w = std::max(w, -(1.0 / (s_map(SMap::S6, z) - z)).real());
            ++done;
        }
    }
    done = 0;
    while (done < 500) {
        cplx z = rand_pt(rng, 0.0, 0.5, 0.55, 2.2);
        if (membership_violation(u0, z) < -1e-3) {
            EisensteinTriple e = eval_eisenstein(z);
            cplx g = kI * kPi / 6.0 * (e.e2 + sqrt_E4_on_W(z));
            w = std::max(w, -g.imag());
            ++done;
        }
    }
    report(14, "positivity certificates on 500 interior samples", w < 0.0, w);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    criterion14();
    if (g_failed) std::printf("%d criterion(s) failed\n", g_failed);
    return g_failed ? 1 : 0;
}
