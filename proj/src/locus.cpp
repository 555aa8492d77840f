#include "modatlas/locus.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "modatlas/errors.hpp"
#include "modatlas/modular.hpp"
#include "modatlas/qseries.hpp"

namespace modatlas {

namespace {

constexpr double kStepMin = 1e-4;
constexpr double kStepMax = 0.05;
constexpr double kResidual = 1e-8;
constexpr double kPoleSwitch = 1e5;

struct SEval {
    cplx s, sp;
};

// The denominators E2 E4 - E6 and E2 E6 - E4^2 have no constant q-term, so
// near either cusp the direct difference is pure cancellation.  Evaluate
// them from their own expansions at the reduced point and move the result
// back with the equivariance s(g tau) = g s(tau).
SEval eval_on_locus(SMap fn, const cplx& tau) {
    if (fn == SMap::S2plus || fn == SMap::S2minus)
        return {s_map(fn, tau), s_derivative(fn, tau)};
    static const QSeries de4 = d_operator(named_series(Form::E4, 128));
    static const QSeries de6 = d_operator(named_series(Form::E6, 128));
    Reduction r = reduce(tau);
    cplx den = (fn == SMap::S4) ? 3.0 * eval_series(de4, r.tau).value
                                : 2.0 * eval_series(de6, r.tau).value;
    EisensteinTriple e = eval_eisenstein(r.tau);
    cplx delta = eval_delta(r.tau);
    GroupElement gi = inverse(r.g);
    if (den == 0.0) {
        cplx at = gi.c != 0 ? cplx(double(gi.a) / double(gi.c), 0.0) : infinity();
        return {at, 0.0};
    }
    cplx num = (fn == SMap::S4) ? e.e4 : e.e6;
    cplx s0 = r.tau - 6.0 * kI * num / (kPi * den);
    cplx sp0 = (fn == SMap::S4) ? -8640.0 * delta / (den * den)
                                : 12096.0 * e.e4 * delta / (den * den);
    cplx s = modatlas::apply(gi, s0);
    cplx wi = cplx(double(gi.c)) * s0 + cplx(double(gi.d));
    cplx wg = cplx(double(r.g.c)) * tau + cplx(double(r.g.d));
    return {s, sp0 / (wi * wi * wg * wg)};
}

bool in_interval(double x, LocusInterval iv) {
    switch (iv) {
        case LocusInterval::Neg: return x < 0.0;
        case LocusInterval::Unit: return x > 0.0 && x < 1.0;
        case LocusInterval::Pos: return x > 1.0;
    }
    return false;
}

// 1-3 Newton corrections along the normal direction; target Im s = 0,
// switching to Im(1/s) = 0 when s is large (locus through a pole).
bool correct(SMap fn, cplx& tau, cplx normal, double* residual) {
    for (int it = 0; it < 3; ++it) {
        SEval ev = eval_on_locus(fn, tau);
        cplx s = ev.s;
        if (is_inf(s)) return false;  // exactly at the pole; step over it
        cplx sp = ev.sp;
        double eps;
        if (std::abs(s) > kPoleSwitch) {
            cplx w = 1.0 / s;
            cplx dw = -sp / (s * s) * normal;
            if (!(std::abs(dw.imag()) > 0.0)) return false;
            eps = -w.imag() / dw.imag();
        } else {
            cplx ds = sp * normal;
            if (!(std::abs(ds.imag()) > 0.0)) return false;
            eps = -s.imag() / ds.imag();
        }
        // s and s' shrink together into the cusp, so the quotient stays
        // sane; a large eps means the transversal Newton lost the curve.
        if (!(std::abs(eps) < 1.0)) return false;
        tau += eps * normal;
        if (!(tau.imag() > 0.0)) return false;
    }
    cplx s = eval_on_locus(fn, tau).s;
    double res = std::abs(s.imag());
    if (std::abs(s) > kPoleSwitch)
        res = std::abs((1.0 / s).imag()) * std::norm(s);  // same quantity, stable
    *residual = res;
    return res < kResidual;
}

}  // namespace

LocusCurve trace(SMap fn, LocusInterval interval, cplx start, double step,
                 int max_points, double im_lo, double im_hi) {
    if (max_points < 2 || step <= 0.0) throw InvalidInput("trace: bad step or max_points");
    SEval ev0 = eval_on_locus(fn, start);
    if (std::abs(ev0.s.imag()) > 1e-6) throw StartNotOnLocus("|Im s| too large at start");
    cplx sp0 = ev0.sp;
    if (std::abs(sp0) < 1e-12) throw DerivativeVanishes("s' = 0 at start");

    // Polish the start point once.
    cplx t0 = std::conj(sp0) / std::abs(sp0);
    double res0 = 0.0;
    cplx polished = start;
    if (!correct(fn, polished, kI * t0, &res0))
        throw StartNotOnLocus("start does not converge onto the locus");

    auto run = [&](double dir) {
        std::vector<cplx> pts;
        std::vector<cplx> vals;
        std::vector<double> res;
        cplx tau = polished;
        cplx tangent_prev = dir * t0;
        double h = std::clamp(step, kStepMin, kStepMax);
        int clean = 0;
        while (static_cast<int>(pts.size()) < max_points / 2) {
            cplx sp = eval_on_locus(fn, tau).sp;
            // s' decays exponentially into the cusp; the direction stays
            // meaningful until it underflows outright.
            if (!(std::abs(sp) > 0.0)) break;
            cplx t = std::conj(sp) / std::abs(sp);
            if ((t * std::conj(tangent_prev)).real() < 0.0) t = -t;
            cplx cand = tau + h * t;
            double r = 0.0;
            if (!correct(fn, cand, kI * t, &r) ||
                std::abs(cand - tau) < 0.2 * h || std::abs(cand - tau) > 2.0 * h) {
                h *= 0.5;
                clean = 0;
                if (h < kStepMin) {
                    if (!pts.empty()) break;  // endpoint reached as close as we can
                    throw StepCollapse("corrector keeps failing near the start");
                }
                continue;
            }
            cplx sv = eval_on_locus(fn, cand).s;
            bool exits = cand.imag() < im_lo || cand.imag() > im_hi ||
                         (!is_inf(sv) && std::abs(sv) < kPoleSwitch &&
                          !in_interval(sv.real(), interval));
            if (exits) {
                // overshoot past the stopping window; refine onto the edge
                h *= 0.5;
                clean = 0;
                if (h < kStepMin) break;
                continue;
            }
            tangent_prev = t;
            tau = cand;
            pts.push_back(tau);
            vals.push_back(sv);
            res.push_back(r);
            if (++clean >= 5) {
                h = std::min(2.0 * h, kStepMax);
                clean = 0;
            }
        }
        struct Leg {
            std::vector<cplx> pts, vals;
            std::vector<double> res;
        };
        return Leg{pts, vals, res};
    };

    auto fwd = run(1.0);
    auto bwd = run(-1.0);

    LocusCurve curve{fn, interval, {}, {}, {}, step};
    for (size_t i = bwd.pts.size(); i > 0; --i) {
        curve.points.push_back(bwd.pts[i - 1]);
        curve.values.push_back(bwd.vals[i - 1]);
        curve.residuals.push_back(bwd.res[i - 1]);
    }
    curve.points.push_back(polished);
    curve.values.push_back(eval_on_locus(fn, polished).s);
    curve.residuals.push_back(res0);
    for (size_t i = 0; i < fwd.pts.size(); ++i) {
        curve.points.push_back(fwd.pts[i]);
        curve.values.push_back(fwd.vals[i]);
        curve.residuals.push_back(fwd.res[i]);
    }
    return curve;
}

cplx find_start(SMap fn, LocusInterval interval) {
    double xlo, xhi;
    if (fn == SMap::S4 && interval == LocusInterval::Neg) {
        xlo = 0.01; xhi = 0.49;
    } else if (fn == SMap::S4 && interval == LocusInterval::Pos) {
        xlo = 0.51; xhi = 0.99;
    } else if (fn == SMap::S6 && interval == LocusInterval::Pos) {
        xlo = 0.01; xhi = 0.49;
    } else if (fn == SMap::S6 && interval == LocusInterval::Neg) {
        xlo = 0.51; xhi = 0.99;
    } else {
        throw InvalidInput("no canned probe for this map/interval; supply a start");
    }
    auto im_at = [fn](double x) { return eval_on_locus(fn, cplx(x, 2.0)).s.imag(); };
    double flo = im_at(xlo), fhi = im_at(xhi);
    if (flo * fhi > 0.0) throw StartNotOnLocus("probe endpoints have equal sign");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (xlo + xhi);
        double fm = im_at(mid);
        if (std::abs(fm) < 1e-12 || xhi - xlo < 1e-15) return {mid, 2.0};
        if ((fm > 0.0) == (fhi > 0.0)) {
            xhi = mid;
            fhi = fm;
        } else {
            xlo = mid;
            flo = fm;
        }
    }
    return {0.5 * (xlo + xhi), 2.0};
}

cplx find_start_near_pole(SMap fn, LocusInterval interval, cplx pole,
                          double radius) {
    if (interval == LocusInterval::Unit)
        throw InvalidInput("a pole arm carries values near infinity");
    auto at = [&](double th) {
        return eval_on_locus(fn, pole + radius * std::polar(1.0, th)).s;
    };
    const int n = 64;
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * kPi * k / n, b = 2.0 * kPi * (k + 1) / n;
        cplx sa = at(a), sb = at(b);
        if (is_inf(sa) || is_inf(sb)) continue;
        if (sa.imag() * sb.imag() > 0.0) continue;
        double fa = sa.imag();
        for (int it = 0; it < 80; ++it) {
            double m = 0.5 * (a + b);
            double fm = at(m).imag();
            if ((fm > 0.0) == (fa > 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        double th = 0.5 * (a + b);
        if (in_interval(at(th).real(), interval))
            return pole + radius * std::polar(1.0, th);
    }
    throw StartNotOnLocus("no matching locus arm on the probe circle");
}

void export_csv(const LocusCurve& curve, std::ostream& out) {
    out << "re,im,s_re,s_im,residual\n";
    out.precision(17);
    for (size_t i = 0; i < curve.points.size(); ++i) {
        out << curve.points[i].real() << ',' << curve.points[i].imag() << ','
            << curve.values[i].real() << ',' << curve.values[i].imag() << ','
            << curve.residuals[i] << '\n';
    }
}

}  // namespace modatlas
