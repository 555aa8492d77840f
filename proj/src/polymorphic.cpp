#include "modatlas/polymorphic.hpp"

#include <cmath>
#include <vector>

#include "modatlas/errors.hpp"
#include "modatlas/geometry.hpp"

namespace modatlas {

namespace {

cplx e4_at(cplx tau) { return eval_form(FnId::E4, tau).value; }

// Continue sqrt(E4) along the segment [z0, z1]; v0 is the root at z0.
// Steps are halved until the ratio of consecutive E4 values stays in the
// right half-plane, so the principal square root of the ratio is safe.
cplx continue_sqrt(cplx z0, cplx v0, cplx z1) {
    cplx z = z0, v = v0, e_prev = v0 * v0;
    double t = 0.0, dt = 0.25;
    int steps = 0;
    while (t < 1.0) {
        if (++steps > 100000) throw ContinuationFailure("sqrt(E4): too many steps");
        double tn = std::min(1.0, t + dt);
        cplx zn = z0 + tn * (z1 - z0);
        cplx en = e4_at(zn);
        if (std::abs(en) == 0.0 || std::arg(en / e_prev) >= kPi / 2.0 ||
            std::arg(en / e_prev) <= -kPi / 2.0) {
            dt *= 0.5;
            if (dt < 1e-12) throw ContinuationFailure("sqrt(E4): step collapse");
            continue;
        }
        v *= std::sqrt(en / e_prev);
        z = zn;
        e_prev = en;
        t = tn;
        if (steps % 8 == 0 && dt < 0.25) dt *= 2.0;
    }
    (void)z;
    return v;
}

bool is_infinite_ratio(cplx num, cplx den, double tol) {
    double n = std::abs(num), d = std::abs(den);
    if (n < tol && d < tol) throw Indeterminate("0/0 in s-map denominator");
    return d < tol * n * 1e-3 || d == 0.0;
}

}  // namespace

cplx sqrt_E4_on_W(cplx tau, double tol) {
    static const ArcTriangle w = canonical(RegionName::W);
    if (!contains(w, tau, 1e-12)) throw OutsideW("tau not in W");
    // E4 vanishes only at the rho corners of W; the root there is 0 for
    // either branch, and taking sqrt of the 1e-15 evaluation residue would
    // cost eight digits.
    if (std::abs(e4_at(tau)) < 1e-12) return cplx{0.0, 0.0};
    const cplx anchor{0.0, 2.0};
    cplx v = std::sqrt(e4_at(anchor).real());  // positive real at 2i
    if (std::abs(tau - anchor) < 1e-15) return v;
    // Horizontal leg at Im = 2, then vertical descent/ascent: both stay in W.
    cplx corner{tau.real(), 2.0};
    v = continue_sqrt(anchor, v, corner);
    v = continue_sqrt(corner, v, tau);
    if (std::abs(v * v - e4_at(tau)) > tol * std::max(1.0, std::abs(e4_at(tau))) * 1e2)
        throw ContinuationFailure("sqrt(E4): continuation drifted off the root");
    return v;
}

cplx s_map(SMap k, cplx tau, double tol) {
    if (!(tau.imag() > 0.0)) throw InvalidInput("s_map: Im(tau) must be positive");
    EisensteinTriple e = eval_eisenstein(tau);
    cplx num, den;
    switch (k) {
        case SMap::S4:
            num = 6.0 * kI * e.e4;
            den = kPi * (e.e2 * e.e4 - e.e6);
            break;
        case SMap::S6:
            num = 6.0 * kI * e.e6;
            den = kPi * (e.e2 * e.e6 - e.e4 * e.e4);
            break;
        case SMap::S2plus:
        case SMap::S2minus: {
            cplx r = sqrt_E4_on_W(tau, tol);
            num = 6.0 * kI;
            den = kPi * (e.e2 + (k == SMap::S2plus ? r : -r));
            break;
        }
    }
    if (is_infinite_ratio(num, den, tol)) return infinity();
    return tau - num / den;
}

std::pair<cplx, cplx> s2_pair(cplx tau, double tol) {
    if (!(tau.imag() > 0.0)) throw InvalidInput("s2_pair: Im(tau) must be positive");
    EisensteinTriple e = eval_eisenstein(tau);
    cplx r = std::abs(e.e4) < 1e-12 ? cplx{0.0, 0.0} : std::sqrt(e.e4);
    auto val = [&](cplx root) -> cplx {
        cplx den = kPi * (e.e2 + root);
        if (is_infinite_ratio(cplx{6.0, 0.0}, den, tol)) return infinity();
        return tau - 6.0 * kI / den;
    };
    return {val(r), val(-r)};
}

cplx s_derivative(SMap k, cplx tau, double tol) {
    if (!(tau.imag() > 0.0)) throw InvalidInput("s_derivative: Im(tau) must be positive");
    EisensteinTriple e = eval_eisenstein(tau);
    cplx delta = eval_form(FnId::Delta, tau, tol).value;
    switch (k) {
        case SMap::S4: {
            cplx den = e.e2 * e.e4 - e.e6;
            if (std::abs(den) < tol) throw PoleAtPoint("s4' pole");
            // -5(E4^3 - E6^2) = -8640 Delta avoids the cancellation.
            return -8640.0 * delta / (den * den);
        }
        case SMap::S6: {
            cplx den = e.e2 * e.e6 - e.e4 * e.e4;
            if (std::abs(den) < tol) throw PoleAtPoint("s6' pole");
            return 12096.0 * e.e4 * delta / (den * den);
        }
        case SMap::S2plus:
        case SMap::S2minus: {
            cplx r = sqrt_E4_on_W(tau, tol);
            double sign = (k == SMap::S2plus) ? 1.0 : -1.0;
            cplx den = e.e2 + sign * r;
            if (std::abs(den) < tol) throw PoleAtPoint("s2' pole");
            if (std::abs(r) < tol) throw PoleAtPoint("s2' branch point: E4 = 0");
            return 2.0 * (e.e4 * r + sign * e.e6) / (r * den * den);
        }
    }
    throw InvalidInput("unknown map");
}

cplx schwarzian(SMap k, cplx tau, double tol) {
    EisensteinTriple e = eval_eisenstein(tau);
    const double pi2 = kPi * kPi;
    switch (k) {
        case SMap::S4:
            return 2.0 * pi2 * e.e4;
        case SMap::S6: {
            if (std::abs(e.e4) < tol) throw PoleAtPoint("schwarzian(s6): E4 = 0");
            cplx e4_3 = e.e4 * e.e4 * e.e4;
            return (2.0 / 3.0) * pi2 * (e.e6 * e.e6 + 2.0 * e4_3) / (e.e4 * e.e4);
        }
        case SMap::S2plus:
        case SMap::S2minus: {
            if (std::abs(e.e4) < tol) throw PoleAtPoint("schwarzian(s2): E4 = 0");
            cplx r = sqrt_E4_on_W(tau, tol);
            cplx r3 = e.e4 * r;  // E4^{3/2}
            if (k == SMap::S2minus) r3 = -r3;
            return (pi2 / 6.0) * (r3 - e.e6) * (7.0 * r3 + e.e6) / (e.e4 * e.e4);
        }
    }
    throw InvalidInput("unknown map");
}

cplx generic_s(int weight, cplx f_value, cplx f_prime_value, cplx tau, double tol) {
    double scale = std::max(1.0, std::abs(f_value));
    if (std::abs(f_prime_value) < tol * scale * 1e-3) {
        if (std::abs(f_value) < tol) throw Indeterminate("generic_s: f and f' both vanish");
        return infinity();
    }
    return tau + static_cast<double>(weight) * f_value / f_prime_value;
}

namespace {

cplx fd_schwarzian_once(const std::function<cplx(cplx)>& f, cplx tau, double h) {
    cplx f2 = f(tau + 2.0 * h), f1 = f(tau + h), fm1 = f(tau - h), fm2 = f(tau - 2.0 * h);
    cplx f0 = f(tau);
    cplx d1 = (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * h);
    cplx d2 = (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    cplx d3 = (f2 - 2.0 * f1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
    cplx q = d2 / d1;
    return d3 / d1 - 1.5 * q * q;
}

}  // namespace

cplx fd_schwarzian(const std::function<cplx(cplx)>& f, cplx tau, double step) {
    double h = step > 0.0 ? step : 1e-4 * (1.0 + std::abs(tau));
    cplx coarse = fd_schwarzian_once(f, tau, h);
    cplx fine = fd_schwarzian_once(f, tau, h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace modatlas
