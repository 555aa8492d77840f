#include "modatlas/ode.hpp"

#include <cmath>

#include "modatlas/errors.hpp"
#include "modatlas/polymorphic.hpp"

namespace modatlas {

namespace {

cplx delta_at(cplx tau) { return eval_form(FnId::Delta, tau).value; }

// log Delta along the segment [z0, z1]; Delta has no zeros, so the branch
// is fixed by keeping consecutive ratios in the right half-plane.
cplx continue_log(cplx z0, cplx l0, cplx z1) {
    cplx l = l0, d_prev = delta_at(z0);
    double t = 0.0, dt = 0.25;
    int steps = 0;
    while (t < 1.0) {
        if (++steps > 100000) throw ContinuationFailure("log Delta: too many steps");
        double tn = std::min(1.0, t + dt);
        cplx dn = delta_at(z0 + tn * (z1 - z0));
        double da = std::arg(dn / d_prev);
        if (std::abs(da) >= kPi / 2.0) {
            dt *= 0.5;
            if (dt < 1e-12) throw ContinuationFailure("log Delta: step collapse");
            continue;
        }
        l += std::log(dn / d_prev);
        d_prev = dn;
        t = tn;
        if (steps % 8 == 0 && dt < 0.25) dt *= 2.0;
    }
    return l;
}

cplx log_delta(cplx tau) {
    if (!(tau.imag() > 0.0)) throw InvalidInput("log Delta: Im(tau) must be positive");
    const cplx anchor{0.0, 2.0};
    cplx l = std::log(delta_at(anchor).real());
    if (std::abs(tau - anchor) < 1e-15) return l;
    cplx corner{tau.real(), 2.0};
    l = continue_log(anchor, l, corner);
    return continue_log(corner, l, tau);
}

const double kSix = 6.0;

}  // namespace

cplx delta_power(double alpha, cplx tau, double tol) {
    (void)tol;
    return std::exp(alpha * log_delta(tau));
}

AuxVector aux_vector(AuxFamily family, cplx tau, double tol) {
    EisensteinTriple e = eval_eisenstein(tau);
    AuxVector v{};
    v.family = family;
    v.tau = tau;
    switch (family) {
        case AuxFamily::A: {
            cplx d = delta_power(-5.0 / 12.0, tau, tol);
            v.w2 = d * (e.e2 * e.e4 - e.e6);
            v.w1 = tau * v.w2 - (kSix * kI / kPi) * e.e4 * d;
            break;
        }
        case AuxFamily::B: {
            cplx d = delta_power(-7.0 / 12.0, tau, tol);
            v.w2 = d * (e.e2 * e.e6 - e.e4 * e.e4);
            v.w1 = tau * v.w2 - (kSix * kI / kPi) * e.e6 * d;
            break;
        }
        case AuxFamily::C: {
            cplx r = sqrt_E4_on_W(tau, tol);
            cplx d1 = delta_power(-1.0 / 12.0, tau, tol);
            cplx d5 = delta_power(-5.0 / 12.0, tau, tol);
            v.w2 = d1 * (e.e2 + r);
            v.w1 = tau * v.w2 - (kSix * kI / kPi) * d1;
            v.f2 = d5 * (e.e2 * e.e4 - e.e4 * r - 2.0 * e.e6);
            v.f1 = tau * v.f2 - (kSix * kI / kPi) * d5 * e.e4;
            break;
        }
    }
    return v;
}

namespace {

// D of a component function by 5-point central differences,
// D = (2 pi i)^{-1} d/dtau.
template <typename F>
cplx fd_D(const F& f, cplx tau) {
    double h = 1e-4 * (1.0 + std::abs(tau));
    cplx d = (-f(tau + 2.0 * h) + 8.0 * f(tau + h) - 8.0 * f(tau - h) +
              f(tau - 2.0 * h)) / (12.0 * h);
    return d / (2.0 * kPi * kI);
}

}  // namespace

double system_residual(AuxFamily family, cplx tau, double tol) {
    double worst = 0.0;
    if (family == AuxFamily::A || family == AuxFamily::B) {
        cplx d16 = delta_power(1.0 / 6.0, tau, tol);
        cplx e4 = eval_form(FnId::E4, tau).value;
        AuxVector a = aux_vector(AuxFamily::A, tau, tol);
        AuxVector b = aux_vector(AuxFamily::B, tau, tol);
        for (int k = 0; k < 2; ++k) {
            auto ak = [&, k](cplx t) {
                AuxVector v = aux_vector(AuxFamily::A, t, tol);
                return k == 0 ? v.w1 : v.w2;
            };
            auto bk = [&, k](cplx t) {
                AuxVector v = aux_vector(AuxFamily::B, t, tol);
                return k == 0 ? v.w1 : v.w2;
            };
            cplx bv = k == 0 ? b.w1 : b.w2;
            cplx av = k == 0 ? a.w1 : a.w2;
            worst = std::max(worst, std::abs(fd_D(ak, tau) + (5.0 / 12.0) * d16 * bv));
            worst = std::max(worst, std::abs(fd_D(bk, tau) + (7.0 / 12.0) * e4 * av / d16));
        }
        return worst;
    }
    // Family C couples (c1, c2) with (f1, f2).
    cplx r = sqrt_E4_on_W(tau, tol);
    cplx e4 = r * r;
    cplx e6 = eval_form(FnId::E6, tau).value;
    cplx d13 = delta_power(1.0 / 3.0, tau, tol);
    AuxVector c = aux_vector(AuxFamily::C, tau, tol);
    for (int k = 0; k < 2; ++k) {
        auto ck = [&, k](cplx t) {
            AuxVector v = aux_vector(AuxFamily::C, t, tol);
            return k == 0 ? v.w1 : v.w2;
        };
        auto fk = [&, k](cplx t) {
            AuxVector v = aux_vector(AuxFamily::C, t, tol);
            return k == 0 ? v.f1 : v.f2;
        };
        cplx cv = k == 0 ? c.w1 : c.w2;
        cplx fv = k == 0 ? c.f1 : c.f2;
        worst = std::max(worst, std::abs(fd_D(ck, tau) - (1.0 / 12.0) * d13 / r * fv));
        worst = std::max(worst,
                         std::abs(fd_D(fk, tau) + 0.5 * r * fv -
                                  ((5.0 / 12.0) * e4 * r - 0.5 * e6) * cv / d13));
    }
    return worst;
}

cplx eval_J(cplx tau) { return eval_form(FnId::J, tau).value; }

cplx eval_DJ(cplx tau) {
    EisensteinTriple e = eval_eisenstein(tau);
    cplx delta = eval_form(FnId::Delta, tau).value;
    return -e.e4 * e.e4 * e.e6 / (1728.0 * delta);
}

cplx eval_u(cplx tau) {
    cplx r = sqrt_E4_on_W(tau);
    if (std::abs(r) < 1e-12) throw NearSingular("u: E4 vanishes");
    EisensteinTriple e = eval_eisenstein(tau);
    return e.e6 / (e.e4 * r);
}

cplx eval_Du(cplx tau) {
    cplx r = sqrt_E4_on_W(tau);
    if (std::abs(r) < 1e-12) throw NearSingular("Du: E4 vanishes");
    cplx e4 = r * r;
    cplx delta = eval_form(FnId::Delta, tau).value;
    return -864.0 * delta / (e4 * e4 * r);
}

double hypergeometric_residual(AuxFamily family, cplx tau, double tol) {
    if (family == AuxFamily::C)
        throw InvalidInput("hypergeometric equation covers families A and B");
    cplx z = eval_J(tau);
    if (std::min(std::abs(z), std::abs(z - 1.0)) < 1e-3)
        throw NearSingular("J too close to 0 or 1");
    cplx p, q = -35.0 / (144.0 * z * (z - 1.0));
    if (family == AuxFamily::A)
        p = (7.0 * z - 4.0) / (6.0 * z * (z - 1.0));
    else
        p = (5.0 * z - 2.0) / (6.0 * z * (z - 1.0));

    double worst = 0.0;
    for (int k = 0; k < 2; ++k) {
        auto w = [&, k](cplx t) {
            AuxVector v = aux_vector(family, t, tol);
            return k == 0 ? v.w1 : v.w2;
        };
        // Exact first derivative in J via the closed-form system; one FD
        // level only for the second derivative.
        auto dwdJ = [&, k](cplx t) -> cplx {
            AuxVector other = aux_vector(
                family == AuxFamily::A ? AuxFamily::B : AuxFamily::A, t, tol);
            cplx ov = k == 0 ? other.w1 : other.w2;
            cplx Dw;
            if (family == AuxFamily::A)
                Dw = -(5.0 / 12.0) * delta_power(1.0 / 6.0, t, tol) * ov;
            else
                Dw = -(7.0 / 12.0) * eval_form(FnId::E4, t).value * ov /
                     delta_power(1.0 / 6.0, t, tol);
            return Dw / eval_DJ(t);
        };
        cplx d2 = fd_D(dwdJ, tau) / eval_DJ(tau);
        worst = std::max(worst, std::abs(d2 + p * dwdJ(tau) + q * w(tau)));
    }
    return worst;
}

double fuchsian_residual(cplx tau, double tol) {
    cplx z = eval_u(tau);
    if (std::min(std::abs(z - 1.0), std::abs(z + 1.0)) < 1e-3)
        throw NearSingular("u too close to +-1");
    cplx omz = 1.0 - z * z;
    cplx p = -(4.0 * z + 3.0) / (3.0 * omz);
    cplx q = (6.0 * z - 5.0) / (36.0 * omz * omz);
    double worst = 0.0;
    for (int k = 0; k < 2; ++k) {
        auto w = [&, k](cplx t) {
            AuxVector v = aux_vector(AuxFamily::C, t, tol);
            return k == 0 ? v.w1 : v.w2;
        };
        auto dwdu = [&, k](cplx t) -> cplx {
            AuxVector v = aux_vector(AuxFamily::C, t, tol);
            cplx fv = k == 0 ? v.f1 : v.f2;
            cplx Dc = (1.0 / 12.0) * delta_power(1.0 / 3.0, t, tol) * fv /
                      sqrt_E4_on_W(t, tol);
            return Dc / eval_Du(t);
        };
        cplx d2 = fd_D(dwdu, tau) / eval_Du(tau);
        worst = std::max(worst, std::abs(d2 + p * dwdu(tau) + q * w(tau)));
    }
    return worst;
}

cplx schwarzian_in_variable(VarSchwarzian which, cplx z) {
    switch (which) {
        case VarSchwarzian::S4J:
        case VarSchwarzian::S6J:
        case VarSchwarzian::TauJ: {
            if (std::abs(z) < 1e-12 || std::abs(z - 1.0) < 1e-12)
                throw SingularPoint("J-Schwarzian singular at 0 and 1");
            cplx a = 1.0 / (z * z), b = 1.0 / ((1.0 - z) * (1.0 - z));
            cplx c = 1.0 / (z * (1.0 - z));
            if (which == VarSchwarzian::S4J)
                return 4.0 / 9.0 * a + 3.0 / 8.0 * b + 59.0 / 72.0 * c;
            if (which == VarSchwarzian::S6J)
                return 5.0 / 18.0 * a + 3.0 / 8.0 * b + 47.0 / 72.0 * c;
            return 4.0 / 9.0 * a + 3.0 / 8.0 * b + 23.0 / 72.0 * c;
        }
        case VarSchwarzian::S2U: {
            if (std::abs(z - 1.0) < 1e-12 || std::abs(z + 1.0) < 1e-12)
                throw SingularPoint("u-Schwarzian singular at +-1");
            cplx omz = 1.0 - z * z;
            return (4.0 * z * z + 9.0 * z + 5.0) / (9.0 * omz * omz);
        }
    }
    throw InvalidInput("unknown Schwarzian tag");
}

}  // namespace modatlas
