#include "modatlas/modular.hpp"

#include <cmath>

#include "modatlas/errors.hpp"

namespace modatlas {

GroupElement identity_element() { return {1, 0, 0, 1, false}; }

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    // Conjugation commutes with real matrices, so matrices just multiply.
    GroupElement r;
    r.a = g.a * h.a + g.b * h.c;
    r.b = g.a * h.b + g.b * h.d;
    r.c = g.c * h.a + g.d * h.c;
    r.d = g.c * h.b + g.d * h.d;
    r.conjugate_first = g.conjugate_first != h.conjugate_first;
    return r;
}

GroupElement inverse(const GroupElement& g) {
    std::int64_t det = g.a * g.d - g.b * g.c;
    GroupElement r;
    r.a = g.d / det;
    r.b = -g.b / det;
    r.c = -g.c / det;
    r.d = g.a / det;
    r.conjugate_first = g.conjugate_first;
    return r;
}

bool same_element(const GroupElement& g, const GroupElement& h) {
    if (g.conjugate_first != h.conjugate_first) return false;
    bool plus = g.a == h.a && g.b == h.b && g.c == h.c && g.d == h.d;
    bool minus = g.a == -h.a && g.b == -h.b && g.c == -h.c && g.d == -h.d;
    return plus || minus;
}

cplx apply(const GroupElement& g, const cplx& tau) {
    cplx z = g.conjugate_first ? std::conj(tau) : tau;
    double a = static_cast<double>(g.a), b = static_cast<double>(g.b);
    double c = static_cast<double>(g.c), d = static_cast<double>(g.d);
    if (is_inf(z)) {
        if (c == 0.0) return infinity();
        return {a / c, 0.0};
    }
    cplx den = c * z + d;
    if (den == cplx(0.0, 0.0)) return infinity();
    return (a * z + b) / den;
}

GroupElement refl_alpha() { return {-1, 0, 0, 1, true}; }
GroupElement refl_beta() { return {0, 1, 1, 0, true}; }
GroupElement refl_gamma() { return {-1, 1, 0, 1, true}; }
GroupElement refl_delta() { return {1, 0, 1, -1, true}; }
GroupElement translation(std::int64_t n) { return {1, n, 0, 1, false}; }
GroupElement inversion_S() { return {0, -1, 1, 0, false}; }

Reduction reduce(const cplx& tau, double slack) {
    if (!(tau.imag() > 0.0)) throw InvalidInput("reduce: tau must have positive imaginary part");
    cplx z = tau;
    GroupElement g = identity_element();
    const int max_steps = 20000;
    for (int step = 0; step < max_steps; ++step) {
        double n = std::round(z.real());
        if (n != 0.0) {
            GroupElement t = translation(-static_cast<std::int64_t>(n));
            z = apply(t, z);
            g = compose(t, g);
        }
        if (std::norm(z) < 1.0 - slack) {
            GroupElement s = inversion_S();
            z = apply(s, z);
            g = compose(s, g);
        } else {
            return {z, g};
        }
    }
    throw NonTermination("reduce: too many steps (point too close to the real axis?)");
}

namespace {

const QSeries& series_for(Form f) {
    static const QSeries e2 = named_series(Form::E2, kDefaultOrder);
    static const QSeries e4 = named_series(Form::E4, kDefaultOrder);
    static const QSeries e6 = named_series(Form::E6, kDefaultOrder);
    static const QSeries del = named_series(Form::Delta, kDefaultOrder);
    switch (f) {
        case Form::E2: return e2;
        case Form::E4: return e4;
        case Form::E6: return e6;
        case Form::Delta: return del;
    }
    throw InvalidInput("unknown form");
}

cplx inv_pow(const cplx& j, int k) {
    cplx p = 1.0;
    for (int i = 0; i < k; ++i) p *= j;
    return 1.0 / p;
}

} // namespace

FormValue eval_form(FnId f, const cplx& tau, double tol) {
    Reduction red = reduce(tau);
    const GroupElement& g = red.g;
    cplx j = static_cast<double>(g.c) * tau + static_cast<double>(g.d);

    auto base = [&](Form form) { return eval_series(series_for(form), red.tau, tol); };

    switch (f) {
        case FnId::E4: {
            SeriesValue v = base(Form::E4);
            cplx fac = inv_pow(j, 4);
            return {v.value * fac, v.tail_estimate * std::abs(fac)};
        }
        case FnId::E6: {
            SeriesValue v = base(Form::E6);
            cplx fac = inv_pow(j, 6);
            return {v.value * fac, v.tail_estimate * std::abs(fac)};
        }
        case FnId::Delta: {
            SeriesValue v = base(Form::Delta);
            cplx fac = inv_pow(j, 12);
            return {v.value * fac, v.tail_estimate * std::abs(fac)};
        }
        case FnId::E2: {
            SeriesValue v = base(Form::E2);
            cplx corr = (6.0 * kI / kPi) * static_cast<double>(g.c) * j;
            cplx fac = inv_pow(j, 2);
            return {(v.value + corr) * fac, v.tail_estimate * std::abs(fac)};
        }
        case FnId::J: {
            SeriesValue v4 = base(Form::E4);
            SeriesValue vd = base(Form::Delta);
            cplx e4cu = v4.value * v4.value * v4.value;
            cplx val = e4cu / (1728.0 * vd.value);
            double err = (3.0 * v4.tail_estimate * std::abs(v4.value * v4.value) +
                          std::abs(val) * vd.tail_estimate) /
                         (1728.0 * std::abs(vd.value));
            return {val, err};
        }
    }
    throw InvalidInput("unknown function");
}

EisensteinTriple eval_eisenstein(const cplx& tau) {
    Reduction red = reduce(tau);
    const GroupElement& g = red.g;
    cplx j = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
    cplx j2 = 1.0 / (j * j);
    cplx j4 = j2 * j2;
    cplx j6 = j4 * j2;
    cplx e2r = eval_series(series_for(Form::E2), red.tau).value;
    cplx e4r = eval_series(series_for(Form::E4), red.tau).value;
    cplx e6r = eval_series(series_for(Form::E6), red.tau).value;
    cplx corr = (6.0 * kI / kPi) * static_cast<double>(g.c) * j;
    return {(e2r + corr) * j2, e4r * j4, e6r * j6};
}

cplx eval_delta(const cplx& tau) {
    Reduction red = reduce(tau);
    cplx j = static_cast<double>(red.g.c) * tau + static_cast<double>(red.g.d);
    cplx j2 = j * j;
    cplx j12 = j2 * j2;
    j12 = j12 * j12 * j12;
    return eval_series(series_for(Form::Delta), red.tau).value / j12;
}

cplx eval_D(FnId f, const cplx& tau) {
    switch (f) {
        case FnId::E2: {
            EisensteinTriple e = eval_eisenstein(tau);
            return (e.e2 * e.e2 - e.e4) / 12.0;
        }
        case FnId::E4: {
            EisensteinTriple e = eval_eisenstein(tau);
            return (e.e2 * e.e4 - e.e6) / 3.0;
        }
        case FnId::E6: {
            EisensteinTriple e = eval_eisenstein(tau);
            return (e.e2 * e.e6 - e.e4 * e.e4) / 2.0;
        }
        case FnId::Delta: {
            EisensteinTriple e = eval_eisenstein(tau);
            return e.e2 * eval_delta(tau);
        }
        case FnId::J: {
            EisensteinTriple e = eval_eisenstein(tau);
            return -e.e4 * e.e4 * e.e6 / (1728.0 * eval_delta(tau));
        }
    }
    throw InvalidInput("unknown function");
}

} // namespace modatlas
