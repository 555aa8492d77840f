#include "modatlas/qseries.hpp"

#include <algorithm>
#include <cmath>

#include "modatlas/errors.hpp"

namespace modatlas {

namespace {

double ratio_constant(const QSeries& s) {
    // K = max |c_n| / n^7 over the computed range.  For the named forms the
    // ratio decays past n = 1, so this is a global majorant.
    double best = 0.0;
    for (int n = std::max(1, s.lowest); n <= s.order(); ++n) {
        double r = std::abs(s.at(n)) / std::pow(static_cast<double>(n), 7.0);
        best = std::max(best, r);
    }
    return best;
}

void check_order(int order) {
    if (order < 0) throw InvalidInput("series order must be non-negative");
    if (order > kMaxOrder) throw InsufficientTruncation("series order above 512 is not supported");
}

QSeries eisenstein(int weight, double factor, int order) {
    QSeries s;
    s.lowest = 0;
    s.coeff.assign(static_cast<std::size_t>(order) + 1, 0.0);
    s.coeff[0] = 1.0;
    for (int n = 1; n <= order; ++n)
        s.coeff[static_cast<std::size_t>(n)] =
            factor * static_cast<double>(divisor_sum(weight - 1, n));
    s.tail_constant = ratio_constant(s);
    return s;
}

QSeries eta_power_24(int order) {
    // q prod (1 - q^n)^24, coefficients exact in double through order 512.
    std::vector<double> p(static_cast<std::size_t>(order), 0.0);
    if (order >= 1) p[0] = 1.0;
    for (int n = 1; n < order; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int m = static_cast<int>(p.size()) - 1; m >= n; --m)
                p[static_cast<std::size_t>(m)] -= p[static_cast<std::size_t>(m - n)];
        }
    }
    QSeries s;
    s.lowest = 1;
    s.coeff = std::move(p);
    if (s.coeff.empty()) s.coeff.push_back(0.0);
    s.tail_constant = ratio_constant(s);
    return s;
}

} // namespace

std::int64_t divisor_sum(int k, int n) {
    if (n <= 0 || k < 0) throw InvalidInput("divisor_sum needs n >= 1, k >= 0");
    std::int64_t total = 0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        std::int64_t a = 1, b = 1;
        for (int j = 0; j < k; ++j) {
            a *= d;
            b *= n / d;
        }
        total += a;
        if (d != n / d) total += b;
    }
    return total;
}

QSeries named_series(Form f, int order) {
    check_order(order);
    switch (f) {
        case Form::E2: return eisenstein(2, -24.0, order);
        case Form::E4: return eisenstein(4, 240.0, order);
        case Form::E6: return eisenstein(6, -504.0, order);
        case Form::Delta: return eta_power_24(order);
    }
    throw InvalidInput("unknown form");
}

QSeries d_operator(const QSeries& s) {
    QSeries r = s;
    for (int n = r.lowest; n <= r.order(); ++n)
        r.coeff[static_cast<std::size_t>(n - r.lowest)] *= static_cast<double>(n);
    r.tail_constant = ratio_constant(r);
    return r;
}

QSeries add(const QSeries& a, const QSeries& b) {
    QSeries r;
    r.lowest = std::min(a.lowest, b.lowest);
    int order = std::min(a.order(), b.order());
    r.coeff.assign(static_cast<std::size_t>(order - r.lowest) + 1, 0.0);
    for (int n = r.lowest; n <= order; ++n)
        r.coeff[static_cast<std::size_t>(n - r.lowest)] = a.at(n) + b.at(n);
    r.tail_constant = ratio_constant(r);
    return r;
}

QSeries sub(const QSeries& a, const QSeries& b) {
    return add(a, scale(b, -1.0));
}

QSeries mul(const QSeries& a, const QSeries& b) {
    QSeries r;
    r.lowest = a.lowest + b.lowest;
    int order = std::min(a.order() + b.lowest, b.order() + a.lowest);
    r.coeff.assign(static_cast<std::size_t>(order - r.lowest) + 1, 0.0);
    for (int i = a.lowest; i <= a.order(); ++i) {
        double ca = a.at(i);
        if (ca == 0.0) continue;
        for (int j = b.lowest; j <= order - i; ++j)
            r.coeff[static_cast<std::size_t>(i + j - r.lowest)] += ca * b.at(j);
    }
    r.tail_constant = ratio_constant(r);
    return r;
}

QSeries scale(const QSeries& a, double c) {
    QSeries r = a;
    for (double& x : r.coeff) x *= c;
    r.tail_constant = ratio_constant(r);
    return r;
}

SeriesValue eval_series(const QSeries& s, const cplx& tau, double tol) {
    if (tau.imag() <= 0.0) throw InvalidInput("tau must lie in the upper half-plane");
    cplx q = std::exp(2.0 * kPi * kI * tau);
    double r = std::abs(q);
    if (r > 0.25)
        throw InsufficientTruncation("|q| > 1/4: reduce tau before direct summation");

    int N = s.order();
    // tail <= K sum_{n>N} n^7 r^n <= K M r^{N+1} / (1 - 2r) with
    // M = max_{n>N} n^7 (1/2)^{n-N-1}; the max sits at n ~ 7/ln 2 or at N+1.
    double M = 0.0;
    for (int n = N + 1; n <= N + 40; ++n)
        M = std::max(M, std::pow(static_cast<double>(n), 7.0) *
                            std::pow(0.5, static_cast<double>(n - N - 1)));
    double tail = s.tail_constant * M * std::pow(r, static_cast<double>(N + 1)) / (1.0 - 2.0 * r);
    if (!(tail <= tol))
        throw InsufficientTruncation("tail bound exceeds requested tolerance");

    cplx acc = 0.0;
    for (int n = N; n >= s.lowest; --n)
        acc = acc * q + s.at(n);
    // complex pow(0, 0) is NaN, and q underflows to 0 for y beyond ~150
    if (s.lowest != 0) acc *= std::pow(q, static_cast<double>(s.lowest));
    return {acc, tail};
}

} // namespace modatlas
