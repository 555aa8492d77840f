#ifndef MODATLAS_QSERIES_HPP
#define MODATLAS_QSERIES_HPP

#include <cstdint>
#include <vector>

#include "modatlas/xcomplex.hpp"

namespace modatlas {

enum class Form { E2, E4, E6, Delta };

inline constexpr int kDefaultOrder = 64;
inline constexpr int kMaxOrder = 512;

// Truncated expansion  sum_{n=lowest}^{order} coeff[n-lowest] q^n.
// tail_constant K majorizes the dropped coefficients: |c_n| <= K n^7.
struct QSeries {
    int lowest = 0;
    std::vector<double> coeff;
    double tail_constant = 0.0;

    int order() const { return lowest + static_cast<int>(coeff.size()) - 1; }
    double at(int n) const {
        int k = n - lowest;
        if (k < 0 || k >= static_cast<int>(coeff.size())) return 0.0;
        return coeff[static_cast<std::size_t>(k)];
    }
};

struct SeriesValue {
    cplx value;
    double tail_estimate;
};

// sigma_k(n), exact in 64-bit for every n reachable here.
std::int64_t divisor_sum(int k, int n);

QSeries named_series(Form f, int order = kDefaultOrder);

// D = (2 pi i)^{-1} d/dtau, i.e. q d/dq on coefficients.
QSeries d_operator(const QSeries& s);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, double c);

// Direct summation at q = exp(2 pi i tau).  Throws InsufficientTruncation
// when the tail bound cannot be brought below tol (|q| must stay <= 1/4).
SeriesValue eval_series(const QSeries& s, const cplx& tau, double tol = 1e-12);

} // namespace modatlas

#endif
