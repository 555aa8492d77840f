#ifndef MODATLAS_XCOMPLEX_HPP
#define MODATLAS_XCOMPLEX_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace modatlas {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline const cplx kI{0.0, 1.0};

// One point at infinity on the Riemann sphere.
inline cplx infinity() {
    return {std::numeric_limits<double>::infinity(), 0.0};
}

inline bool is_inf(const cplx& z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

inline bool is_nan(const cplx& z) {
    return std::isnan(z.real()) || std::isnan(z.imag());
}

// Distance on the sphere, used whenever infinity may show up.
inline double chordal(const cplx& a, const cplx& b) {
    if (is_inf(a) && is_inf(b)) return 0.0;
    if (is_inf(a)) return 2.0 / std::sqrt(1.0 + std::norm(b));
    if (is_inf(b)) return 2.0 / std::sqrt(1.0 + std::norm(a));
    return 2.0 * std::abs(a - b) /
           (std::sqrt(1.0 + std::norm(a)) * std::sqrt(1.0 + std::norm(b)));
}

// Vertex of the fundamental triangle: rho = exp(i pi / 3).
inline cplx rho() { return {0.5, std::sqrt(3.0) / 2.0}; }

} // namespace modatlas

#endif
