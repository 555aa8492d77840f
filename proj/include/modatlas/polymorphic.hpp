#pragma once
// The maps s2+/-, s4, s6 with closed-form derivatives and Schwarzians.
// E4^{1/2} is single-valued on W (E4 has no zeros there) and is pinned by
// continuation from the anchor 2i, where it is positive real.

#include <functional>
#include <utility>

#include "modatlas/modular.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

enum class SMap { S2plus, S2minus, S4, S6 };

struct BranchedValue {
    cplx value;
    int branch;   // +1 or -1, sign relative to the continued root
    cplx sqrtE4;  // the root actually used
};

// Branch of sqrt(E4) on W continued from 2i along a polyline inside W.
cplx sqrt_E4_on_W(cplx tau, double tol = 1e-12);

cplx s_map(SMap k, cplx tau, double tol = 1e-12);

// Both root signs via the principal square root; valid anywhere in Im > 0.
std::pair<cplx, cplx> s2_pair(cplx tau, double tol = 1e-12);

cplx s_derivative(SMap k, cplx tau, double tol = 1e-12);

cplx schwarzian(SMap k, cplx tau, double tol = 1e-12);

// tau + weight * f / f'; infinity when f' = 0 but f != 0.
cplx generic_s(int weight, cplx f_value, cplx f_prime_value, cplx tau,
               double tol = 1e-12);

// {f, tau} by 5-point central differences, Richardson-extrapolated once.
// step <= 0 selects the default 1e-4 * (1 + |tau|).
cplx fd_schwarzian(const std::function<cplx(cplx)>& f, cplx tau,
                   double step = 0.0);

}  // namespace modatlas
