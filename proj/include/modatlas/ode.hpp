#pragma once
// Auxiliary first-order systems whose solution ratios are the s-maps, the
// variables J and u, and the second-order equations they satisfy.

#include "modatlas/modular.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

enum class AuxFamily { A, B, C };

struct AuxVector {
    AuxFamily family;
    cplx w1, w2;   // a1,a2 / b1,b2 / c1,c2
    cplx f1, f2;   // companion pair, family C only
    cplx tau;
};

// exp(alpha * log Delta) with log Delta continued from the anchor 2i,
// where Delta is positive real.
cplx delta_power(double alpha, cplx tau, double tol = 1e-12);

AuxVector aux_vector(AuxFamily family, cplx tau, double tol = 1e-12);

// Max residual of the first-order system, D taken by finite differences
// of the components. Families A and B share one coupled system.
double system_residual(AuxFamily family, cplx tau, double tol = 1e-12);

// Residual of the hypergeometric equation in z = J for both components.
double hypergeometric_residual(AuxFamily family, cplx tau, double tol = 1e-12);

// Residual of the Fuchsian equation in z = u = E6 * E4^{-3/2}, tau in W.
double fuchsian_residual(cplx tau, double tol = 1e-12);

enum class VarSchwarzian { S4J, S6J, TauJ, S2U };

cplx schwarzian_in_variable(VarSchwarzian which, cplx point);

// Variable helpers.
cplx eval_J(cplx tau);
cplx eval_DJ(cplx tau);   // D = (2 pi i)^{-1} d/dtau
cplx eval_u(cplx tau);    // tau in W
cplx eval_Du(cplx tau);

}  // namespace modatlas
