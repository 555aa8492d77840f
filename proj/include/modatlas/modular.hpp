#ifndef MODATLAS_MODULAR_HPP
#define MODATLAS_MODULAR_HPP

#include <cstdint>

#include "modatlas/qseries.hpp"
#include "modatlas/xcomplex.hpp"

namespace modatlas {

// Element of the extended modular group.  Matrix entries are integers with
// a d - b c = +1 for orientation-preserving elements and -1 when the map
// conjugates first (tau -> (a conj(tau) + b) / (c conj(tau) + d)).
struct GroupElement {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    bool conjugate_first = false;
};

GroupElement identity_element();
GroupElement compose(const GroupElement& g, const GroupElement& h); // g after h
GroupElement inverse(const GroupElement& g);
bool same_element(const GroupElement& g, const GroupElement& h); // up to sign
cplx apply(const GroupElement& g, const cplx& tau);

// Named reflections and translations.
GroupElement refl_alpha();  // -conj(tau), mirror Re = 0
GroupElement refl_beta();   // 1/conj(tau), mirror |tau| = 1
GroupElement refl_gamma();  // 1 - conj(tau), mirror Re = 1/2
GroupElement refl_delta();  // conj(tau)/(conj(tau) - 1), mirror |tau - 1| = 1
GroupElement translation(std::int64_t n);
GroupElement inversion_S(); // -1/tau

struct Reduction {
    cplx tau;       // representative with |Re| <= 1/2, |tau| >= 1
    GroupElement g; // apply(g, input) == tau
};

Reduction reduce(const cplx& tau, double slack = 1e-14);

enum class FnId { E2, E4, E6, Delta, J };

struct FormValue {
    cplx value;
    double error_estimate;
};

// Evaluation anywhere in the upper half-plane: reduce, sum the q-expansion,
// undo the transformation law (quasi-modular law for E2).
FormValue eval_form(FnId f, const cplx& tau, double tol = 1e-12);

struct EisensteinTriple {
    cplx e2, e4, e6;
};

EisensteinTriple eval_eisenstein(const cplx& tau);
cplx eval_delta(const cplx& tau);

// D = (2 pi i)^{-1} d/dtau via the closed forms
// DE2=(E2^2-E4)/12, DE4=(E2E4-E6)/3, DE6=(E2E6-E4^2)/2, DDelta=E2 Delta,
// DJ = -E4^2 E6 / (1728 Delta).
cplx eval_D(FnId f, const cplx& tau);

} // namespace modatlas

#endif
