#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "modatlas/errors.hpp"
#include "modatlas/modular.hpp"

using namespace modatlas;

namespace {
cplx random_tau(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.05, 3.0);
    return {re(rng), im(rng)};
}

GroupElement random_gamma(std::mt19937_64& rng, int words = 8) {
    std::uniform_int_distribution<int> pick(0, 2);
    GroupElement g = identity_element();
    for (int i = 0; i < words; ++i) {
        switch (pick(rng)) {
            case 0: g = compose(translation(1), g); break;
            case 1: g = compose(translation(-1), g); break;
            default: g = compose(inversion_S(), g); break;
        }
    }
    return g;
}
} // namespace

TEST_CASE("group algebra") {
    GroupElement ab = compose(refl_alpha(), refl_beta());
    CHECK(same_element(ab, inversion_S()));
    CHECK_FALSE(ab.conjugate_first);

    GroupElement sigma = compose(refl_gamma(), refl_alpha());
    CHECK(same_element(sigma, translation(1)));

    GroupElement d = refl_delta();
    CHECK(same_element(compose(d, d), identity_element()));
    CHECK(same_element(compose(d, inverse(d)), identity_element()));

    // delta = gamma beta gamma
    GroupElement gbg = compose(refl_gamma(), compose(refl_beta(), refl_gamma()));
    CHECK(same_element(gbg, refl_delta()));

    cplx tau{0.3, 0.9};
    CHECK(std::abs(modatlas::apply(refl_alpha(), tau) - cplx(-0.3, 0.9)) < 1e-15);
    CHECK(std::abs(modatlas::apply(refl_beta(), tau) - 1.0 / std::conj(tau)) < 1e-15);
    CHECK(std::abs(modatlas::apply(refl_delta(), tau) -
                   std::conj(tau) / (std::conj(tau) - 1.0)) < 1e-15);
    CHECK(is_inf(modatlas::apply(translation(2), infinity())));
    CHECK(std::abs(modatlas::apply(inversion_S(), infinity())) < 1e-15);
}

TEST_CASE("fundamental domain reduction") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        cplx tau = random_tau(rng);
        Reduction r = reduce(tau);
        CHECK(std::abs(r.tau.real()) <= 0.5 + 1e-13);
        CHECK(std::norm(r.tau) >= 1.0 - 1e-13);
        CHECK(std::abs(modatlas::apply(r.g, tau) - r.tau) < 1e-12 * (1.0 + std::abs(r.tau)));
        CHECK_FALSE(r.g.conjugate_first);
        CHECK(r.g.a * r.g.d - r.g.b * r.g.c == 1);
    }
    CHECK_THROWS_AS(reduce(cplx(0.0, -1.0)), InvalidInput);
}

TEST_CASE("special values on the corner orbit") {
    cplx i{0.0, 1.0};
    cplx r = rho();
    CHECK(std::abs(eval_form(FnId::E2, i).value - 3.0 / kPi) < 1e-12);
    CHECK(std::abs(eval_form(FnId::E6, i).value) < 1e-12);
    CHECK(std::abs(eval_form(FnId::J, i).value - 1.0) < 1e-12);
    CHECK(std::abs(eval_form(FnId::E4, r).value) < 1e-12);
    CHECK(std::abs(eval_form(FnId::J, r).value) < 1e-12);
    CHECK(std::abs(eval_form(FnId::E2, r).value - 2.0 * std::sqrt(3.0) / kPi) < 1e-12);
    // Klein j(2i) = 66^3, so the normalized invariant equals 66^3/1728.
    CHECK(std::abs(eval_form(FnId::J, cplx(0.0, 2.0)).value - 287496.0 / 1728.0) < 1e-9);
}

TEST_CASE("transformation laws") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        cplx tau = random_tau(rng);
        GroupElement g = random_gamma(rng);
        cplx gt = modatlas::apply(g, tau);
        cplx j = double(g.c) * tau + double(g.d);
        EisensteinTriple at = eval_eisenstein(tau);
        EisensteinTriple ag = eval_eisenstein(gt);
        cplx j2 = j * j, j4 = j2 * j2, j6 = j4 * j2;
        CHECK(std::abs(ag.e4 - j4 * at.e4) < 1e-10 * std::abs(ag.e4));
        CHECK(std::abs(ag.e6 - j6 * at.e6) < 1e-10 * std::max(1.0, std::abs(ag.e6)));
        cplx lhs2 = ag.e2;
        cplx rhs2 = j2 * at.e2 - (6.0 * kI / kPi) * double(g.c) * j;
        CHECK(std::abs(lhs2 - rhs2) < 1e-10 * std::max(1.0, std::abs(lhs2)));
        cplx dl = eval_delta(gt);
        cplx dr = j4 * j4 * j4 * eval_delta(tau);
        CHECK(std::abs(dl - dr) < 1e-10 * std::abs(dl));
        CHECK(std::abs(eval_form(FnId::J, gt).value - eval_form(FnId::J, tau).value) <
              1e-9 * std::max(1.0, std::abs(eval_form(FnId::J, tau).value)));
    }
}

TEST_CASE("periodicity and reflection symmetry") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        cplx tau = random_tau(rng);
        EisensteinTriple a = eval_eisenstein(tau);
        EisensteinTriple b = eval_eisenstein(tau + 1.0);
        EisensteinTriple c = eval_eisenstein(-std::conj(tau));
        CHECK(std::abs(a.e2 - b.e2) < 1e-11 * std::max(1.0, std::abs(a.e2)));
        CHECK(std::abs(a.e4 - b.e4) < 1e-11 * std::max(1.0, std::abs(a.e4)));
        CHECK(std::abs(a.e6 - b.e6) < 1e-11 * std::max(1.0, std::abs(a.e6)));
        CHECK(std::abs(c.e4 - std::conj(a.e4)) < 1e-11 * std::max(1.0, std::abs(a.e4)));
        CHECK(std::abs(c.e2 - std::conj(a.e2)) < 1e-11 * std::max(1.0, std::abs(a.e2)));
    }
}

TEST_CASE("closed-form derivatives match finite differences") {
    std::mt19937_64 rng(17);
    const FnId fns[] = {FnId::E2, FnId::E4, FnId::E6, FnId::Delta, FnId::J};
    for (int i = 0; i < 10; ++i) {
        cplx tau = random_tau(rng);
        double h = 1e-5;
        for (FnId f : fns) {
            cplx fd = (eval_form(f, tau + h).value - eval_form(f, tau - h).value) /
                      (2.0 * h * 2.0 * kPi * kI);
            cplx cf = eval_D(f, tau);
            CHECK(std::abs(fd - cf) < 2e-6 * std::max(1.0, std::abs(cf)));
        }
    }
}

TEST_CASE("delta never vanishes and ties the forms together") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 40; ++i) {
        cplx tau = random_tau(rng);
        EisensteinTriple e = eval_eisenstein(tau);
        cplx lhs = 1728.0 * eval_delta(tau);
        cplx rhs = e.e4 * e.e4 * e.e4 - e.e6 * e.e6;
        CHECK(std::abs(lhs) > 0.0);
        // The difference on the right cancels; compare against its ingredients.
        double scale = std::max({1.0, std::pow(std::abs(e.e4), 3.0), std::norm(e.e6)});
        CHECK(std::abs(lhs - rhs) < 1e-12 * scale);
    }
}
