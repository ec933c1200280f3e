#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mbergman/inequalities.hpp"
#include "mbergman/space.hpp"
#include "mbergman/specfun.hpp"
#include "oracles.hpp"

using namespace mbergman;
using namespace mbergman::inequalities;
using space::LaurentPoly;
using space::SpaceParams;
using cplx = std::complex<double>;

namespace {
double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

LaurentPoly unit_coeff_poly(oracles::Rng& rng, int n_min, int n_max) {
    std::vector<cplx> c;
    for (int n = n_min; n <= n_max; ++n)
        c.push_back(std::polar(1.0, 2.0 * std::numbers::pi * rng.unit()));
    return LaurentPoly::from_coeffs(n_min, std::move(c));
}
}  // namespace

TEST_CASE("point_bound_constant branch arithmetic") {
    const auto c00 = point_bound_constant(0.5, 0.5, 0.0, 0.0);
    CHECK(rel_err(c00.r_eps, 0.25) < 1e-15);
    CHECK(rel_err(c00.a_eps, 1.0) < 1e-15);
    CHECK(rel_err(c00.b_eps, 1.0) < 1e-15);
    CHECK(rel_err(c00.c_eps, 1.0 / 16.0) < 1e-14);

    const auto c10 = point_bound_constant(0.5, 0.5, 1.0, 0.0);
    CHECK(rel_err(c10.a_eps, 7.0 / 16.0) < 1e-14);
    CHECK(rel_err(c10.c_eps, 7.0 / 256.0) < 1e-14);

    const auto cnb = point_bound_constant(0.5, 0.5, 0.0, -0.5);
    CHECK(rel_err(cnb.b_eps, 4.0 / 3.0) < 1e-14);
    CHECK(rel_err(cnb.c_eps, 1.0 / 12.0) < 1e-14);

    // invariants: 0 < r_eps, r - r_eps > 0, r + r_eps < 1, c_eps > 0
    oracles::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const double r = rng.range(0.01, 0.99), eps = rng.range(0.01, 0.99);
        const auto c = point_bound_constant(r, eps, rng.range(-0.9, 3.0), rng.range(-0.9, 3.0));
        CHECK(c.r_eps > 0.0);
        CHECK(r - c.r_eps > 0.0);
        CHECK(r + c.r_eps < 1.0);
        CHECK(c.c_eps > 0.0);
    }
    CHECK_THROWS_AS(point_bound_constant(0.0, 0.5, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(point_bound_constant(0.5, 1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("check_point_bound on closed-form cases") {
    const auto one = LaurentPoly::monomial(0);
    const auto r1 = check_point_bound(one, SpaceParams::make(0.0, 0.0, 2.0), 0.5, 0.5, 64);
    CHECK(r1.passed());
    CHECK(rel_err(r1.lhs, 1.0) < 1e-14);

    // e_5 at (0,0,2): both sides in closed form
    const double n5 = std::exp(0.5 * (specfun::log_beta(1.0, 1.0) - specfun::log_beta(1.0, 6.0)));
    const auto e5 = LaurentPoly::monomial(5, n5);
    const auto r2 = check_point_bound(e5, SpaceParams::make(0.0, 0.0, 2.0), 0.5, 0.5, 128);
    CHECK(r2.passed());
    CHECK(r2.margin > 0.0);
    CHECK(rel_err(r2.lhs, std::pow(n5 * std::pow(0.5, 5), 2.0)) < 1e-12);

    // z^{-1} at (0,1,2): norm sqrt(2), circle max 1/r
    const auto r3 =
        check_point_bound(LaurentPoly::monomial(-1), SpaceParams::make(0.0, 1.0, 2.0), 0.5,
                          0.5, 64);
    CHECK(r3.passed());
    CHECK(rel_err(r3.lhs, 4.0) < 1e-12);           // (1/r)^2 = 4
    CHECK(rel_err(r3.rhs, 256.0) < 1e-10);  // (B/c_eps) ||f||^2 = 128 * 2
}

TEST_CASE("point bound over a random family") {
    oracles::Rng rng(909);
    for (double alpha : {0.0, 2.5})
        for (double b : {-0.5, 1.5})
            for (double p : {1.0, 2.0, 3.0}) {
                const auto P = SpaceParams::make(alpha, b, p);
                for (int trial = 0; trial < 6; ++trial) {
                    const auto f = unit_coeff_poly(rng, -P.pole_cap, 8);
                    const double norm = 0.0;
                    for (double r : {0.2, 0.5, 0.8})
                        for (double eps : {0.25, 0.5, 0.75}) {
                            const auto rep = check_point_bound(f, P, r, eps, 96, norm);
                            CHECK(rep.passed());
                        }
                }
            }
}

TEST_CASE("derivative_bound") {
    // n = 0 reduces to the point bound with a looser constant
    const auto f = LaurentPoly::from_coeffs(0, {1.0, 0.5, cplx(0.0, 0.25)});
    const auto P = SpaceParams::make(0.5, 0.5, 2.0);
    const auto base = check_point_bound(f, P, 0.4, 0.5, 96);
    const auto d0 = derivative_bound(f, 0, P, 0.4, 0.5);
    CHECK(base.passed());
    CHECK(d0.passed());
    CHECK(d0.rhs >= base.rhs);

    // f = z^2, n = 2: second derivative is the constant 2
    const auto z2 = LaurentPoly::monomial(2);
    const auto d2 = derivative_bound(z2, 2, SpaceParams::make(0.0, 0.0, 2.0), 0.5, 0.5);
    CHECK(d2.passed());
    CHECK(rel_err(d2.lhs, 4.0) < 1e-12);  // |2|^2

    // f = z^{-1}, n = 1 at (0,1,2): |f'| = 1/r^2 on the circle
    const auto dm = derivative_bound(LaurentPoly::monomial(-1), 1,
                                     SpaceParams::make(0.0, 1.0, 2.0), 0.5, 0.5);
    CHECK(dm.passed());
    CHECK(rel_err(dm.lhs, 16.0) < 1e-12);  // (1/r^2)^2
}

TEST_CASE("j_weight closed forms and limits") {
    const auto P = SpaceParams::make(0.0, 0.0, 2.0);
    CHECK(rel_err(j_weight(0.6, P), 0.64) < 1e-12);
    for (double r : {0.1, 0.33, 0.9})
        CHECK(rel_err(j_weight(r, P), 1.0 - r * r) < 1e-12);
    CHECK(rel_err(j_weight(1e-8, P), 1.0) < 1e-7);
    CHECK(j_weight(1.0 - 1e-6, P) < 1e-5);
    // for any parameters J vanishes at the rim and J <= 1
    for (double alpha : {-0.5, 1.0})
        for (double b : {-0.5, 0.0, 2.5})
            for (double p : {1.0, 2.0, 3.0}) {
                const auto Q = SpaceParams::make(alpha, b, p);
                CHECK(j_weight(1.0 - 1e-6, Q) < 1e-2);  // ~ (1-r^2)^{alpha+1}
                for (double r : {0.05, 0.3, 0.7, 0.95})
                    CHECK(j_weight(r, Q) <= 1.0 + 1e-12);
            }
}

TEST_CASE("j_weight monotone decreasing past its maximum") {
    for (double alpha : {-0.5, 0.0, 1.5})
        for (double b : {-0.5, 0.0, 1.0, 2.5})
            for (double p : {1.5, 2.0, 3.0}) {
                const auto P = SpaceParams::make(alpha, b, p);
                // finite differences on a 100-point grid
                std::vector<double> v;
                for (int i = 1; i <= 100; ++i) v.push_back(j_weight(i / 101.0, P));
                int peak = 0;
                for (int i = 1; i < 100; ++i)
                    if (v[i] > v[peak]) peak = i;
                for (int i = peak; i + 1 < 100; ++i) CHECK(v[i + 1] < v[i] + 1e-14);
                if (P.pole_cap == 0)  // decreasing on all of (0,1)
                    for (int i = 0; i + 1 < 100; ++i) CHECK(v[i + 1] < v[i] + 1e-14);
            }
}

TEST_CASE("check_mp_bound") {
    const auto radii = default_scan_radii();
    const auto one = LaurentPoly::monomial(0);
    CHECK(check_mp_bound(one, SpaceParams::make(0.0, 0.0, 2.0), radii).passed());
    CHECK(check_mp_bound(one, SpaceParams::make(1.5, 2.5, 3.0), radii).passed());

    // f = z at (0,0,2): LHS = r sqrt(1-r^2) peaks at 1/2 < 1/sqrt(2) = RHS
    std::vector<double> dense;
    for (int i = 1; i <= 400; ++i) dense.push_back(i / 401.0);
    const auto rz = check_mp_bound(LaurentPoly::monomial(1), SpaceParams::make(0.0, 0.0, 2.0),
                                   dense);
    CHECK(rz.passed());
    CHECK(rel_err(rz.lhs, 0.5) < 1e-4);  // sup over a dense grid approaches 1/2
    CHECK(rel_err(rz.rhs, 1.0 / std::sqrt(2.0)) < 1e-12);
    // one-dimensional calculus oracle: max of r sqrt(J) at r^2 = 1/2
    const double r_star = oracles::golden_max(
        [](double r) { return r * std::sqrt(1.0 - r * r); }, 0.05, 0.95, 1e-13);
    // abscissa of a flat maximum is only locatable to ~sqrt(eps); the value
    // itself is sharp
    CHECK(rel_err(r_star * r_star, 0.5) < 1e-6);
    CHECK(rel_err(r_star * std::sqrt(1.0 - r_star * r_star), 0.5) < 1e-12);

    // f = z^{-1} at (0,1,2): closed forms on both sides, positive margin
    const auto rp = check_mp_bound(LaurentPoly::monomial(-1), SpaceParams::make(0.0, 1.0, 2.0),
                                   {0.5});
    CHECK(rp.passed());
    CHECK(rp.margin > 0.0);
}

TEST_CASE("kappa1 form is looser than the J form") {
    // RHS_particular >= RHS_J pointwise means
    // J(r) >= r^{max(2 beta, pm)} (1-r^2)^{alpha+1} / ((alpha+1) B)
    for (double alpha : {-0.5, 0.0, 2.0})
        for (double b : {-0.5, 0.5, 2.0})
            for (double p : {1.5, 2.0, 3.0}) {
                const auto P = SpaceParams::make(alpha, b, p);
                const double kb = (alpha + 1.0) * specfun::beta(alpha + 1.0, b + 1.0);
                for (double r : {0.05, 0.2, 0.5, 0.8, 0.97}) {
                    const double lower = std::pow(r, std::max(2.0 * b, p * P.pole_cap)) *
                                         std::pow(1.0 - r * r, alpha + 1.0) / kb;
                    CHECK(j_weight(r, P) >= lower * (1.0 - 1e-12));
                }
            }
}

TEST_CASE("hardy_littlewood_scan") {
    // tau = p must pass (and stay under kappa1) whenever the mean bound does
    oracles::Rng rng(33);
    for (double p : {1.5, 2.0, 3.0}) {
        const auto P = SpaceParams::make(0.5, 0.0, p);
        const auto f = unit_coeff_poly(rng, 0, 10);
        const auto mp = check_mp_bound(f, P, default_scan_radii());
        const auto hl = hardy_littlewood_scan(f, P, p);
        CHECK(mp.passed());
        CHECK(hl.passed());
    }
    // f = 1, tau = inf at (0,0,2): rho(r) = 1 - r^2, decaying
    const auto hl_inf = hardy_littlewood_scan(
        LaurentPoly::monomial(0), SpaceParams::make(0.0, 0.0, 2.0),
        std::numeric_limits<double>::infinity());
    CHECK(hl_inf.passed());
    for (const auto& [r, rho] : hl_inf.curve)
        CHECK(rel_err(rho, 1.0 - r * r) < 1e-9);

    // geometric-coefficient polynomial, tau = 4, stable across refinements
    std::vector<cplx> c;
    for (int n = 0; n <= 10; ++n) c.push_back(1.0);
    const auto f = LaurentPoly::from_coeffs(0, std::move(c));
    const auto P = SpaceParams::make(0.5, 0.0, 2.0);
    const auto scan1 = hardy_littlewood_scan(f, P, 4.0);
    CHECK(scan1.passed());
    // refined grid: twice the radii
    std::vector<double> fine;
    for (int k = 0; k < 80; ++k) fine.push_back(1.0 - 0.5 * std::pow(2e-3, k / 79.0));
    const auto scan2 = hardy_littlewood_scan(f, P, 4.0, fine);
    CHECK(scan2.passed());
    double sup1 = 0.0, sup2 = 0.0;
    for (auto& [r, v] : scan1.curve) sup1 = std::max(sup1, v);
    for (auto& [r, v] : scan2.curve) sup2 = std::max(sup2, v);
    CHECK(std::fabs(sup1 - sup2) < 0.05 * std::max(sup1, sup2));
}

TEST_CASE("fejer_riesz closed-form cases") {
    const auto P = SpaceParams::make(0.0, 0.0, 2.0);
    const auto r1 = fejer_riesz_check(LaurentPoly::monomial(0), P, 1.0, 24);
    CHECK(r1.passed());
    CHECK(rel_err(r1.lhs, 4.0 / 3.0) < 1e-10);
    CHECK(rel_err(r1.rhs, std::numbers::pi) < 1e-12);

    const auto r2 = fejer_riesz_check(LaurentPoly::monomial(1), P, 1.0, 24);
    CHECK(r2.passed());
    CHECK(rel_err(r2.lhs, 4.0 / 15.0) < 1e-10);
    CHECK(rel_err(r2.rhs, std::numbers::pi / 2.0) < 1e-12);
}

TEST_CASE("fejer_riesz conjugation symmetry and random family") {
    // real coefficients: the xi and conj(xi) integrals agree
    const auto f = LaurentPoly::from_coeffs(-1, {0.4, 1.0, -0.3, 0.2});
    const auto P = SpaceParams::make(0.5, 1.0, 2.0);
    const cplx xi = std::polar(1.0, 0.83);
    const auto a = fejer_riesz_check(f, P, xi, 24);
    const auto b = fejer_riesz_check(f, P, std::conj(xi), 24);
    CHECK(rel_err(a.lhs, b.lhs) < 1e-12);

    oracles::Rng rng(61);
    double worst_ratio = 0.0;
    for (double p : {1.0, 2.0, 3.0})
        for (double beta : {-0.5, 0.0, 1.5}) {
            const auto Q = SpaceParams::make(0.5, beta, p);
            for (int trial = 0; trial < 3; ++trial) {
                const auto g = unit_coeff_poly(rng, -Q.pole_cap, 6);
                const cplx dir = std::polar(1.0, 2.0 * std::numbers::pi * rng.unit());
                const auto rep = fejer_riesz_check(g, Q, dir, 24);
                CHECK(rep.passed());
                worst_ratio = std::max(worst_ratio, rep.lhs / (rep.rhs / std::numbers::pi));
            }
        }
    CHECK(worst_ratio <= std::numbers::pi);
}
