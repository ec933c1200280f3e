// Constructive constants and numerical verifiers for the pointwise bound on
// circles, its derivative variant, the radial tail weight J, the circle-mean
// bound, the Hardy-Littlewood growth bound, and the Fejer-Riesz inequality.
// Verifiers return CheckReports; a violated inequality is a failed report,
// never an exception.

#pragma once

#include <complex>
#include <vector>

#include "mbergman/report.hpp"
#include "mbergman/space.hpp"

namespace mbergman::inequalities {

// Constants of the pointwise bound |f(z)|^p <= B(alpha+1,beta+1)/c_eps(r) ||f||^p
// on the circle |z| = r. The a/b factors follow the four-branch split on the
// signs of alpha and beta.
struct PointBoundConstants {
    double r;
    double eps;
    double r_eps;   // eps * min(r, 1-r)
    double a_eps;   // (1 - (r ± r_eps)^2)^alpha, branch by sign of alpha
    double b_eps;   // (r ∓ r_eps)^{2 beta}, branch by sign of beta
    double c_eps;   // r_eps^2 a_eps b_eps
    double bound_factor;  // B(alpha+1, beta+1) / c_eps
};

PointBoundConstants point_bound_constant(double r, double eps, double alpha, double beta);

/// max_{|z|=r} |f(z)|^p (sampled) against bound_factor * ||f||^p. The norm
/// uses the coefficient oracle for p = 2 and quadrature otherwise; pass a
/// positive norm_hint (= ||f||) to skip recomputing it.
CheckReport check_point_bound(const space::LaurentPoly& f, const space::SpaceParams& params,
                              double r, double eps, int n_samples, double norm_hint = 0.0);

/// |f^(n)(z)|^p <= c ||f||^p on |z| = r with the constructive constant
/// c = (n!/rho^n)^p max_{r' in [r-rho, r+rho]} bound_factor(r'), rho = r_eps/2
/// (Cauchy's estimate on a circle of radius rho feeding the pointwise bound).
CheckReport derivative_bound(const space::LaurentPoly& f, int n,
                             const space::SpaceParams& params, double r, double eps,
                             double norm_hint = 0.0);

/// J(r) = r^{pm} int_{r^2}^1 u^{beta - pm/2}(1-u)^alpha du / B(alpha+1,beta+1),
/// m = m_{p,beta}.
double j_weight(double r, const space::SpaceParams& params);

/// M_p(r,f) J(r)^{1/p} <= ||f|| on every grid radius. Also records the
/// looser kappa_1 form (see params "kappa1", "particular_sup").
CheckReport check_mp_bound(const space::LaurentPoly& f, const space::SpaceParams& params,
                           const std::vector<double>& r_grid, double norm_hint = 0.0);

/// Growth scan rho(r) = M_tau(r,f) r^{max(2beta/p, m)} (1-r^2)^{(alpha+2)/p - 1/tau} / ||f||.
/// tau may be infinity. The constant of the underlying bound is not
/// constructive, so the pass criterion is a boundedness proxy: the values on
/// 1-r in [1e-3, 1e-2) must not exceed twice the maximum over 1-r in
/// [1e-2, 1e-1); for tau = p the scan must additionally stay below kappa_1.
/// The (r, rho) curve is attached to the report.
CheckReport hardy_littlewood_scan(const space::LaurentPoly& f,
                                  const space::SpaceParams& params, double tau,
                                  std::vector<double> r_grid = {}, double norm_hint = 0.0);

/// Default radius grid for the growth scan: 40 radii, 1-r log-spaced from
/// 0.5 down to 1e-3.
std::vector<double> default_scan_radii();

/// int_{-1}^{1} |f(t xi)|^p J(|t|) dt <= pi ||f||^p, the left side by
/// composite Gauss-Legendre on panels graded toward t = -1, 0, 1 (J has a
/// cusp at 0 when m > 0), with an n_quad vs n_quad+8 agreement check
/// recorded as param "quad_agreement".
CheckReport fejer_riesz_check(const space::LaurentPoly& f, const space::SpaceParams& params,
                              std::complex<double> xi, int n_quad, double norm_hint = 0.0);

}  // namespace mbergman::inequalities
