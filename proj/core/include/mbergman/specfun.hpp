// Special functions and quadrature rules for the weighted measures
//   dmu_{alpha,beta}(z) = |z|^{2 beta} (1-|z|^2)^alpha dA(z) / B(alpha+1, beta+1)
// on the unit disc. Everything here is self-contained double-precision
// numerics: log-gamma, (incomplete) beta, Gauss-Jacobi rules on (0,1), and
// the tensor disc grid. All objects are immutable after construction and
// safe to share across threads.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mbergman::specfun {

/// ln Gamma(x) for x > 0, relative error below 1e-13 (Lanczos, g = 7).
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// ln B(s,t) = lnGamma(s) + lnGamma(t) - lnGamma(s+t), s,t > 0.
double log_beta(double s, double t);

/// B(s,t), s,t > 0. Computed in log space; relative error below 1e-12.
double beta(double s, double t);

/// Unnormalized upper tail of the beta integral,
///   int_x^1 u^{b-1} (1-u)^{a-1} du,   0 <= x <= 1, a,b > 0,
/// via the standard continued fraction; relative error below 1e-10.
double incomplete_beta_upper(double x, double a, double b);

// One-dimensional Gauss-Jacobi rule on (0,1) for the weight
// u^{b_exp} (1-u)^{a_exp} du. Exact for polynomial factors up to `degree`.
struct QuadRule1D {
    std::vector<double> nodes;    // strictly increasing, inside (0,1)
    std::vector<double> weights;  // positive, sum = B(b_exp+1, a_exp+1)
    double a_exp = 0.0;           // exponent on (1-u)
    double b_exp = 0.0;           // exponent on u
    int degree = 0;               // 2n-1 for the n-point rule

    std::size_t size() const { return nodes.size(); }

    /// Sum of w_i * f(u_i).
    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// n-point Gauss-Jacobi rule on (0,1) with weight u^{b_exp}(1-u)^{a_exp}.
/// Requires n >= 1 and both exponents > -1. Nodes are eigenvalues of the
/// Jacobi matrix (implicit-shift QL) polished by Newton steps on the
/// orthonormal recurrence to residual 1e-14; weights are the Christoffel
/// numbers. Throws std::runtime_error with the iteration count if the
/// eigenvalue iteration fails to converge.
QuadRule1D radial_rule(int n, double a_exp, double b_exp);

// Tensor quadrature grid for mu_{alpha,beta} on the disc: radial
// Gauss-Jacobi in u = |z|^2 times the n_theta-point uniform angular rule.
// Point weights are normalized so that the total mass is 1.
struct DiscGrid {
    double alpha = 0.0;
    double beta = 0.0;
    int n_radial = 0;
    int n_angular = 0;
    std::vector<double> radial_u;   // u = |z|^2 nodes of the radial rule
    std::vector<double> radial_r;   // sqrt(u), cached
    std::vector<double> radial_w;   // per-point weight: rule weight / (B * n_angular)
    std::vector<std::complex<double>> unit_circle;  // e^{2 pi i j / n_angular}

    std::size_t size() const { return radial_u.size() * unit_circle.size(); }

    std::complex<double> point(std::size_t k) const {
        const std::size_t it = k % unit_circle.size();
        return radial_r[k / unit_circle.size()] * unit_circle[it];
    }

    double weight(std::size_t k) const { return radial_w[k / unit_circle.size()]; }

    /// Sum of w_k * f(z_k) over the whole grid; f maps complex -> T.
    template <class F>
    auto integrate(F&& f) const {
        using R = decltype(f(std::complex<double>{}));
        R acc{};
        for (std::size_t ir = 0; ir < radial_u.size(); ++ir) {
            R ring{};
            for (const auto& e : unit_circle) ring += f(radial_r[ir] * e);
            acc += radial_w[ir] * ring;
        }
        return acc;
    }
};

/// Composite integral of f over (0,1) using the given (0,1) Gauss-Legendre
/// rule on panels graded geometrically toward both endpoints; intended for
/// integrands with mild (integrable) endpoint singularities. f may simply
/// return 0 at arguments that round onto the endpoints.
template <class F>
auto integrate_01_graded(const QuadRule1D& gauss01, F&& f) {
    using R = decltype(f(0.5));
    R total{};
    const auto panel = [&](double lo, double hi) {
        R acc{};
        for (std::size_t i = 0; i < gauss01.nodes.size(); ++i)
            acc += gauss01.weights[i] * f(lo + (hi - lo) * gauss01.nodes[i]);
        return (hi - lo) * acc;
    };
    for (int k = 0; k <= 45; ++k) {
        const double lo = (k == 45) ? 0.0 : 1.0 / (1ull << (k + 2));
        total += panel(lo, 1.0 / (1ull << (k + 1)));
        const double hi = (k == 45) ? 1.0 : 1.0 - 1.0 / (1ull << (k + 2));
        total += panel(1.0 - 1.0 / (1ull << (k + 1)), hi);
    }
    return total;
}

/// Grid with n_r radial Gauss-Jacobi points (exponents alpha on (1-u), beta
/// on u) and n_theta uniform angles. Sum of weights is 1 up to rounding;
/// the angular rule is exact for trigonometric degree < n_theta and the
/// radial rule for monomial degree <= 2 n_r - 1 in u.
DiscGrid disc_grid(int n_r, int n_theta, double alpha, double beta);

}  // namespace mbergman::specfun
