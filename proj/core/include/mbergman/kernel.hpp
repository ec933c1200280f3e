// Reproducing kernels of the p = 2 spaces: the closed form for integer
// radial exponent, the coefficient series with a certified tail bound for
// general exponent, the projection realized by quadrature against the
// kernel, the extremal quantities on the diagonal, and an exploratory
// argument-principle zero counter for truncated kernels.

#pragma once

#include <complex>
#include <vector>

#include "mbergman/space.hpp"
#include "mbergman/specfun.hpp"

namespace mbergman::kernel {

/// Closed form (alpha+1) B(alpha+1, m+1) / ((w conj z)^m (1 - w conj z)^{2+alpha}).
/// Requires |w conj z| < 1, and w conj z != 0 when m > 0. The non-integer
/// power uses the principal branch; 1 - w conj z has positive real part on
/// the admissible range, so the branch is globally consistent.
std::complex<double> kernel_closed(double alpha, int m, std::complex<double> w,
                                   std::complex<double> z);

struct SeriesResult {
    std::complex<double> value;
    double tail_bound;  // certified bound on the truncation error
    int terms;
};

/// Partial sum of sum_{n >= -m} [B(alpha+1,beta+1)/B(alpha+1,n+beta+1)] (w conj z)^n
/// with m the integer ceiling of beta. The term-ratio of the series is
/// exactly |x| (n+alpha+beta+2)/(n+beta+1), decreasing in n, so once it
/// drops below 1 the tail has a rigorous geometric bound; summation stops
/// when that bound is below tol * |partial sum| (after the ratio has
/// stabilized within 1% of |x|). Throws std::runtime_error reporting the
/// achieved bound if max_terms is exhausted first.
SeriesResult kernel_series(double alpha, double beta, std::complex<double> w,
                           std::complex<double> z, double tol = 1e-12, int max_terms = 2000000);

// Evaluation handle: closed form when beta is an integer (within the
// integrality tolerance), truncated series otherwise.
class KernelEval {
  public:
    KernelEval(double alpha, double beta, double trunc_tol = 1e-12, int max_terms = 2000000);

    bool closed_form() const { return closed_; }
    int pole_order() const { return m_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    SeriesResult operator()(std::complex<double> w, std::complex<double> z) const;

  private:
    double alpha_;
    double beta_;
    double trunc_tol_;
    int max_terms_;
    int m_;
    bool closed_;
};

/// Quadrature discretization of the orthogonal projection
///   P f(z) = (alpha+1) B(alpha+1,m+1) int f(w) / ((z conj w)^m (1 - z conj w)^{2+alpha}) dmu_{alpha,m}(w)
/// at the given evaluation points. The grid must carry exponents (alpha, m);
/// internally the kernel pole (z conj w)^{-m} is combined with the measure's
/// |w|^{2m} factor (the radial integrand stays polynomial that way) on a
/// derived grid of the same resolution.
std::vector<std::complex<double>> project(const space::ComplexFn& f, double alpha, int m,
                                          const specfun::DiscGrid& grid,
                                          const std::vector<std::complex<double>>& eval_points);

struct ExtremalQuantities {
    double ball_sup;    // K(z,z): sup of |f(z)|^2 over the unit ball
    double min_norm;    // K(z,z)^{-1/2}: inf of ||f|| over {f(z) = 1}
    double dirac_norm;  // sqrt(K(z,z)): norm of the point-evaluation form
};

/// Diagonal extremal quantities at z in the punctured disc.
ExtremalQuantities extremal_quantities(double alpha, double beta, std::complex<double> z);

/// Number of zeros of w -> K_hat(w, z_fixed) in the annulus r_in < |w| < r_out,
/// where K_hat is the series truncated to `trunc` terms (a Laurent polynomial
/// in w). Winding numbers on both circles by trapezoid sums of K'w/K with the
/// sample count escalating 2^8 .. 2^16 until consecutive estimates agree and
/// land within 0.01 of an integer; radii are perturbed (up to 5 retries) if
/// the contour passes through a near-zero of K_hat.
int kernel_zero_count(double alpha, double beta, double r_in, double r_out,
                      std::complex<double> z_fixed, int trunc);

/// The truncated kernel as a Laurent polynomial in w (used by the zero
/// counter; exposed for cross-checking).
space::LaurentPoly truncated_kernel(double alpha, double beta, std::complex<double> z_fixed,
                                    int trunc);

}  // namespace mbergman::kernel
