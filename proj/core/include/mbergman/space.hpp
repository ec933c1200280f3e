// The function model: finite Laurent polynomials on the punctured disc,
// space parameters (alpha, beta, p), and the norm / inner-product machinery.
// Every norm of a Laurent polynomial has a closed-form beta-function value,
// which is what the quadrature paths are tested against.

#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "mbergman/specfun.hpp"

namespace mbergman::space {

/// Largest admissible pole order at the origin for exponent pair (p, beta):
/// floor(2(beta+1)/p), minus one when 2(beta+1)/p is an integer. The
/// integrality test uses an absolute tolerance of 1e-12 on the distance to
/// the nearest integer, since p and beta arrive as floats and the boundary
/// case changes the result by 1.
int pole_order_bound(double p, double beta);

// Parameter triple of the space, with the derived pole-order cap and the
// integer ceiling of beta cached at construction.
struct SpaceParams {
    double alpha;    // exponent on (1 - |z|^2), > -1
    double beta;     // half the exponent on |z|, > -1
    double p;        // integrability exponent, > 0
    int pole_cap;    // m_{p,beta}
    int beta_ceil;   // smallest integer m with beta in (m-1, m]

    static SpaceParams make(double alpha, double beta, double p);
};

// Finite Laurent expansion sum a_n z^n, n_min <= n <= n_max, normalized so
// that the leading negative coefficient is nonzero (and trailing zeros are
// trimmed). Immutable after construction.
class LaurentPoly {
  public:
    LaurentPoly() : n_min_(0), coeffs_{std::complex<double>(0.0)} {}

    /// Coefficients c[k] for z^{n_min + k}. Trims zero margins; the zero
    /// polynomial is represented as {0} at n = 0.
    static LaurentPoly from_coeffs(int n_min, std::vector<std::complex<double>> coeffs);

    /// Single monomial c * z^n.
    static LaurentPoly monomial(int n, std::complex<double> c = 1.0);

    int n_min() const { return n_min_; }
    int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
    int pole_order() const { return n_min_ < 0 ? -n_min_ : 0; }
    bool is_zero() const;

    std::complex<double> coeff(int n) const;
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

    /// Exact finite-sum evaluation; z != 0 required when there is a pole.
    std::complex<double> eval(std::complex<double> z) const;

    /// Multiplication by z^s (shift of all indices).
    LaurentPoly shifted(int s) const;

    /// k-th derivative (termwise, exact).
    LaurentPoly derivative(int k = 1) const;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;

  private:
    int n_min_;
    std::vector<std::complex<double>> coeffs_;
};

/// f belongs to the space iff every exponent n with a_n != 0 satisfies
/// p n + 2 beta + 2 > 0; equivalently the pole order is at most m_{p,beta}.
bool membership(const LaurentPoly& f, const SpaceParams& params);

/// || z^n ||_{alpha,beta,p} = (B(alpha+1, pn/2+beta+1)/B(alpha+1, beta+1))^{1/p}.
/// Throws std::domain_error when the moment diverges.
double monomial_norm(int n, const SpaceParams& params);

/// Coefficient-space inner product
///   <f,g> = sum a_n conj(b_n) B(alpha+1, n+beta+1)/B(alpha+1, beta+1),
/// exact for Laurent polynomials. Throws if a shared index has
/// n + beta + 1 <= 0.
std::complex<double> inner_product(const LaurentPoly& f, const LaurentPoly& g, double alpha,
                                   double beta);

struct NormResult {
    double value = 0.0;
    // set when f has a pole and beta <= 0: the direct integrand is singular
    // at the origin and the quadrature accuracy contract drops to 1e-6
    bool singular_origin_warning = false;
};

/// p-norm by quadrature, (sum w |f|^p)^{1/p}. A pole at the origin is first
/// absorbed into the radial weight through the exact identity
/// ||f||_{a,b,p} = (B(a+1, b')/B(a+1, b+1))^{1/p} ||z^{nu} f||_{a,b'-1,p},
/// b' = beta - p nu/2 + 1, on a grid of the same resolution; direct
/// summation of a pole integrand converges too slowly to be usable.
/// Set `direct` to force the literal sum on the caller's grid.
NormResult norm_quadrature(const LaurentPoly& f, const SpaceParams& params,
                           const specfun::DiscGrid& grid, bool direct = false);

/// (f_tilde, nu) with f_tilde(z) = z^nu f(z) and nu the pole order; the
/// result has n_min >= 0.
std::pair<LaurentPoly, int> tilde_transform(const LaurentPoly& f);

/// e_n: the monomial z^n normalized to unit norm in the p = 2 space,
/// coefficient sqrt(B(alpha+1,beta+1)/B(alpha+1,n+beta+1)).
LaurentPoly basis_element(int n, double alpha, double beta);

/// ||f||_{alpha,beta,p}: the coefficient-space value for p = 2, quadrature
/// (n_r radial points, angular resolution from the coefficient span)
/// otherwise.
double norm_best(const LaurentPoly& f, const SpaceParams& params, int n_r = 256);

/// Circle mean M_p(r, f) by the n_theta-point trapezoid rule (exact for
/// |f|^2 when p = 2 and the trig degree is below n_theta). p may be
/// infinity: the circle maximum, located by scan plus golden-section
/// refinement to 1e-10.
double mean_value(const LaurentPoly& f, double r, double p, int n_theta);

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

/// The disc automorphism phi_zeta(z) = (zeta - z)/(1 - conj(zeta) z).
std::complex<double> mobius_map(std::complex<double> zeta, std::complex<double> z);

/// z -> f(phi_zeta(z)); pulls functions on D \ {zeta} back to functions on
/// the punctured disc. phi_zeta is an involution.
ComplexFn mobius_transfer(ComplexFn f, std::complex<double> zeta);

}  // namespace mbergman::space
