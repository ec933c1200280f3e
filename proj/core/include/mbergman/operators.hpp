// Integral operators against the weighted measures: the model boundary
// integral I_omega and its growth fit, the T/S operator pair with the
// composite-weight quadrature, the Schur-test witness intervals, the duality
// pairing with its Holder report, the diameter Toeplitz matrix, and the
// truncation-growth probe that stands in for divergence of unbounded
// parameter choices.

#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "mbergman/report.hpp"
#include "mbergman/space.hpp"
#include "mbergman/specfun.hpp"

namespace mbergman::operators {

// Parameter bundle: kernel exponent alpha, target-measure exponents (a, b),
// pole offset m, and integrability exponent p. The boundedness condition is
// recomputed on every call, never cached.
struct OperatorParams {
    double alpha;
    double a;
    double b;
    int m;
    double p;

    static OperatorParams make(double alpha, double a, double b, int m, double p);

    /// Conjugate exponent, +infinity when p = 1.
    double q() const;

    /// p(alpha+1) > a+1 together with the two-branch window on 2b:
    /// m-2 < 2b <= m when p = 1, mp-2 < 2b < mp-2+2p when p > 1.
    bool condition3() const;
};

struct IOmegaOptions {
    int n_radial = 64;        // starting radial size; doubles until agreement
    int max_radial = 4096;
    double rel_tol = 1e-6;    // agreement between consecutive radial refinements
    double angular_tol = 1e-9;
    int max_angular = 1 << 20;
};

/// I_omega(z) = int_D (1-|w|^2)^sigma |w|^{2 gamma} / |1 - z conj w|^{2+sigma+omega} dA(w)
/// by radial Gauss-Jacobi (exponents sigma, gamma) times an angular
/// trapezoid whose size escalates with |z| -> 1; the radial size doubles
/// until two refinements agree to rel_tol. Throws std::runtime_error with
/// the achieved agreement on failure.
double i_omega(std::complex<double> z, double sigma, double gamma, double omega,
               const IOmegaOptions& opts = {});

struct AsymptoticFit {
    double slope;         // least-squares slope of log I against log 1/(1-|z|^2)
    double r2_powerlaw;   // fit quality of the power-law regression
    double r2_loglinear;  // fit quality of I against log 1/(1-|z|^2)
    double max_min_ratio; // max/min of the sampled values
    std::vector<double> radii;
    std::vector<double> values;
};

/// Growth fit of I_omega along radii approaching 1 (default 1 - 2^{-k},
/// k = 4..12). slope ~ omega for omega > 0; the log-linear fit applies at
/// omega = 0; bounded values (small max/min ratio) for omega < 0.
AsymptoticFit i_omega_asymptotic_fit(double sigma, double gamma, double omega,
                                     std::vector<double> radii = {},
                                     const IOmegaOptions& opts = {});

/// S f(z) = (1/|z|^m) int f(w) (1-|w|^2)^{alpha-a} |w|^{m-2b} / |1-z conj w|^{2+alpha} dmu_{a,b}(w).
/// The grid supplies the resolution and must carry exponents (a, b); the
/// radial weight factors are combined analytically into u^{m/2}(1-u)^{alpha}
/// (evaluating the ratio pointwise would overflow at the rim when alpha < a).
double apply_S(const space::ComplexFn& f, std::complex<double> z, const OperatorParams& op,
               const specfun::DiscGrid& grid);

/// T f(z) = (1/z^m) int f(w) (1-|w|^2)^{alpha-a} w^m / (|w|^{2b} (1-z conj w)^{2+alpha}) dmu_{a,b}(w),
/// same conventions as apply_S; satisfies |T f(z)| <= S|f|(z) pointwise.
std::complex<double> apply_T(const space::ComplexFn& f, std::complex<double> z,
                             const OperatorParams& op, const specfun::DiscGrid& grid);

/// Midpoints (t, s) of the Schur-test windows
///   I_t = [m/q, (m+2)/q) ∩ [(2b-m)/p, (2b-m+2)/p)
///   I_s = (0, (alpha+1)/q) ∩ ((a-alpha)/p, (a+1)/p)
/// when both are nonempty, nullopt otherwise. Requires p > 1. Nonemptiness
/// of both is equivalent to condition3 (asserted as a cross-operation
/// invariant in the suites).
std::optional<std::pair<double, double>> schur_witness(const OperatorParams& op);

struct SchurRatios {
    double c1;  // int kappa(z,w) h(w)^q dmu / h(z)^q  at |z| = radius
    double c2;  // int kappa(z,w) h(z)^p dmu / h(w)^p  at |w| = radius
};

/// Realized Schur-test ratios for the weight h(z) = |z|^{-t} (1-|z|^2)^{-s};
/// finite stable values over a radius sweep witness the bound.
SchurRatios schur_test_ratios(const OperatorParams& op, double t, double s, double radius,
                              const IOmegaOptions& opts = {});

/// Coefficient-space duality pairing <f,g>_{a,b} (the same beta-ratio sum as
/// the p = 2 inner product).
std::complex<double> duality_pairing(const space::LaurentPoly& f, const space::LaurentPoly& g,
                                     double a, double b);

/// |<f,g>_{a,b}| <= ||f||_{a,b,p} ||g||_{a,b,q} as a report.
CheckReport holder_pairing_check(const space::LaurentPoly& f, const space::LaurentPoly& g,
                                 double a, double b, double p);

// Matrix of the diameter Toeplitz operator in the orthonormal monomial
// basis, indices n = -m ... N-m-1 with m = m_{2,beta}.
struct ToeplitzMatrix {
    std::complex<double> xi;
    double alpha;
    double beta;
    int size;  // N
    int m;
    std::vector<std::complex<double>> entries;  // row-major, N x N

    std::complex<double> at(int j, int k) const { return entries[j * size + k]; }
};

/// Entries T_{jk} = int_{-1}^1 e_{n_k}(xi x) conj(e_{n_j}(xi x)) J(|x|) dx,
/// evaluated through the parity-reduced 1-D integrals int x^s J(|x|) dx with
/// composite Gauss-Legendre (n_quad points per graded panel, an n_quad+8
/// refinement must agree to 1e-11).
ToeplitzMatrix toeplitz_matrix(std::complex<double> xi, double alpha, double beta, int N,
                               int n_quad = 24);

/// Eigenvalues (ascending) of the Hermitian Toeplitz matrix. The phase
/// pattern xi^{k-j} is a diagonal unitary conjugation of the xi = 1 matrix,
/// so the spectrum is computed from the stripped real symmetric form.
std::vector<double> toeplitz_eigenvalues(const ToeplitzMatrix& matrix);

/// <T f, f> from the matrix for the coefficient vector c of f in the
/// orthonormal basis span.
std::complex<double> toeplitz_quadratic_form(const ToeplitzMatrix& matrix,
                                             const std::vector<std::complex<double>>& c);

/// The same quadratic form computed directly: int_{-1}^1 |f(xi x)|^2 J(|x|) dx.
double diameter_quadratic_form(const ToeplitzMatrix& matrix,
                               const std::vector<std::complex<double>>& c, int n_quad = 24);

// Truncation-growth surrogate for operator divergence: quadrature cannot
// represent a divergent integral, so the norm integrals of the proof's test
// functions are truncated to [2^-k, 1-2^-k] in u = |z|^2 and the growth of
// the sequence is classified.
struct DivergenceProbe {
    bool divergent;
    double growth_ratio;              // max over sides of Phi(last)/Phi(last-2)
    std::vector<double> s_side;       // ||S f_N||-type truncations (p > 1)
    std::vector<double> adjoint_side; // ||S* f_N||-type truncations / sup sweeps
};

DivergenceProbe divergence_probe(const OperatorParams& op);

}  // namespace mbergman::operators
