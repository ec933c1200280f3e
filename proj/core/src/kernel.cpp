#include "mbergman/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mbergman::kernel {

using std::complex;

namespace {

constexpr double kIntegralityTol = 1e-12;

int beta_ceiling(double beta) {
    const double r = std::round(beta);
    if (std::fabs(beta - r) <= kIntegralityTol) return static_cast<int>(r);
    return static_cast<int>(std::ceil(beta));
}

}  // namespace

complex<double> kernel_closed(double alpha, int m, complex<double> w, complex<double> z) {
    if (!(alpha > -1.0)) throw std::domain_error("kernel_closed: requires alpha > -1");
    if (m < 0) throw std::domain_error("kernel_closed: requires m >= 0");
    const complex<double> x = w * std::conj(z);
    if (!(std::abs(x) < 1.0)) throw std::domain_error("kernel_closed: requires |w conj z| < 1");
    if (m > 0 && x == complex<double>(0.0))
        throw std::domain_error("kernel_closed: pole at w conj z = 0");
    const double front = (alpha + 1.0) * specfun::beta(alpha + 1.0, m + 1.0);
    complex<double> denom = std::pow(1.0 - x, 2.0 + alpha);
    if (m > 0) denom *= std::pow(x, m);
    return front / denom;
}

SeriesResult kernel_series(double alpha, double beta, complex<double> w, complex<double> z,
                           double tol, int max_terms) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("kernel_series: requires alpha, beta > -1");
    const complex<double> x = w * std::conj(z);
    const double ax = std::abs(x);
    if (!(ax > 0.0) || !(ax < 1.0))
        throw std::domain_error("kernel_series: requires 0 < |w conj z| < 1");

    const int m = beta_ceiling(beta);
    const double lb0 = specfun::log_beta(alpha + 1.0, beta + 1.0);

    // first term, n = -m
    int n = -m;
    complex<double> term =
        std::exp(lb0 - specfun::log_beta(alpha + 1.0, n + beta + 1.0)) * std::pow(x, n);
    complex<double> sum = term;
    int count = 1;
    while (count < max_terms) {
        // term ratio |x| (n+alpha+beta+2)/(n+beta+1) decreases toward |x|
        const double coeff_ratio = (n + alpha + beta + 2.0) / (n + beta + 1.0);
        const double q_next = ax * (n + 1.0 + alpha + beta + 2.0) / (n + 1.0 + beta + 1.0);
        if (coeff_ratio <= 1.01 && q_next < 1.0) {
            const double bound = std::abs(term) * q_next / (1.0 - q_next);
            if (bound <= tol * std::abs(sum)) return {sum, bound, count};
        }
        term *= coeff_ratio * x;
        ++n;
        sum += term;
        ++count;
    }
    const double q_last = ax * (n + alpha + beta + 2.0) / (n + beta + 1.0);
    const double achieved = q_last < 1.0
                                ? std::abs(term) * q_last / (1.0 - q_last)
                                : std::numeric_limits<double>::infinity();
    std::ostringstream msg;
    msg << "kernel_series: no convergence within " << max_terms
        << " terms (achieved bound " << achieved << ")";
    throw std::runtime_error(msg.str());
}

KernelEval::KernelEval(double alpha, double beta, double trunc_tol, int max_terms)
    : alpha_(alpha), beta_(beta), trunc_tol_(trunc_tol), max_terms_(max_terms) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("KernelEval: requires alpha, beta > -1");
    m_ = beta_ceiling(beta);
    closed_ = std::fabs(beta - std::round(beta)) <= kIntegralityTol;
}

SeriesResult KernelEval::operator()(complex<double> w, complex<double> z) const {
    if (closed_) return {kernel_closed(alpha_, m_, w, z), 0.0, 0};
    return kernel_series(alpha_, beta_, w, z, trunc_tol_, max_terms_);
}

std::vector<complex<double>> project(const space::ComplexFn& f, double alpha, int m,
                                     const specfun::DiscGrid& grid,
                                     const std::vector<complex<double>>& eval_points) {
    if (m < 0) throw std::domain_error("project: requires m >= 0");
    if (std::fabs(grid.alpha - alpha) > 1e-12 ||
        std::fabs(grid.beta - static_cast<double>(m)) > 1e-12)
        throw std::invalid_argument("project: grid exponents must be (alpha, m)");

    // The kernel factor (z conj w)^{-m} combines with the measure's u^m into
    // f(w) w^m z^{-m} against dmu_{alpha,0}; the normalizing constants cancel
    // to 1. Integrating the combined form keeps the radial integrand
    // polynomial in u, which the literal pointwise product is not for m > 0.
    const specfun::DiscGrid* quad = &grid;
    specfun::DiscGrid reduced;
    if (m > 0) {
        reduced = specfun::disc_grid(grid.n_radial, grid.n_angular, alpha, 0.0);
        quad = &reduced;
    }

    // tabulate f(w) w^m once over the grid
    const std::size_t n_pts = quad->size();
    std::vector<complex<double>> fvals(n_pts);
    for (std::size_t k = 0; k < n_pts; ++k) {
        const complex<double> w = quad->point(k);
        fvals[k] = f(w) * (m > 0 ? std::pow(w, m) : complex<double>(1.0));
    }

    std::vector<complex<double>> out;
    out.reserve(eval_points.size());
    for (const auto& z : eval_points) {
        if (!(std::abs(z) < 1.0) || (m > 0 && z == complex<double>(0.0)))
            throw std::domain_error("project: evaluation point outside the punctured disc");
        complex<double> acc = 0.0;
        for (std::size_t k = 0; k < n_pts; ++k) {
            const complex<double> x = z * std::conj(quad->point(k));
            acc += quad->weight(k) * fvals[k] / std::pow(1.0 - x, 2.0 + alpha);
        }
        if (m > 0) acc *= std::pow(z, -m);
        out.push_back(acc);
    }
    return out;
}

ExtremalQuantities extremal_quantities(double alpha, double beta, complex<double> z) {
    const double az = std::abs(z);
    if (!(az > 0.0) || !(az < 1.0))
        throw std::domain_error("extremal_quantities: requires z in the punctured disc");
    const KernelEval kernel(alpha, beta);
    const double q = kernel(z, z).value.real();
    if (!(q > 0.0))
        throw std::runtime_error("extremal_quantities: nonpositive diagonal value");
    return {q, 1.0 / std::sqrt(q), std::sqrt(q)};
}

space::LaurentPoly truncated_kernel(double alpha, double beta, complex<double> z_fixed,
                                    int trunc) {
    if (trunc < 1) throw std::domain_error("truncated_kernel: requires trunc >= 1");
    const int m = beta_ceiling(beta);
    const double lb0 = specfun::log_beta(alpha + 1.0, beta + 1.0);
    std::vector<complex<double>> coeffs(trunc);
    const complex<double> zc = std::conj(z_fixed);
    complex<double> zpow = std::pow(zc, -m);
    for (int k = 0; k < trunc; ++k) {
        const int n = -m + k;
        coeffs[k] = std::exp(lb0 - specfun::log_beta(alpha + 1.0, n + beta + 1.0)) * zpow;
        zpow *= zc;
    }
    return space::LaurentPoly::from_coeffs(-m, std::move(coeffs));
}

namespace {

// winding number of K around the circle |w| = r: trapezoid mean of K'(w)w/K(w)
// with escalating sample counts. Returns false if the contour runs too close
// to a zero of K.
bool winding_on_circle(const space::LaurentPoly& k_hat, const space::LaurentPoly& k_deriv,
                       double r, double floor_scale, int* out) {
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int log2n = 8; log2n <= 16; ++log2n) {
        const int n = 1 << log2n;
        complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const auto w = std::polar(r, 2.0 * std::numbers::pi * j / n);
            const complex<double> kv = k_hat.eval(w);
            if (std::abs(kv) < 1e-12 * floor_scale) return false;
            acc += k_deriv.eval(w) * w / kv;
        }
        const double est = acc.real() / n;
        if (!std::isnan(prev) && std::fabs(est - prev) < 0.005 &&
            std::fabs(est - std::round(est)) < 0.01) {
            *out = static_cast<int>(std::round(est));
            return true;
        }
        prev = est;
    }
    return false;
}

}  // namespace

int kernel_zero_count(double alpha, double beta, double r_in, double r_out,
                      complex<double> z_fixed, int trunc) {
    if (!(0.0 < r_in && r_in < r_out && r_out < 1.0))
        throw std::domain_error("kernel_zero_count: requires 0 < r_in < r_out < 1");
    const auto k_hat = truncated_kernel(alpha, beta, z_fixed, trunc);
    const auto k_deriv = k_hat.derivative();
    double scale = 0.0;
    for (const auto& c : k_hat.coeffs()) scale = std::max(scale, std::abs(c));

    int windings[2] = {0, 0};
    const double radii[2] = {r_out, r_in};
    for (int side = 0; side < 2; ++side) {
        bool done = false;
        for (int attempt = 0; attempt < 5 && !done; ++attempt) {
            // perturb inward/outward alternately if the contour hits a zero
            const double bump = 1.0 + (attempt % 2 == 0 ? 1.0 : -1.0) * 0.007 * attempt;
            double r = radii[side] * bump;
            r = std::min(std::max(r, 1e-6), 1.0 - 1e-9);
            done = winding_on_circle(k_hat, k_deriv, r, scale, &windings[side]);
        }
        if (!done)
            throw std::runtime_error(
                "kernel_zero_count: contour repeatedly crossed zeros or failed to settle");
    }
    return windings[0] - windings[1];
}

}  // namespace mbergman::kernel
