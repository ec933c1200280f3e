#include "mbergman/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mbergman::space {

using std::complex;

namespace {
constexpr double kIntegralityTol = 1e-12;
}

int pole_order_bound(double p, double beta) {
    if (!(p > 0.0)) throw std::domain_error("pole_order_bound: requires p > 0");
    if (!(beta > -1.0)) throw std::domain_error("pole_order_bound: requires beta > -1");
    const double x = 2.0 * (beta + 1.0) / p;
    const double r = std::round(x);
    if (std::fabs(x - r) <= kIntegralityTol && r >= 1.0) return static_cast<int>(r) - 1;
    return static_cast<int>(std::floor(x));
}

SpaceParams SpaceParams::make(double alpha, double beta, double p) {
    if (!(alpha > -1.0) || !(beta > -1.0) || !(p > 0.0))
        throw std::domain_error("SpaceParams: requires alpha, beta > -1 and p > 0");
    SpaceParams params{alpha, beta, p, 0, 0};
    params.pole_cap = pole_order_bound(p, beta);
    const double r = std::round(beta);
    params.beta_ceil = (std::fabs(beta - r) <= kIntegralityTol)
                           ? static_cast<int>(r)
                           : static_cast<int>(std::ceil(beta));
    return params;
}

LaurentPoly LaurentPoly::from_coeffs(int n_min, std::vector<complex<double>> coeffs) {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == complex<double>(0.0)) ++lead;
    if (lead == coeffs.size()) return LaurentPoly();  // zero polynomial
    std::size_t tail = coeffs.size();
    while (tail > lead && coeffs[tail - 1] == complex<double>(0.0)) --tail;
    LaurentPoly f;
    f.n_min_ = n_min + static_cast<int>(lead);
    f.coeffs_.assign(coeffs.begin() + lead, coeffs.begin() + tail);
    return f;
}

LaurentPoly LaurentPoly::monomial(int n, complex<double> c) {
    return from_coeffs(n, {c});
}

bool LaurentPoly::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == complex<double>(0.0);
}

complex<double> LaurentPoly::coeff(int n) const {
    if (n < n_min_ || n > n_max()) return 0.0;
    return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

complex<double> LaurentPoly::eval(complex<double> z) const {
    complex<double> acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
    if (n_min_ != 0) acc *= std::pow(z, n_min_);
    return acc;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly f = *this;
    if (!f.is_zero()) f.n_min_ += s;
    return f;
}

LaurentPoly LaurentPoly::derivative(int k) const {
    LaurentPoly f = *this;
    for (int pass = 0; pass < k; ++pass) {
        std::vector<complex<double>> c(f.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int n = f.n_min_ + static_cast<int>(i);
            c[i] = f.coeffs_[i] * static_cast<double>(n);
        }
        f = from_coeffs(f.n_min_ - 1, std::move(c));
    }
    return f;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    const int lo = std::min(n_min_, rhs.n_min_);
    const int hi = std::max(n_max(), rhs.n_max());
    std::vector<complex<double>> c(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (int n = lo; n <= hi; ++n) c[n - lo] = coeff(n) + rhs.coeff(n);
    return from_coeffs(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    const int lo = n_min_ + rhs.n_min_;
    std::vector<complex<double>> c(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return from_coeffs(lo, std::move(c));
}

bool membership(const LaurentPoly& f, const SpaceParams& params) {
    for (int n = f.n_min(); n <= f.n_max(); ++n) {
        if (f.coeff(n) == complex<double>(0.0)) continue;
        if (!(params.p * n + 2.0 * params.beta + 2.0 > 0.0)) return false;
    }
    return true;
}

double monomial_norm(int n, const SpaceParams& params) {
    const double t = params.p * n / 2.0 + params.beta + 1.0;
    if (!(t > 0.0)) throw std::domain_error("monomial_norm: moment diverges");
    const double lb = specfun::log_beta(params.alpha + 1.0, t) -
                      specfun::log_beta(params.alpha + 1.0, params.beta + 1.0);
    return std::exp(lb / params.p);
}

complex<double> inner_product(const LaurentPoly& f, const LaurentPoly& g, double alpha,
                              double beta) {
    const int lo = std::max(f.n_min(), g.n_min());
    const int hi = std::min(f.n_max(), g.n_max());
    const double lb0 = specfun::log_beta(alpha + 1.0, beta + 1.0);
    complex<double> acc = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const complex<double> term = f.coeff(n) * std::conj(g.coeff(n));
        if (term == complex<double>(0.0)) continue;
        if (!(n + beta + 1.0 > 0.0))
            throw std::domain_error("inner_product: divergent moment at shared index");
        acc += term * std::exp(specfun::log_beta(alpha + 1.0, n + beta + 1.0) - lb0);
    }
    return acc;
}

namespace {

double power_sum(const LaurentPoly& f, const specfun::DiscGrid& grid, double p) {
    const double half_p = 0.5 * p;
    return grid.integrate([&](complex<double> z) {
        const double m2 = std::norm(f.eval(z));
        return std::pow(m2, half_p);
    });
}

}  // namespace

NormResult norm_quadrature(const LaurentPoly& f, const SpaceParams& params,
                           const specfun::DiscGrid& grid, bool direct) {
    if (std::fabs(grid.alpha - params.alpha) > 1e-12 ||
        std::fabs(grid.beta - params.beta) > 1e-12)
        throw std::invalid_argument("norm_quadrature: grid exponents do not match params");
    if (!membership(f, params))
        throw std::domain_error("norm_quadrature: f is not a member of the space");

    NormResult result;
    result.singular_origin_warning = f.pole_order() > 0 && params.beta <= 0.0;

    if (direct || f.n_min() >= 0) {
        result.value = std::pow(power_sum(f, grid, params.p), 1.0 / params.p);
        return result;
    }

    // absorb the pole into the radial weight (exact identity)
    const int nu = f.pole_order();
    const double beta2 = params.beta - params.p * nu / 2.0;
    const LaurentPoly g = f.shifted(nu);
    const auto grid2 = specfun::disc_grid(grid.n_radial, grid.n_angular, params.alpha, beta2);
    const double log_scale = specfun::log_beta(params.alpha + 1.0, beta2 + 1.0) -
                             specfun::log_beta(params.alpha + 1.0, params.beta + 1.0);
    const double sum = power_sum(g, grid2, params.p);
    result.value = std::exp((log_scale + std::log(sum)) / params.p);
    return result;
}

std::pair<LaurentPoly, int> tilde_transform(const LaurentPoly& f) {
    const int nu = f.pole_order();
    return {f.shifted(nu), nu};
}

LaurentPoly basis_element(int n, double alpha, double beta) {
    if (!(n + beta + 1.0 > 0.0))
        throw std::domain_error("basis_element: index below the admissible range");
    const double c = std::exp(0.5 * (specfun::log_beta(alpha + 1.0, beta + 1.0) -
                                     specfun::log_beta(alpha + 1.0, n + beta + 1.0)));
    return LaurentPoly::monomial(n, c);
}

double norm_best(const LaurentPoly& f, const SpaceParams& params, int n_r) {
    if (params.p == 2.0)
        return std::sqrt(inner_product(f, f, params.alpha, params.beta).real());
    const int n_theta = std::max(64, 8 * (f.n_max() - f.n_min()) + 16);
    const auto grid = specfun::disc_grid(n_r, n_theta, params.alpha, params.beta);
    return norm_quadrature(f, params, grid).value;
}

namespace {

// circle maximum of |f| by scan plus golden-section refinement around every
// local maximum of the sample sequence
double circle_max(const LaurentPoly& f, double r, int n_theta) {
    const int n = std::max(n_theta, 8 * (f.n_max() - f.n_min()) + 16);
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j)
        v[j] = std::abs(f.eval(std::polar(r, 2.0 * std::numbers::pi * j / n)));
    const auto value_at = [&](double th) { return std::abs(f.eval(std::polar(r, th))); };
    double best = 0.0;
    const double h = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
        const double prev = v[(j + n - 1) % n], next = v[(j + 1) % n];
        if (v[j] < prev || v[j] < next) continue;
        double a = (j - 1) * h, b = (j + 1) * h;
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - phi * (b - a), d = a + phi * (b - a);
        double fc = value_at(c), fd = value_at(d);
        while (b - a > 1e-10) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - phi * (b - a);
                fc = value_at(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + phi * (b - a);
                fd = value_at(d);
            }
        }
        best = std::max(best, value_at(0.5 * (a + b)));
    }
    return best;
}

}  // namespace

double mean_value(const LaurentPoly& f, double r, double p, int n_theta) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("mean_value: requires r in (0,1)");
    if (n_theta < 1) throw std::domain_error("mean_value: requires n_theta >= 1");
    if (std::isinf(p)) return circle_max(f, r, n_theta);
    if (!(p > 0.0)) throw std::domain_error("mean_value: requires p > 0");
    double acc = 0.0;
    const double half_p = 0.5 * p;
    for (int j = 0; j < n_theta; ++j) {
        const auto z = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
        acc += std::pow(std::norm(f.eval(z)), half_p);
    }
    return std::pow(acc / n_theta, 1.0 / p);
}

complex<double> mobius_map(complex<double> zeta, complex<double> z) {
    const complex<double> denom = 1.0 - std::conj(zeta) * z;
    if (denom == complex<double>(0.0))
        throw std::domain_error("mobius_map: evaluation at the reflected pole 1/conj(zeta)");
    return (zeta - z) / denom;
}

ComplexFn mobius_transfer(ComplexFn f, complex<double> zeta) {
    if (!(std::abs(zeta) < 1.0))
        throw std::domain_error("mobius_transfer: requires |zeta| < 1");
    return [f = std::move(f), zeta](complex<double> z) { return f(mobius_map(zeta, z)); };
}

}  // namespace mbergman::space
