#include "mbergman/operators.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mbergman/inequalities.hpp"

namespace mbergman::operators {

using space::LaurentPoly;
using space::SpaceParams;
using std::complex;

namespace {

constexpr double kUnitCircleTol = 1e-12;

// (1/2pi) int_0^{2pi} (1 - 2x cos t + x^2)^{-s/2} dt by the doubling
// trapezoid over the half period (the integrand is even in t). Converges
// geometrically with rate ~ (1 - x), so the start size scales with it.
double angular_mean_inv_power(double x, double s_exp, double tol, int max_n) {
    if (x == 0.0) return 1.0;
    const double c1 = 1.0 + x * x, c2 = 2.0 * x;
    const double expo = -0.5 * s_exp;
    const auto f = [&](double t) { return std::pow(c1 - c2 * std::cos(t), expo); };
    int n = 32;
    while (n < 8.0 / std::max(1.0 - x, 1e-9) && n < max_n) n *= 2;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (;;) {
        double acc = 0.5 * (f(0.0) + f(std::numbers::pi));
        for (int j = 1; j < n; ++j) acc += f(j * std::numbers::pi / n);
        const double val = acc / n;
        if (!std::isnan(prev) && std::fabs(val - prev) <= tol * std::fabs(val)) return val;
        if (n >= max_n) return val;
        prev = val;
        n *= 2;
    }
}

}  // namespace

OperatorParams OperatorParams::make(double alpha, double a, double b, int m, double p) {
    if (!(alpha > -1.0) || !(a > -1.0) || !(b > -1.0))
        throw std::domain_error("OperatorParams: requires alpha, a, b > -1");
    if (m < 0) throw std::domain_error("OperatorParams: requires m >= 0");
    if (!(p >= 1.0)) throw std::domain_error("OperatorParams: requires p >= 1");
    return {alpha, a, b, m, p};
}

double OperatorParams::q() const {
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

bool OperatorParams::condition3() const {
    if (!(p * (alpha + 1.0) > a + 1.0)) return false;
    if (p == 1.0) return m - 2.0 < 2.0 * b && 2.0 * b <= m;
    return m * p - 2.0 < 2.0 * b && 2.0 * b < m * p - 2.0 + 2.0 * p;
}

double i_omega(complex<double> z, double sigma, double gamma, double omega,
               const IOmegaOptions& opts) {
    if (!(sigma > -1.0) || !(gamma > -1.0))
        throw std::domain_error("i_omega: requires sigma, gamma > -1");
    const double rho = std::abs(z);
    if (!(rho < 1.0)) throw std::domain_error("i_omega: requires |z| < 1");
    const double s_exp = 2.0 + sigma + omega;

    const auto eval = [&](int n_r) {
        const auto rule = specfun::radial_rule(n_r, sigma, gamma);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            acc += rule.weights[i] *
                   angular_mean_inv_power(rho * std::sqrt(rule.nodes[i]), s_exp,
                                          opts.angular_tol, opts.max_angular);
        return acc;
    };

    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int n = opts.n_radial; n <= opts.max_radial; n *= 2) {
        const double cur = eval(n);
        if (!std::isnan(prev) && std::fabs(cur - prev) <= opts.rel_tol * std::fabs(cur))
            return cur;
        prev = cur;
    }
    const double cur = eval(opts.max_radial);
    std::ostringstream msg;
    msg << "i_omega: refinements did not agree to " << opts.rel_tol
        << " (achieved " << std::fabs(cur - prev) / std::fabs(cur) << ")";
    throw std::runtime_error(msg.str());
}

AsymptoticFit i_omega_asymptotic_fit(double sigma, double gamma, double omega,
                                     std::vector<double> radii, const IOmegaOptions& opts) {
    if (radii.empty())
        for (int k = 4; k <= 12; ++k) radii.push_back(1.0 - std::ldexp(1.0, -k));
    AsymptoticFit fit;
    fit.radii = radii;
    for (double r : radii) fit.values.push_back(i_omega(r, sigma, gamma, omega, opts));

    const auto regress = [](const std::vector<double>& xs, const std::vector<double>& ys,
                            double* slope_out) {
        const std::size_t n = xs.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += xs[i]; sy += ys[i];
            sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i]; syy += ys[i] * ys[i];
        }
        const double cov = sxy - sx * sy / n;
        const double vx = sxx - sx * sx / n, vy = syy - sy * sy / n;
        if (slope_out) *slope_out = cov / vx;
        return vy > 0.0 ? cov * cov / (vx * vy) : 1.0;
    };

    std::vector<double> xs, log_ys;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        xs.push_back(std::log(1.0 / (1.0 - radii[i] * radii[i])));
        log_ys.push_back(std::log(fit.values[i]));
    }
    fit.r2_powerlaw = regress(xs, log_ys, &fit.slope);
    fit.r2_loglinear = regress(xs, fit.values, nullptr);
    double lo = fit.values[0], hi = fit.values[0];
    for (double v : fit.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    fit.max_min_ratio = hi / lo;
    return fit;
}

namespace {

void check_operator_grid(const OperatorParams& op, const specfun::DiscGrid& grid) {
    if (std::fabs(grid.alpha - op.a) > 1e-12 || std::fabs(grid.beta - op.b) > 1e-12)
        throw std::invalid_argument("apply_S/apply_T: grid exponents must be (a, b)");
}

}  // namespace

double apply_S(const space::ComplexFn& f, complex<double> z, const OperatorParams& op,
               const specfun::DiscGrid& grid) {
    check_operator_grid(op, grid);
    const double rho = std::abs(z);
    if (!(rho < 1.0) || (op.m > 0 && rho == 0.0))
        throw std::domain_error("apply_S: z must lie in the punctured disc");
    // composite radial weight u^{m/2} (1-u)^{alpha}; evaluating the factor
    // ratio pointwise would overflow at the rim when alpha < a
    const auto rule = specfun::radial_rule(grid.n_radial, op.alpha, op.m / 2.0);
    const int n_theta = grid.n_angular;
    const double expo = -0.5 * (2.0 + op.alpha);
    complex<double> acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double r = std::sqrt(rule.nodes[i]);
        complex<double> ring = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const auto w = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
            ring += f(w) * std::pow(std::norm(1.0 - z * std::conj(w)), expo);
        }
        acc += rule.weights[i] * ring;
    }
    acc /= n_theta * specfun::beta(op.a + 1.0, op.b + 1.0);
    if (op.m > 0) acc /= std::pow(rho, op.m);
    return acc.real();
}

complex<double> apply_T(const space::ComplexFn& f, complex<double> z, const OperatorParams& op,
                        const specfun::DiscGrid& grid) {
    check_operator_grid(op, grid);
    const double rho = std::abs(z);
    if (!(rho < 1.0) || (op.m > 0 && z == complex<double>(0.0)))
        throw std::domain_error("apply_T: z must lie in the punctured disc");
    const auto rule = specfun::radial_rule(grid.n_radial, op.alpha, 0.0);
    const int n_theta = grid.n_angular;
    const double expo = 2.0 + op.alpha;
    complex<double> acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double r = std::sqrt(rule.nodes[i]);
        complex<double> ring = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const auto w = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
            complex<double> val = f(w) / std::pow(1.0 - z * std::conj(w), expo);
            if (op.m > 0) val *= std::pow(w, op.m);
            ring += val;
        }
        acc += rule.weights[i] * ring;
    }
    acc /= n_theta * specfun::beta(op.a + 1.0, op.b + 1.0);
    if (op.m > 0) acc /= std::pow(z, op.m);
    return acc;
}

std::optional<std::pair<double, double>> schur_witness(const OperatorParams& op) {
    if (!(op.p > 1.0)) throw std::domain_error("schur_witness: requires p > 1");
    const double q = op.q();
    const double t_lo = std::max(op.m / q, (2.0 * op.b - op.m) / op.p);
    const double t_hi = std::min((op.m + 2.0) / q, (2.0 * op.b - op.m + 2.0) / op.p);
    const double s_lo = std::max(0.0, (op.a - op.alpha) / op.p);
    const double s_hi = std::min((op.alpha + 1.0) / q, (op.a + 1.0) / op.p);
    if (!(t_lo < t_hi) || !(s_lo < s_hi)) return std::nullopt;
    return std::make_pair(0.5 * (t_lo + t_hi), 0.5 * (s_lo + s_hi));
}

SchurRatios schur_test_ratios(const OperatorParams& op, double t, double s, double radius,
                              const IOmegaOptions& opts) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::domain_error("schur_test_ratios: requires radius in (0,1)");
    const double q = op.q();
    const double b_ab = specfun::beta(op.a + 1.0, op.b + 1.0);
    const double one_minus = 1.0 - radius * radius;

    // int kappa(z,w) h(w)^q dmu(w) against h(z)^q
    const double int1 = i_omega(radius, op.alpha - s * q, 0.5 * (op.m - t * q),
                                s * q, opts);
    const double c1 = int1 / (b_ab * std::pow(radius, op.m)) * std::pow(radius, t * q) *
                      std::pow(one_minus, s * q);

    // int kappa(z,w) h(z)^p dmu(z) against h(w)^p
    const double int2 = i_omega(radius, op.a - s * op.p,
                                0.5 * (2.0 * op.b - op.m - t * op.p),
                                op.alpha - op.a + s * op.p, opts);
    const double c2 = std::pow(one_minus, op.alpha - op.a + s * op.p) *
                      std::pow(radius, op.m - 2.0 * op.b + t * op.p) * int2 / b_ab;
    return {c1, c2};
}

complex<double> duality_pairing(const LaurentPoly& f, const LaurentPoly& g, double a,
                                double b) {
    return space::inner_product(f, g, a, b);
}

CheckReport holder_pairing_check(const LaurentPoly& f, const LaurentPoly& g, double a,
                                 double b, double p) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!(p > 1.0)) throw std::domain_error("holder_pairing_check: requires p > 1");
    const double q = p / (p - 1.0);
    CheckReport report;
    report.check_id = "holder_pairing";
    report.provenance = "duality pairing under the Holder inequality";
    report.param("a", a).param("b", b).param("p", p);
    report.lhs = std::abs(duality_pairing(f, g, a, b));
    report.rhs = space::norm_best(f, SpaceParams::make(a, b, p)) *
                 space::norm_best(g, SpaceParams::make(a, b, q));
    report.finalize(1e-9 * std::fabs(report.rhs));
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

namespace {

double basis_normalizer(double alpha, double beta, int n) {
    return std::exp(0.5 * (specfun::log_beta(alpha + 1.0, beta + 1.0) -
                           specfun::log_beta(alpha + 1.0, n + beta + 1.0)));
}

}  // namespace

ToeplitzMatrix toeplitz_matrix(complex<double> xi, double alpha, double beta, int N,
                               int n_quad) {
    if (std::fabs(std::abs(xi) - 1.0) > kUnitCircleTol)
        throw std::domain_error("toeplitz_matrix: requires |xi| = 1");
    if (N < 1) throw std::domain_error("toeplitz_matrix: requires N >= 1");
    const int m = space::pole_order_bound(2.0, beta);
    const auto params = SpaceParams::make(alpha, beta, 2.0);

    // moments int_{-1}^1 x^s J(|x|) dx: zero for odd s by parity, and
    // 2 int_0^1 x^s J(x) dx otherwise; x^s J ~ x^{s+2m} near 0 stays bounded
    const int s_lo = -2 * m, s_hi = 2 * (N - 1 - m);
    const auto moments_with = [&](int n_points) {
        const auto rule = specfun::radial_rule(n_points, 0.0, 0.0);
        std::vector<double> mom(s_hi - s_lo + 1, 0.0);
        for (int s = s_lo; s <= s_hi; ++s) {
            if (((s % 2) + 2) % 2 == 1) continue;
            mom[s - s_lo] = 2.0 * specfun::integrate_01_graded(rule, [&](double x) {
                                if (x >= 1.0) return 0.0;
                                return std::pow(x, s) * inequalities::j_weight(x, params);
                            });
        }
        return mom;
    };
    const auto moments = moments_with(n_quad);
    const auto refined = moments_with(n_quad + 8);
    double scale = 0.0;
    for (double v : refined) scale = std::max(scale, std::fabs(v));
    for (std::size_t i = 0; i < moments.size(); ++i) {
        if (std::fabs(moments[i] - refined[i]) > 1e-11 * std::max(std::fabs(refined[i]), scale)) {
            std::ostringstream msg;
            msg << "toeplitz_matrix: moment " << (static_cast<int>(i) + s_lo)
                << " did not converge (delta "
                << std::fabs(moments[i] - refined[i]) << ")";
            throw std::runtime_error(msg.str());
        }
    }

    ToeplitzMatrix matrix;
    matrix.xi = xi;
    matrix.alpha = alpha;
    matrix.beta = beta;
    matrix.size = N;
    matrix.m = m;
    matrix.entries.assign(static_cast<std::size_t>(N) * N, 0.0);
    std::vector<double> normalizers(N);
    for (int j = 0; j < N; ++j) normalizers[j] = basis_normalizer(alpha, beta, j - m);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            const int s = (j - m) + (k - m);
            matrix.entries[j * N + k] = normalizers[j] * normalizers[k] *
                                        std::pow(xi, k - j) * refined[s - s_lo];
        }
    return matrix;
}

namespace {

// eigenvalues of a real symmetric matrix by cyclic Jacobi rotations
std::vector<double> symmetric_eigenvalues(std::vector<double> A, int n) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, fro = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                fro += A[i * n + j] * A[i * n + j];
                if (i != j) off += A[i * n + j] * A[i * n + j];
            }
        if (off <= 1e-30 * std::max(fro, 1e-300)) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = A[p * n + q];
                if (apq == 0.0) continue;
                const double tau = (A[q * n + q] - A[p * n + p]) / (2.0 * apq);
                const double t = std::copysign(1.0, tau) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = A[i * n + p], aiq = A[i * n + q];
                    A[i * n + p] = c * aip - s * aiq;
                    A[i * n + q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = A[p * n + i], aqi = A[q * n + i];
                    A[p * n + i] = c * api - s * aqi;
                    A[q * n + i] = s * api + c * aqi;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = A[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> toeplitz_eigenvalues(const ToeplitzMatrix& matrix) {
    const int n = matrix.size;
    // strip the diagonal unitary phase xi^{k-j}; what remains must be real
    std::vector<double> real_form(static_cast<std::size_t>(n) * n);
    double scale = 0.0;
    for (const auto& e : matrix.entries) scale = std::max(scale, std::abs(e));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const complex<double> stripped =
                matrix.at(j, k) * std::pow(std::conj(matrix.xi), k - j);
            if (std::fabs(stripped.imag()) > 1e-10 * scale)
                throw std::runtime_error(
                    "toeplitz_eigenvalues: phase stripping left an imaginary part");
            real_form[j * n + k] = stripped.real();
        }
    return symmetric_eigenvalues(std::move(real_form), n);
}

complex<double> toeplitz_quadratic_form(const ToeplitzMatrix& matrix,
                                        const std::vector<complex<double>>& c) {
    if (static_cast<int>(c.size()) != matrix.size)
        throw std::invalid_argument("toeplitz_quadratic_form: coefficient size mismatch");
    complex<double> acc = 0.0;
    for (int j = 0; j < matrix.size; ++j)
        for (int k = 0; k < matrix.size; ++k)
            acc += std::conj(c[j]) * matrix.at(j, k) * c[k];
    return acc;
}

double diameter_quadratic_form(const ToeplitzMatrix& matrix,
                               const std::vector<complex<double>>& c, int n_quad) {
    if (static_cast<int>(c.size()) != matrix.size)
        throw std::invalid_argument("diameter_quadratic_form: coefficient size mismatch");
    const auto params = SpaceParams::make(matrix.alpha, matrix.beta, 2.0);
    std::vector<complex<double>> coeffs(c.size());
    for (int k = 0; k < matrix.size; ++k)
        coeffs[k] = c[k] * basis_normalizer(matrix.alpha, matrix.beta, k - matrix.m);
    const auto f = LaurentPoly::from_coeffs(-matrix.m, std::move(coeffs));
    const auto rule = specfun::radial_rule(n_quad, 0.0, 0.0);
    return specfun::integrate_01_graded(rule, [&](double x) {
        if (x >= 1.0) return 0.0;
        const double jw = inequalities::j_weight(x, params);
        return (std::norm(f.eval(x * matrix.xi)) + std::norm(f.eval(-x * matrix.xi))) * jw;
    });
}

namespace {

// cheap angular mean for the divergence probes (1% accuracy is plenty)
double probe_angular(double x, double s_exp) {
    return angular_mean_inv_power(x, s_exp, 1e-5, 2048);
}

// cumulative truncated integrals Phi(k) = int_{2^-k}^{1-2^-k} g(u) du
std::vector<double> truncation_sequence(const std::function<double(double)>& g, int k_lo,
                                        int k_hi) {
    const auto rule = specfun::radial_rule(16, 0.0, 0.0);
    const auto panel = [&](double lo, double hi) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            acc += rule.weights[i] * g(lo + (hi - lo) * rule.nodes[i]);
        return (hi - lo) * acc;
    };
    // base segment [2^-k_lo, 1 - 2^-k_lo] as graded panels around 1/2
    double phi = 0.0;
    for (int k = 1; k < k_lo; ++k) {
        phi += panel(std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k));          // toward 0
        phi += panel(1.0 - std::ldexp(1.0, -k), 1.0 - std::ldexp(1.0, -k - 1));  // toward 1
    }
    std::vector<double> seq;
    seq.push_back(phi);
    for (int k = k_lo; k < k_hi; ++k) {
        phi += panel(std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k));
        phi += panel(1.0 - std::ldexp(1.0, -k), 1.0 - std::ldexp(1.0, -k - 1));
        seq.push_back(phi);
    }
    return seq;
}

double growth_ratio(const std::vector<double>& seq) {
    const std::size_t n = seq.size();
    if (n < 3) return 1.0;
    const double denom = std::max(std::fabs(seq[n - 3]), 1e-300);
    return seq[n - 1] / denom;
}

}  // namespace

DivergenceProbe divergence_probe(const OperatorParams& op) {
    DivergenceProbe probe{};
    constexpr int k_lo = 3, k_hi = 10;
    const double s_exp = 2.0 + op.alpha;

    if (op.p > 1.0) {
        const double q = op.q();
        const double n_reg = std::ceil(std::max(0.0, op.a - op.alpha)) + 2.0;

        // || S f_N ||^p truncations: inner value at |z|^2 = u
        const auto inner_rule_s = specfun::radial_rule(32, op.alpha + n_reg, 0.5 * op.m);
        const auto g_inner = [&](double u) {
            double acc = 0.0;
            for (std::size_t i = 0; i < inner_rule_s.size(); ++i)
                acc += inner_rule_s.weights[i] *
                       probe_angular(std::sqrt(u * inner_rule_s.nodes[i]), s_exp);
            return acc;
        };
        probe.s_side = truncation_sequence(
            [&](double u) {
                return std::pow(u, op.b - 0.5 * op.m * op.p) * std::pow(1.0 - u, op.a) *
                       std::pow(g_inner(u), op.p);
            },
            k_lo, k_hi);

        // || S* f_N ||^q truncations, when the inner integral exists at all
        if (op.b - 0.5 * op.m > -1.0) {
            const auto inner_rule_a =
                specfun::radial_rule(32, op.a + n_reg, op.b - 0.5 * op.m);
            const auto h_inner = [&](double u) {
                double acc = 0.0;
                for (std::size_t i = 0; i < inner_rule_a.size(); ++i)
                    acc += inner_rule_a.weights[i] *
                           probe_angular(std::sqrt(u * inner_rule_a.nodes[i]), s_exp);
                return acc;
            };
            probe.adjoint_side = truncation_sequence(
                [&](double u) {
                    return std::pow(u, op.b + 0.5 * (op.m - 2.0 * op.b) * q) *
                           std::pow(1.0 - u, op.a + q * (op.alpha - op.a)) *
                           std::pow(h_inner(u), q);
                },
                k_lo, k_hi);
        }
    } else {
        // p = 1: the adjoint criterion. S* applied to g = 1 must stay
        // bounded in sup norm; sweep |w|^2 toward both 0 and 1.
        if (op.b - 0.5 * op.m <= -1.0) {
            // the inner integral itself diverges at the origin (this is
            // exactly the failed lower bound 2b <= m-2): truncate it
            const auto rule = specfun::radial_rule(16, 0.0, 0.0);
            double acc = 0.0;
            std::vector<double> seq;
            for (int k = k_lo; k <= k_hi; ++k) {
                double panel_val = 0.0;
                for (std::size_t i = 0; i < rule.size(); ++i) {
                    const double lo = std::ldexp(1.0, -k), hi = std::ldexp(1.0, -k + 1);
                    const double v = lo + (hi - lo) * rule.nodes[i];
                    panel_val += (hi - lo) * rule.weights[i] *
                                 std::pow(v, op.b - 0.5 * op.m) * std::pow(1.0 - v, op.a) *
                                 probe_angular(std::sqrt(v) * 0.5, s_exp);
                }
                acc += panel_val;
                seq.push_back(acc);
            }
            probe.s_side = seq;
        } else {
            const auto inner_rule = specfun::radial_rule(32, op.a, op.b - 0.5 * op.m);
            const auto w_inner = [&](double u) {
                double acc = 0.0;
                for (std::size_t i = 0; i < inner_rule.size(); ++i)
                    acc += inner_rule.weights[i] *
                           probe_angular(std::sqrt(u * inner_rule.nodes[i]), s_exp);
                return acc;
            };
            const auto sstar_one = [&](double u) {
                return std::pow(1.0 - u, op.alpha - op.a) *
                       std::pow(u, 0.5 * (op.m - 2.0 * op.b)) * w_inner(u);
            };
            for (int k = k_lo; k <= k_hi; ++k) {
                probe.s_side.push_back(sstar_one(std::ldexp(1.0, -k)));          // u -> 0
                probe.adjoint_side.push_back(sstar_one(1.0 - std::ldexp(1.0, -k)));  // u -> 1
            }
        }
    }

    double ratio = growth_ratio(probe.s_side);
    if (!probe.adjoint_side.empty()) ratio = std::max(ratio, growth_ratio(probe.adjoint_side));
    probe.growth_ratio = ratio;
    probe.divergent = ratio >= 1.2;
    return probe;
}

}  // namespace mbergman::operators
