#include "mbergman/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <string>

namespace mbergman::specfun {

namespace {

// Lanczos approximation, g = 7, 9 terms. Relative error ~ 1e-15 on x > 0.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kLanczosG = 7.0;

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
    const double t = x + kLanczosG - 0.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

double log_beta(double s, double t) {
    if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("log_beta: requires s, t > 0");
    return log_gamma(s) + log_gamma(t) - log_gamma(s + t);
}

double beta(double s, double t) { return std::exp(log_beta(s, t)); }

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 400;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta_upper(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("incomplete_beta_upper: requires a, b > 0");
    if (x < 0.0 || x > 1.0)
        throw std::domain_error("incomplete_beta_upper: requires x in [0,1]");
    if (x == 0.0) return beta(b, a);
    if (x == 1.0) return 0.0;
    // log of x^b (1-x)^a, shared by both branches
    const double front = std::exp(b * std::log(x) + a * std::log1p(-x));
    if (x < (b + 1.0) / (a + b + 2.0)) {
        // lower part converges fast; subtract from the full integral
        return beta(b, a) - front * beta_cf(b, a, x) / b;
    }
    // directly the upper tail, no cancellation
    return front * beta_cf(a, b, 1.0 - x) / a;
}

namespace {

// Monic three-term recurrence coefficients for the Jacobi weight
// u^{b}(1-u)^{a} on (0,1), obtained from the classical [-1,1] recurrence by
// the affine map u = (1+x)/2. `diag` gets n entries, `offdiag` gets n
// (one more than the Jacobi matrix needs, so Newton polishing can evaluate
// the degree-n orthonormal polynomial).
struct JacobiRecurrence {
    std::vector<double> diag;     // a_k
    std::vector<double> offdiag;  // b_k = sqrt(beta_{k+1}), k = 0..n-1
    double mass;                  // mu_0 = B(b+1, a+1)
};

JacobiRecurrence jacobi_recurrence(int n, double a, double b) {
    JacobiRecurrence rec;
    rec.mass = beta(b + 1.0, a + 1.0);
    rec.diag.resize(n);
    rec.offdiag.resize(n);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        double alpha_k;  // [-1,1] monic diagonal
        if (k == 0) {
            alpha_k = (b - a) / (ab + 2.0);
        } else {
            const double s = 2.0 * k + ab;
            alpha_k = (b * b - a * a) / (s * (s + 2.0));
        }
        rec.diag[k] = 0.5 * (1.0 + alpha_k);
    }
    for (int k = 1; k <= n; ++k) {
        double beta_k;  // [-1,1] monic off-diagonal squared
        if (k == 1) {
            beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            const double s = 2.0 * k + ab;
            beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                     (s * s * (s + 1.0) * (s - 1.0));
        }
        rec.offdiag[k - 1] = 0.5 * std::sqrt(beta_k);  // map scales by 1/2
    }
    return rec;
}

// Eigenvalues of a symmetric tridiagonal matrix by the implicit-shift QL
// iteration (values only). d has n entries, e has n-1; eigenvalues are
// returned in d, unordered.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.push_back(0.0);  // sentinel
    constexpr int kMaxSweeps = 60;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        for (;;) {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > kMaxSweeps)
                throw std::runtime_error(
                    "radial_rule: QL eigenvalue iteration failed to converge after " +
                    std::to_string(iter) + " sweeps");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::sqrt(g * g + 1.0);  // entries are O(1), no overflow care needed
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double bb = c * e[i];
                r = std::sqrt(f * f + g * g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * bb;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - bb;
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    e.pop_back();
}

// Orthonormal polynomial value/derivative at x from the recurrence
//   b_k p_{k+1} = (x - a_k) p_k - b_{k-1} p_{k-1},   p_0 = 1/sqrt(mass).
// Returns (p_n, p_n') and fills `sum_sq` with sum_{k<n} p_k^2 (Christoffel).
struct PolyEval {
    double value;
    double deriv;
    double sum_sq;
};

PolyEval orthonormal_eval(const JacobiRecurrence& rec, const std::vector<double>& inv_off,
                          int n, double x) {
    double pk = 1.0 / std::sqrt(rec.mass), pkm1 = 0.0;
    double dk = 0.0, dkm1 = 0.0;
    double sum = pk * pk;
    const double* diag = rec.diag.data();
    const double* off = rec.offdiag.data();
    for (int k = 0; k < n; ++k) {
        const double ib = inv_off[k];
        const double bkm1 = (k == 0) ? 0.0 : off[k - 1];
        const double xc = x - diag[k];
        const double pkp1 = (xc * pk - bkm1 * pkm1) * ib;
        const double dkp1 = (pk + xc * dk - bkm1 * dkm1) * ib;
        pkm1 = pk;
        pk = pkp1;
        dkm1 = dk;
        dk = dkp1;
        if (k + 1 < n) sum += pk * pk;
    }
    return {pk, dk, sum};
}

// Newton on the orthonormal recurrence from a starting guess, safeguarded by
// the bracket (lo, hi). Returns the node and fills the Christoffel sum.
double newton_node(const JacobiRecurrence& rec, const std::vector<double>& inv_off, int n,
                   double guess, double lo, double hi, double* sum_sq) {
    double x = guess;
    PolyEval pe{};
    for (int it = 0; it < 16; ++it) {
        pe = orthonormal_eval(rec, inv_off, n, x);
        const double step = pe.value / pe.deriv;
        double xn = x - step;
        if (!(xn > lo) || !(xn < hi)) xn = 0.5 * (lo + hi);
        const bool done = std::fabs(xn - x) <= 2e-15 * std::fabs(x);
        x = xn;
        if (done) break;
    }
    pe = orthonormal_eval(rec, inv_off, n, x);
    *sum_sq = pe.sum_sq;
    return x;
}

bool rule_is_sane(const QuadRule1D& rule) {
    const int n = static_cast<int>(rule.nodes.size());
    for (int i = 0; i < n; ++i) {
        if (!(rule.nodes[i] > 0.0) || !(rule.nodes[i] < 1.0)) return false;
        if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])) return false;
        if (!(rule.weights[i] > 0.0) || !std::isfinite(rule.weights[i])) return false;
    }
    return true;
}

// Nodes via QL eigenvalues plus Newton polish. Robust at any size, O(n^2)
// with a large constant; used directly for small n and as the fallback.
QuadRule1D build_rule_ql(const JacobiRecurrence& rec, const std::vector<double>& inv_off,
                         int n, double a_exp, double b_exp) {
    std::vector<double> d = rec.diag;
    std::vector<double> e(rec.offdiag.begin(), rec.offdiag.end() - 1);
    tridiagonal_eigenvalues(d, e);
    std::sort(d.begin(), d.end());

    QuadRule1D rule;
    rule.a_exp = a_exp;
    rule.b_exp = b_exp;
    rule.degree = 2 * n - 1;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double sum_sq = 0.0;
        const double x = newton_node(rec, inv_off, n, d[i], 0.0, 1.0, &sum_sq);
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / sum_sq;
    }
    return rule;
}

// Nodes via the classical trigonometric first guesses for Jacobi zeros plus
// bracketed Newton. The refinement runs as whole-array sweeps of the
// recurrence (all nodes advance through k together), which vectorizes; node
// ranges are additionally chunked across threads. Falls back to the QL path
// if the result fails validation.
QuadRule1D build_rule_newton(const JacobiRecurrence& rec, const std::vector<double>& inv_off,
                             int n, double a_exp, double b_exp) {
    // guesses on [-1,1] for the weight (1-x)^a (1+x)^b, mapped to u = (1+x)/2;
    // i = 1 is the node nearest u = 1
    std::vector<double> x(n);
    const double denom = n + 0.5 * (a_exp + b_exp + 1.0);
    for (int i = 1; i <= n; ++i) {
        const double theta = std::numbers::pi * (i - 0.25 + 0.5 * a_exp) / denom;
        const double c = std::cos(0.5 * theta);
        x[n - i] = c * c;  // (1 + cos theta)/2
    }
    std::vector<double> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = (i == 0) ? 0.0 : 0.5 * (x[i - 1] + x[i]);
        hi[i] = (i == n - 1) ? 1.0 : 0.5 * (x[i] + x[i + 1]);
    }

    QuadRule1D rule;
    rule.a_exp = a_exp;
    rule.b_exp = b_exp;
    rule.degree = 2 * n - 1;
    rule.nodes = std::move(x);
    rule.weights.assign(n, 0.0);

    const double p0 = 1.0 / std::sqrt(rec.mass);
    const double* diag = rec.diag.data();
    const double* off = rec.offdiag.data();
    const double* inv = inv_off.data();

    const auto refine_range = [&](int i0, int i1) {
        const int m = i1 - i0;
        if (m <= 0) return;
        std::vector<double> p(m), pm(m), dp(m), dpm(m), sum(m);
        double* node = rule.nodes.data() + i0;
        for (int iter = 0; iter < 8; ++iter) {
            std::fill(p.begin(), p.end(), p0);
            std::fill(pm.begin(), pm.end(), 0.0);
            std::fill(dp.begin(), dp.end(), 0.0);
            std::fill(dpm.begin(), dpm.end(), 0.0);
            for (int k = 0; k < n; ++k) {
                const double dk = diag[k], ib = inv[k];
                const double bm = (k == 0) ? 0.0 : off[k - 1];
                for (int i = 0; i < m; ++i) {
                    const double xc = node[i] - dk;
                    const double pn = (xc * p[i] - bm * pm[i]) * ib;
                    const double dn = (p[i] + xc * dp[i] - bm * dpm[i]) * ib;
                    pm[i] = p[i];
                    p[i] = pn;
                    dpm[i] = dp[i];
                    dp[i] = dn;
                }
            }
            double worst = 0.0;
            for (int i = 0; i < m; ++i) {
                const double step = p[i] / dp[i];
                double xn = node[i] - step;
                if (!(xn > lo[i0 + i]) || !(xn < hi[i0 + i]))
                    xn = 0.5 * (lo[i0 + i] + hi[i0 + i]);
                worst = std::max(worst, std::fabs(xn - node[i]) / node[i]);
                node[i] = xn;
            }
            if (worst <= 2e-15 && iter >= 2) break;
        }
        // final sweep: Christoffel sums at the settled nodes
        std::fill(p.begin(), p.end(), p0);
        std::fill(pm.begin(), pm.end(), 0.0);
        std::fill(sum.begin(), sum.end(), 0.0);
        for (int k = 0; k < n; ++k) {
            const double dk = diag[k], ib = inv[k];
            const double bm = (k == 0) ? 0.0 : off[k - 1];
            for (int i = 0; i < m; ++i) {
                sum[i] += p[i] * p[i];
                const double pn = ((node[i] - dk) * p[i] - bm * pm[i]) * ib;
                pm[i] = p[i];
                p[i] = pn;
            }
        }
        for (int i = 0; i < m; ++i) rule.weights[i0 + i] = 1.0 / sum[i];
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int n_chunks = static_cast<int>(std::min<unsigned>(hw, 8));
    if (n_chunks <= 1 || n < 2048) {
        refine_range(0, n);
    } else {
        std::vector<std::thread> pool;
        const int step = (n + n_chunks - 1) / n_chunks;
        for (int c = 0; c < n_chunks; ++c)
            pool.emplace_back(refine_range, c * step, std::min(n, (c + 1) * step));
        for (auto& t : pool) t.join();
    }
    return rule;
}

}  // namespace

QuadRule1D radial_rule(int n, double a_exp, double b_exp) {
    if (n < 1) throw std::domain_error("radial_rule: requires n >= 1");
    if (!(a_exp > -1.0) || !(b_exp > -1.0))
        throw std::domain_error("radial_rule: requires exponents > -1");

    const JacobiRecurrence rec = jacobi_recurrence(n, a_exp, b_exp);
    std::vector<double> inv_off(n);
    for (int k = 0; k < n; ++k) inv_off[k] = 1.0 / rec.offdiag[k];

    if (n > 600) {
        QuadRule1D rule = build_rule_newton(rec, inv_off, n, a_exp, b_exp);
        if (rule_is_sane(rule)) return rule;
    }
    QuadRule1D rule = build_rule_ql(rec, inv_off, n, a_exp, b_exp);
    if (!rule_is_sane(rule))
        throw std::runtime_error("radial_rule: nodes left (0,1) or lost ordering");
    return rule;
}

DiscGrid disc_grid(int n_r, int n_theta, double alpha, double beta_exp) {
    if (n_r < 1 || n_theta < 1)
        throw std::domain_error("disc_grid: requires n_r, n_theta >= 1");
    const QuadRule1D radial = radial_rule(n_r, alpha, beta_exp);
    DiscGrid grid;
    grid.alpha = alpha;
    grid.beta = beta_exp;
    grid.n_radial = n_r;
    grid.n_angular = n_theta;
    grid.radial_u = radial.nodes;
    grid.radial_r.resize(n_r);
    grid.radial_w.resize(n_r);
    const double norm = beta(beta_exp + 1.0, alpha + 1.0) * n_theta;
    for (int i = 0; i < n_r; ++i) {
        grid.radial_r[i] = std::sqrt(radial.nodes[i]);
        grid.radial_w[i] = radial.weights[i] / norm;
    }
    grid.unit_circle.resize(n_theta);
    for (int j = 0; j < n_theta; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n_theta;
        grid.unit_circle[j] = std::polar(1.0, th);
    }
    return grid;
}

}  // namespace mbergman::specfun
