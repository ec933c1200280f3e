// Test-only reference implementations, independent of the library paths they
// are used to check.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

// Adaptive Simpson quadrature on [lo, hi].
inline double simpson_step(const std::function<double(double)>& f, double lo, double hi,
                           double flo, double fmid, double fhi, double whole, double tol,
                           int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flm = f(lmid), frm = f(rmid);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - whole;
    // relative floor keeps the recursion finite on panels with large values
    const double limit = std::max(tol, 5e-15 * (std::fabs(left) + std::fabs(right)));
    if (depth <= 0 || std::fabs(delta) <= 15.0 * limit)
        return left + right + delta / 15.0;
    return simpson_step(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           simpson_step(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                               double tol = 1e-12, int depth = 30) {
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol, depth);
}

// integral over (x,1) of u^{b-1}(1-u)^{a-1} du for 0 < x < 1. The possible
// algebraic singularity at u = 1 is handled by geometric panels plus an
// analytic power-law sliver, so the adaptive rule only sees smooth pieces.
inline double beta_tail_integral(double x, double a, double b, double tol = 1e-13) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("beta_tail_integral: x in (0,1)");
    const auto f = [&](double u) {
        return std::pow(u, b - 1.0) * std::pow(1.0 - u, a - 1.0);
    };
    // analytic sliver at u = 1, wide enough that 1 - delta is representable
    const double delta = std::ldexp(1.0, -40);
    double total = std::pow(delta, a) / a - (b - 1.0) * std::pow(delta, a + 1.0) / (a + 1.0);
    double hi = 1.0 - delta;
    for (int k = 39; k >= 0 && hi > x; --k) {
        const double lo = std::max(x, 1.0 - std::ldexp(1.0, -k));
        total += adaptive_simpson(f, lo, hi, tol);
        hi = lo;
    }
    return total;
}

// Deterministic uniforms from a raw 64-bit generator (independent of
// std::uniform_real_distribution implementation details).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // xorshift64*
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }
    double unit() { return (next() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::complex<double> unit_complex() {
        return {2.0 * unit() - 1.0, 2.0 * unit() - 1.0};
    }
};

// Brute-force partial sum of a power series sum_{n>=n0} c(n) x^n.
inline std::complex<double> brute_series(const std::function<double(int)>& coeff, int n0,
                                         std::complex<double> x, int terms) {
    std::complex<double> acc = 0.0;
    std::complex<double> xn = std::pow(x, n0);
    for (int n = n0; n < n0 + terms; ++n) {
        acc += coeff(n) * xn;
        xn *= x;
    }
    return acc;
}

// Golden-section maximization of a unimodal function on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-12) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace oracles
