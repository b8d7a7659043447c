#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

namespace iontrap::num {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 2.0 * pi;

// Quintic smoothstep: value in [0,1], zero first and second derivative at ends.
inline double smoothstep5(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

inline double smoothstep5_deriv(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return 30.0 * u * u * (1.0 - u) * (1.0 - u);
}

inline double smoothstep5_deriv2(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return 60.0 * u * (1.0 - 3.0 * u + 2.0 * u * u);
}

// Solve [[a,b],[c,d]] x = rhs.  Returns false when near-singular.
inline bool solve2x2(double a, double b, double c, double d,
                     double r0, double r1, double& x0, double& x1) {
    const double det = a * d - b * c;
    const double scale = std::fabs(a * d) + std::fabs(b * c);
    if (std::fabs(det) < 1e-14 * (scale > 0 ? scale : 1.0)) return false;
    x0 = (r0 * d - b * r1) / det;
    x1 = (a * r1 - r0 * c) / det;
    return true;
}

// Eigenvalues (ascending) and eigenvectors of a symmetric 2x2 matrix.
inline void eig2x2_sym(double a, double b, double d,
                       std::array<double, 2>& vals,
                       std::array<std::array<double, 2>, 2>& vecs) {
    const double tr = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    vals = {tr - disc, tr + disc};
    for (int k = 0; k < 2; ++k) {
        double vx, vy;
        if (std::fabs(b) > 1e-300) {
            vx = vals[k] - d;
            vy = b;
        } else if (a <= d) {
            vx = (k == 0) ? 1.0 : 0.0;
            vy = (k == 0) ? 0.0 : 1.0;
        } else {
            vx = (k == 0) ? 0.0 : 1.0;
            vy = (k == 0) ? 1.0 : 0.0;
        }
        const double n = std::sqrt(vx * vx + vy * vy);
        vecs[k] = {vx / n, vy / n};
    }
}

// Root of f on [lo, hi] (f(lo), f(hi) of opposite sign) by bisection.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double xtol, int max_iter = 200) {
    double flo = f(lo);
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimizer on [lo, hi].
inline double minimize_golden(const std::function<double(double)>& f, double lo,
                              double hi, double xtol, int max_iter = 200) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

inline double ln_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

inline double poisson_pmf(int k, double mu) {
    if (mu <= 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(-mu + k * std::log(mu) - ln_factorial(k));
}

inline double poisson_cdf(int k, double mu) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += poisson_pmf(i, mu);
    return s;
}

// Regularized lower incomplete gamma P(a, x); used for chi-square tails.
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 0.0;
    if (x == 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Continued fraction for Q(a,x).
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace iontrap::num
