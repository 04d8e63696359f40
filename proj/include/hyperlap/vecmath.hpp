#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hyperlap {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Weighted inner product <a, b>_w = sum_u w_u a_u b_u.
inline double dot_w(const Vec& w, const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm2_w(const Vec& w, const Vec& a) { return std::sqrt(dot_w(w, a, a)); }

inline double norm1(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += std::abs(v);
    return s;
}

inline double sum(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v;
    return s;
}

inline void scale(Vec& a, double alpha) {
    for (double& v : a) v *= alpha;
}

inline Vec scaled(const Vec& a, double alpha) {
    Vec r = a;
    scale(r, alpha);
    return r;
}

/// a += alpha * b
inline void axpy(Vec& a, double alpha, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += alpha * b[i];
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (double v : a)
        if (v != 0.0) return false;
    return true;
}

/// Remove the component of v along each (plain l2-orthonormal) basis vector.
inline void project_out(Vec& v, const std::vector<Vec>& orthonormal_basis) {
    for (const Vec& b : orthonormal_basis) {
        const double c = dot(v, b);
        axpy(v, -c, b);
    }
}

inline bool normalize(Vec& v) {
    const double n = norm2(v);
    if (n == 0.0 || !std::isfinite(n)) return false;
    scale(v, 1.0 / n);
    return true;
}

}  // namespace hyperlap
