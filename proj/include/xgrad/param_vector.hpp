#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "xgrad/errors.hpp"

namespace xgrad {

/// Flat carrier for weights, gradients, moment buffers and update directions.
/// All arithmetic is 64-bit; operations return new vectors and check the
/// result for NaN/Inf at the call boundary.
using ParamVector = std::vector<double>;

inline ParamVector zeros(std::size_t dim) { return ParamVector(dim, 0.0); }

namespace detail {

inline void require_same_dim(const ParamVector& x, const ParamVector& y, const char* op) {
    if (x.size() != y.size()) {
        throw DimensionError(std::string(op) + ": length mismatch (" +
                             std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
    }
}

inline void require_finite(const ParamVector& x, const char* op) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) {
            throw NumericError(std::string(op) + ": non-finite entry at index " + std::to_string(i));
        }
    }
}

}  // namespace detail

/// a*x + y, elementwise. Inputs are left untouched.
inline ParamVector axpy(double a, const ParamVector& x, const ParamVector& y) {
    detail::require_same_dim(x, y, "axpy");
    if (!std::isfinite(a)) throw NumericError("axpy: non-finite scale");
    ParamVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + y[i];
    detail::require_finite(out, "axpy");
    return out;
}

inline ParamVector mul(const ParamVector& x, const ParamVector& y) {
    detail::require_same_dim(x, y, "mul");
    ParamVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
    detail::require_finite(out, "mul");
    return out;
}

inline ParamVector div(const ParamVector& x, const ParamVector& y) {
    detail::require_same_dim(x, y, "div");
    ParamVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (y[i] == 0.0) throw NumericError("div: zero denominator at index " + std::to_string(i));
        out[i] = x[i] / y[i];
    }
    detail::require_finite(out, "div");
    return out;
}

inline ParamVector sqrt(const ParamVector& x) {
    ParamVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0) throw NumericError("sqrt: negative entry at index " + std::to_string(i));
        out[i] = std::sqrt(x[i]);
    }
    detail::require_finite(out, "sqrt");
    return out;
}

inline ParamVector square(const ParamVector& x) {
    ParamVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * x[i];
    detail::require_finite(out, "square");
    return out;
}

inline ParamVector add_scalar(const ParamVector& x, double c) {
    if (!std::isfinite(c)) throw NumericError("add_scalar: non-finite scalar");
    ParamVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + c;
    detail::require_finite(out, "add_scalar");
    return out;
}

/// Euclidean norm; zero iff x is the zero vector.
inline double norm2(const ParamVector& x) {
    double acc = 0.0;
    for (double xi : x) acc += xi * xi;
    return std::sqrt(acc);
}

}  // namespace xgrad
