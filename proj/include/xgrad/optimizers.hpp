#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xgrad/errors.hpp"
#include "xgrad/param_vector.hpp"

namespace xgrad {

enum class OptimizerKind { Sgdm, RmsProp, Adam, AdamW, AdaBelief, AdaM3 };

inline const char* to_string(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::Sgdm: return "sgdm";
        case OptimizerKind::RmsProp: return "rmsprop";
        case OptimizerKind::Adam: return "adam";
        case OptimizerKind::AdamW: return "adamw";
        case OptimizerKind::AdaBelief: return "adabelief";
        case OptimizerKind::AdaM3: return "adam3";
    }
    return "?";
}

inline std::optional<OptimizerKind> optimizer_from_string(std::string_view name) {
    if (name == "sgdm") return OptimizerKind::Sgdm;
    if (name == "rmsprop") return OptimizerKind::RmsProp;
    if (name == "adam") return OptimizerKind::Adam;
    if (name == "adamw") return OptimizerKind::AdamW;
    if (name == "adabelief") return OptimizerKind::AdaBelief;
    if (name == "adam3") return OptimizerKind::AdaM3;
    return std::nullopt;
}

/// Hyperparameters for every optimizer kind; only the fields meaningful for
/// the chosen kind are consulted, the rest stay inert.
struct HyperParams {
    double lr = 1e-3;
    double momentum = 0.0;      // sgdm u
    double dampening = 0.0;     // sgdm tau
    double weight_decay = 0.0;  // lambda
    double beta1 = 0.9;
    double beta2 = 0.999;
    double alpha = 0.99;        // rmsprop smoothing constant
    double epsilon = 1e-8;

    bool operator==(const HyperParams&) const = default;
};

inline void validate(const HyperParams& hp) {
    auto in_unit = [](double x) { return x >= 0.0 && x < 1.0; };
    if (!(hp.lr > 0.0) || !std::isfinite(hp.lr)) throw ConfigError("lr must be positive");
    if (!(hp.epsilon > 0.0) || !std::isfinite(hp.epsilon)) throw ConfigError("epsilon must be positive");
    if (!in_unit(hp.momentum)) throw ConfigError("momentum must be in [0,1)");
    if (!in_unit(hp.dampening)) throw ConfigError("dampening must be in [0,1)");
    if (!in_unit(hp.beta1)) throw ConfigError("beta1 must be in [0,1)");
    if (!in_unit(hp.beta2)) throw ConfigError("beta2 must be in [0,1)");
    if (!in_unit(hp.alpha)) throw ConfigError("alpha must be in [0,1)");
    if (hp.weight_decay < 0.0 || !std::isfinite(hp.weight_decay)) {
        throw ConfigError("weight_decay must be nonnegative");
    }
}

/// Complete optimizer state: step counter plus the two moment buffers.
///
/// Buffer use per kind:
///   sgdm       m = momentum buffer, v unused
///   rmsprop    m = last decayed gradient (cached so the update direction can
///              be produced without re-evaluating the loss), v = squared EMA
///   adam-family m = first moment, v = second moment
struct OptimizerState {
    OptimizerKind kind = OptimizerKind::Sgdm;
    HyperParams hp;
    std::int64_t t = 0;  // completed steps
    ParamVector m;
    ParamVector v;

    std::size_t dim() const { return m.size(); }
};

inline OptimizerState init_state(OptimizerKind kind, const HyperParams& hp, std::size_t dim) {
    if (dim == 0) throw ConfigError("init_state: dim must be >= 1");
    validate(hp);
    OptimizerState st;
    st.kind = kind;
    st.hp = hp;
    st.t = 0;
    st.m = zeros(dim);
    st.v = zeros(dim);
    return st;
}

namespace detail {

// 1 - beta^t; evaluated in log space for very large t so the denominator
// never collapses to an intermediate underflow artifact.
inline double bias_factor(double beta, std::int64_t t) {
    if (beta == 0.0) return 1.0;
    const double td = static_cast<double>(t);
    if (t > 1000000) return 1.0 - std::exp(td * std::log(beta));
    return 1.0 - std::pow(beta, td);
}

}  // namespace detail

/// Per-step update direction computed from cached state only: the counter,
/// the moment buffers and the hyperparameters. Never evaluates a loss or a
/// gradient. A fresh state (t == 0) yields the zero vector.
inline ParamVector update_direction(const OptimizerState& st) {
    const std::size_t n = st.dim();
    if (st.t == 0) return zeros(n);
    const HyperParams& hp = st.hp;
    ParamVector d(n);
    switch (st.kind) {
        case OptimizerKind::Sgdm:
            d = st.m;
            break;
        case OptimizerKind::RmsProp:
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = st.m[i] / (std::sqrt(st.v[i]) + hp.epsilon);
            }
            break;
        case OptimizerKind::Adam:
        case OptimizerKind::AdamW:
        case OptimizerKind::AdaBelief: {
            const double c1 = detail::bias_factor(hp.beta1, st.t);
            const double c2 = detail::bias_factor(hp.beta2, st.t);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = (st.m[i] / c1) / (std::sqrt(st.v[i] / c2) + hp.epsilon);
            }
            break;
        }
        case OptimizerKind::AdaM3: {
            const double c1 = detail::bias_factor(hp.beta1, st.t);
            const double c2 = detail::bias_factor(hp.beta2, st.t);
            // no epsilon in the denominator for this rule; v carries an
            // epsilon summand from every step, so v/c2 > 0 once t >= 1
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = (st.m[i] / c1) / std::sqrt(st.v[i] / c2);
            }
            break;
        }
    }
    return d;
}

struct StepResult {
    OptimizerState state;
    ParamVector theta;
};

/// One optimizer step: updates the moment buffers and the counter, then
/// applies theta' = theta - lr * direction (AdamW additionally shrinks theta
/// by (1 - lr*weight_decay) instead of coupling the decay into the gradient).
/// Inputs are untouched; the applied direction is exactly what
/// update_direction reports on the returned state.
inline StepResult step(const OptimizerState& prev, const ParamVector& theta,
                       const ParamVector& grad) {
    const std::size_t n = prev.dim();
    if (theta.size() != n || grad.size() != n) {
        throw DimensionError(std::string("step(") + to_string(prev.kind) +
                             "): dimension mismatch: state " + std::to_string(n) + ", theta " +
                             std::to_string(theta.size()) + ", grad " +
                             std::to_string(grad.size()));
    }
    detail::require_finite(grad, "step: gradient");

    OptimizerState st = prev;
    st.t = prev.t + 1;
    const HyperParams& hp = st.hp;

    ParamVector g = grad;
    const bool coupled_decay = hp.weight_decay != 0.0 &&
                               (st.kind == OptimizerKind::Sgdm ||
                                st.kind == OptimizerKind::RmsProp ||
                                st.kind == OptimizerKind::Adam);
    if (coupled_decay) {
        for (std::size_t i = 0; i < n; ++i) g[i] += hp.weight_decay * theta[i];
    }

    switch (st.kind) {
        case OptimizerKind::Sgdm:
            for (std::size_t i = 0; i < n; ++i) {
                st.m[i] = hp.momentum * st.m[i] + (1.0 - hp.dampening) * g[i];
            }
            break;
        case OptimizerKind::RmsProp:
            for (std::size_t i = 0; i < n; ++i) {
                st.v[i] = hp.alpha * st.v[i] + (1.0 - hp.alpha) * g[i] * g[i];
            }
            st.m = g;  // cache for the gradient-free direction lookup
            break;
        case OptimizerKind::Adam:
        case OptimizerKind::AdamW:
            for (std::size_t i = 0; i < n; ++i) {
                st.m[i] = hp.beta1 * st.m[i] + (1.0 - hp.beta1) * g[i];
                st.v[i] = hp.beta2 * st.v[i] + (1.0 - hp.beta2) * g[i] * g[i];
            }
            break;
        case OptimizerKind::AdaBelief:
            for (std::size_t i = 0; i < n; ++i) {
                st.m[i] = hp.beta1 * st.m[i] + (1.0 - hp.beta1) * g[i];
                const double r = g[i] - st.m[i];
                st.v[i] = hp.beta2 * st.v[i] + (1.0 - hp.beta2) * r * r + hp.epsilon;
            }
            break;
        case OptimizerKind::AdaM3:
            for (std::size_t i = 0; i < n; ++i) {
                st.m[i] = hp.beta1 * st.m[i] + (1.0 - hp.beta1) * g[i];
                st.v[i] = hp.beta2 * st.v[i] + (1.0 - hp.beta2) * st.m[i] * st.m[i] + hp.epsilon;
            }
            break;
    }

    const ParamVector d = update_direction(st);
    ParamVector next(n);
    if (st.kind == OptimizerKind::AdamW) {
        const double shrink = 1.0 - hp.lr * hp.weight_decay;
        for (std::size_t i = 0; i < n; ++i) next[i] = shrink * theta[i] - hp.lr * d[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) next[i] = theta[i] - hp.lr * d[i];
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(next[i]) || !std::isfinite(st.m[i]) || !std::isfinite(st.v[i])) {
            throw NumericError(std::string(to_string(st.kind)) +
                               ": non-finite update at entry " + std::to_string(i));
        }
    }
    return {std::move(st), std::move(next)};
}

/// Runs len(grads) steps from theta0, accumulating the realized per-step
/// directions d_i, and returns ||theta_s - (theta_0 - lr*sum d_i)|| /
/// max(||theta_s||, 1). Exact up to roundoff for every kind except AdamW,
/// where the result is the size of the neglected decoupled-decay term.
inline double telescoping_check(OptimizerKind kind, const HyperParams& hp,
                                const ParamVector& theta0,
                                const std::vector<ParamVector>& grads) {
    if (grads.empty()) throw ConfigError("telescoping_check: empty gradient sequence");
    const std::size_t n = theta0.size();
    OptimizerState st = init_state(kind, hp, n);
    ParamVector theta = theta0;
    ParamVector sum = zeros(n);
    for (const ParamVector& g : grads) {
        StepResult res = step(st, theta, g);
        st = std::move(res.state);
        theta = std::move(res.theta);
        const ParamVector d = update_direction(st);
        for (std::size_t i = 0; i < n; ++i) sum[i] += d[i];
    }
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = theta[i] - (theta0[i] - hp.lr * sum[i]);
        err += diff * diff;
    }
    return std::sqrt(err) / std::max(norm2(theta), 1.0);
}

}  // namespace xgrad
