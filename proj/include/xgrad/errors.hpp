#pragma once

#include <stdexcept>
#include <string>

namespace xgrad {

/// Vector lengths disagree (parameters vs. gradients vs. moment buffers).
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A public operation produced or received a NaN/Inf entry.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid hyperparameter, config key, or problem construction argument.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File reading/writing failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xgrad
