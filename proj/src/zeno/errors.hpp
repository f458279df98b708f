// errors.hpp — exception types distinguishing config, accuracy, and resource failures
#ifndef ZENO_ERRORS_HPP
#define ZENO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeno {

// Invalid or incomplete run configuration (bad keys, bad values, bad files).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical tolerance could not be met (quadrature non-convergence,
// unitarity loss, trace drift, non-positive survival).
struct AccuracyError : std::runtime_error {
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed an explicit budget (term counts, matrix dimensions).
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zeno

#endif
