#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tnear {

/// Jacobi sweeps exhausted before the off-diagonal mass fell below tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cholesky met a non-positive pivot. `minor()` is the 1-based order of the
/// leading principal minor that failed.
class NotPositiveDefinite : public std::runtime_error {
public:
    explicit NotPositiveDefinite(std::size_t minor)
        : std::runtime_error("not positive definite at leading minor " + std::to_string(minor)),
          minor_(minor) {}

    [[nodiscard]] std::size_t minor() const noexcept { return minor_; }

private:
    std::size_t minor_;
};

/// CG found a search direction with p^T A p <= 0.
class IndefiniteOperator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed matrix file; carries the 1-based line and field of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t field, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", field " + std::to_string(field) +
                             ": " + what),
          line_(line), field_(field) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::size_t field_;
};

}  // namespace tnear
