#pragma once

// Data-parallel inner loops. Every kernel in tnear::kernels has a serial
// counterpart in tnear::reference that follows a different loop order; the
// tests check one against the other and bench/ times both.

#include <span>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/matrix.hpp"

namespace tnear::kernels {

/// y = T x, row-parallel. y must not alias x.
void toeplitz_matvec(const BandedToeplitz& t, std::span<const double> x, std::span<double> y);

/// y = A x for dense row-major A, row-parallel.
void dense_matvec(const Matrix& a, std::span<const double> x, std::span<double> y);

/// Evaluates f(i) for i in [0, count) into out, one independent task per index.
template <typename F>
void parallel_map(std::size_t count, std::span<double> out, F&& f) {
    const auto m = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
}

}  // namespace tnear::kernels

namespace tnear::reference {

/// Diagonal-by-diagonal accumulation; serial.
void toeplitz_matvec(const BandedToeplitz& t, std::span<const double> x, std::span<double> y);

/// Column-oriented (saxpy) product; serial.
void dense_matvec(const Matrix& a, std::span<const double> x, std::span<double> y);

}  // namespace tnear::reference
