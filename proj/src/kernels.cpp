#include "tnear/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "tnear/parallel.hpp"

namespace tnear::kernels {

void toeplitz_matvec(const BandedToeplitz& t, std::span<const double> x, std::span<double> y) {
    const std::size_t n = t.order();
    const std::size_t k = t.half_bandwidth();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("toeplitz_matvec: size mismatch");
    const auto sigma = t.sigma();
    const auto tau = t.tau();
    const double delta = t.delta();
    const auto rows = static_cast<long long>(n);

#pragma omp parallel for schedule(static)
    for (long long r = 0; r < rows; ++r) {
        const auto i = static_cast<std::size_t>(r);
        double acc = delta * x[i];
        const std::size_t below = std::min(k, i);
        for (std::size_t h = 1; h <= below; ++h) acc += sigma[h - 1] * x[i - h];
        const std::size_t above = std::min(k, n - 1 - i);
        for (std::size_t h = 1; h <= above; ++h) acc += tau[h - 1] * x[i + h];
        y[i] = acc;
    }
}

void dense_matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    if (x.size() != a.cols() || y.size() != a.rows()) throw std::invalid_argument("dense_matvec: size mismatch");
    const auto rows = static_cast<long long>(a.rows());

#pragma omp parallel for schedule(static)
    for (long long r = 0; r < rows; ++r) {
        const auto row = a.row(static_cast<std::size_t>(r));
        double acc = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        y[static_cast<std::size_t>(r)] = acc;
    }
}

}  // namespace tnear::kernels

namespace tnear::reference {

void toeplitz_matvec(const BandedToeplitz& t, std::span<const double> x, std::span<double> y) {
    const std::size_t n = t.order();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("toeplitz_matvec: size mismatch");
    for (std::size_t i = 0; i < n; ++i) y[i] = t.delta() * x[i];
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) {
        const double s = t.sigma(h);
        const double u = t.tau(h);
        for (std::size_t i = h; i < n; ++i) y[i] += s * x[i - h];
        for (std::size_t i = 0; i + h < n; ++i) y[i] += u * x[i + h];
    }
}

void dense_matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    if (x.size() != a.cols() || y.size() != a.rows()) throw std::invalid_argument("dense_matvec: size mismatch");
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const double xj = x[j];
        for (std::size_t i = 0; i < a.rows(); ++i) y[i] += a(i, j) * xj;
    }
}

}  // namespace tnear::reference
