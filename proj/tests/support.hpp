#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/matrix.hpp"

namespace tnear::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(rng, lo, hi);
    return v;
}

/// Random (n; k; sigma, delta, tau) with n in [n_min, n_max], k <= min(k_max, n/2).
inline BandedToeplitz random_toeplitz(Rng& rng, std::size_t n_min, std::size_t n_max, std::size_t k_max) {
    const std::size_t n = uniform_size(rng, n_min, n_max);
    const std::size_t k = uniform_size(rng, 0, std::min(k_max, n / 2));
    return {n, k, random_vector(rng, k), uniform(rng), random_vector(rng, k)};
}

inline BandedToeplitz random_symmetric_toeplitz(Rng& rng, std::size_t n_min, std::size_t n_max, std::size_t k_max) {
    const std::size_t n = uniform_size(rng, n_min, n_max);
    const std::size_t k = uniform_size(rng, 0, std::min(k_max, n / 2));
    return BandedToeplitz::symmetric(n, random_vector(rng, k), uniform(rng));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng);
    return m;
}

inline Matrix random_symmetric(Rng& rng, std::size_t n) {
    const Matrix a = random_matrix(rng, n, n);
    return symmetric_part(a);
}

/// G G^T + shift I: SPD for shift > 0.
inline Matrix random_spd(Rng& rng, std::size_t n, double shift) {
    const Matrix g = random_matrix(rng, n, n);
    Matrix a = multiply(g, g.transposed());
    for (std::size_t i = 0; i < n; ++i) a(i, i) += shift;
    return a;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

/// Plain dense product, the oracle for every matvec.
inline std::vector<double> dense_product(const Matrix& a, const std::vector<double>& x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace tnear::testing
