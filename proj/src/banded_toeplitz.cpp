#include "tnear/banded_toeplitz.hpp"

#include <stdexcept>
#include <string>

#include "tnear/kernels.hpp"

namespace tnear {

BandedToeplitz::BandedToeplitz(std::size_t n, std::size_t k, std::vector<double> sigma, double delta,
                               std::vector<double> tau)
    : n_(n), k_(k), sigma_(std::move(sigma)), delta_(delta), tau_(std::move(tau)) {
    if (n_ == 0) throw std::invalid_argument("banded Toeplitz order must be positive");
    if (k_ > n_ / 2)
        throw std::invalid_argument("half-bandwidth " + std::to_string(k_) + " exceeds floor(n/2) = " +
                                    std::to_string(n_ / 2));
    if (sigma_.size() != k_ || tau_.size() != k_)
        throw std::invalid_argument("sigma and tau must each hold exactly k = " + std::to_string(k_) +
                                    " values");
}

BandedToeplitz BandedToeplitz::scaled_identity(std::size_t n, double delta, std::size_t k) {
    return {n, k, std::vector<double>(k, 0.0), delta, std::vector<double>(k, 0.0)};
}

BandedToeplitz BandedToeplitz::symmetric(std::size_t n, std::vector<double> sigma, double delta) {
    const std::size_t k = sigma.size();
    std::vector<double> tau = sigma;
    return {n, k, std::move(sigma), delta, std::move(tau)};
}

BandedToeplitz BandedToeplitz::downshift(std::size_t n) { return {n, 1, {1.0}, 0.0, {0.0}}; }

double BandedToeplitz::entry(std::size_t i, std::size_t j) const noexcept {
    if (i == j) return delta_;
    if (i > j) {
        const std::size_t h = i - j;
        return h <= k_ ? sigma_[h - 1] : 0.0;
    }
    const std::size_t h = j - i;
    return h <= k_ ? tau_[h - 1] : 0.0;
}

BandedToeplitz BandedToeplitz::shifted(double shift) const {
    return {n_, k_, sigma_, delta_ + shift, tau_};
}

Matrix to_dense(const BandedToeplitz& t) {
    const std::size_t n = t.order();
    const std::size_t k = t.half_bandwidth();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = t.delta();
        for (std::size_t h = 1; h <= k; ++h) {
            if (i >= h) m(i, i - h) = t.sigma(h);
            if (i + h < n) m(i, i + h) = t.tau(h);
        }
    }
    return m;
}

double frobenius_norm_squared(const BandedToeplitz& t) {
    const auto n = static_cast<double>(t.order());
    double s = n * t.delta() * t.delta();
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) {
        const double w = n - static_cast<double>(h);
        s += w * (t.sigma(h) * t.sigma(h) + t.tau(h) * t.tau(h));
    }
    return s;
}

BandedToeplitz symmetric_part(const BandedToeplitz& t) {
    std::vector<double> avg(t.half_bandwidth());
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) avg[h - 1] = 0.5 * (t.sigma(h) + t.tau(h));
    return BandedToeplitz::symmetric(t.order(), std::move(avg), t.delta());
}

BandedToeplitz skew_part(const BandedToeplitz& t) {
    const std::size_t k = t.half_bandwidth();
    std::vector<double> lower(k), upper(k);
    for (std::size_t h = 1; h <= k; ++h) {
        lower[h - 1] = 0.5 * (t.sigma(h) - t.tau(h));
        upper[h - 1] = 0.5 * (t.tau(h) - t.sigma(h));
    }
    return {t.order(), k, std::move(lower), 0.0, std::move(upper)};
}

namespace {

template <typename Op>
BandedToeplitz combine(const BandedToeplitz& a, const BandedToeplitz& b, Op op) {
    if (a.order() != b.order() || a.half_bandwidth() != b.half_bandwidth())
        throw std::invalid_argument("banded Toeplitz operands differ in order or bandwidth");
    const std::size_t k = a.half_bandwidth();
    std::vector<double> s(k), t(k);
    for (std::size_t h = 1; h <= k; ++h) {
        s[h - 1] = op(a.sigma(h), b.sigma(h));
        t[h - 1] = op(a.tau(h), b.tau(h));
    }
    return {a.order(), k, std::move(s), op(a.delta(), b.delta()), std::move(t)};
}

}  // namespace

BandedToeplitz difference(const BandedToeplitz& a, const BandedToeplitz& b) {
    return combine(a, b, [](double x, double y) { return x - y; });
}

BandedToeplitz sum(const BandedToeplitz& a, const BandedToeplitz& b) {
    return combine(a, b, [](double x, double y) { return x + y; });
}

std::vector<double> matvec(const BandedToeplitz& t, std::span<const double> x) {
    if (x.size() != t.order())
        throw std::invalid_argument("matvec: vector length " + std::to_string(x.size()) +
                                    " does not match order " + std::to_string(t.order()));
    std::vector<double> y(t.order());
    kernels::toeplitz_matvec(t, x, y);
    return y;
}

BandedToeplitz nearest_banded_toeplitz(const Matrix& a, std::size_t k) {
    if (!a.is_square()) throw std::invalid_argument("nearest_banded_toeplitz: matrix must be square");
    const std::size_t n = a.rows();
    auto diagonal_mean = [&](std::size_t row0, std::size_t col0) {
        double s = 0.0;
        std::size_t count = 0;
        for (std::size_t i = row0, j = col0; i < n && j < n; ++i, ++j, ++count) s += a(i, j);
        return s / static_cast<double>(count);
    };
    std::vector<double> sigma(k), tau(k);
    for (std::size_t h = 1; h <= k; ++h) {
        sigma[h - 1] = diagonal_mean(h, 0);
        tau[h - 1] = diagonal_mean(0, h);
    }
    return {n, k, std::move(sigma), diagonal_mean(0, 0), std::move(tau)};
}

}  // namespace tnear
