#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tnear/matrix.hpp"

namespace tnear {

/// Real (2k+1)-banded Toeplitz matrix of order n.
///
/// Subdiagonal h carries sigma[h-1], superdiagonal h carries tau[h-1], the
/// main diagonal carries delta; everything outside the band is zero. The
/// half-bandwidth is declared rather than inferred, so trailing zero
/// coefficients are kept. Requires n >= 1 and k <= floor(n/2).
class BandedToeplitz {
public:
    /// Throws std::invalid_argument on n == 0, k > n/2 or a coefficient
    /// vector whose length differs from k.
    BandedToeplitz(std::size_t n, std::size_t k, std::vector<double> sigma, double delta,
                   std::vector<double> tau);

    /// delta * I_n with half-bandwidth k (k defaults to 0).
    static BandedToeplitz scaled_identity(std::size_t n, double delta, std::size_t k = 0);

    /// Symmetric matrix (n; k; sigma, delta, sigma).
    static BandedToeplitz symmetric(std::size_t n, std::vector<double> sigma, double delta);

    /// The downshift matrix (n; 1; 1, 0, 0).
    static BandedToeplitz downshift(std::size_t n);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::size_t half_bandwidth() const noexcept { return k_; }
    [[nodiscard]] std::span<const double> sigma() const noexcept { return sigma_; }
    [[nodiscard]] std::span<const double> tau() const noexcept { return tau_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }

    /// Subdiagonal / superdiagonal coefficient at offset h in [1, k].
    [[nodiscard]] double sigma(std::size_t h) const noexcept { return sigma_[h - 1]; }
    [[nodiscard]] double tau(std::size_t h) const noexcept { return tau_[h - 1]; }

    /// Entry (i, j), zero-based.
    [[nodiscard]] double entry(std::size_t i, std::size_t j) const noexcept;

    [[nodiscard]] bool is_symmetric() const noexcept { return sigma_ == tau_; }

    /// Same matrix with delta replaced by delta + shift.
    [[nodiscard]] BandedToeplitz shifted(double shift) const;

    friend bool operator==(const BandedToeplitz&, const BandedToeplitz&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<double> sigma_;
    double delta_;
    std::vector<double> tau_;
};

[[nodiscard]] Matrix to_dense(const BandedToeplitz& t);

/// Closed form sum_h (n-h)(sigma_h^2 + tau_h^2) + n delta^2.
[[nodiscard]] double frobenius_norm_squared(const BandedToeplitz& t);

/// (n; k; (sigma+tau)/2, delta, (sigma+tau)/2), the nearest symmetric matrix.
[[nodiscard]] BandedToeplitz symmetric_part(const BandedToeplitz& t);

/// (n; k; (sigma-tau)/2, 0, (tau-sigma)/2), the nearest skew-symmetric matrix.
[[nodiscard]] BandedToeplitz skew_part(const BandedToeplitz& t);

/// Parameterwise a - b; both operands must share n and k.
[[nodiscard]] BandedToeplitz difference(const BandedToeplitz& a, const BandedToeplitz& b);

/// Parameterwise a + b; both operands must share n and k.
[[nodiscard]] BandedToeplitz sum(const BandedToeplitz& a, const BandedToeplitz& b);

/// y = T x in O(nk). Throws std::invalid_argument on a length mismatch.
[[nodiscard]] std::vector<double> matvec(const BandedToeplitz& t, std::span<const double> x);

/// Frobenius projection of a square matrix onto banded Toeplitz matrices of
/// half-bandwidth k: every diagonal within the band is replaced by its mean.
[[nodiscard]] BandedToeplitz nearest_banded_toeplitz(const Matrix& a, std::size_t k);

}  // namespace tnear
