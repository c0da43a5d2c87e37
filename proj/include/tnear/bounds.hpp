#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/spectral.hpp"

namespace tnear {

/// Which structured SPSD candidate attains the upper bound: max{0, delta} I
/// ("zero-matrix") or the shifted symmetric part.
enum class Candidate { ZeroMatrix, Shifted };
enum class DeltaBranch { Positive, Nonpositive };

[[nodiscard]] std::string_view to_string(Candidate c) noexcept;
[[nodiscard]] std::string_view to_string(DeltaBranch b) noexcept;

enum class LowerBound { Exact, Skip };

/// Sandwich lower_squared <= Delta_F^+(T)^2 <= upper_squared with
/// upper_squared = min{d1, d2} + d3, where
///   d1: squared distance of the symmetric part to max{0, delta} I,
///   d2: n gamma^2 for the shift candidate,
///   d3: squared norm of the skew part.
/// The lower bound is the unstructured distance and needs an eigensolve; the
/// upper bounds are closed forms.
struct BoundReport {
    std::optional<double> lower_squared;
    double upper_squared;
    double d1;
    double d2;
    double d3;
    std::optional<double> d2_alt;  ///< tridiagonal reports: the general-shift d2
    Candidate chosen;
    DeltaBranch branch;
    BandedToeplitz candidate;  ///< the structured SPSD matrix upper_squared measures
};

/// O(k) upper bounds with the Gershgorin shift.
[[nodiscard]] BoundReport bounds_general(const BandedToeplitz& t, LowerBound lower = LowerBound::Exact,
                                         double eig_tol_scale = kDefaultEigTolScale);

/// O(1) upper bounds for k == 1 using the exact shift
/// max{0, |sigma_1 + tau_1| cos(pi/(n+1)) - delta}; d2_alt holds the general
/// d2 for comparison.
[[nodiscard]] BoundReport bounds_tridiagonal(const BandedToeplitz& t, LowerBound lower = LowerBound::Exact,
                                             double eig_tol_scale = kDefaultEigTolScale);

struct ZeroDiagonalBounds {
    BoundReport report;
    double symmetric_lower;  ///< sqrt(n-1)/2 |sigma_1 + tau_1|, unstructured distance of the symmetric part
    double symmetric_upper;  ///< sqrt((n-1)/2) |sigma_1 + tau_1|
};

/// Closed-form sandwich for (n; 1; sigma_1, 0, tau_1):
/// (n-1)/4 (3 sigma^2 + 3 tau^2 - 2 sigma tau) <= Delta^2 <= (n-1)(sigma^2 + tau^2).
[[nodiscard]] ZeroDiagonalBounds bounds_tridiagonal_zero_diag(const BandedToeplitz& t);

// Oracle limits: desk-scale only.
inline constexpr std::size_t kOracleMaxOrder = 12;
inline constexpr std::size_t kOracleMaxBandwidth = 2;

struct OracleResult {
    double distance;
    BandedToeplitz best;  ///< feasible symmetric banded Toeplitz minimizer found
};

/// Brute-force search for the nearest SPSD symmetric banded Toeplitz matrix.
/// Scans the off-diagonal coefficients on a grid with `resolution` points per
/// coordinate, refines with Nelder-Mead, and only ever evaluates feasible
/// points. The result bounds the true structured distance from above.
[[nodiscard]] OracleResult oracle_structured_distance(const BandedToeplitz& t, std::size_t resolution = 21,
                                                      double eig_tol_scale = kDefaultEigTolScale);

}  // namespace tnear
