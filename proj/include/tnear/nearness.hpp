#pragma once

#include <string_view>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/matrix.hpp"
#include "tnear/spectral.hpp"

namespace tnear {

enum class NormalityBranch { Symmetric, ShiftedSkew, Tie };

[[nodiscard]] std::string_view to_string(NormalityBranch b) noexcept;

/// Nearest normal matrix with the same banded Toeplitz structure.
struct NormalityProjection {
    NormalityBranch branch;
    BandedToeplitz projected;  ///< symmetric part on Symmetric and Tie
    double distance_squared;
    double tcond;  ///< sum_h (n-h) sigma_h tau_h; its sign selects the branch
};

/// Requires k <= floor(n/2), which BandedToeplitz already enforces. At
/// tcond == 0 both candidates are closest; the symmetric one is returned.
[[nodiscard]] NormalityProjection normality_projection(const BandedToeplitz& t);

/// sum_h (n-h)/2 (sigma_h - tau_h)^2, the squared norm of the skew part.
[[nodiscard]] double skew_distance_squared(const BandedToeplitz& t);

/// Sum of lambda^2 over eigenvalues below -threshold.
[[nodiscard]] double negative_mass(const Spectrum& s, double threshold);

struct SpsdProjection {
    double distance_squared;
    DenseSymmetric nearest;
    Spectrum symmetric_spectrum;  ///< eigenvalues of (A + A^T)/2

    [[nodiscard]] double distance() const;
};

/// Unstructured distance from a square matrix to the SPSD cone together with
/// the nearest SPSD matrix Z diag(max(lambda, 0)) Z^T = (B + H)/2, H the
/// symmetric polar factor of the symmetric part B.
[[nodiscard]] SpsdProjection distance_spsd_dense(const Matrix& a, double eig_tol_scale = kDefaultEigTolScale);

/// Same squared distance for a banded Toeplitz matrix without densifying the
/// skew part: the spectrum of the symmetric part (closed form for k == 1,
/// Jacobi otherwise) plus skew_distance_squared.
[[nodiscard]] double distance_spsd_banded_squared(const BandedToeplitz& t,
                                                  double eig_tol_scale = kDefaultEigTolScale);

/// Spectrum of symmetric_part(t): closed form when k == 1, Jacobi otherwise.
[[nodiscard]] Spectrum symmetric_part_spectrum(const BandedToeplitz& t);

/// symmetric_part(input) + gamma I together with its distance to the input.
struct ShiftProjection {
    BandedToeplitz shifted;
    double gamma;
    double distance_from_input;
};

/// gamma = max{0, sum_j |sigma_j + tau_j| - delta} (the Gershgorin shift).
[[nodiscard]] ShiftProjection shift_projection_general(const BandedToeplitz& t);

/// k == 1 only: gamma = max{0, |sigma_1 + tau_1| cos(pi/(n+1)) - delta}, the
/// smallest shift that makes the symmetric part semidefinite.
[[nodiscard]] ShiftProjection shift_projection_tridiagonal(const BandedToeplitz& t);

}  // namespace tnear
