#pragma once

#include <cstddef>
#include <vector>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/matrix.hpp"

namespace tnear {

/// Eigenvalues sorted nonincreasingly: values[0] >= values[1] >= ...
struct Spectrum {
    std::vector<double> values;

    /// Sorts its argument nonincreasingly.
    static Spectrum from_values(std::vector<double> values);

    [[nodiscard]] std::size_t order() const noexcept { return values.size(); }
    [[nodiscard]] double largest() const { return values.front(); }
    [[nodiscard]] double smallest() const { return values.back(); }
};

/// Euclidean distance between two equally long sorted spectra.
[[nodiscard]] double spectral_distance(const Spectrum& a, const Spectrum& b);

struct EigenDecomposition {
    Spectrum spectrum;
    Matrix vectors;  ///< column j belongs to spectrum.values[j]
};

// Jacobi stopping rule: off-diagonal Frobenius mass below
// kJacobiRelativeTolerance * ||M||_F, at most kJacobiMaxSweeps cyclic sweeps.
inline constexpr double kJacobiRelativeTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 30;

/// Default scale for the zero/negative eigenvalue threshold.
inline constexpr double kDefaultEigTolScale = 1e-12;

/// tau_eig = scale * max(1, ||M||_F). An eigenvalue below -tau_eig is
/// negative; one with magnitude <= tau_eig is treated as zero.
[[nodiscard]] double eigen_threshold(double frobenius_norm, double scale = kDefaultEigTolScale);

/// Cyclic Jacobi with a threshold strategy. Throws ConvergenceError if the
/// sweep cap is reached first.
[[nodiscard]] EigenDecomposition eigen_symmetric(const DenseSymmetric& m);

/// Eigenvalues only; same iteration without accumulating rotations.
[[nodiscard]] Spectrum eigenvalues_symmetric(const DenseSymmetric& m);

/// Closed-form spectrum delta + 2 sqrt(sigma_1 tau_1) cos(i pi/(n+1)) of a
/// tridiagonal Toeplitz matrix. Requires k == 1 and sigma_1 tau_1 >= 0.
[[nodiscard]] Spectrum tridiag_toeplitz_eigenvalues(const BandedToeplitz& t);

/// Spectral radius |2 sigma_1| cos(pi/(n+1)) of (n; 1; sigma_1, 0, sigma_1).
[[nodiscard]] double spectral_radius_tridiag(const BandedToeplitz& t);

/// g(theta) = delta + 2 sum_j sigma_j cos(j theta), the symbol of a
/// symmetric banded Toeplitz matrix.
struct Symbol {
    double delta = 0.0;
    std::vector<double> sigma;

    [[nodiscard]] double operator()(double theta) const;
    [[nodiscard]] std::size_t degree() const noexcept { return sigma.size(); }
};

enum class SymbolInput { RequireSymmetric, UseSymmetricPart };

/// With RequireSymmetric a nonsymmetric T is rejected; otherwise the symbol
/// of symmetric_part(T) is returned.
[[nodiscard]] Symbol symbol_of(const BandedToeplitz& t,
                               SymbolInput mode = SymbolInput::RequireSymmetric);

struct SymbolExtremum {
    double theta;
    double value;
};

inline constexpr std::size_t kDefaultSymbolGrid = 4096;

/// Minimum of g over [0, pi]: a uniform scan with grid_points samples, then
/// golden-section refinement inside the winning cell to 1e-12 in theta.
/// Requires grid_points >= 2k + 2.
[[nodiscard]] SymbolExtremum symbol_min(const Symbol& g, std::size_t grid_points = kDefaultSymbolGrid);
[[nodiscard]] SymbolExtremum symbol_max(const Symbol& g, std::size_t grid_points = kDefaultSymbolGrid);

}  // namespace tnear
