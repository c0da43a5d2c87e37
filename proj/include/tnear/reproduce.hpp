#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/bounds.hpp"
#include "tnear/matrix.hpp"
#include "tnear/spectral.hpp"

namespace tnear {

/// Inclusive parameter range start:step:end. Points are start + i * step for
/// i = 0..count()-1, so no error accumulates along the sweep.
struct SweepRange {
    double start;
    double step;
    double end;

    /// Parses "START:STEP:END". Requires step > 0 and start <= end.
    static SweepRange parse(std::string_view text);

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

enum class Execution { Serial, Parallel };

struct SweepRow {
    double p = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    std::optional<double> d2_alt;
    Candidate chosen = Candidate::ZeroMatrix;
};

/// (100; 2; [0.05, p], 0.1, [0.05, p]) with the general bounds.
[[nodiscard]] BandedToeplitz pentadiagonal_family(double p);
inline constexpr SweepRange kPentadiagonalSweep{0.04, 0.0001, 0.06};
[[nodiscard]] std::vector<SweepRow> pentadiagonal_sweep(const SweepRange& range = kPentadiagonalSweep,
                                                        Execution exec = Execution::Parallel);

/// (15; 1; 0.05, p, 0.05). d2 is the general-shift bound, d2_alt the exact
/// tridiagonal shift; `chosen` follows the tridiagonal bound.
[[nodiscard]] BandedToeplitz tridiagonal_family(double p);
inline constexpr SweepRange kTridiagonalSweep{0.02, 0.0001, 0.05};
[[nodiscard]] std::vector<SweepRow> tridiagonal_sweep(const SweepRange& range = kTridiagonalSweep,
                                                      Execution exec = Execution::Parallel);

/// Last parameter where the shifted candidate wins, first where the zero
/// matrix wins after it. Empty when the candidate never switches.
struct Crossover {
    double last_shifted;
    double first_zero;
};
[[nodiscard]] std::optional<Crossover> find_crossover(std::span<const SweepRow> rows);

/// An SPD 3x3 matrix whose nearest Toeplitz matrix is indefinite.
struct SpdToToeplitzExample {
    Matrix a;
    Spectrum a_spectrum;
    BandedToeplitz toeplitz;  ///< diagonal averages of a
    Spectrum toeplitz_spectrum;
    double toeplitz_distance_squared;  ///< unstructured SPSD distance of the averaged matrix
};
[[nodiscard]] SpdToToeplitzExample spd_to_toeplitz_example();

/// Closed-form and computed quantities for the downshift matrix of order n.
struct DownshiftRow {
    std::size_t n;
    double delta_f_plus_sq;    ///< computed unstructured SPSD distance^2
    double lower;              ///< 3(n-1)/4
    double upper;              ///< n-1
    double tilde_delta_sq;     ///< distance^2 to the exactly shifted symmetric part
    double normality_sq;       ///< structured distance^2 to normality
    double spectral_gap_sq;    ///< ||lambda(sym part) - lambda(nearest SPSD)||^2
};
[[nodiscard]] DownshiftRow downshift_row(std::size_t n);
[[nodiscard]] std::vector<DownshiftRow> downshift_table(std::span<const std::size_t> orders);

}  // namespace tnear
