#include "tnear/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tnear/nearness.hpp"

namespace tnear {

std::string_view to_string(Candidate c) noexcept {
    return c == Candidate::ZeroMatrix ? "zero-matrix" : "shifted";
}

std::string_view to_string(DeltaBranch b) noexcept {
    return b == DeltaBranch::Positive ? "delta-positive" : "delta-nonpositive";
}

namespace {

// Shared tail of the general and tridiagonal bounds once the shift radius is known. `radius` is
// the amount the symmetric part must be lifted before the diagonal helps.
BoundReport assemble(const BandedToeplitz& t, double radius, LowerBound lower, double eig_tol_scale) {
    const auto n = static_cast<double>(t.order());
    const double delta = t.delta();
    const BandedToeplitz sym = symmetric_part(t);

    double sym_offdiag = 0.0;
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) {
        const double s = t.sigma(h) + t.tau(h);
        sym_offdiag += 0.5 * (n - static_cast<double>(h)) * s * s;
    }

    BoundReport r{
        .lower_squared = std::nullopt,
        .upper_squared = 0.0,
        .d1 = 0.0,
        .d2 = 0.0,
        .d3 = skew_distance_squared(t),
        .d2_alt = std::nullopt,
        .chosen = Candidate::ZeroMatrix,
        .branch = delta > 0.0 ? DeltaBranch::Positive : DeltaBranch::Nonpositive,
        .candidate = BandedToeplitz::scaled_identity(t.order(), std::max(0.0, delta), t.half_bandwidth()),
    };
    double gamma;
    if (r.branch == DeltaBranch::Positive) {
        r.d1 = sym_offdiag;
        gamma = std::max(0.0, radius - delta);
    } else {
        r.d1 = sym_offdiag + n * delta * delta;
        gamma = radius - delta;
    }
    r.d2 = n * gamma * gamma;
    if (r.d2 < r.d1) {
        r.chosen = Candidate::Shifted;
        r.candidate = sym.shifted(gamma);
    }
    r.upper_squared = std::min(r.d1, r.d2) + r.d3;
    if (lower == LowerBound::Exact) r.lower_squared = distance_spsd_banded_squared(t, eig_tol_scale);
    return r;
}

double gershgorin_radius(const BandedToeplitz& t) {
    double radius = 0.0;
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) radius += std::abs(t.sigma(h) + t.tau(h));
    return radius;
}

double tridiagonal_radius(const BandedToeplitz& t) {
    return std::abs(t.sigma(1) + t.tau(1)) * std::cos(std::numbers::pi / static_cast<double>(t.order() + 1));
}

}  // namespace

BoundReport bounds_general(const BandedToeplitz& t, LowerBound lower, double eig_tol_scale) {
    return assemble(t, gershgorin_radius(t), lower, eig_tol_scale);
}

BoundReport bounds_tridiagonal(const BandedToeplitz& t, LowerBound lower, double eig_tol_scale) {
    if (t.half_bandwidth() != 1) throw std::invalid_argument("bounds_tridiagonal requires k = 1");
    BoundReport r = assemble(t, tridiagonal_radius(t), lower, eig_tol_scale);
    r.d2_alt = bounds_general(t, LowerBound::Skip).d2;
    return r;
}

ZeroDiagonalBounds bounds_tridiagonal_zero_diag(const BandedToeplitz& t) {
    if (t.half_bandwidth() != 1) throw std::invalid_argument("bounds_tridiagonal_zero_diag requires k = 1");
    if (t.delta() != 0.0) throw std::invalid_argument("bounds_tridiagonal_zero_diag requires delta = 0");
    const double m = static_cast<double>(t.order()) - 1.0;
    const double s = t.sigma(1);
    const double u = t.tau(1);

    ZeroDiagonalBounds out{bounds_tridiagonal(t, LowerBound::Skip), 0.0, 0.0};
    out.report.lower_squared = m / 4.0 * (3.0 * s * s + 3.0 * u * u - 2.0 * s * u);
    out.symmetric_lower = std::sqrt(m) / 2.0 * std::abs(s + u);
    out.symmetric_upper = std::sqrt(m / 2.0) * std::abs(s + u);
    return out;
}

}  // namespace tnear
