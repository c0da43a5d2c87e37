#include "tnear/nearness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tnear {

std::string_view to_string(NormalityBranch b) noexcept {
    switch (b) {
        case NormalityBranch::Symmetric: return "symmetric";
        case NormalityBranch::ShiftedSkew: return "shifted-skew";
        case NormalityBranch::Tie: return "tie";
    }
    return "unknown";
}

NormalityProjection normality_projection(const BandedToeplitz& t) {
    const auto n = static_cast<double>(t.order());
    const std::size_t k = t.half_bandwidth();
    double tcond = 0.0;
    double minus = 0.0;
    double plus = 0.0;
    std::vector<double> sym(k), lower(k), upper(k);
    for (std::size_t h = 1; h <= k; ++h) {
        const double w = n - static_cast<double>(h);
        const double s = t.sigma(h);
        const double u = t.tau(h);
        tcond += w * s * u;
        minus += w * (s - u) * (s - u);
        plus += w * (s + u) * (s + u);
        sym[h - 1] = 0.5 * (s + u);
        lower[h - 1] = 0.5 * (s - u);
        upper[h - 1] = 0.5 * (u - s);
    }
    const double distance_squared = 0.5 * std::min(minus, plus);
    if (tcond < 0.0)
        return {NormalityBranch::ShiftedSkew,
                BandedToeplitz(t.order(), k, std::move(lower), t.delta(), std::move(upper)), distance_squared, tcond};
    return {tcond > 0.0 ? NormalityBranch::Symmetric : NormalityBranch::Tie,
            BandedToeplitz::symmetric(t.order(), std::move(sym), t.delta()), distance_squared, tcond};
}

double skew_distance_squared(const BandedToeplitz& t) {
    const auto n = static_cast<double>(t.order());
    double s = 0.0;
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) {
        const double d = t.sigma(h) - t.tau(h);
        s += 0.5 * (n - static_cast<double>(h)) * d * d;
    }
    return s;
}

double negative_mass(const Spectrum& s, double threshold) {
    double mass = 0.0;
    for (double v : s.values)
        if (v < -threshold) mass += v * v;
    return mass;
}

double SpsdProjection::distance() const { return std::sqrt(distance_squared); }

SpsdProjection distance_spsd_dense(const Matrix& a, double eig_tol_scale) {
    if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("distance_spsd_dense: matrix must be square");
    const DenseSymmetric b(a);
    const double skew = frobenius_norm_squared(skew_part(a));
    EigenDecomposition eig = eigen_symmetric(b);
    const double threshold = eigen_threshold(frobenius_norm(b.matrix()), eig_tol_scale);

    const std::size_t n = a.rows();
    Matrix nearest(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const double lambda = eig.spectrum.values[c];
        if (lambda <= 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const double zi = lambda * eig.vectors(i, c);
            if (zi == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) nearest(i, j) += zi * eig.vectors(j, c);
        }
    }
    return {negative_mass(eig.spectrum, threshold) + skew, DenseSymmetric(nearest), std::move(eig.spectrum)};
}

Spectrum symmetric_part_spectrum(const BandedToeplitz& t) {
    const BandedToeplitz sym = symmetric_part(t);
    if (sym.half_bandwidth() == 1) return tridiag_toeplitz_eigenvalues(sym);
    if (sym.half_bandwidth() == 0) return Spectrum{std::vector<double>(sym.order(), sym.delta())};
    return eigenvalues_symmetric(DenseSymmetric(to_dense(sym)));
}

double distance_spsd_banded_squared(const BandedToeplitz& t, double eig_tol_scale) {
    const Spectrum spectrum = symmetric_part_spectrum(t);
    const double threshold = eigen_threshold(std::sqrt(frobenius_norm_squared(symmetric_part(t))), eig_tol_scale);
    return negative_mass(spectrum, threshold) + skew_distance_squared(t);
}

namespace {

ShiftProjection make_shift(const BandedToeplitz& t, double gamma) {
    const double n = static_cast<double>(t.order());
    return {symmetric_part(t).shifted(gamma), gamma, std::sqrt(n * gamma * gamma + skew_distance_squared(t))};
}

}  // namespace

ShiftProjection shift_projection_general(const BandedToeplitz& t) {
    double radius = 0.0;
    for (std::size_t h = 1; h <= t.half_bandwidth(); ++h) radius += std::abs(t.sigma(h) + t.tau(h));
    return make_shift(t, std::max(0.0, radius - t.delta()));
}

ShiftProjection shift_projection_tridiagonal(const BandedToeplitz& t) {
    if (t.half_bandwidth() != 1) throw std::invalid_argument("shift_projection_tridiagonal requires k = 1");
    const double rho =
        std::abs(t.sigma(1) + t.tau(1)) * std::cos(std::numbers::pi / static_cast<double>(t.order() + 1));
    return make_shift(t, std::max(0.0, rho - t.delta()));
}

}  // namespace tnear
