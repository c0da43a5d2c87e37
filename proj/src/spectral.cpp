#include "tnear/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tnear/errors.hpp"

namespace tnear {

Spectrum Spectrum::from_values(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum{std::move(values)};
}

double spectral_distance(const Spectrum& a, const Spectrum& b) {
    if (a.order() != b.order()) throw std::invalid_argument("spectral_distance: spectra differ in length");
    double s = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i) {
        const double d = a.values[i] - b.values[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double eigen_threshold(double frobenius_norm, double scale) { return scale * std::max(1.0, frobenius_norm); }

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Rotates rows/columns p and q of the symmetric working matrix so that
// a(p, q) becomes zero; accumulates the rotation into v when given.
void rotate(Matrix& a, Matrix* v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = 0.0;

    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        const double new_rp = arp - s * (arq + tau * arp);
        const double new_rq = arq + s * (arp - tau * arq);
        a(r, p) = a(p, r) = new_rp;
        a(r, q) = a(q, r) = new_rq;
    }
    if (v != nullptr) {
        for (std::size_t r = 0; r < n; ++r) {
            const double vrp = (*v)(r, p);
            const double vrq = (*v)(r, q);
            (*v)(r, p) = vrp - s * (vrq + tau * vrp);
            (*v)(r, q) = vrq + s * (vrp - tau * vrq);
        }
    }
}

void jacobi(Matrix& a, Matrix* v) {
    const std::size_t n = a.rows();
    const double target = kJacobiRelativeTolerance * frobenius_norm(a);
    const double eps = std::numeric_limits<double>::epsilon();

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        const double off = off_diagonal_norm(a);
        if (off <= target) return;
        // Early sweeps skip rotations of entries well below the average
        // off-diagonal size; later sweeps rotate everything not negligible.
        const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq == 0.0) continue;
                if (sweep >= 3 && apq <= 0.5 * eps * std::abs(a(p, p)) && apq <= 0.5 * eps * std::abs(a(q, q))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                if (apq <= threshold) continue;
                rotate(a, v, p, q);
            }
        }
    }
    if (!(off_diagonal_norm(a) <= target))
        throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(kJacobiMaxSweeps) +
                               " sweeps");
}

}  // namespace

EigenDecomposition eigen_symmetric(const DenseSymmetric& m) {
    const std::size_t n = m.order();
    Matrix a = m.matrix();
    Matrix v = Matrix::identity(n);
    jacobi(a, &v);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out{Spectrum{std::vector<double>(n)}, Matrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.spectrum.values[c] = a(perm[c], perm[c]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, perm[c]);
    }
    return out;
}

Spectrum eigenvalues_symmetric(const DenseSymmetric& m) {
    Matrix a = m.matrix();
    jacobi(a, nullptr);
    std::vector<double> values(m.order());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = a(i, i);
    return Spectrum::from_values(std::move(values));
}

Spectrum tridiag_toeplitz_eigenvalues(const BandedToeplitz& t) {
    if (t.half_bandwidth() != 1) throw std::invalid_argument("tridiagonal spectrum requires k = 1");
    const double product = t.sigma(1) * t.tau(1);
    if (product < 0.0)
        throw std::domain_error("sigma_1 * tau_1 < 0: the tridiagonal Toeplitz spectrum is not real");
    const std::size_t n = t.order();
    const double scale = 2.0 * std::sqrt(product);
    const double step = std::numbers::pi / static_cast<double>(n + 1);
    std::vector<double> values(n);
    for (std::size_t i = 1; i <= n; ++i) values[i - 1] = t.delta() + scale * std::cos(static_cast<double>(i) * step);
    return Spectrum::from_values(std::move(values));
}

double spectral_radius_tridiag(const BandedToeplitz& t) {
    if (t.half_bandwidth() != 1 || !t.is_symmetric())
        throw std::invalid_argument("spectral_radius_tridiag requires a symmetric tridiagonal matrix");
    if (t.delta() != 0.0) throw std::invalid_argument("spectral_radius_tridiag requires a zero diagonal");
    return std::abs(2.0 * t.sigma(1)) * std::cos(std::numbers::pi / static_cast<double>(t.order() + 1));
}

double Symbol::operator()(double theta) const {
    double g = delta;
    for (std::size_t j = 1; j <= sigma.size(); ++j) g += 2.0 * sigma[j - 1] * std::cos(static_cast<double>(j) * theta);
    return g;
}

Symbol symbol_of(const BandedToeplitz& t, SymbolInput mode) {
    if (mode == SymbolInput::RequireSymmetric && !t.is_symmetric())
        throw std::invalid_argument("symbol requires a symmetric banded Toeplitz matrix (sigma == tau)");
    const BandedToeplitz s = t.is_symmetric() ? t : symmetric_part(t);
    return Symbol{s.delta(), std::vector<double>(s.sigma().begin(), s.sigma().end())};
}

namespace {

// sign = +1 minimizes g, sign = -1 maximizes it.
SymbolExtremum symbol_extremum(const Symbol& g, std::size_t grid_points, double sign) {
    if (grid_points < 2 * g.degree() + 2)
        throw std::invalid_argument("symbol grid needs at least 2k + 2 points");
    const double pi = std::numbers::pi;
    const double h = pi / static_cast<double>(grid_points - 1);
    auto f = [&](double theta) { return sign * g(theta); };

    std::size_t best = 0;
    double best_value = f(0.0);
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double v = f(static_cast<double>(i) * h);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }

    double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * h;
    double hi = best + 1 == grid_points ? pi : static_cast<double>(best + 1) * h;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        }
    }
    double theta = 0.5 * (lo + hi);
    double value = f(theta);
    // The golden section never evaluates the bracket ends; keep a grid point
    // or an endpoint if it is at least as good.
    const double grid_theta = static_cast<double>(best) * h;
    if (best_value < value) {
        theta = grid_theta;
        value = best_value;
    }
    return {theta, sign * value};
}

}  // namespace

SymbolExtremum symbol_min(const Symbol& g, std::size_t grid_points) { return symbol_extremum(g, grid_points, 1.0); }

SymbolExtremum symbol_max(const Symbol& g, std::size_t grid_points) { return symbol_extremum(g, grid_points, -1.0); }

}  // namespace tnear
