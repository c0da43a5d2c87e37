#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnear/bounds.hpp"
#include "tnear/kernels.hpp"

// Brute-force reference for the structured SPSD distance. It uses nothing but
// dense matrices, a dense eigensolver and a derivative-free search, so it
// stays independent of the closed forms it is used to check.

namespace tnear {

namespace {

using Point = std::vector<double>;

class StructuredObjective {
public:
    StructuredObjective(const BandedToeplitz& t, double eig_tol_scale)
        : target_(t), dense_target_(to_dense(t)), scale_(eig_tol_scale) {}

    // Feasible matrix for off-diagonal coefficients s: the diagonal is the
    // target's delta raised just enough to lift the smallest eigenvalue to
    // zero. For fixed s the distance depends on the diagonal only through
    // n (delta - d)^2, so this d is optimal.
    [[nodiscard]] BandedToeplitz feasible(const Point& s) const {
        const std::size_t n = target_.order();
        BandedToeplitz zero_diag = BandedToeplitz::symmetric(n, s, 0.0);
        const double lift = -eigenvalues_symmetric(DenseSymmetric(to_dense(zero_diag))).smallest();
        return zero_diag.shifted(std::max(target_.delta(), lift));
    }

    [[nodiscard]] double operator()(const Point& s) const {
        return frobenius_norm_squared(dense_target_ - to_dense(feasible(s)));
    }

    [[nodiscard]] bool is_feasible(const BandedToeplitz& x) const {
        const Matrix dense = to_dense(x);
        const double lo = eigenvalues_symmetric(DenseSymmetric(dense)).smallest();
        return lo >= -eigen_threshold(frobenius_norm(dense), scale_);
    }

private:
    const BandedToeplitz& target_;
    Matrix dense_target_;
    double scale_;
};

struct Simplex {
    std::vector<Point> vertices;
    std::vector<double> values;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
template <typename F>
Point nelder_mead(const F& f, Point start, double step, double& best_value) {
    const std::size_t dim = start.size();
    Simplex sx;
    sx.vertices.push_back(start);
    for (std::size_t i = 0; i < dim; ++i) {
        Point v = start;
        v[i] += step;
        sx.vertices.push_back(std::move(v));
    }
    for (const auto& v : sx.vertices) sx.values.push_back(f(v));

    auto order = [&] {
        std::vector<std::size_t> idx(sx.vertices.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sx.values[a] < sx.values[b]; });
        Simplex sorted;
        for (std::size_t i : idx) {
            sorted.vertices.push_back(sx.vertices[i]);
            sorted.values.push_back(sx.values[i]);
        }
        sx = std::move(sorted);
    };
    auto blend = [&](const Point& a, const Point& b, double w) {
        Point p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = a[i] + w * (b[i] - a[i]);
        return p;
    };

    for (int iter = 0; iter < 4000; ++iter) {
        order();
        double diameter = 0.0;
        for (std::size_t v = 1; v <= dim; ++v)
            for (std::size_t i = 0; i < dim; ++i)
                diameter = std::max(diameter, std::abs(sx.vertices[v][i] - sx.vertices[0][i]));
        if (diameter < 1e-14 * std::max(1.0, std::abs(sx.vertices[0][0]))) break;

        Point centroid(dim, 0.0);
        for (std::size_t v = 0; v < dim; ++v)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += sx.vertices[v][i] / static_cast<double>(dim);

        const Point& worst = sx.vertices[dim];
        Point reflected = blend(centroid, worst, -1.0);
        const double fr = f(reflected);
        if (fr < sx.values[0]) {
            Point expanded = blend(centroid, worst, -2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                sx.vertices[dim] = std::move(expanded);
                sx.values[dim] = fe;
            } else {
                sx.vertices[dim] = std::move(reflected);
                sx.values[dim] = fr;
            }
            continue;
        }
        if (fr < sx.values[dim - 1]) {
            sx.vertices[dim] = std::move(reflected);
            sx.values[dim] = fr;
            continue;
        }
        const bool outside = fr < sx.values[dim];
        Point contracted = outside ? blend(centroid, reflected, 0.5) : blend(centroid, worst, 0.5);
        const double fc = f(contracted);
        if (fc < (outside ? fr : sx.values[dim])) {
            sx.vertices[dim] = std::move(contracted);
            sx.values[dim] = fc;
            continue;
        }
        for (std::size_t v = 1; v <= dim; ++v) {
            sx.vertices[v] = blend(sx.vertices[0], sx.vertices[v], 0.5);
            sx.values[v] = f(sx.vertices[v]);
        }
    }
    order();
    best_value = sx.values[0];
    return sx.vertices[0];
}

}  // namespace

OracleResult oracle_structured_distance(const BandedToeplitz& t, std::size_t resolution, double eig_tol_scale) {
    const std::size_t n = t.order();
    const std::size_t k = t.half_bandwidth();
    if (n > kOracleMaxOrder || k > kOracleMaxBandwidth)
        throw std::invalid_argument("oracle limited to n <= " + std::to_string(kOracleMaxOrder) + " and k <= " +
                                    std::to_string(kOracleMaxBandwidth));
    if (resolution < 2) throw std::invalid_argument("oracle resolution must be at least 2");

    const StructuredObjective objective(t, eig_tol_scale);
    if (k == 0) {
        const BandedToeplitz best = objective.feasible({});
        return {std::sqrt(objective({})), best};
    }

    double radius = std::max({1.0, std::abs(t.delta())});
    for (std::size_t h = 1; h <= k; ++h) radius = std::max({radius, std::abs(t.sigma(h)), std::abs(t.tau(h))});
    radius *= 2.0;

    // Coordinate grid over [-radius, radius]^k.
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= resolution;
    const double cell = 2.0 * radius / static_cast<double>(resolution - 1);
    auto grid_point = [&](std::size_t index) {
        Point p(k);
        for (std::size_t i = 0; i < k; ++i) {
            p[i] = -radius + cell * static_cast<double>(index % resolution);
            index /= resolution;
        }
        return p;
    };
    std::vector<double> values(count);
    kernels::parallel_map(count, values, [&](std::size_t i) { return objective(grid_point(i)); });
    const auto winner = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());

    Point best = grid_point(winner);
    double best_value = values[winner];
    double step = cell;
    // Restart from the incumbent with a shrinking simplex until a restart
    // stops paying off.
    for (int restart = 0; restart < 12; ++restart) {
        double value = best_value;
        Point candidate = nelder_mead(objective, best, step, value);
        const double gain = best_value - value;
        if (value < best_value) {
            best = std::move(candidate);
            best_value = value;
        }
        if (restart > 1 && gain <= 1e-15 * std::max(1.0, best_value)) break;
        step = std::max(step * 0.25, 1e-9 * radius);
    }

    BandedToeplitz x = objective.feasible(best);
    if (!objective.is_feasible(x)) {
        // Roundoff can leave the lifted matrix marginally indefinite.
        const Matrix dense = to_dense(x);
        x = x.shifted(eigen_threshold(frobenius_norm(dense), eig_tol_scale));
    }
    return {std::sqrt(frobenius_norm_squared(to_dense(t) - to_dense(x))), x};
}

}  // namespace tnear
