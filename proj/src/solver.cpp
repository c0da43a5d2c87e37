#include "tnear/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tnear/errors.hpp"
#include "tnear/kernels.hpp"

namespace tnear {

std::vector<double> LinearOperator::operator()(std::span<const double> x) const {
    std::vector<double> y(n_);
    apply(x, y);
    return y;
}

LinearOperator make_operator(BandedToeplitz t) {
    const std::size_t n = t.order();
    return {n, [t = std::move(t)](std::span<const double> x, std::span<double> y) { kernels::toeplitz_matvec(t, x, y); }};
}

LinearOperator make_operator(Matrix a) {
    if (!a.is_square()) throw std::invalid_argument("make_operator: matrix must be square");
    const std::size_t n = a.rows();
    return {n, [a = std::move(a)](std::span<const double> x, std::span<double> y) { kernels::dense_matvec(a, x, y); }};
}

// ---------------------------------------------------------------------------

NeumannOperator::NeumannOperator(std::size_t n, std::optional<double> h)
    : core_(n < 2 ? throw std::invalid_argument("Neumann matrix needs n >= 2")
                  : BandedToeplitz(n, 1, {-1.0}, 2.0, {-1.0})),
      h_(h.value_or(1.0 / static_cast<double>(n + 1))) {
    if (!(h_ > 0.0)) throw std::invalid_argument("Neumann grid spacing must be positive");
}

void NeumannOperator::apply(std::span<const double> x, std::span<double> y) const {
    kernels::toeplitz_matvec(core_, x, y);
    const std::size_t n = size();
    y[0] -= x[0];
    y[n - 1] -= x[n - 1];
    const double scale = 1.0 / (h_ * h_);
    for (double& v : y) v *= scale;
}

Matrix NeumannOperator::to_dense() const {
    Matrix m = tnear::to_dense(core_);
    const std::size_t n = size();
    m(0, 0) -= 1.0;
    m(n - 1, n - 1) -= 1.0;
    return (1.0 / (h_ * h_)) * m;
}

LinearOperator NeumannOperator::as_operator() const {
    return {size(), [op = *this](std::span<const double> x, std::span<double> y) { op.apply(x, y); }};
}

NeumannOperator neumann_matrix(std::size_t n, std::optional<double> h) { return NeumannOperator(n, h); }

// ---------------------------------------------------------------------------

BandedCholesky::BandedCholesky(const BandedToeplitz& t)
    : base_(t), width_(t.half_bandwidth() + 1), band_(t.order() * (t.half_bandwidth() + 1), 0.0) {
    if (!t.is_symmetric()) throw std::invalid_argument("banded Cholesky requires a symmetric matrix (sigma == tau)");
    const std::size_t n = t.order();
    const std::size_t k = t.half_bandwidth();
    auto at = [&](std::size_t i, std::size_t j) -> double& { return band_[i * width_ + (i - j)]; };

    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t first = j > k ? j - k : 0;
        double pivot = t.delta();
        for (std::size_t l = first; l < j; ++l) pivot -= at(j, l) * at(j, l);
        if (!(pivot > 0.0)) throw NotPositiveDefinite(j + 1);
        const double ljj = std::sqrt(pivot);
        at(j, j) = ljj;
        for (std::size_t i = j + 1; i <= std::min(n - 1, j + k); ++i) {
            double v = t.sigma(i - j);
            const std::size_t start = i > k ? i - k : 0;
            for (std::size_t l = start; l < j; ++l) v -= at(i, l) * at(j, l);
            at(i, j) = v / ljj;
        }
    }
}

double BandedCholesky::lower(std::size_t i, std::size_t j) const noexcept {
    if (j > i || i - j >= width_) return 0.0;
    return band_[i * width_ + (i - j)];
}

Matrix BandedCholesky::lower_dense() const {
    const std::size_t n = size();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d = 0; d < width_ && d <= i; ++d) l(i, i - d) = band_[i * width_ + d];
    return l;
}

void BandedCholesky::solve_in_place(std::span<double> b) const {
    const std::size_t n = size();
    if (b.size() != n) throw std::invalid_argument("BandedCholesky::solve: size mismatch");
    const std::size_t k = width_ - 1;
    // L y = b
    for (std::size_t i = 0; i < n; ++i) {
        double v = b[i];
        for (std::size_t d = 1; d <= std::min(k, i); ++d) v -= band_[i * width_ + d] * b[i - d];
        b[i] = v / band_[i * width_];
    }
    // L^T x = y
    for (std::size_t i = n; i-- > 0;) {
        double v = b[i];
        for (std::size_t d = 1; d <= k && i + d < n; ++d) v -= band_[(i + d) * width_ + d] * b[i + d];
        b[i] = v / band_[i * width_];
    }
}

std::vector<double> BandedCholesky::solve(std::span<const double> b) const {
    std::vector<double> x(b.begin(), b.end());
    solve_in_place(x);
    return x;
}

// ---------------------------------------------------------------------------

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void remove_mean(std::span<double> v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

// Shared recurrence; `precondition` maps the residual r to z in place.
template <typename Precondition>
SolveReport conjugate_gradients(const LinearOperator& a, std::span<const double> b, const CgOptions& options,
                                Precondition precondition) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("CG: right-hand side length does not match the operator");
    const bool mean_free = options.null_space == NullSpace::Constant;
    if (mean_free) {
        const double total = std::accumulate(b.begin(), b.end(), 0.0);
        double magnitude = 0.0;
        for (double v : b) magnitude += std::abs(v);
        if (std::abs(total) > 1e-10 * std::max(magnitude, 1e-300))
            throw std::invalid_argument("inconsistent right-hand side: sum(b) must vanish for a Neumann system");
    }

    SolveReport report;
    report.solution.assign(n, 0.0);
    const double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) {
        report.residual_history.push_back(0.0);
        report.converged = true;
        return report;
    }
    const std::size_t max_it = options.max_iterations.value_or(10 * n);

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> z = r;
    precondition(z);
    if (mean_free) remove_mean(z);
    std::vector<double> p = z;
    std::vector<double> ap(n);
    double rz = dot(r, z);
    report.residual_history.push_back(1.0);
    auto& x = report.solution;

    while (report.iterations < max_it) {
        a.apply(p, ap);
        const double pap = dot(p, ap);
        if (!(pap > 0.0))
            throw IndefiniteOperator("CG breakdown at iteration " + std::to_string(report.iterations + 1) +
                                     ": p^T A p = " + std::to_string(pap));
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        ++report.iterations;
        const double rel = std::sqrt(dot(r, r)) / bnorm;
        report.residual_history.push_back(rel);
        if (options.monitor) options.monitor(report.iterations, x);
        if (rel <= options.tol) {
            report.converged = true;
            break;
        }
        z = r;
        precondition(z);
        if (mean_free) remove_mean(z);
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    if (mean_free) remove_mean(x);
    return report;
}

}  // namespace

SolveReport cg(const LinearOperator& a, std::span<const double> b, const CgOptions& options) {
    return conjugate_gradients(a, b, options, [](std::vector<double>&) {});
}

SolveReport pcg(const LinearOperator& a, const BandedCholesky& m, std::span<const double> b,
                const CgOptions& options) {
    if (m.size() != a.size()) throw std::invalid_argument("PCG: preconditioner order does not match the operator");
    return conjugate_gradients(a, b, options, [&m](std::vector<double>& z) { m.solve_in_place(z); });
}

}  // namespace tnear
