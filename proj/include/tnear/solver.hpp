#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tnear/banded_toeplitz.hpp"
#include "tnear/matrix.hpp"

namespace tnear {

/// Type-erased square linear operator x -> A x.
class LinearOperator {
public:
    using Apply = std::function<void(std::span<const double>, std::span<double>)>;

    LinearOperator(std::size_t n, Apply apply) : n_(n), apply_(std::move(apply)) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    void apply(std::span<const double> x, std::span<double> y) const { apply_(x, y); }
    [[nodiscard]] std::vector<double> operator()(std::span<const double> x) const;

private:
    std::size_t n_;
    Apply apply_;
};

/// Operators backed by the parallel matvec kernels. The returned operator
/// keeps its own copy of the matrix.
[[nodiscard]] LinearOperator make_operator(BandedToeplitz t);
[[nodiscard]] LinearOperator make_operator(Matrix a);

/// (1/h^2)(T - e_1 e_1^T - e_n e_n^T) with T = (n; 1; -1, 2, -1): the
/// finite-difference Laplacian with Neumann boundary conditions. Stored as the
/// Toeplitz core plus the two corner corrections. Singular; the all-ones
/// vector spans its null space.
class NeumannOperator {
public:
    /// h defaults to 1/(n+1). Requires n >= 2.
    explicit NeumannOperator(std::size_t n, std::optional<double> h = std::nullopt);

    [[nodiscard]] std::size_t size() const noexcept { return core_.order(); }
    [[nodiscard]] double spacing() const noexcept { return h_; }
    [[nodiscard]] const BandedToeplitz& core() const noexcept { return core_; }

    void apply(std::span<const double> x, std::span<double> y) const;
    [[nodiscard]] Matrix to_dense() const;
    [[nodiscard]] LinearOperator as_operator() const;

private:
    BandedToeplitz core_;
    double h_;
};

[[nodiscard]] NeumannOperator neumann_matrix(std::size_t n, std::optional<double> h = std::nullopt);

/// Banded Cholesky factor L L^T of a symmetric banded Toeplitz matrix, kept in
/// (k+1) x n band storage. O(n k^2) to factor, O(n k) per solve.
class BandedCholesky {
public:
    /// Throws std::invalid_argument for nonsymmetric input and
    /// NotPositiveDefinite on the first non-positive pivot.
    explicit BandedCholesky(const BandedToeplitz& t);

    [[nodiscard]] const BandedToeplitz& base() const noexcept { return base_; }
    [[nodiscard]] std::size_t size() const noexcept { return base_.order(); }

    /// L(i, j) for 0 <= i - j <= k, zero elsewhere.
    [[nodiscard]] double lower(std::size_t i, std::size_t j) const noexcept;
    [[nodiscard]] Matrix lower_dense() const;

    /// Overwrites b with (L L^T)^{-1} b via two triangular band solves.
    void solve_in_place(std::span<double> b) const;
    [[nodiscard]] std::vector<double> solve(std::span<const double> b) const;

private:
    BandedToeplitz base_;
    std::size_t width_;          // k + 1
    std::vector<double> band_;   // band_[i * width_ + d] = L(i, i - d)
};

/// The SPD preconditioner of a symmetric banded Toeplitz matrix.
using BandedSPD = BandedCholesky;

[[nodiscard]] inline BandedCholesky cholesky_banded(const BandedToeplitz& t) { return BandedCholesky(t); }

enum class NullSpace { None, Constant };

struct CgOptions {
    double tol = 1e-8;                            ///< relative residual ||b - A x|| / ||b||
    std::optional<std::size_t> max_iterations;    ///< defaults to 10 n
    /// Constant: A is singular with the constant vector as null space. b must
    /// satisfy sum(b) = 0; iterations stay mean-free and the returned
    /// solution has sum(x) = 0.
    NullSpace null_space = NullSpace::None;
    /// Called after every iteration with the iteration count and iterate.
    std::function<void(std::size_t, std::span<const double>)> monitor;
};

struct SolveReport {
    std::size_t iterations = 0;
    std::vector<double> residual_history;  ///< recurrence residuals, entry 0 is the initial one
    bool converged = false;
    std::vector<double> solution;
};

/// Conjugate gradients from x0 = 0. Throws IndefiniteOperator if p^T A p <= 0.
[[nodiscard]] SolveReport cg(const LinearOperator& a, std::span<const double> b, const CgOptions& options = {});

/// Preconditioned CG with M = L L^T applied through the banded factor.
[[nodiscard]] SolveReport pcg(const LinearOperator& a, const BandedCholesky& m, std::span<const double> b,
                              const CgOptions& options = {});

}  // namespace tnear
