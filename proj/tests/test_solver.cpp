#include "doctest.h"
#include "support.hpp"

#include <cmath>
#include <numeric>

#include "tnear/errors.hpp"
#include "tnear/nearness.hpp"
#include "tnear/solver.hpp"

using namespace tnear;
using namespace tnear::testing;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Diagonally dominant, hence SPD, symmetric banded Toeplitz matrix.
BandedToeplitz random_spd_toeplitz(Rng& rng, std::size_t n, std::size_t k) {
    auto sigma = random_vector(rng, k);
    double radius = 0.0;
    for (double s : sigma) radius += 2.0 * std::abs(s);
    return BandedToeplitz::symmetric(n, std::move(sigma), radius + uniform(rng, 0.05, 1.0));
}

std::vector<double> consistent_rhs(Rng& rng, std::size_t n) {
    auto b = random_vector(rng, n);
    const double mean = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
    for (double& v : b) v -= mean;
    return b;
}

}  // namespace

TEST_CASE("banded Cholesky") {
    SUBCASE("second-difference matrix") {
        const BandedToeplitz t(40, 1, {-1}, 2, {-1});
        const BandedCholesky f(t);
        const Matrix l = f.lower_dense();
        CHECK(frobenius_norm(multiply(l, l.transposed()) - to_dense(t)) <= 1e-12 * std::sqrt(frobenius_norm_squared(t)));
    }
    SUBCASE("scaled identity") {
        const BandedCholesky f(BandedToeplitz::scaled_identity(6, 4.0, 2));
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(f.lower(i, i) == 2.0);
            if (i > 0) CHECK(f.lower(i, i - 1) == 0.0);
        }
    }
    SUBCASE("indefinite input fails with the leading minor") {
        // Leading 2x2 block [[1, 1], [1, 1]] is singular; the whole matrix has
        // lambda_min = 1 + 2 cos(8 pi / 9) < 0.
        try {
            (void)BandedCholesky(BandedToeplitz(8, 1, {1}, 1, {1}));
            FAIL("expected NotPositiveDefinite");
        } catch (const NotPositiveDefinite& e) {
            CHECK(e.minor() == 2);
            CHECK(std::string(e.what()) == "not positive definite at leading minor 2");
        }
        CHECK_THROWS_AS((void)BandedCholesky(BandedToeplitz::scaled_identity(3, -1.0)), NotPositiveDefinite);
    }
    SUBCASE("nonsymmetric input is rejected") {
        CHECK_THROWS_AS((void)BandedCholesky(BandedToeplitz(8, 1, {1}, 4, {0.5})), std::invalid_argument);
    }
    SUBCASE("property: reconstruction and solves on random SPD instances") {
        Rng rng(71);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = uniform_size(rng, 1, 500);
            const std::size_t k = uniform_size(rng, 0, std::min<std::size_t>(5, n / 2));
            const BandedToeplitz t = random_spd_toeplitz(rng, n, k);
            const BandedCholesky f(t);
            const Matrix l = f.lower_dense();
            const double norm = std::sqrt(frobenius_norm_squared(t));
            CHECK(frobenius_norm(multiply(l, l.transposed()) - to_dense(t)) <= 1e-10 * norm);

            const auto x = random_vector(rng, n);
            const auto back = f.solve(matvec(t, x));
            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(back[i] - x[i]));
            CHECK(err <= 1e-10);
        }
    }
}

TEST_CASE("Neumann operator") {
    SUBCASE("constant vectors are annihilated exactly") {
        for (std::size_t n : {2u, 3u, 100u, 1000u}) {
            const auto op = neumann_matrix(n);
            std::vector<double> ones(n, 1.0), y(n, -1.0);
            op.apply(ones, y);
            for (double v : y) CHECK(v == 0.0);
        }
    }
    SUBCASE("n = 3, h = 1") {
        const Matrix m = neumann_matrix(3, 1.0).to_dense();
        const double expected[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == expected[i][j]);
    }
    SUBCASE("default spacing and matvec agree with the dense form") {
        const auto op = neumann_matrix(20);
        CHECK(op.spacing() == doctest::Approx(1.0 / 21));
        Rng rng(72);
        const auto x = random_vector(rng, 20);
        const auto y = op.as_operator()(x);
        const auto expected = dense_product(op.to_dense(), x);
        for (std::size_t i = 0; i < 20; ++i) CHECK(y[i] == doctest::Approx(expected[i]).epsilon(1e-13));
    }
    SUBCASE("property: symmetric as an operator") {
        Rng rng(73);
        const auto op = neumann_matrix(257).as_operator();
        for (int trial = 0; trial < 50; ++trial) {
            const auto x = random_vector(rng, 257);
            const auto y = random_vector(rng, 257);
            const double lhs = dot(op(x), y);
            const double rhs = dot(x, op(y));
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
    SUBCASE("n < 2 is rejected") { CHECK_THROWS_AS((void)neumann_matrix(1), std::invalid_argument); }
}

TEST_CASE("conjugate gradients") {
    SUBCASE("identity converges in one iteration") {
        const auto op = make_operator(BandedToeplitz::scaled_identity(10, 1.0));
        const std::vector<double> b{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        const auto r = cg(op, b);
        CHECK(r.converged);
        CHECK(r.iterations == 1);
        CHECK(r.solution == b);
    }
    SUBCASE("zero right-hand side") {
        const auto r = cg(make_operator(BandedToeplitz::scaled_identity(4, 2.0)), std::vector<double>(4, 0.0));
        CHECK(r.converged);
        CHECK(r.iterations == 0);
    }
    SUBCASE("manufactured solution on a dense SPD matrix") {
        Rng rng(74);
        const Matrix a = random_spd(rng, 20, 1.0);
        const auto x_exact = random_vector(rng, 20);
        const auto b = dense_product(a, x_exact);

        // A-norm of the error must not grow.
        std::vector<double> a_norm_errors;
        CgOptions options;
        options.tol = 1e-10;
        options.monitor = [&](std::size_t, std::span<const double> x) {
            std::vector<double> e(20);
            for (std::size_t i = 0; i < 20; ++i) e[i] = x[i] - x_exact[i];
            a_norm_errors.push_back(std::sqrt(dot(e, dense_product(a, e))));
        };
        const auto r = cg(make_operator(a), b, options);
        CHECK(r.converged);
        double err = 0.0;
        for (std::size_t i = 0; i < 20; ++i) err += std::pow(r.solution[i] - x_exact[i], 2);
        CHECK(std::sqrt(err) / norm2(x_exact) <= 1e-8);
        for (std::size_t i = 1; i < a_norm_errors.size(); ++i)
            CHECK(a_norm_errors[i] <= a_norm_errors[i - 1] + 1e-12);

        // Recurrence residual tracks the true residual.
        const auto ax = dense_product(a, r.solution);
        std::vector<double> true_r(20);
        for (std::size_t i = 0; i < 20; ++i) true_r[i] = b[i] - ax[i];
        const double true_rel = norm2(true_r) / norm2(b);
        CHECK(std::abs(true_rel - r.residual_history.back()) <= 1e-8);
        CHECK(r.residual_history.size() == r.iterations + 1);
        CHECK(r.residual_history.front() == 1.0);
    }
    SUBCASE("Neumann n = 100 with a consistent right-hand side") {
        Rng rng(75);
        const auto op = neumann_matrix(100);
        const auto b = consistent_rhs(rng, 100);
        CgOptions options;
        options.null_space = NullSpace::Constant;
        const auto r = cg(op.as_operator(), b, options);
        CHECK(r.converged);
        CHECK(r.residual_history.back() <= 1e-8);
        CHECK(std::abs(std::accumulate(r.solution.begin(), r.solution.end(), 0.0)) <= 1e-8 * norm2(r.solution));
        const auto ax = op.as_operator()(r.solution);
        std::vector<double> res(100);
        for (std::size_t i = 0; i < 100; ++i) res[i] = b[i] - ax[i];
        CHECK(norm2(res) / norm2(b) <= 1e-7);
    }
    SUBCASE("inconsistent Neumann right-hand side is rejected") {
        CgOptions options;
        options.null_space = NullSpace::Constant;
        CHECK_THROWS_AS((void)cg(neumann_matrix(10).as_operator(), std::vector<double>(10, 1.0), options),
                        std::invalid_argument);
    }
    SUBCASE("indefinite operator breaks down") {
        Matrix a(2, 2);
        a(0, 0) = 1.0;
        a(1, 1) = -1.0;
        CHECK_THROWS_AS((void)cg(make_operator(a), std::vector<double>{0.0, 1.0}), IndefiniteOperator);
    }
    SUBCASE("iteration cap reports non-convergence") {
        CgOptions options;
        options.max_iterations = 2;
        const auto r = cg(make_operator(BandedToeplitz(50, 1, {-1}, 2, {-1})), std::vector<double>(50, 1.0), options);
        CHECK_FALSE(r.converged);
        CHECK(r.iterations == 2);
    }
}

TEST_CASE("preconditioned conjugate gradients") {
    SUBCASE("exact preconditioner converges in one iteration") {
        Rng rng(76);
        for (int trial = 0; trial < 10; ++trial) {
            const BandedToeplitz t = random_spd_toeplitz(rng, uniform_size(rng, 4, 300), 3);
            const auto b = random_vector(rng, t.order());
            CgOptions options;
            options.tol = 1e-12;
            const auto r = pcg(make_operator(t), BandedCholesky(t), b, options);
            CHECK(r.converged);
            CHECK(r.iterations == 1);
        }
    }
    SUBCASE("second-difference preconditioner on the Neumann system") {
        Rng rng(77);
        const std::size_t n = 1000;
        const auto op = neumann_matrix(n);
        const auto b = consistent_rhs(rng, n);
        CgOptions options;
        options.null_space = NullSpace::Constant;
        const auto plain = cg(op.as_operator(), b, options);
        const auto pre = pcg(op.as_operator(), BandedCholesky(op.core()), b, options);
        CHECK(plain.converged);
        CHECK(pre.converged);
        CHECK(pre.iterations < plain.iterations);
        MESSAGE("Neumann n=1000: CG " << plain.iterations << " iterations, PCG " << pre.iterations);
    }
    SUBCASE("shift projection as a preconditioner for a perturbed Toeplitz matrix") {
        Rng rng(78);
        const std::size_t n = 300;
        const BandedToeplitz t(n, 2, {-0.6, 0.3}, 1.0, {-0.4, 0.1});
        const auto shift = shift_projection_general(t);
        Matrix g = random_matrix(rng, n, 5);
        Matrix a = to_dense(shift.shifted) + 1e-3 * multiply(g, g.transposed());
        const auto b = random_vector(rng, n);
        const auto plain = cg(make_operator(a), b);
        const auto pre = pcg(make_operator(a), BandedCholesky(shift.shifted), b);
        CHECK(plain.converged);
        CHECK(pre.converged);
        CHECK(pre.iterations < plain.iterations);
    }
    SUBCASE("order mismatch") {
        CHECK_THROWS_AS((void)pcg(make_operator(BandedToeplitz::scaled_identity(4, 1.0)),
                                  BandedCholesky(BandedToeplitz::scaled_identity(5, 1.0)), std::vector<double>(4, 1.0)),
                        std::invalid_argument);
    }
}
