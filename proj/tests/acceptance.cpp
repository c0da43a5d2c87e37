// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "support.hpp"
#include "tnear/bounds.hpp"
#include "tnear/nearness.hpp"
#include "tnear/reproduce.hpp"
#include "tnear/solver.hpp"
#include "tnear/spectral.hpp"

using namespace tnear;
using namespace tnear::testing;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) detail = what;
        ok = ok && condition;
    }
};

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

Check spd_to_toeplitz_spectra() {
    Check c;
    const auto ex = spd_to_toeplitz_example();
    const double a[] = {199.0006, 1.3532, 0.6461};
    const double t[] = {137.357, 67.0000, -3.3571};
    for (int i = 0; i < 3; ++i) {
        c.expect(std::abs(ex.a_spectrum.values[i] - a[i]) <= 1e-3, "eig(A)[" + std::to_string(i) + "]");
        c.expect(std::abs(ex.toeplitz_spectrum.values[i] - t[i]) <= 1e-3, "eig(T)[" + std::to_string(i) + "]");
    }
    return c;
}

Check pentadiagonal_crossover() {
    Check c;
    const auto rows = pentadiagonal_sweep();
    c.expect(rows.size() == 201, "row count");
    for (const auto& r : rows) {
        // Compare on the grid index so representation error in p cannot flip the side.
        const bool before = std::lround(r.p * 1e4) <= 492;
        c.expect(r.chosen == (before ? Candidate::Shifted : Candidate::ZeroMatrix),
                 "wrong candidate at p=" + std::to_string(r.p));
    }
    return c;
}

Check downshift_identities() {
    Check c;
    const std::size_t orders[] = {5, 9, 15, 25, 99};
    for (const auto& r : downshift_table(orders)) {
        const double n = static_cast<double>(r.n);
        const double cs = std::cos(std::numbers::pi / (n + 1));
        const std::string at = " at n=" + std::to_string(r.n);
        c.expect(close_rel(r.delta_f_plus_sq, 0.75 * (n - 1), 1e-10), "unstructured distance" + at);
        c.expect(close_rel(r.normality_sq, (n - 1) / 2, 1e-10), "normality distance" + at);
        c.expect(close_rel(r.tilde_delta_sq, n * cs * cs + (n - 1) / 2, 1e-10), "shifted distance" + at);
        c.expect(close_rel(r.spectral_gap_sq, (n - 1) / 4, 1e-10), "spectral distance" + at);
    }
    return c;
}

Check tridiagonal_point_check() {
    Check c;
    const auto r = bounds_tridiagonal(tridiagonal_family(0.03), LowerBound::Skip);
    c.expect(std::abs(r.d1 - 0.0700) <= 5e-5, "d1");
    c.expect(std::abs(*r.d2_alt - 0.0735) <= 5e-5, "general d2");
    c.expect(std::abs(r.d2 - 0.0695) <= 5e-5, "tridiagonal d2");
    const auto rows = tridiagonal_sweep();
    c.expect(rows.size() == 301, "row count");
    for (const auto& row : rows)
        c.expect(*row.d2_alt <= row.d2, "tridiagonal d2 above general d2 at p=" + std::to_string(row.p));
    return c;
}

Check bound_sandwich() {
    Check c;
    Rng rng(20240501);
    for (int trial = 0; trial < 200; ++trial) {
        const auto t = random_toeplitz(rng, 1, kOracleMaxOrder, kOracleMaxBandwidth);
        const auto r = bounds_general(t);
        const double d = oracle_structured_distance(t).distance;
        const std::string at = " in trial " + std::to_string(trial);
        c.expect(*r.lower_squared - 1e-9 <= d * d, "oracle below lower bound" + at);
        c.expect(d * d <= r.upper_squared + 1e-9, "oracle above upper bound" + at);
    }
    return c;
}

Check structural_identities() {
    Check c;
    Rng rng(20240502);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_toeplitz(rng, 1, 100, 5);
        const double total = frobenius_norm_squared(to_dense(t));
        const double split = frobenius_norm_squared(symmetric_part(t)) + frobenius_norm_squared(skew_part(t));
        c.expect(close_rel(split, total, 1e-12), "norm split");

        // Spectral formula against the explicit projection.
        const double spectral = distance_spsd_banded_squared(t);
        const auto projected = distance_spsd_dense(to_dense(t));
        const double direct = frobenius_norm_squared(to_dense(t) - projected.nearest.matrix());
        c.expect(close_rel(spectral, direct, 1e-10), "spectral vs explicit SPSD distance");

        const auto shift = shift_projection_general(t);
        const double gap = std::sqrt(frobenius_norm_squared(difference(symmetric_part(t), shift.shifted)));
        c.expect(std::abs(gap - std::sqrt(static_cast<double>(t.order())) * shift.gamma) <= 1e-12 * std::max(1.0, gap),
                 "shift distance");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = uniform_size(rng, 2, 60);
        const double s = uniform(rng), d = uniform(rng);
        const double u = std::abs(uniform(rng)) * (s < 0 ? -1.0 : 1.0);
        const BandedToeplitz t(n, 1, {s}, d, {u});
        const auto closed = tridiag_toeplitz_eigenvalues(t);
        // Diagonal similarity to the symmetric matrix with off-diagonal sqrt(s u).
        const auto jacobi = eigenvalues_symmetric(DenseSymmetric(to_dense(BandedToeplitz::symmetric(n, {std::sqrt(s * u)}, d))));
        for (std::size_t i = 0; i < n; ++i)
            c.expect(std::abs(closed.values[i] - jacobi.values[i]) <= 1e-10, "closed-form tridiagonal spectrum");

        const auto zero_diag = eigenvalues_symmetric(DenseSymmetric(to_dense(BandedToeplitz::symmetric(n, {s}, 0.0))));
        for (std::size_t i = 0; i < n; ++i)
            c.expect(std::abs(zero_diag.values[i] + zero_diag.values[n - 1 - i]) <= 1e-12, "spectrum symmetry");
    }
    return c;
}

std::vector<double> consistent_rhs(Rng& rng, std::size_t n) {
    auto b = random_vector(rng, n);
    const double mean = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
    for (double& v : b) v -= mean;
    return b;
}

Check solver_preconditioning() {
    Check c;
    Rng rng(20240503);
    {
        const auto op = neumann_matrix(1000);
        const auto b = consistent_rhs(rng, 1000);
        CgOptions options;
        options.null_space = NullSpace::Constant;
        options.tol = 1e-8;
        const auto plain = cg(op.as_operator(), b, options);
        const auto pre = pcg(op.as_operator(), BandedCholesky(op.core()), b, options);
        c.expect(plain.converged && pre.converged, "Neumann solves did not converge");
        c.expect(pre.residual_history.back() <= 1e-8, "Neumann PCG residual");
        c.expect(pre.iterations < plain.iterations,
                 "Neumann PCG " + std::to_string(pre.iterations) + " vs CG " + std::to_string(plain.iterations));
    }
    {
        const std::size_t n = 300;
        const auto shift = shift_projection_general(BandedToeplitz(n, 2, {-0.6, 0.3}, 1.0, {-0.4, 0.1}));
        const Matrix g = random_matrix(rng, n, 5);
        const Matrix a = to_dense(shift.shifted) + 1e-3 * multiply(g, g.transposed());
        const auto b = random_vector(rng, n);
        CgOptions options;
        options.tol = 1e-8;
        const auto plain = cg(make_operator(a), b, options);
        const auto pre = pcg(make_operator(a), BandedCholesky(shift.shifted), b, options);
        c.expect(plain.converged && pre.converged, "perturbed solves did not converge");
        c.expect(pre.iterations < plain.iterations,
                 "perturbed PCG " + std::to_string(pre.iterations) + " vs CG " + std::to_string(plain.iterations));
    }
    return c;
}

Check cosine_inequality() {
    Check c;
    for (int n = 1; n <= 10000; ++n) {
        const double lhs = std::sqrt((n - 1) / 2.0);
        const double rhs = std::sqrt(static_cast<double>(n)) * std::cos(std::numbers::pi / (n + 1));
        c.expect(lhs <= rhs + 1e-12, "inequality fails at n=" + std::to_string(n));
        const bool equal = std::abs(lhs - rhs) <= 1e-12;
        c.expect(equal == (n <= 2), "equality pattern at n=" + std::to_string(n));
    }
    return c;
}

struct Criterion {
    const char* name;
    double time_limit_s;
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"spd matrix with indefinite Toeplitz average: spectra", 1.0, spd_to_toeplitz_spectra},
        {"pentadiagonal sweep: candidate crossover", 1.0, pentadiagonal_crossover},
        {"downshift identities", 60.0, downshift_identities},
        {"tridiagonal point check and sweep ordering", 60.0, tridiagonal_point_check},
        {"bound sandwich against the oracle", 300.0, bound_sandwich},
        {"structural identities", 60.0, structural_identities},
        {"preconditioned solver", 30.0, solver_preconditioning},
        {"cosine inequality", 60.0, cosine_inequality},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i].run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.ok && elapsed > criteria[i].time_limit_s) {
            c.ok = false;
            c.detail = "runtime limit exceeded";
        }
        std::printf("%s  %zu  %-52s %8.3f s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, elapsed,
                    c.ok ? "" : "  ", c.detail.c_str());
        failures += c.ok ? 0 : 1;
    }
    return failures;
}
