#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tnear/reproduce.hpp"

using namespace tnear;

TEST_CASE("SweepRange") {
    const auto r = SweepRange::parse("0.04:0.0001:0.06");
    CHECK(r.count() == 201);
    CHECK(r.at(200) == doctest::Approx(0.06));
    CHECK(kPentadiagonalSweep.count() == 201);
    CHECK(kTridiagonalSweep.count() == 301);
    CHECK(SweepRange::parse("1:1:1").count() == 1);
    CHECK(SweepRange::parse("0:0.3:1").count() == 4);
    CHECK_THROWS_AS((void)SweepRange::parse("0:0:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)SweepRange::parse("0:-1:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)SweepRange::parse("2:1:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)SweepRange::parse("0:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)SweepRange::parse("0:a:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)SweepRange::parse("0:1:1x"), std::invalid_argument);
}

TEST_CASE("SPD matrix with an indefinite nearest Toeplitz matrix") {
    const auto ex = spd_to_toeplitz_example();
    const double a_expected[] = {199.0006, 1.3532, 0.6461};
    const double t_expected[] = {137.3571, 67.0, -3.3571};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(ex.a_spectrum.values[i] - a_expected[i]) <= 1e-4);
        CHECK(std::abs(ex.toeplitz_spectrum.values[i] - t_expected[i]) <= 1e-4);
    }
    CHECK(ex.toeplitz == BandedToeplitz::symmetric(3, {49.75}, 67.0));
    // Only the negative eigenvalue contributes.
    CHECK(ex.toeplitz_distance_squared == doctest::Approx(std::pow(ex.toeplitz_spectrum.smallest(), 2)).epsilon(1e-12));
    CHECK(ex.toeplitz_distance_squared == doctest::Approx(11.2703).epsilon(1e-5));
}

TEST_CASE("pentadiagonal sweep") {
    const auto rows = pentadiagonal_sweep();
    REQUIRE(rows.size() == 201);
    for (const auto& row : rows) {
        CHECK(!row.d2_alt);
        CHECK((row.chosen == Candidate::Shifted) == (row.d2 < row.d1));
        CHECK(row.chosen == (row.p <= 0.04925 ? Candidate::Shifted : Candidate::ZeroMatrix));
    }
    const auto cross = find_crossover(rows);
    REQUIRE(cross);
    CHECK(cross->last_shifted == doctest::Approx(0.0492).epsilon(1e-12));
    CHECK(cross->first_zero == doctest::Approx(0.0493).epsilon(1e-12));

    // Independent evaluation: d1 and d2 by hand at p = 0.045.
    const auto& r = rows[50];
    CHECK(r.p == doctest::Approx(0.045));
    CHECK(r.d1 == doctest::Approx(99.0 / 2 * 0.01 + 49.0 * 0.09 * 0.09).epsilon(1e-12));
    CHECK(r.d2 == doctest::Approx(100.0 * 0.09 * 0.09).epsilon(1e-12));
}

TEST_CASE("tridiagonal sweep") {
    const auto rows = tridiagonal_sweep();
    REQUIRE(rows.size() == 301);
    for (const auto& row : rows) {
        REQUIRE(row.d2_alt);
        CHECK(*row.d2_alt <= row.d2 + 1e-15);
    }
    const auto& r = rows[100];
    CHECK(r.p == doctest::Approx(0.03));
    CHECK(std::abs(r.d1 - 0.0700) <= 5e-5);
    CHECK(std::abs(r.d2 - 0.0735) <= 5e-5);
    CHECK(std::abs(*r.d2_alt - 0.0695) <= 5e-5);
    // d2 with the exact tridiagonal shift, by hand.
    const double gamma = 0.1 * std::cos(std::numbers::pi / 16) - 0.03;
    CHECK(*r.d2_alt == doctest::Approx(15 * gamma * gamma).epsilon(1e-12));
}

TEST_CASE("serial and parallel sweeps agree exactly") {
    const auto a = pentadiagonal_sweep(kPentadiagonalSweep, Execution::Serial);
    const auto b = pentadiagonal_sweep(kPentadiagonalSweep, Execution::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].d1 == b[i].d1);
        CHECK(a[i].d2 == b[i].d2);
        CHECK(a[i].chosen == b[i].chosen);
    }
    const auto c = tridiagonal_sweep(kTridiagonalSweep, Execution::Serial);
    const auto d = tridiagonal_sweep(kTridiagonalSweep, Execution::Parallel);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].d2 == d[i].d2);
        CHECK(*c[i].d2_alt == *d[i].d2_alt);
    }
}

TEST_CASE("downshift table") {
    const std::size_t orders[] = {5, 9, 15, 25, 99};
    for (const auto& row : downshift_table(orders)) {
        const double n = static_cast<double>(row.n);
        const double c = std::cos(std::numbers::pi / (n + 1));
        CHECK(row.delta_f_plus_sq == doctest::Approx(0.75 * (n - 1)).epsilon(1e-10));
        CHECK(row.lower == 0.75 * (n - 1));
        CHECK(row.upper == n - 1);
        CHECK(row.normality_sq == doctest::Approx((n - 1) / 2).epsilon(1e-10));
        CHECK(row.tilde_delta_sq == doctest::Approx(n * c * c + (n - 1) / 2).epsilon(1e-10));
        CHECK(row.spectral_gap_sq == doctest::Approx((n - 1) / 4).epsilon(1e-10));
        // The shifted symmetric part never beats the zero matrix here.
        CHECK(row.tilde_delta_sq > row.upper);
    }
}
