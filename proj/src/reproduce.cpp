#include "tnear/reproduce.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tnear/nearness.hpp"

namespace tnear {

SweepRange SweepRange::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) throw std::invalid_argument("sweep must be START:STEP:END");
    auto number = [](std::string_view s) {
        try {
            std::size_t used = 0;
            const std::string str(s);
            const double v = std::stod(str, &used);
            if (used != str.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("sweep component '" + std::string(s) + "' is not a number");
        }
    };
    SweepRange r{number(text.substr(0, first)), number(text.substr(first + 1, second - first - 1)),
                 number(text.substr(second + 1))};
    if (!(r.step > 0.0)) throw std::invalid_argument("sweep step must be positive");
    if (!(r.start <= r.end)) throw std::invalid_argument("sweep start must not exceed end");
    return r;
}

std::size_t SweepRange::count() const {
    // Tolerate representation error in (end - start) / step.
    return static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
}

namespace {

template <typename Row>
std::vector<SweepRow> run_sweep(const SweepRange& range, Execution exec, Row row) {
    const std::size_t count = range.count();
    std::vector<SweepRow> rows(count);
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = row(range.at(i));
        return rows;
    }
    const auto m = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)] = row(range.at(static_cast<std::size_t>(i)));
    return rows;
}

}  // namespace

BandedToeplitz pentadiagonal_family(double p) { return BandedToeplitz::symmetric(100, {0.05, p}, 0.1); }

std::vector<SweepRow> pentadiagonal_sweep(const SweepRange& range, Execution exec) {
    return run_sweep(range, exec, [](double p) {
        const BoundReport r = bounds_general(pentadiagonal_family(p), LowerBound::Skip);
        return SweepRow{p, r.d1, r.d2, std::nullopt, r.chosen};
    });
}

BandedToeplitz tridiagonal_family(double p) { return BandedToeplitz::symmetric(15, {0.05}, p); }

std::vector<SweepRow> tridiagonal_sweep(const SweepRange& range, Execution exec) {
    return run_sweep(range, exec, [](double p) {
        const BoundReport r = bounds_tridiagonal(tridiagonal_family(p), LowerBound::Skip);
        return SweepRow{p, r.d1, *r.d2_alt, r.d2, r.chosen};
    });
}

std::optional<Crossover> find_crossover(std::span<const SweepRow> rows) {
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1].chosen == Candidate::Shifted && rows[i].chosen == Candidate::ZeroMatrix)
            return Crossover{rows[i - 1].p, rows[i].p};
    return std::nullopt;
}

SpdToToeplitzExample spd_to_toeplitz_example() {
    Matrix a(3, 3);
    a(0, 0) = 100.0; a(0, 1) = 99.0;  a(0, 2) = 0.0;
    a(1, 0) = 99.0;  a(1, 1) = 100.0; a(1, 2) = 0.5;
    a(2, 0) = 0.0;   a(2, 1) = 0.5;   a(2, 2) = 1.0;
    // The second off-diagonals of a are zero, so half-bandwidth 1 loses nothing.
    BandedToeplitz t = nearest_banded_toeplitz(a, 1);
    Spectrum a_spec = eigenvalues_symmetric(DenseSymmetric(a));
    Spectrum t_spec = eigenvalues_symmetric(DenseSymmetric(to_dense(t)));
    const double dist = distance_spsd_banded_squared(t);
    return {std::move(a), std::move(a_spec), std::move(t), std::move(t_spec), dist};
}

DownshiftRow downshift_row(std::size_t n) {
    const BandedToeplitz t = BandedToeplitz::downshift(n);
    const auto m = static_cast<double>(n) - 1.0;
    const SpsdProjection unstructured = distance_spsd_dense(to_dense(symmetric_part(t)));
    const Spectrum sym_spec = eigenvalues_symmetric(DenseSymmetric(to_dense(symmetric_part(t))));
    const Spectrum nearest_spec = eigenvalues_symmetric(unstructured.nearest);
    const double gap = spectral_distance(sym_spec, nearest_spec);
    const ShiftProjection shift = shift_projection_tridiagonal(t);
    return {n,
            distance_spsd_banded_squared(t),
            0.75 * m,
            m,
            shift.distance_from_input * shift.distance_from_input,
            normality_projection(t).distance_squared,
            gap * gap};
}

std::vector<DownshiftRow> downshift_table(std::span<const std::size_t> orders) {
    std::vector<DownshiftRow> rows;
    rows.reserve(orders.size());
    for (std::size_t n : orders) rows.push_back(downshift_row(n));
    return rows;
}

}  // namespace tnear
