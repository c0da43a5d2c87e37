#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tnear/bounds.hpp"
#include "tnear/errors.hpp"
#include "tnear/io.hpp"
#include "tnear/nearness.hpp"
#include "tnear/reproduce.hpp"
#include "tnear/solver.hpp"
#include "tnear/spectral.hpp"

using nlohmann::json;
using namespace tnear;

namespace {

enum class Format { Csv, Json };

struct RunConfig {
    std::string input;
    std::string format;
    std::string sweep;
    std::optional<double> tol;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Format resolve_format(const RunConfig& c, Format fallback) {
    if (c.format.empty()) return fallback;
    return c.format == "csv" ? Format::Csv : Format::Json;
}

double eig_tol_scale(const RunConfig& c) {
    if (c.tol) return *c.tol;
    if (const char* env = std::getenv("TNEAR_EIG_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v >= 0.0)) throw UsageError("TNEAR_EIG_TOL must be a nonnegative number");
        return v;
    }
    return kDefaultEigTolScale;
}

std::optional<SweepRange> sweep_of(const RunConfig& c) {
    if (c.sweep.empty()) return std::nullopt;
    try {
        return SweepRange::parse(c.sweep);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--sweep: ") + e.what());
    }
}

BandedToeplitz input_matrix(const RunConfig& c) {
    if (c.input.empty()) throw UsageError("--input FILE is required");
    return load_matrix(c.input);
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(c.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + c.out);
    os << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string summary(double v) { return format_double(v, 6); }

json matrix_json(const BandedToeplitz& t) {
    return {{"n", t.order()},
            {"k", t.half_bandwidth()},
            {"sigma", std::vector<double>(t.sigma().begin(), t.sigma().end())},
            {"delta", t.delta()},
            {"tau", std::vector<double>(t.tau().begin(), t.tau().end())}};
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string row;
    for (const auto& f : fields) {
        if (!row.empty()) row += ',';
        row += f;
    }
    return row + "\n";
}

std::string csv_value(std::optional<double> v) { return v ? format_double(*v) : std::string(); }

// distance -----------------------------------------------------------------

void cmd_distance(const RunConfig& c) {
    const auto t = input_matrix(c);
    const double scale = eig_tol_scale(c);
    const double spsd = distance_spsd_banded_squared(t, scale);
    const auto normal = normality_projection(t);
    if (resolve_format(c, Format::Json) == Format::Csv) {
        emit(c, "delta_f_plus_sq,normality_sq,branch,tcond\n" +
                    csv_row({format_double(spsd), format_double(normal.distance_squared),
                             std::string(to_string(normal.branch)), format_double(normal.tcond)}));
    } else {
        emit(c, dump({{"delta_f_plus_sq", spsd},
                      {"normality_sq", normal.distance_squared},
                      {"branch", to_string(normal.branch)},
                      {"tcond", normal.tcond}}));
    }
    std::cerr << "spsd distance^2 " << summary(spsd) << ", normality distance^2 " << summary(normal.distance_squared)
              << " (" << to_string(normal.branch) << ")\n";
}

// project ------------------------------------------------------------------

void cmd_project(const RunConfig& c, const std::string& which, const std::string& matrix_out) {
    const auto t = input_matrix(c);
    const auto normal = normality_projection(t);
    const auto general = shift_projection_general(t);
    std::optional<ShiftProjection> tridiagonal;
    if (t.half_bandwidth() == 1) tridiagonal = shift_projection_tridiagonal(t);
    const ShiftProjection& best = tridiagonal ? *tridiagonal : general;

    if (!matrix_out.empty()) {
        std::ofstream os(matrix_out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + matrix_out);
        write_matrix(os, which == "normality" ? normal.projected : best.shifted);
    }

    if (resolve_format(c, Format::Json) == Format::Csv) {
        std::string text = "projection,distance_sq,gamma\n";
        text += csv_row({"normality", format_double(normal.distance_squared), ""});
        text += csv_row({"shift-general", format_double(general.distance_from_input * general.distance_from_input),
                         format_double(general.gamma)});
        if (tridiagonal)
            text += csv_row({"shift-tridiagonal",
                             format_double(tridiagonal->distance_from_input * tridiagonal->distance_from_input),
                             format_double(tridiagonal->gamma)});
        emit(c, text);
    } else {
        json j = {{"normality",
                   {{"branch", to_string(normal.branch)},
                    {"distance_sq", normal.distance_squared},
                    {"tcond", normal.tcond},
                    {"matrix", matrix_json(normal.projected)}}},
                  {"shift_general",
                   {{"gamma", general.gamma},
                    {"distance", general.distance_from_input},
                    {"matrix", matrix_json(general.shifted)}}}};
        if (tridiagonal)
            j["shift_tridiagonal"] = {{"gamma", tridiagonal->gamma},
                                      {"distance", tridiagonal->distance_from_input},
                                      {"matrix", matrix_json(tridiagonal->shifted)}};
        emit(c, dump(j));
    }
    std::cerr << "shift gamma " << summary(best.gamma) << ", distance " << summary(best.distance_from_input) << "\n";
}

// bounds -------------------------------------------------------------------

void cmd_bounds(const RunConfig& c, bool force_general, bool with_oracle) {
    const auto t = input_matrix(c);
    const double scale = eig_tol_scale(c);
    const bool tri = t.half_bandwidth() == 1 && !force_general;
    const BoundReport r = tri ? bounds_tridiagonal(t, LowerBound::Exact, scale) : bounds_general(t, LowerBound::Exact, scale);
    std::optional<ZeroDiagonalBounds> zero_diag;
    if (t.half_bandwidth() == 1 && t.delta() == 0.0) zero_diag = bounds_tridiagonal_zero_diag(t);
    std::optional<double> oracle_sq;
    if (with_oracle) {
        if (t.order() > kOracleMaxOrder || t.half_bandwidth() > kOracleMaxBandwidth)
            throw UsageError("--oracle needs n <= " + std::to_string(kOracleMaxOrder) + " and k <= " +
                             std::to_string(kOracleMaxBandwidth));
        const double d = oracle_structured_distance(t, 21, scale).distance;
        oracle_sq = d * d;
    }

    if (resolve_format(c, Format::Json) == Format::Csv) {
        std::string text = "lower_sq,upper_sq,d1,d2,d3,d2_alt,chosen,branch";
        if (oracle_sq) text += ",oracle_sq";
        text += "\n";
        text += format_double(*r.lower_squared) + "," + format_double(r.upper_squared) + "," + format_double(r.d1) +
                "," + format_double(r.d2) + "," + format_double(r.d3) + "," + csv_value(r.d2_alt) + "," +
                std::string(to_string(r.chosen)) + "," + std::string(to_string(r.branch));
        if (oracle_sq) text += "," + format_double(*oracle_sq);
        emit(c, text + "\n");
    } else {
        json j = {{"shift", tri ? "tridiagonal" : "general"},
                  {"lower_sq", *r.lower_squared},
                  {"lower_kind", "exact-spectral"},
                  {"upper_sq", r.upper_squared},
                  {"d1", r.d1},
                  {"d2", r.d2},
                  {"d3", r.d3},
                  {"chosen", to_string(r.chosen)},
                  {"branch", to_string(r.branch)},
                  {"candidate", matrix_json(r.candidate)}};
        if (r.d2_alt) j["d2_alt"] = *r.d2_alt;
        if (zero_diag)
            j["zero_diagonal"] = {{"lower_sq", *zero_diag->report.lower_squared},
                                  {"upper_sq", zero_diag->report.upper_squared},
                                  {"symmetric_lower", zero_diag->symmetric_lower},
                                  {"symmetric_upper", zero_diag->symmetric_upper}};
        if (oracle_sq) j["oracle_sq"] = *oracle_sq;
        emit(c, dump(j));
    }
    std::cerr << "structured distance^2 in [" << summary(*r.lower_squared) << ", " << summary(r.upper_squared)
              << "], candidate " << to_string(r.chosen) << "\n";
}

// symbol -------------------------------------------------------------------

void cmd_symbol(const RunConfig& c, bool use_symmetric_part, std::size_t grid) {
    const auto t = input_matrix(c);
    const Symbol g = symbol_of(t, use_symmetric_part ? SymbolInput::UseSymmetricPart : SymbolInput::RequireSymmetric);
    if (const auto range = sweep_of(c)) {
        if (resolve_format(c, Format::Csv) == Format::Json) {
            json rows = json::array();
            for (std::size_t i = 0; i < range->count(); ++i)
                rows.push_back({{"theta", range->at(i)}, {"g", g(range->at(i))}});
            emit(c, dump(rows));
        } else {
            std::string text = "theta,g\n";
            for (std::size_t i = 0; i < range->count(); ++i)
                text += format_double(range->at(i)) + "," + format_double(g(range->at(i))) + "\n";
            emit(c, text);
        }
        return;
    }
    const auto lo = symbol_min(g, grid);
    const auto hi = symbol_max(g, grid);
    if (resolve_format(c, Format::Json) == Format::Csv) {
        emit(c, "theta_min,g_min,theta_max,g_max\n" + csv_row({format_double(lo.theta), format_double(lo.value),
                                                               format_double(hi.theta), format_double(hi.value)}));
    } else {
        emit(c, dump({{"theta_min", lo.theta},
                      {"g_min", lo.value},
                      {"theta_max", hi.theta},
                      {"g_max", hi.value},
                      {"nonnegative", lo.value >= 0.0}}));
    }
    std::cerr << "symbol range [" << summary(lo.value) << ", " << summary(hi.value) << "]\n";
}

// solve --------------------------------------------------------------------

std::vector<double> read_vector(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> v;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": value " + std::to_string(v.size() + 1) + " is not a number");
        }
    }
    if (v.size() != n)
        throw std::runtime_error(path + ": expected " + std::to_string(n) + " values, found " + std::to_string(v.size()));
    return v;
}

json solve_json(const SolveReport& r) {
    return {{"iterations", r.iterations},
            {"converged", r.converged},
            {"relative_residual", r.residual_history.back()}};
}

void cmd_solve(const RunConfig& c, const std::string& rhs_path, std::optional<std::size_t> max_iterations) {
    if (c.input.empty()) throw UsageError("--input FILE or --input neumann:N is required");
    CgOptions options;
    if (c.tol) options.tol = *c.tol;
    options.max_iterations = max_iterations;

    std::optional<LinearOperator> op;
    std::optional<BandedCholesky> preconditioner;
    std::size_t n = 0;
    if (c.input.rfind("neumann:", 0) == 0) {
        const std::string order = c.input.substr(8);
        std::size_t used = 0;
        try {
            n = std::stoul(order, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != order.size() || n < 2) throw UsageError("neumann:N needs an integer N >= 2");
        const NeumannOperator neumann(n);
        op = neumann.as_operator();
        preconditioner.emplace(neumann.core());
        options.null_space = NullSpace::Constant;
    } else {
        const auto t = load_matrix(c.input);
        n = t.order();
        op = make_operator(t);
        const auto shift = t.half_bandwidth() == 1 ? shift_projection_tridiagonal(t) : shift_projection_general(t);
        preconditioner.emplace(shift.shifted);
    }

    std::vector<double> b;
    if (!rhs_path.empty()) {
        b = read_vector(rhs_path, n);
    } else {
        // Fixed seed keeps runs reproducible.
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        b.resize(n);
        for (double& v : b) v = u(rng);
        if (options.null_space == NullSpace::Constant) {
            const double mean = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
            for (double& v : b) v -= mean;
        }
    }

    const auto plain = cg(*op, b, options);
    const auto pre = pcg(*op, *preconditioner, b, options);

    if (resolve_format(c, Format::Json) == Format::Csv) {
        std::string text = "iteration,cg_residual,pcg_residual\n";
        const std::size_t rows = std::max(plain.residual_history.size(), pre.residual_history.size());
        for (std::size_t i = 0; i < rows; ++i) {
            auto cell = [&](const SolveReport& r) {
                return i < r.residual_history.size() ? format_double(r.residual_history[i]) : std::string();
            };
            text += std::to_string(i) + "," + cell(plain) + "," + cell(pre) + "\n";
        }
        emit(c, text);
    } else {
        emit(c, dump({{"n", n}, {"tol", options.tol}, {"cg", solve_json(plain)}, {"pcg", solve_json(pre)}}));
    }
    std::cerr << "CG " << plain.iterations << " iterations, PCG " << pre.iterations << " iterations\n";
    if (!plain.converged || !pre.converged) throw std::runtime_error("solver did not converge");
}

// reproduce ----------------------------------------------------------------

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_alt) {
    std::string text = with_alt ? "p,d1,d2,d2_alt,chosen\n" : "p,d1,d2,chosen\n";
    for (const auto& r : rows) {
        text += format_double(r.p) + "," + format_double(r.d1) + "," + format_double(r.d2) + ",";
        if (with_alt) text += csv_value(r.d2_alt) + ",";
        text += std::string(to_string(r.chosen)) + "\n";
    }
    return text;
}

json sweep_json(const std::vector<SweepRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json row = {{"p", r.p}, {"d1", r.d1}, {"d2", r.d2}, {"chosen", to_string(r.chosen)}};
        if (r.d2_alt) row["d2_alt"] = *r.d2_alt;
        out.push_back(std::move(row));
    }
    return out;
}

void reproduce_spectra(const RunConfig& c) {
    const auto ex = spd_to_toeplitz_example();
    if (resolve_format(c, Format::Json) == Format::Csv) {
        std::string text = "matrix,index,eigenvalue\n";
        for (std::size_t i = 0; i < 3; ++i) text += "A," + std::to_string(i + 1) + "," + format_double(ex.a_spectrum.values[i]) + "\n";
        for (std::size_t i = 0; i < 3; ++i)
            text += "T," + std::to_string(i + 1) + "," + format_double(ex.toeplitz_spectrum.values[i]) + "\n";
        emit(c, text);
    } else {
        json a = json::array();
        for (std::size_t i = 0; i < 3; ++i) a.push_back({ex.a(i, 0), ex.a(i, 1), ex.a(i, 2)});
        emit(c, dump({{"a", a},
                      {"a_spectrum", ex.a_spectrum.values},
                      {"toeplitz", matrix_json(ex.toeplitz)},
                      {"toeplitz_spectrum", ex.toeplitz_spectrum.values},
                      {"delta_f_plus_sq", ex.toeplitz_distance_squared}}));
    }
    std::cerr << "eig(A) = " << summary(ex.a_spectrum.values[0]) << ", " << summary(ex.a_spectrum.values[1]) << ", "
              << summary(ex.a_spectrum.values[2]) << "; eig(T) = " << summary(ex.toeplitz_spectrum.values[0]) << ", "
              << summary(ex.toeplitz_spectrum.values[1]) << ", " << summary(ex.toeplitz_spectrum.values[2]) << "\n";
}

void reproduce_pentadiagonal(const RunConfig& c) {
    const auto rows = pentadiagonal_sweep(sweep_of(c).value_or(kPentadiagonalSweep));
    const auto cross = find_crossover(rows);
    if (resolve_format(c, Format::Csv) == Format::Json) {
        json j = {{"rows", sweep_json(rows)}};
        j["crossover"] = cross ? json{{"last_shifted", cross->last_shifted}, {"first_zero", cross->first_zero}} : json();
        emit(c, dump(j));
    } else {
        emit(c, sweep_csv(rows, false));
    }
    if (cross)
        std::cerr << "crossover: shifted through p=" << summary(cross->last_shifted) << ", zero-matrix from p="
                  << summary(cross->first_zero) << "\n";
    else
        std::cerr << "no crossover in range\n";
}

void reproduce_downshift(const RunConfig& c) {
    const std::size_t orders[] = {5, 9, 15, 25, 99};
    const auto rows = downshift_table(orders);
    if (resolve_format(c, Format::Csv) == Format::Json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n},
                           {"delta_f_plus_sq", r.delta_f_plus_sq},
                           {"lower", r.lower},
                           {"upper", r.upper},
                           {"tilde_delta_sq", r.tilde_delta_sq},
                           {"normality_sq", r.normality_sq},
                           {"spectral_gap_sq", r.spectral_gap_sq}});
        emit(c, dump(out));
    } else {
        std::string text = "n,delta_f_plus_sq,lower,upper,tilde_delta_sq,normality_sq,spectral_gap_sq\n";
        for (const auto& r : rows)
            text += std::to_string(r.n) + "," + format_double(r.delta_f_plus_sq) + "," + format_double(r.lower) + "," +
                    format_double(r.upper) + "," + format_double(r.tilde_delta_sq) + "," +
                    format_double(r.normality_sq) + "," + format_double(r.spectral_gap_sq) + "\n";
        emit(c, text);
    }
    std::cerr << rows.size() << " downshift orders\n";
}

void reproduce_tridiagonal(const RunConfig& c) {
    const auto rows = tridiagonal_sweep(sweep_of(c).value_or(kTridiagonalSweep));
    if (resolve_format(c, Format::Csv) == Format::Json)
        emit(c, dump(sweep_json(rows)));
    else
        emit(c, sweep_csv(rows, true));
    std::cerr << rows.size() << " rows\n";
}

void cmd_reproduce(const RunConfig& c, int id) {
    switch (id) {
        case 1: return reproduce_spectra(c);
        case 2: return reproduce_pentadiagonal(c);
        case 3: return reproduce_downshift(c);
        case 4: return reproduce_tridiagonal(c);
        default: throw UsageError("unknown example id " + std::to_string(id) + " (expected 1-4)");
    }
}

void add_common(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--input", c.input, "Matrix file");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--sweep", c.sweep, "Parameter range START:STEP:END");
    cmd->add_option("--tol", c.tol, "Eigenvalue tolerance scale; relative residual for solve")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", c.out, "Write output to FILE");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Banded Toeplitz nearness toolkit"};
    app.require_subcommand(1, 1);
    RunConfig config;

    auto* distance = app.add_subcommand("distance", "Unstructured SPSD distance and structured distance to normality");
    add_common(distance, config);

    auto* project = app.add_subcommand("project", "Normality and shift projections");
    add_common(project, config);
    std::string which = "shift";
    std::string matrix_out;
    project->add_option("--projection", which, "Projection written by --matrix-out")
        ->check(CLI::IsMember({"shift", "normality"}));
    project->add_option("--matrix-out", matrix_out, "Write the projection as a matrix file");

    auto* bounds = app.add_subcommand("bounds", "Bounds on the structured SPSD distance");
    add_common(bounds, config);
    bool force_general = false;
    bool with_oracle = false;
    bounds->add_flag("--general", force_general, "Use the general shift even when k = 1");
    bounds->add_flag("--oracle", with_oracle, "Add the numerical oracle value (small n only)");

    auto* symbol = app.add_subcommand("symbol", "Symbol extrema, or samples over --sweep");
    add_common(symbol, config);
    bool use_symmetric_part = false;
    std::size_t grid = kDefaultSymbolGrid;
    symbol->add_flag("--symmetric-part", use_symmetric_part, "Accept nonsymmetric input via its symmetric part");
    symbol->add_option("--grid", grid, "Grid points before refinement")->check(CLI::PositiveNumber);

    auto* solve = app.add_subcommand("solve", "CG and PCG side by side");
    add_common(solve, config);
    std::string rhs;
    std::optional<std::size_t> max_iterations;
    solve->add_option("--rhs", rhs, "Right-hand side file");
    solve->add_option("--max-iter", max_iterations, "Iteration cap");

    auto* reproduce = app.add_subcommand("reproduce", "Regenerate the worked examples 1-4");
    add_common(reproduce, config);
    int example = 0;
    reproduce->add_option("example", example, "Example id")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*distance) cmd_distance(config);
        else if (*project) cmd_project(config, which, matrix_out);
        else if (*bounds) cmd_bounds(config, force_general, with_oracle);
        else if (*symbol) cmd_symbol(config, use_symmetric_part, grid);
        else if (*solve) cmd_solve(config, rhs, max_iterations);
        else if (*reproduce) cmd_reproduce(config, example);
    } catch (const UsageError& e) {
        std::cerr << "tnear: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "tnear: " << config.input << ": " << e.what() << "\n";
        return 3;
    } catch (const NotPositiveDefinite& e) {
        std::cerr << "tnear: preconditioner " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "tnear: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
