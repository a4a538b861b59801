// Command-line front end: batch computations emitting JSON or CSV.
// Exit codes: 0 success, 2 validation failure, 3 documented mathematical
// exclusion, 4 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <fht/fht.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_excluded = 3;
constexpr int exit_no_convergence = 4;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const nlohmann::json& j, const std::string& csv) const {
        std::string text = format == "csv" ? csv : j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(path);
            os << text;
        }
    }
};

fht::TrigPoly make_f1(const std::vector<double>& centered) {
    if (centered.empty()) return fht::TrigPoly::constant(1.0);
    return fht::TrigPoly::from_centered(centered);
}

int run_coeffs(double alpha, const std::vector<double>& f1, std::size_t upto, const Output& out) {
    fht::SymbolSpec spec(alpha, make_f1(f1));
    fht::CoeffTable phi{fht::CoeffTable::Kind::phi_hat, {}};
    fht::CoeffTable beta{fht::CoeffTable::Kind::beta_alpha, {}};
    for (std::size_t n = 0; n <= upto; ++n) phi.values.push_back(fht::phi_fourier_coeff(spec, n));
    beta = fht::beta_coeffs(spec, static_cast<int>(upto));
    nlohmann::json j;
    j["schema_version"] = fht::schema_version;
    j["alpha"] = alpha;
    j["phi_hat"] = fht::to_json(phi);
    j["beta"] = fht::to_json(beta);
    std::ostringstream csv;
    csv << "kind,index,value\n";
    for (std::size_t n = 0; n < phi.values.size(); ++n)
        csv << "phi_hat," << n << ',' << fht::fmt_double(phi.values[n]) << '\n';
    for (std::size_t n = 0; n < beta.values.size(); ++n)
        csv << "beta," << n << ',' << fht::fmt_double(beta.values[n]) << '\n';
    out.emit(j, csv.str());
    return exit_ok;
}

int run_entry(double alpha, const std::vector<double>& f1, std::size_t n, long k, long l,
              const Output& out) {
    if (k < 0 || l < 0 || static_cast<std::size_t>(k) > n || static_cast<std::size_t>(l) > n) {
        std::cerr << "error: entry indices must lie in [0, N]\n";
        return exit_validation;
    }
    fht::SymbolSpec spec(alpha, make_f1(f1));
    fht::GSInverse inv = fht::gs_inverse(spec, static_cast<int>(n));
    const double exact = fht::gs_entry(inv, static_cast<int>(k), static_cast<int>(l));
    const double x = static_cast<double>(k) / static_cast<double>(n);
    const double y = static_cast<double>(l) / static_cast<double>(n);
    // the bulk asymptotic is undefined at alpha <= 0, at the boundary nodes
    // and on the diagonal for alpha <= 1/2; emit null there
    bool have_asym = true;
    double asym = 0.0;
    try {
        asym = fht::inverse_entry_asymptotic(alpha, x, y, static_cast<int>(n), spec);
    } catch (const fht::domain_error&) {
        have_asym = false;
    }
    const double rel =
        have_asym ? std::abs(exact - asym) / std::max(std::abs(exact), 1e-300) : 0.0;
    nlohmann::json j;
    j["schema_version"] = fht::schema_version;
    j["alpha"] = alpha;
    j["N"] = n;
    j["k"] = k;
    j["l"] = l;
    j["exact"] = exact;
    if (have_asym) {
        j["asymptotic"] = asym;
        j["rel_err"] = rel;
    } else {
        j["asymptotic"] = nullptr;
        j["rel_err"] = nullptr;
    }
    std::ostringstream csv;
    csv << "alpha,N,k,l,exact,asymptotic,rel_err\n"
        << fht::fmt_double(alpha) << ',' << n << ',' << k << ',' << l << ','
        << fht::fmt_double(exact) << ',' << fht::fmt_double(asym) << ',' << fht::fmt_double(rel)
        << '\n';
    out.emit(j, csv.str());
    return exit_ok;
}

int run_c_alpha(double alpha, const std::vector<double>& f1, std::vector<std::size_t> sizes,
                std::vector<std::size_t> resolutions, const Output& out) {
    if (alpha == 0.5) {
        std::cerr << "error: alpha = 1/2 is excluded; use the eigenvalue lower bound "
                     "pi/(N ln N) instead\n";
        return exit_excluded;
    }
    if (sizes.empty()) sizes = {256, 512, 1024};
    if (resolutions.empty()) resolutions = {128, 192, 256};
    fht::CAlphaEstimate kern = fht::c_alpha_kernel(alpha, resolutions);
    fht::CAlphaEstimate toep = fht::c_alpha_toeplitz(alpha, sizes, make_f1(f1));
    const double agree = std::abs(kern.extrapolated - toep.extrapolated) /
                         std::max(std::abs(kern.extrapolated), 1e-300);
    nlohmann::json j;
    j["schema_version"] = fht::schema_version;
    j["kernel"] = fht::to_json(kern);
    j["toeplitz"] = fht::to_json(toep);
    j["agreement"] = agree;
    std::string csv = fht::to_csv(kern) + fht::to_csv(toep);
    out.emit(j, csv);
    return exit_ok;
}

int run_bounds(double alpha, bool reference, const Output& out) {
    if (reference) {
        if (alpha < 1.0 || alpha != std::floor(alpha)) {
            std::cerr << "error: --reference needs a positive integer alpha\n";
            return exit_validation;
        }
        fht::BoundsReport r = fht::integer_reference_upper(static_cast<unsigned>(alpha));
        out.emit(fht::to_json(r), fht::to_csv(r));
        return exit_ok;
    }
    fht::BoundsReport r = fht::c_alpha_bounds(alpha);
    out.emit(fht::to_json(r), fht::to_csv(r));
    return exit_ok;
}

int run_trace(double alpha, const std::vector<double>& f1, std::size_t n, const Output& out) {
    fht::SymbolSpec spec(alpha, make_f1(f1));
    fht::GSInverse inv = fht::gs_inverse(spec, static_cast<int>(n));
    const double exact = fht::inverse_trace(inv);
    const double asym = fht::trace_asymptotic(alpha, static_cast<int>(n), spec.f1_at_one());
    const double rel = std::abs(exact - asym) / std::max(std::abs(exact), 1e-300);
    nlohmann::json j;
    j["schema_version"] = fht::schema_version;
    j["alpha"] = alpha;
    j["N"] = n;
    j["exact"] = exact;
    j["asymptotic"] = asym;
    j["rel_err"] = rel;
    std::ostringstream csv;
    csv << "alpha,N,exact,asymptotic,rel_err\n"
        << fht::fmt_double(alpha) << ',' << n << ',' << fht::fmt_double(exact) << ','
        << fht::fmt_double(asym) << ',' << fht::fmt_double(rel) << '\n';
    out.emit(j, csv.str());
    return exit_ok;
}

int run_kernel_grid(double alpha, std::size_t m, const Output& out) {
    if (m == 0) {
        std::cerr << "error: grid size must be positive\n";
        return exit_validation;
    }
    std::vector<double> nodes(m);
    for (std::size_t i = 0; i < m; ++i)
        nodes[i] = static_cast<double>(i + 1) / static_cast<double>(m + 1);
    std::vector<std::vector<double>> grid(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            grid[i][j] = (i == j && alpha <= 0.5)
                             ? std::numeric_limits<double>::infinity()
                             : fht::kernel_G(alpha, nodes[i], nodes[j]);
    nlohmann::json j;
    j["schema_version"] = fht::schema_version;
    j["alpha"] = alpha;
    j["nodes"] = nodes;
    j["grid"] = nlohmann::json::array();
    for (const auto& row : grid) {
        nlohmann::json jr = nlohmann::json::array();
        for (double v : row) {
            if (std::isinf(v))
                jr.push_back(nullptr);
            else
                jr.push_back(v);
        }
        j["grid"].push_back(jr);
    }
    std::ostringstream csv;
    csv << "i,j,x,y,value\n";
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t jj = 0; jj < m; ++jj)
            csv << i << ',' << jj << ',' << fht::fmt_double(nodes[i]) << ','
                << fht::fmt_double(nodes[jj]) << ',' << fht::fmt_double(grid[i][jj]) << '\n';
    out.emit(j, csv.str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz matrices with a Fisher-Hartwig symbol: exact inverses, "
                 "asymptotic kernels, minimal-eigenvalue constants"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", out.path, "write output to a file instead of stdout");

    double alpha = 1.0;
    std::vector<double> f1;
    std::size_t upto = 10, n = 100, m = 16;
    long k = 0, l = 0;
    std::vector<std::size_t> sizes, resolutions;
    bool reference = false;

    auto add_common = [&](CLI::App* cmd, bool with_f1) {
        cmd->fallthrough();  // let --format/--output appear after the subcommand
        cmd->add_option("--alpha", alpha, "singularity exponent")->required();
        if (with_f1)
            cmd->add_option("--f1", f1,
                            "regular factor as centered Laurent coefficients (odd count)");
    };

    auto* c_coeffs = app.add_subcommand("coeffs", "Fourier and predictor coefficient tables");
    add_common(c_coeffs, true);
    c_coeffs->add_option("--upto", upto, "largest index");

    auto* c_entry = app.add_subcommand("entry", "one inverse entry, exact vs asymptotic");
    add_common(c_entry, true);
    c_entry->add_option("--N", n, "matrix size parameter")->required();
    c_entry->add_option("--k", k)->required();
    c_entry->add_option("--l", l)->required();

    auto* c_calpha = app.add_subcommand("c-alpha", "minimal-eigenvalue constant, both routes");
    add_common(c_calpha, true);
    c_calpha->add_option("--sizes", sizes, "matrix sizes for the finite-section route");
    c_calpha->add_option("--resolutions", resolutions, "quadrature sizes for the kernel route");

    auto* c_bounds = app.add_subcommand("bounds", "closed-form bounds on the constant");
    add_common(c_bounds, false);
    c_bounds->add_flag("--reference", reference, "print the integer-exponent reference bound");

    auto* c_trace = app.add_subcommand("trace", "inverse trace, exact vs asymptotic");
    add_common(c_trace, true);
    c_trace->add_option("--N", n, "matrix size parameter")->required();

    auto* c_grid = app.add_subcommand("kernel-grid", "limiting kernel sampled on a uniform grid");
    add_common(c_grid, false);
    c_grid->add_option("--m", m, "grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }

    try {
        if (c_coeffs->parsed()) return run_coeffs(alpha, f1, upto, out);
        if (c_entry->parsed()) return run_entry(alpha, f1, n, k, l, out);
        if (c_calpha->parsed()) return run_c_alpha(alpha, f1, sizes, resolutions, out);
        if (c_bounds->parsed()) return run_bounds(alpha, reference, out);
        if (c_trace->parsed()) return run_trace(alpha, f1, n, out);
        if (c_grid->parsed()) return run_kernel_grid(alpha, m, out);
    } catch (const fht::excluded_case_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_excluded;
    } catch (const fht::non_convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_no_convergence;
    } catch (const fht::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
    return exit_validation;
}
