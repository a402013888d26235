#include "wheeldist/cli.hpp"

#include "wheeldist/report.hpp"
#include "wheeldist/spectra.hpp"
#include "wheeldist/theorems.hpp"
#include "wheeldist/wheel.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace wheeldist {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<std::size_t> n;
    std::optional<std::size_t> n_min;
    std::optional<std::size_t> n_max;
    std::string what = "distance";
    std::string format = "json";
    std::string out_path;
    std::size_t oracle_cutoff = 64;
    double tol = 1e-9;
    unsigned threads = 1;
};

bool needs_even(const std::string& what) { return what != "distance"; }

std::size_t single_n(const RunConfig& cfg)
{
    if (!cfg.n) throw UsageError("--n is required");
    if (*cfg.n < 4) throw UsageError("n must be >= 4");
    return *cfg.n;
}

std::string shortest(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Matrix select_matrix(const std::string& what, std::size_t n)
{
    if (needs_even(what) && n % 2 != 0) throw UsageError("even n required");
    if (what == "distance") return distance_matrix(n).matrix;
    if (what == "laplacian") return special_laplacian(n).matrix;
    if (what == "inverse") return closed_form_inverse(n).total;
    return pseudo_inverse_from_distance(n);
}

std::string cmd_gen(const RunConfig& cfg)
{
    const Matrix m = select_matrix(cfg.what, single_n(cfg));
    if (cfg.format == "csv") return to_csv(m);
    return to_json(m).dump() + "\n";
}

std::string cmd_spectrum(const RunConfig& cfg)
{
    const std::size_t n = single_n(cfg);
    if (n % 2 != 0) throw UsageError("even n required");
    const SpectrumReport r = spectrum_report(n, cfg.tol);
    if (cfg.format == "json") return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    const auto chain = r.interlacing_chain();
    os << "k,mu,lambda,chain\n";
    for (std::size_t k = 0; k < n; ++k) {
        os << k + 1 << ',' << shortest(r.d_eigenvalues[k]) << ',' << shortest(r.l_eigenvalues[k]) << ',';
        if (k < chain.size()) os << shortest(chain[k]);
        os << '\n';
    }
    return os.str();
}

std::pair<std::string, bool> cmd_verify(const RunConfig& cfg)
{
    std::size_t lo = 0, hi = 0;
    if (cfg.n) {
        if (cfg.n_min || cfg.n_max) throw UsageError("--n conflicts with --n-min/--n-max");
        lo = hi = *cfg.n;
    } else {
        if (!cfg.n_min || !cfg.n_max) throw UsageError("give --n or both --n-min and --n-max");
        lo = *cfg.n_min;
        hi = *cfg.n_max;
    }
    if (lo < 4) throw UsageError("n must be >= 4");
    if (lo > hi) throw UsageError("--n-min exceeds --n-max");

    VerifyOptions opts;
    opts.oracle_cutoff = cfg.oracle_cutoff;
    opts.tol.zero = cfg.tol;
    opts.threads = cfg.threads;
    const nlohmann::json echo{{"command", "verify"}, {"n_min", lo},           {"n_max", hi},
                              {"oracle_cutoff", cfg.oracle_cutoff}, {"tol", cfg.tol}};
    const VerificationReport report = verify_range(lo, hi, opts, echo);
    std::string text = cfg.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
    return {std::move(text), report.all_passed()};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wheel graph distance matrix inverse: generator and verifier", "wheeldist"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
        sub->add_option("--tol", cfg.tol, "Relative zero-detection tolerance for spectral checks");
    };

    auto* gen = app.add_subcommand("gen", "Emit D, the special Laplacian, D^-1 or its pseudoinverse");
    gen->add_option("--n", cfg.n, "Vertex count");
    gen->add_option("--what", cfg.what, "Matrix to emit")
        ->check(CLI::IsMember({"distance", "laplacian", "inverse", "pseudoinverse"}));
    add_common(gen);

    auto* verify = app.add_subcommand("verify", "Run every check for one n or a range of n");
    verify->add_option("--n", cfg.n, "Vertex count");
    verify->add_option("--n-min", cfg.n_min, "Range start");
    verify->add_option("--n-max", cfg.n_max, "Range end (inclusive)");
    verify->add_option("--oracle-cutoff", cfg.oracle_cutoff, "Largest n for Gauss-Jordan comparisons");
    verify->add_option("--threads", cfg.threads, "Worker threads");
    add_common(verify);

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of D and the special Laplacian");
    spectrum->add_option("--n", cfg.n, "Vertex count");
    add_common(spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text;
    int code = kExitPass;
    try {
        if (gen->parsed()) {
            text = cmd_gen(cfg);
        } else if (spectrum->parsed()) {
            text = cmd_spectrum(cfg);
        } else {
            auto [t, ok] = cmd_verify(cfg);
            text = std::move(t);
            code = ok ? kExitPass : kExitCheckFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (cfg.out_path.empty()) {
        out << text;
        return code;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        err << "error: cannot write " << cfg.out_path << "\n";
        return kExitIo;
    }
    return code;
}

}  // namespace wheeldist
