#include "wheeldist/report.hpp"

#include "wheeldist/wheel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace wheeldist {

namespace {

template <typename F>
void timed(std::vector<TimedCheck>& out, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    TheoremCheck c = f();
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    out.push_back(TimedCheck{std::move(c), ms.count()});
}

std::string iso_now()
{
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<TimedCheck> run_checks(std::size_t n, const VerifyOptions& opts)
{
    std::vector<TimedCheck> out;
    timed(out, [&] { return check_determinant_formula(n); });
    timed(out, [&] { return check_distance_bfs(n); });

    if (n % 2 != 0) {
        if (n <= opts.oracle_cutoff)
            timed(out, [&] { return check_odd_singular(n); });
        else
            out.push_back({check_not_applicable("odd_singular", n, "above oracle cutoff"), 0.0});
        timed(out, [&] { return check_d_inertia(n, opts.tol); });
        for (const char* name : {"inverse_formula", "inverse_oracle", "ld_identity", "dw_identity", "rank_and_kernel",
                                 "cofactor_theorem", "moore_penrose", "edm_decomposition", "psd", "interlacing"})
            out.push_back({check_not_applicable(name, n, "odd n: det D = 0, no inverse formula"), 0.0});
        return out;
    }

    timed(out, [&] { return check_alternating_sum(n); });
    timed(out, [&] { return check_q_rows(n); });
    timed(out, [&] { return check_f_vector(n); });
    timed(out, [&] { return check_laplacian_structure(n); });
    timed(out, [&] { return check_ld_identity(n); });
    timed(out, [&] { return check_dw_identity(n); });
    timed(out, [&] { return check_inverse_formula(n); });
    if (n <= opts.oracle_cutoff)
        timed(out, [&] { return check_inverse_oracle(n); });
    else
        out.push_back({check_not_applicable("inverse_oracle", n, "above oracle cutoff"), 0.0});
    timed(out, [&] { return check_inverse_row_sums(n); });
    timed(out, [&] { return check_rank_and_kernel(n); });
    timed(out, [&] { return check_cofactor_theorem(n, opts.cofactor_exhaustive); });
    timed(out, [&] { return check_moore_penrose(n); });
    timed(out, [&] { return check_edm_decomposition(n); });

    SpectrumReport spectrum;
    timed(out, [&] {
        spectrum = spectrum_report(n, opts.tol.zero);
        return check_spectral_trace(spectrum, opts.tol);
    });
    timed(out, [&] { return check_psd(spectrum, opts.tol); });
    timed(out, [&] { return check_d_inertia(spectrum, opts.tol); });
    timed(out, [&] { return check_interlacing(spectrum, opts.tol); });
    timed(out, [&] { return check_edm_predicate(n, opts.tol); });
    timed(out, [&] { return check_pseudo_inverse_spectrum(spectrum); });
    return out;
}

ReportSummary VerificationReport::summary() const
{
    ReportSummary s;
    for (const auto& t : checks) {
        switch (t.check.status) {
        case CheckStatus::pass: ++s.passed; break;
        case CheckStatus::fail: ++s.failed; break;
        case CheckStatus::not_applicable: ++s.not_applicable; break;
        }
    }
    return s;
}

VerificationReport verify_range(std::size_t n_min, std::size_t n_max, const VerifyOptions& opts, nlohmann::json config)
{
    VerificationReport report;
    report.config = std::move(config);

    std::vector<std::size_t> ns;
    for (std::size_t n = n_min; n <= n_max; ++n) ns.push_back(n);
    // Largest first so the tail of the schedule is short.
    std::sort(ns.begin(), ns.end(), std::greater<>());

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < ns.size(); i = next++) {
            auto checks = run_checks(ns[i], opts);
            const std::lock_guard lock(mu);
            for (auto& c : checks) report.checks.push_back(std::move(c));
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(ns.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(report.checks.begin(), report.checks.end(), [](const TimedCheck& a, const TimedCheck& b) {
        return std::tie(a.check.n, a.check.name) < std::tie(b.check.n, b.check.name);
    });
    return report;
}

nlohmann::json to_json(const VerificationReport& r, bool include_header)
{
    nlohmann::json j;
    if (include_header) {
        auto timing = nlohmann::json::array();
        for (const auto& t : r.checks) timing.push_back({{"n", t.check.n}, {"name", t.check.name}, {"ms", t.wall_ms}});
        j["header"] = {{"generated_at", iso_now()}, {"timing_ms", timing}};
    }
    j["tool"] = "wheeldist";
    j["version"] = r.version;
    j["config"] = r.config;
    auto checks = nlohmann::json::array();
    for (const auto& t : r.checks) checks.push_back(to_json(t.check));
    j["checks"] = checks;
    const ReportSummary s = r.summary();
    j["summary"] = {{"total", r.checks.size()}, {"passed", s.passed}, {"failed", s.failed},
                    {"not_applicable", s.not_applicable}};
    return j;
}

std::string to_csv(const VerificationReport& r)
{
    std::ostringstream os;
    os << "n,name,status,witness\n";
    for (const auto& t : r.checks) {
        os << t.check.n << ',' << t.check.name << ',' << to_string(t.check.status) << ',';
        if (t.check.witness) os << csv_quote(t.check.witness->dump());
        os << '\n';
    }
    return os.str();
}

}  // namespace wheeldist
