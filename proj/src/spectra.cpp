#include "wheeldist/spectra.hpp"

#include "wheeldist/wheel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace wheeldist {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, const JacobiOptions& opts)
{
    if (a.size() != n * n) throw std::invalid_argument("jacobi: size mismatch");
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double frob2 = 0.0;
    for (double x : a) frob2 += x * x;
    const double target = opts.off_diagonal_rel * std::sqrt(frob2);

    const auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    bool converged = false;
    for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
        if (off_norm() <= target) {
            converged = true;
            break;
        }
        if (sweep == opts.max_sweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
    }
    if (!converged) throw std::runtime_error("jacobi: no convergence");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m, const JacobiOptions& opts)
{
    if (!m.is_symmetric()) throw std::invalid_argument("matrix not symmetric");
    const std::size_t n = m.rows();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).to_double();
    return jacobi_eigenvalues(std::move(a), n, opts);
}

Inertia inertia(const std::vector<double>& eigenvalues, double tol)
{
    Inertia in;
    for (double x : eigenvalues) {
        if (std::abs(x) <= tol) ++in.zero;
        else if (x > 0) ++in.positive;
        else ++in.negative;
    }
    return in;
}

double spectral_radius(const std::vector<double>& eigenvalues)
{
    double r = 0.0;
    for (double x : eigenvalues) r = std::max(r, std::abs(x));
    return r;
}

std::vector<double> SpectrumReport::interlacing_chain() const
{
    std::vector<double> chain;
    for (std::size_t k = 0; k + 1 < l_eigenvalues.size(); ++k) chain.push_back(-2.0 / l_eigenvalues[k]);
    return chain;
}

SpectrumReport spectrum_report(std::size_t n, double tolerance)
{
    SpectrumReport r;
    r.n = n;
    r.l_eigenvalues = symmetric_eigenvalues(special_laplacian(n).matrix);
    r.d_eigenvalues = symmetric_eigenvalues(distance_matrix(n).matrix);
    r.tolerance = tolerance;
    return r;
}

nlohmann::json to_json(const SpectrumReport& r)
{
    return {{"n", r.n},
            {"mu", r.d_eigenvalues},
            {"lambda", r.l_eigenvalues},
            {"chain", r.interlacing_chain()},
            {"tol", r.tolerance}};
}

namespace {

nlohmann::json floats(const std::vector<double>& v) { return nlohmann::json(v); }

}  // namespace

TheoremCheck check_psd(std::size_t n, const SpectralTolerances& tol)
{
    SpectrumReport r;
    r.n = n;
    r.l_eigenvalues = symmetric_eigenvalues(special_laplacian(n).matrix);
    return check_psd(r, tol);
}

TheoremCheck check_psd(const SpectrumReport& r, const SpectralTolerances& tol)
{
    const auto& lambda = r.l_eigenvalues;
    const double eps = tol.zero * lambda.front();
    const std::size_t near_zero =
        std::count_if(lambda.begin(), lambda.end(), [&](double x) { return std::abs(x) <= eps; });
    if (lambda.back() < -eps || near_zero != 1)
        return check_failed("psd", r.n, {{"min_eigenvalue", lambda.back()}, {"near_zero_count", near_zero},
                                         {"lambda", floats(lambda)}});
    return check_passed("psd", r.n);
}

TheoremCheck check_interlacing(std::size_t n, const SpectralTolerances& tol)
{
    return check_interlacing(spectrum_report(n, tol.zero), tol);
}

TheoremCheck check_interlacing(const SpectrumReport& r, const SpectralTolerances& tol)
{
    const auto& mu = r.d_eigenvalues;
    const auto& lambda = r.l_eigenvalues;
    const std::size_t n = r.n;
    const auto fail = [&](std::string what, std::size_t k) {
        return check_failed("interlacing", n,
                            {{"violation", std::move(what)}, {"k", k}, {"mu", floats(mu)}, {"lambda", floats(lambda)}});
    };

    if (lambda[n - 2] <= tol.zero * lambda.front()) return fail("lambda_{n-1} not positive", n - 1);
    const std::vector<double> chain = r.interlacing_chain();
    const double slack = tol.interlace * std::max(std::abs(mu[n - 1]), 2.0 / lambda[n - 2]);

    if (!(chain[0] < -slack)) return fail("0 > -2/lambda_1", 1);
    // Indices below are 0-based: chain[k] = -2/lambda_{k+1}, mu[k] = mu_{k+1}.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (chain[k] < mu[k + 1] - slack) return fail("-2/lambda_k >= mu_{k+1}", k + 1);
        if (k > 0 && mu[k] < chain[k] - slack) return fail("mu_k >= -2/lambda_k", k + 1);
    }
    return check_passed("interlacing", n);
}

TheoremCheck check_d_inertia(std::size_t n, const SpectralTolerances& tol)
{
    SpectrumReport r;
    r.n = n;
    r.d_eigenvalues = symmetric_eigenvalues(distance_matrix(n).matrix);
    return check_d_inertia(r, tol);
}

TheoremCheck check_d_inertia(const SpectrumReport& r, const SpectralTolerances& tol)
{
    const auto& mu = r.d_eigenvalues;
    const Inertia in = inertia(mu, tol.zero * spectral_radius(mu));
    const bool ok = r.n % 2 == 0 ? in == Inertia{1, 0, r.n - 1} : in.zero >= 1;
    if (!ok)
        return check_failed("d_inertia", r.n,
                            {{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}, {"mu", floats(mu)}});
    return check_passed("d_inertia", r.n);
}

TheoremCheck check_edm_predicate(std::size_t n, const SpectralTolerances& tol)
{
    if (n % 2 != 0) throw std::invalid_argument("even n required");
    return edm_predicate(distance_matrix(n).matrix, tol);
}

TheoremCheck edm_predicate(const Matrix& distance, const SpectralTolerances& tol)
{
    const std::size_t n = distance.rows();
    const Matrix p = Matrix::identity(n) - BigRational(1, static_cast<long>(n)) * Matrix::ones(n, n);
    const auto centered = symmetric_eigenvalues(p * distance * p);
    const double radius = spectral_radius(symmetric_eigenvalues(distance));
    if (centered.front() > tol.zero * radius)
        return check_failed("edm_predicate", n, {{"max_centered_eigenvalue", centered.front()},
                                                 {"spectral_radius", radius}});
    return check_passed("edm_predicate", n);
}

TheoremCheck check_spectral_trace(std::size_t n, const SpectralTolerances& tol)
{
    return check_spectral_trace(spectrum_report(n, tol.zero), tol);
}

TheoremCheck check_spectral_trace(const SpectrumReport& r, const SpectralTolerances& tol)
{
    const auto sum = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    };
    const auto within = [&](double got, double exact, double scale) {
        return std::abs(got - exact) <= tol.trace * std::max(std::abs(exact), scale);
    };
    // tr D = 0, so the comparison is scaled by the spectral radius instead.
    const double d_sum = sum(r.d_eigenvalues);
    if (!within(d_sum, 0.0, spectral_radius(r.d_eigenvalues)))
        return check_failed("spectral_trace", r.n, {{"matrix", "D"}, {"eigen_sum", d_sum}, {"trace", "0"}});
    const BigRational l_trace = special_laplacian(r.n).matrix.trace();
    const double l_sum = sum(r.l_eigenvalues);
    if (!within(l_sum, l_trace.to_double(), 0.0))
        return check_failed("spectral_trace", r.n, {{"matrix", "L"}, {"eigen_sum", l_sum}, {"trace", l_trace.str()}});
    return check_passed("spectral_trace", r.n);
}

TheoremCheck check_pseudo_inverse_spectrum(std::size_t n)
{
    SpectrumReport r;
    r.n = n;
    r.l_eigenvalues = symmetric_eigenvalues(special_laplacian(n).matrix);
    return check_pseudo_inverse_spectrum(r);
}

TheoremCheck check_pseudo_inverse_spectrum(const SpectrumReport& r)
{
    const auto pinv = symmetric_eigenvalues(pseudo_inverse_from_distance(r.n));
    std::vector<double> expected{0.0};
    for (std::size_t k = 0; k + 1 < r.l_eigenvalues.size(); ++k) expected.push_back(1.0 / r.l_eigenvalues[k]);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const double scale = spectral_radius(expected);
    for (std::size_t k = 0; k < expected.size(); ++k)
        if (std::abs(pinv[k] - expected[k]) > 1e-8 * (expected[k] == 0.0 ? scale : std::abs(expected[k])))
            return check_failed("pseudo_inverse_spectrum", r.n,
                                {{"index", k + 1}, {"expected", expected[k]}, {"actual", pinv[k]}});
    return check_passed("pseudo_inverse_spectrum", r.n);
}

}  // namespace wheeldist
