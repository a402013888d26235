#pragma once

#include "wheeldist/matrix.hpp"
#include "wheeldist/theorems.hpp"

#include <json.hpp>

#include <cstddef>
#include <vector>

namespace wheeldist {

struct SpectralTolerances {
    double zero = 1e-9;       // zero detection, relative to spectral radius
    double interlace = 1e-8;  // additive slack in the interlacing chain, relative
    double trace = 1e-9;      // eigenvalue sum vs exact trace, relative
};

struct JacobiOptions {
    int max_sweeps = 100;
    double off_diagonal_rel = 1e-12;
};

/// Eigenvalues of a symmetric matrix given as a row-major float copy,
/// sorted descending. Cyclic Jacobi, row-cyclic order.
/// Throws std::runtime_error if the sweep limit is reached.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, const JacobiOptions& opts = {});

/// Exact symmetry check, then Jacobi on a float copy.
/// Throws std::invalid_argument("matrix not symmetric").
std::vector<double> symmetric_eigenvalues(const Matrix& m, const JacobiOptions& opts = {});

struct Inertia {
    std::size_t positive = 0;
    std::size_t zero = 0;
    std::size_t negative = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Counts with |x| <= tol classified as zero.
Inertia inertia(const std::vector<double>& eigenvalues, double tol);

double spectral_radius(const std::vector<double>& eigenvalues);

struct SpectrumReport {
    std::size_t n = 0;
    std::vector<double> d_eigenvalues;  // mu, descending
    std::vector<double> l_eigenvalues;  // lambda, descending
    double tolerance = 1e-9;

    /// -2/lambda_k for k = 1..n-1.
    std::vector<double> interlacing_chain() const;
};

/// Spectra of D and L~ for even n >= 4.
SpectrumReport spectrum_report(std::size_t n, double tolerance = 1e-9);

nlohmann::json to_json(const SpectrumReport& r);

/// Smallest eigenvalue >= -tol * lambda_1 and exactly one |lambda| <= tol * lambda_1.
TheoremCheck check_psd(std::size_t n, const SpectralTolerances& tol = {});
TheoremCheck check_psd(const SpectrumReport& r, const SpectralTolerances& tol = {});

/// 0 > -2/lambda_1 >= mu_2 >= -2/lambda_2 >= ... >= -2/lambda_{n-1} >= mu_n.
TheoremCheck check_interlacing(std::size_t n, const SpectralTolerances& tol = {});
TheoremCheck check_interlacing(const SpectrumReport& r, const SpectralTolerances& tol = {});

/// Even n: inertia of D is (1, 0, n-1). Odd n: D has a zero eigenvalue.
TheoremCheck check_d_inertia(std::size_t n, const SpectralTolerances& tol = {});
TheoremCheck check_d_inertia(const SpectrumReport& r, const SpectralTolerances& tol = {});

/// All eigenvalues of PDP are <= tol * spectral radius of D.
TheoremCheck check_edm_predicate(std::size_t n, const SpectralTolerances& tol = {});
/// Same predicate for an arbitrary distance matrix (e.g. a non-wheel control).
TheoremCheck edm_predicate(const Matrix& distance, const SpectralTolerances& tol = {});

/// Eigenvalue sums of D and L~ match their exact traces.
TheoremCheck check_spectral_trace(std::size_t n, const SpectralTolerances& tol = {});
TheoremCheck check_spectral_trace(const SpectrumReport& r, const SpectralTolerances& tol = {});

/// Eigenvalues of -PDP/2 are {0} and the reciprocals 1/lambda_k, within
/// 1e-8 relative.
TheoremCheck check_pseudo_inverse_spectrum(std::size_t n);
TheoremCheck check_pseudo_inverse_spectrum(const SpectrumReport& r);

}  // namespace wheeldist
