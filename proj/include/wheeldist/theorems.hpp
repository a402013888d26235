#pragma once

#include "wheeldist/matrix.hpp"
#include "wheeldist/wheel.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace wheeldist {

/// D^{-1} split into its Laplacian part and its rank-one correction.
struct InverseDecomposition {
    Matrix laplacian_part;  // -L~/2
    Matrix rank_one_part;   // (4/(n-1)) w w'
    Matrix total;
};

enum class CheckStatus { pass, fail, not_applicable };

/// Outcome of one exact or numerical check at one n. `witness` is set
/// whenever the check did not pass (for not-applicable checks it carries
/// the reason).
struct TheoremCheck {
    std::string name;
    std::size_t n = 0;
    CheckStatus status = CheckStatus::fail;
    std::optional<nlohmann::json> witness;

    bool passed() const { return status == CheckStatus::pass; }
};

TheoremCheck check_passed(std::string name, std::size_t n);
TheoremCheck check_failed(std::string name, std::size_t n, nlohmann::json witness);
TheoremCheck check_not_applicable(std::string name, std::size_t n, std::string reason);

const char* to_string(CheckStatus s);
nlohmann::json to_json(const TheoremCheck& c);
TheoremCheck theorem_check_from_json(const nlohmann::json& j);

/// Witness describing the first entry where `actual` differs from `expected`
/// (1-based labels), or nullopt if they agree.
std::optional<nlohmann::json> matrix_witness(const Matrix& expected, const Matrix& actual);
std::optional<nlohmann::json> vector_witness(const Vector& expected, const Vector& actual);

/// -L/2 + (4/(n-1)) w w' for an arbitrary L and w (n = order of L).
InverseDecomposition inverse_from(const Matrix& laplacian, const Vector& w);

/// Closed-form inverse of the wheel distance matrix.
/// Throws std::invalid_argument("no inverse formula (det D = 0)") for odd n.
InverseDecomposition closed_form_inverse(std::size_t n);

/// L~ D + 2I = 2 w 1'.
TheoremCheck check_ld_identity(std::size_t n);
TheoremCheck check_ld_identity(std::size_t n, const Matrix& laplacian, const Matrix& distance, const Vector& w);

/// D w = ((n-1)/4) 1.
TheoremCheck check_dw_identity(std::size_t n);
TheoremCheck check_dw_identity(std::size_t n, const Matrix& distance, const Vector& w);

/// (closed-form inverse) * D = I.
TheoremCheck check_inverse_formula(std::size_t n);
TheoremCheck check_inverse_formula(std::size_t n, const Matrix& inverse, const Matrix& distance);

/// Closed-form inverse equals the Gauss-Jordan inverse entrywise.
TheoremCheck check_inverse_oracle(std::size_t n);

/// 1' D^{-1} = (4/(n-1)) w', 1'w = 1, rank(ww') = 1.
TheoremCheck check_inverse_row_sums(std::size_t n);

/// Exact rank n-1 with L 1 = 0 and 1' L = 0.
TheoremCheck check_rank_and_kernel(std::size_t n);
TheoremCheck check_rank_and_kernel(std::size_t n, const Matrix& laplacian);

/// Symmetric with diagonal (n-1)/2.
TheoremCheck check_laplacian_structure(std::size_t n);
TheoremCheck check_laplacian_structure(std::size_t n, const Matrix& laplacian);

/// -PDP/2 with P = I - J/n.
Matrix pseudo_inverse_from_distance(std::size_t n);
Matrix pseudo_inverse_from_distance(const Matrix& distance);

/// The four Moore-Penrose equations for (L~, -PDP/2) and L~ L~^+ = P.
TheoremCheck check_moore_penrose(std::size_t n);
TheoremCheck check_moore_penrose(std::size_t n, const Matrix& laplacian, const Matrix& pinv);

/// D = diag(L^+) J + J diag(L^+) - 2 L^+.
TheoremCheck check_edm_decomposition(std::size_t n);
TheoremCheck check_edm_decomposition(std::size_t n, const Matrix& distance, const Matrix& pinv);

/// Every cofactor of L~ equals 2^{n-3}. All (i, j) are checked when
/// n <= exhaustive_limit, otherwise (1,1), (1,2) and (n,n). For n <=
/// exhaustive_limit the determinant-lemma route
/// det(A) + w' adj(A) (4/(n-1)) w = 1/(1-n), A = -L~/2, is also checked.
TheoremCheck check_cofactor_theorem(std::size_t n, std::size_t exhaustive_limit = 16);
TheoremCheck check_cofactor_theorem(std::size_t n, const Matrix& laplacian, const Vector& w,
                                    std::size_t exhaustive_limit = 16);

/// det D = 1-n for even n, 0 for odd n.
TheoremCheck check_determinant_formula(std::size_t n);
TheoremCheck check_determinant_formula(std::size_t n, const Matrix& distance);

/// Odd n: Gauss-Jordan must report the distance matrix singular.
TheoremCheck check_odd_singular(std::size_t n);

/// Closed-form D equals the BFS distance matrix of W_n.
TheoremCheck check_distance_bfs(std::size_t n);

/// For every k, the case-table q^k equals c^k' D~ and has tail symmetry.
TheoremCheck check_q_rows(std::size_t n);

/// Closed-form f equals the direct alternating sum and has tail symmetry.
TheoremCheck check_f_vector(std::size_t n);

/// The alternating-sum identity and C_k 1 = 2 1 for all k.
TheoremCheck check_alternating_sum(std::size_t n);

}  // namespace wheeldist
