#include "wheeldist/theorems.hpp"

#include <stdexcept>

namespace wheeldist {

namespace {

void require_even(std::size_t n)
{
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("even n required");
}

TheoremCheck from_witness(std::string name, std::size_t n, std::optional<nlohmann::json> witness)
{
    if (witness) return check_failed(std::move(name), n, std::move(*witness));
    return check_passed(std::move(name), n);
}

nlohmann::json labelled(std::string what, nlohmann::json detail)
{
    detail["check"] = std::move(what);
    return detail;
}

Matrix centering(std::size_t n)
{
    return Matrix::identity(n) - BigRational(1, static_cast<long>(n)) * Matrix::ones(n, n);
}

}  // namespace

TheoremCheck check_passed(std::string name, std::size_t n)
{
    return TheoremCheck{std::move(name), n, CheckStatus::pass, std::nullopt};
}

TheoremCheck check_failed(std::string name, std::size_t n, nlohmann::json witness)
{
    return TheoremCheck{std::move(name), n, CheckStatus::fail, std::move(witness)};
}

TheoremCheck check_not_applicable(std::string name, std::size_t n, std::string reason)
{
    return TheoremCheck{std::move(name), n, CheckStatus::not_applicable, nlohmann::json{{"reason", std::move(reason)}}};
}

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    }
    return "fail";
}

nlohmann::json to_json(const TheoremCheck& c)
{
    nlohmann::json j{{"name", c.name}, {"n", c.n}, {"passed", c.passed()}, {"status", to_string(c.status)}};
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

TheoremCheck theorem_check_from_json(const nlohmann::json& j)
{
    TheoremCheck c;
    c.name = j.at("name").get<std::string>();
    c.n = j.at("n").get<std::size_t>();
    const auto status = j.value("status", j.at("passed").get<bool>() ? "pass" : "fail");
    if (status == "pass") c.status = CheckStatus::pass;
    else if (status == "not-applicable") c.status = CheckStatus::not_applicable;
    else c.status = CheckStatus::fail;
    if (j.contains("witness")) c.witness = j.at("witness");
    return c;
}

std::optional<nlohmann::json> matrix_witness(const Matrix& expected, const Matrix& actual)
{
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
        return nlohmann::json{{"shape_expected", {expected.rows(), expected.cols()}},
                              {"shape_actual", {actual.rows(), actual.cols()}}};
    const auto at = first_mismatch(expected, actual);
    if (!at) return std::nullopt;
    const auto [i, j] = *at;
    return nlohmann::json{{"row", i + 1}, {"col", j + 1}, {"expected", expected(i, j).str()}, {"actual", actual(i, j).str()}};
}

std::optional<nlohmann::json> vector_witness(const Vector& expected, const Vector& actual)
{
    if (expected.size() != actual.size())
        return nlohmann::json{{"length_expected", expected.size()}, {"length_actual", actual.size()}};
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (expected[i] != actual[i])
            return nlohmann::json{{"index", i + 1}, {"expected", to_json(expected)}, {"actual", to_json(actual)}};
    return std::nullopt;
}

InverseDecomposition inverse_from(const Matrix& laplacian, const Vector& w)
{
    const std::size_t n = laplacian.rows();
    InverseDecomposition out;
    out.laplacian_part = BigRational(-1, 2) * laplacian;
    out.rank_one_part = BigRational(4, static_cast<long>(n) - 1) * Matrix::outer(w, w);
    out.total = out.laplacian_part + out.rank_one_part;
    return out;
}

InverseDecomposition closed_form_inverse(std::size_t n)
{
    if (n % 2 != 0) throw std::invalid_argument("no inverse formula (det D = 0)");
    require_even(n);
    return inverse_from(special_laplacian(n).matrix, w_vector(n));
}

TheoremCheck check_ld_identity(std::size_t n)
{
    require_even(n);
    return check_ld_identity(n, special_laplacian(n).matrix, distance_matrix(n).matrix, w_vector(n));
}

TheoremCheck check_ld_identity(std::size_t n, const Matrix& laplacian, const Matrix& distance, const Vector& w)
{
    const Matrix lhs = laplacian * distance + BigRational(2) * Matrix::identity(n);
    const Matrix rhs = BigRational(2) * Matrix::outer(w, Vector::ones(n));
    return from_witness("ld_identity", n, matrix_witness(rhs, lhs));
}

TheoremCheck check_dw_identity(std::size_t n)
{
    require_even(n);
    return check_dw_identity(n, distance_matrix(n).matrix, w_vector(n));
}

TheoremCheck check_dw_identity(std::size_t n, const Matrix& distance, const Vector& w)
{
    const Vector expected(n, BigRational(static_cast<long>(n) - 1, 4));
    return from_witness("dw_identity", n, vector_witness(expected, distance * w));
}

TheoremCheck check_inverse_formula(std::size_t n)
{
    require_even(n);
    return check_inverse_formula(n, closed_form_inverse(n).total, distance_matrix(n).matrix);
}

TheoremCheck check_inverse_formula(std::size_t n, const Matrix& inverse, const Matrix& distance)
{
    return from_witness("inverse_formula", n, matrix_witness(Matrix::identity(n), inverse * distance));
}

TheoremCheck check_inverse_oracle(std::size_t n)
{
    require_even(n);
    const Matrix oracle = gauss_jordan_inverse(distance_matrix(n).matrix);
    return from_witness("inverse_oracle", n, matrix_witness(oracle, closed_form_inverse(n).total));
}

TheoremCheck check_inverse_row_sums(std::size_t n)
{
    require_even(n);
    const Vector w = w_vector(n);
    const InverseDecomposition inv = closed_form_inverse(n);
    const Vector expected = BigRational(4, static_cast<long>(n) - 1) * w;
    if (auto wit = vector_witness(expected, Vector::ones(n) * inv.total))
        return check_failed("inverse_row_sums", n, labelled("ones_times_inverse", *wit));
    if (w.sum() != BigRational(1))
        return check_failed("inverse_row_sums", n, {{"check", "ones_dot_w"}, {"actual", w.sum().str()}});
    if (const auto r = rank(inv.rank_one_part); r != 1)
        return check_failed("inverse_row_sums", n, {{"check", "rank_ww"}, {"actual", r}});
    return check_passed("inverse_row_sums", n);
}

TheoremCheck check_rank_and_kernel(std::size_t n)
{
    require_even(n);
    return check_rank_and_kernel(n, special_laplacian(n).matrix);
}

TheoremCheck check_rank_and_kernel(std::size_t n, const Matrix& laplacian)
{
    const Vector zero(n);
    if (auto wit = vector_witness(zero, laplacian.row_sums()))
        return check_failed("rank_and_kernel", n, labelled("row_sums", *wit));
    if (auto wit = vector_witness(zero, laplacian.col_sums()))
        return check_failed("rank_and_kernel", n, labelled("col_sums", *wit));
    if (const auto r = rank(laplacian); r != n - 1)
        return check_failed("rank_and_kernel", n, {{"check", "rank"}, {"expected", n - 1}, {"actual", r}});
    return check_passed("rank_and_kernel", n);
}

TheoremCheck check_laplacian_structure(std::size_t n)
{
    require_even(n);
    return check_laplacian_structure(n, special_laplacian(n).matrix);
}

TheoremCheck check_laplacian_structure(std::size_t n, const Matrix& laplacian)
{
    if (auto wit = matrix_witness(laplacian.transpose(), laplacian))
        return check_failed("laplacian_structure", n, labelled("symmetric", *wit));
    const Vector diag(n, BigRational(static_cast<long>(n) - 1, 2));
    if (auto wit = vector_witness(diag, laplacian.diag()))
        return check_failed("laplacian_structure", n, labelled("diagonal", *wit));
    return check_passed("laplacian_structure", n);
}

Matrix pseudo_inverse_from_distance(std::size_t n)
{
    require_even(n);
    return pseudo_inverse_from_distance(distance_matrix(n).matrix);
}

Matrix pseudo_inverse_from_distance(const Matrix& distance)
{
    const Matrix p = centering(distance.rows());
    return BigRational(-1, 2) * (p * distance * p);
}

TheoremCheck check_moore_penrose(std::size_t n)
{
    require_even(n);
    return check_moore_penrose(n, special_laplacian(n).matrix, pseudo_inverse_from_distance(n));
}

TheoremCheck check_moore_penrose(std::size_t n, const Matrix& laplacian, const Matrix& pinv)
{
    const Matrix lx = laplacian * pinv;
    const Matrix xl = pinv * laplacian;
    if (auto wit = matrix_witness(laplacian, lx * laplacian))
        return check_failed("moore_penrose", n, labelled("A X A = A", *wit));
    if (auto wit = matrix_witness(pinv, xl * pinv))
        return check_failed("moore_penrose", n, labelled("X A X = X", *wit));
    if (auto wit = matrix_witness(lx.transpose(), lx))
        return check_failed("moore_penrose", n, labelled("(A X)' = A X", *wit));
    if (auto wit = matrix_witness(xl.transpose(), xl))
        return check_failed("moore_penrose", n, labelled("(X A)' = X A", *wit));
    if (auto wit = matrix_witness(centering(n), lx))
        return check_failed("moore_penrose", n, labelled("A X = I - J/n", *wit));
    return check_passed("moore_penrose", n);
}

TheoremCheck check_edm_decomposition(std::size_t n)
{
    require_even(n);
    return check_edm_decomposition(n, distance_matrix(n).matrix, pseudo_inverse_from_distance(n));
}

TheoremCheck check_edm_decomposition(std::size_t n, const Matrix& distance, const Matrix& pinv)
{
    const Matrix d = Matrix::diagonal(pinv.diag());
    const Matrix j = Matrix::ones(n, n);
    const Matrix rebuilt = d * j + j * d - BigRational(2) * pinv;
    return from_witness("edm_decomposition", n, matrix_witness(distance, rebuilt));
}

TheoremCheck check_cofactor_theorem(std::size_t n, std::size_t exhaustive_limit)
{
    require_even(n);
    return check_cofactor_theorem(n, special_laplacian(n).matrix, w_vector(n), exhaustive_limit);
}

TheoremCheck check_cofactor_theorem(std::size_t n, const Matrix& laplacian, const Vector& w,
                                    std::size_t exhaustive_limit)
{
    const BigRational expected = pow2(n - 3);
    const auto mismatch = [&](std::size_t i, std::size_t j, const BigRational& got) {
        return check_failed("cofactor_theorem", n,
                            {{"check", "cofactor"}, {"row", i + 1}, {"col", j + 1},
                             {"expected", expected.str()}, {"actual", got.str()}});
    };

    if (n > exhaustive_limit) {
        for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 1}, {n - 1, n - 1}}) {
            const BigRational c = cofactor(laplacian, i, j);
            if (c != expected) return mismatch(i, j, c);
        }
        return check_passed("cofactor_theorem", n);
    }

    Matrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const BigRational c = cofactor(laplacian, i, j);
            if (c != expected) return mismatch(i, j, c);
            adj(j, i) = c;
        }

    // A = -L/2: det(A) = (-1/2)^n det(L), adj(A) = (-1/2)^{n-1} adj(L).
    BigRational scale(1);
    for (std::size_t k = 0; k + 1 < n; ++k) scale *= BigRational(-1, 2);
    const BigRational det_a = BigRational(-1, 2) * scale * determinant(laplacian);
    const Vector u = BigRational(4, static_cast<long>(n) - 1) * w;
    const BigRational lemma = det_a + scale * w.dot(adj * u);
    const BigRational target(1, 1 - static_cast<long>(n));
    if (lemma != target)
        return check_failed("cofactor_theorem", n,
                            {{"check", "determinant_lemma"}, {"expected", target.str()}, {"actual", lemma.str()}});
    return check_passed("cofactor_theorem", n);
}

TheoremCheck check_determinant_formula(std::size_t n)
{
    return check_determinant_formula(n, distance_matrix(n).matrix);
}

TheoremCheck check_determinant_formula(std::size_t n, const Matrix& distance)
{
    const BigRational expected = n % 2 == 0 ? BigRational(1 - static_cast<long>(n)) : BigRational(0);
    const BigRational got = determinant(distance);
    if (got != expected)
        return check_failed("determinant_formula", n, {{"expected", expected.str()}, {"actual", got.str()}});
    return check_passed("determinant_formula", n);
}

TheoremCheck check_odd_singular(std::size_t n)
{
    if (n % 2 == 0) return check_not_applicable("odd_singular", n, "even n: D is nonsingular");
    try {
        (void)gauss_jordan_inverse(distance_matrix(n).matrix);
    } catch (const std::domain_error&) {
        return check_passed("odd_singular", n);
    }
    return check_failed("odd_singular", n, {{"reason", "Gauss-Jordan produced an inverse"}});
}

TheoremCheck check_distance_bfs(std::size_t n)
{
    const Matrix bfs = bfs_distances(build_wheel(n));
    return from_witness("distance_bfs", n, matrix_witness(bfs, distance_matrix(n).matrix));
}

TheoremCheck check_q_rows(std::size_t n)
{
    require_even(n);
    if (n < 6) return check_not_applicable("q_rows", n, "no closed-form row products for n = 4");
    const Matrix rim = circulant(rim_distance_generator(n));
    for (std::size_t k = 1; k <= n / 2 - 1; ++k) {
        const Vector closed = q_row_closed_form(n, k);
        if (auto wit = vector_witness(q_row_product(rim, n, k), closed)) {
            (*wit)["k"] = k;
            return check_failed("q_rows", n, std::move(*wit));
        }
        if (!has_tail_symmetry(closed))
            return check_failed("q_rows", n, {{"check", "tail_symmetry"}, {"k", k}, {"vector", to_json(closed)}});
    }
    return check_passed("q_rows", n);
}

TheoremCheck check_f_vector(std::size_t n)
{
    require_even(n);
    if (n < 6) return check_not_applicable("f_vector", n, "closed form degenerates for n = 4");
    const Vector closed = f_vector(n);
    if (auto wit = vector_witness(f_vector_direct(n), closed)) return check_failed("f_vector", n, std::move(*wit));
    if (!has_tail_symmetry(closed))
        return check_failed("f_vector", n, {{"check", "tail_symmetry"}, {"vector", to_json(closed)}});
    return check_passed("f_vector", n);
}

TheoremCheck check_alternating_sum(std::size_t n)
{
    const auto [lhs, rhs] = alternating_sum_identity(n);
    if (lhs != rhs)
        return check_failed("alternating_sum", n, {{"check", "identity"}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
    // Every row of a circulant is a permutation of its generator, so
    // C_k 1 = 2 * 1 reduces to the generator summing to 2.
    for (std::size_t k = 1; k <= n / 2 - 1; ++k) {
        const BigRational s = c_vector(n, k).sum();
        if (s != BigRational(2))
            return check_failed("alternating_sum", n,
                                {{"check", "block_row_sums"}, {"k", k}, {"expected", "2"}, {"actual", s.str()}});
    }
    return check_passed("alternating_sum", n);
}

}  // namespace wheeldist
