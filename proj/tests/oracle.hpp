#pragma once

// Test-only reference computations. These deliberately avoid the library's
// scaled-integer product and elimination code paths.

#include "wheeldist/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace wheeldist::oracle {

inline Matrix naive_multiply(const Matrix& a, const Matrix& b)
{
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            BigRational s(0);
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

// Circ(c') built straight from the textbook layout: entry (i, j) = c_{j-i mod m}.
inline Matrix textbook_circulant(const std::vector<long>& c)
{
    const std::size_t m = c.size();
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = c[(m + j - i) % m];
    return out;
}

// Laplace expansion along the first row; only for small orders.
inline BigRational laplace_determinant(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    BigRational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        const BigRational minor = laplace_determinant(m.minor_matrix(0, j));
        det += (j % 2 == 0 ? m(0, j) : -m(0, j)) * minor;
    }
    return det;
}

inline Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = BigRational(num(rng), den(rng));
    return m;
}

}  // namespace wheeldist::oracle
