#pragma once

#include "wheeldist/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace wheeldist {

/// Fixed-length column vector of exact rationals.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t size, const BigRational& fill = BigRational(0)) : v_(size, fill) {}
    Vector(std::initializer_list<BigRational> values) : v_(values) {}
    explicit Vector(std::vector<BigRational> values) : v_(std::move(values)) {}

    static Vector ones(std::size_t size) { return Vector(size, BigRational(1)); }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const BigRational& operator[](std::size_t i) const { return v_[i]; }
    BigRational& operator[](std::size_t i) { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    BigRational sum() const;
    BigRational dot(const Vector& other) const;

    Vector& operator+=(const Vector& o);
    Vector& operator*=(const BigRational& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator*(const BigRational& s, Vector v) { return v *= s; }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<BigRational> v_;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const BigRational& fill = BigRational(0));
    /// Row-wise literal, e.g. Matrix{{0, 1}, {1, 0}}. All rows must have equal length.
    Matrix(std::initializer_list<std::initializer_list<BigRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols);
    static Matrix diagonal(const Vector& d);
    /// u v'
    static Matrix outer(const Vector& u, const Vector& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const BigRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    BigRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    Vector diag() const;
    Vector row_sums() const;
    Vector col_sums() const;
    BigRational trace() const;

    Matrix transpose() const;
    /// Copy with row i and column j removed.
    Matrix minor_matrix(std::size_t i, std::size_t j) const;
    /// Copy of the block [r0, r0+rows) x [c0, c0+cols).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    bool is_symmetric() const;
    bool is_hollow() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const BigRational& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const BigRational& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);
    /// Row vector times matrix: x' A, returned as a column vector.
    friend Vector operator*(const Vector& x, const Matrix& a);

    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Product of every denominator's lcm with the entries; the integer
    /// matrix and the scale satisfy A = scaled / scale.
    std::vector<mpz_class> scaled_integers(mpz_class& scale) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> a_;
};

/// Generator of a circulant matrix Circ(c'). Row k of the materialized
/// matrix is (T^{k-1} c)', T the cyclic right shift.
struct CirculantSpec {
    Vector generator;
};

/// (v_m, v_1, ..., v_{m-1}). Throws std::invalid_argument("empty").
Vector shift(const Vector& v);

/// Materializes Circ(c'). Throws std::invalid_argument on an empty generator.
Matrix circulant(const CirculantSpec& spec);

/// Generator of Circ(a) * Circ(b), namely a' Circ(b).
CirculantSpec circ_mul(const CirculantSpec& a, const CirculantSpec& b);

/// Rational Gauss-Jordan with first-nonzero pivoting.
/// Throws std::domain_error("singular") when m has no inverse.
Matrix gauss_jordan_inverse(const Matrix& m);

/// Exact determinant by Bareiss fraction-free elimination.
BigRational determinant(const Matrix& m);

/// (-1)^{i+j} det(m with row i and column j deleted); 0-based indices.
BigRational cofactor(const Matrix& m, std::size_t i, std::size_t j);

/// Matrix of cofactors transposed.
Matrix adjugate(const Matrix& m);

/// Exact rank by fraction-free row reduction.
std::size_t rank(const Matrix& m);

/// v_i = v_{m+2-i} for i = 2..m (1-based); i.e. v[1..] is a palindrome.
bool has_tail_symmetry(const Vector& v);

/// First (row, col) where a and b differ, if any. Shapes must agree.
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix& a, const Matrix& b);

// Serialization. Rationals are strings in "p/q" form.
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);
Vector vector_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);
/// One line per row, cells separated by ',' and terminated by '\n'.
std::string to_csv(const Matrix& m);

}  // namespace wheeldist
