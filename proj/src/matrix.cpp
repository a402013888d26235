#include "wheeldist/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace wheeldist {

// ---------------------------------------------------------------- Vector

BigRational Vector::sum() const
{
    mpq_class s;
    for (const auto& x : v_) s += x.raw();
    return BigRational(s);
}

BigRational Vector::dot(const Vector& other) const
{
    if (size() != other.size()) throw std::invalid_argument("dot: length mismatch");
    mpq_class s;
    for (std::size_t i = 0; i < size(); ++i) s += v_[i].raw() * other.v_[i].raw();
    return BigRational(s);
}

Vector& Vector::operator+=(const Vector& o)
{
    if (size() != o.size()) throw std::invalid_argument("vector add: length mismatch");
    for (std::size_t i = 0; i < size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Vector& Vector::operator*=(const BigRational& s)
{
    for (auto& x : v_) x *= s;
    return *this;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, const BigRational& fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill)
{
}

Matrix::Matrix(std::initializer_list<std::initializer_list<BigRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, BigRational(1)); }

Matrix Matrix::diagonal(const Vector& d)
{
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v)
{
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(std::vector<BigRational>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const
{
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Vector Matrix::diag() const
{
    const std::size_t k = std::min(rows_, cols_);
    Vector d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = (*this)(i, i);
    return d;
}

Vector Matrix::row_sums() const
{
    Vector s(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j).raw();
        s[i] = BigRational(acc);
    }
    return s;
}

Vector Matrix::col_sums() const { return transpose().row_sums(); }

BigRational Matrix::trace() const { return diag().sum(); }

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::minor_matrix(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_) throw std::out_of_range("minor index out of range");
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m(mr, mc++) = (*this)(r, c);
        }
        ++mr;
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const
{
    if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("block out of range");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

bool Matrix::is_symmetric() const
{
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::is_hollow() const
{
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, i).is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const BigRational& s)
{
    for (auto& x : a_) x *= s;
    return *this;
}

std::vector<mpz_class> Matrix::scaled_integers(mpz_class& scale) const
{
    scale = 1;
    for (const auto& x : a_) {
        const mpz_class den = x.denominator();
        if (den != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(x.numerator() * (scale / x.denominator()));
    return out;
}

namespace {

std::size_t max_bits(const std::vector<mpz_class>& v)
{
    std::size_t bits = 0;
    for (const auto& z : v) bits = std::max(bits, mpz_sizeinbase(z.get_mpz_t(), 2));
    return bits;
}

std::size_t bit_length(std::size_t k)
{
    std::size_t b = 0;
    while (k) {
        ++b;
        k >>= 1;
    }
    return b;
}

}  // namespace

// The product is formed on integer-scaled copies so the inner loop never
// canonicalizes. When every partial sum fits in 63 bits the accumulation
// runs on machine integers.
Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix multiply: shape mismatch");
    mpz_class sa, sb;
    const auto ia = a.scaled_integers(sa);
    const auto ib = b.scaled_integers(sb);
    const std::size_t n = a.rows_, k = a.cols_, m = b.cols_;
    const mpz_class scale = sa * sb;

    Matrix c(n, m);
    if (max_bits(ia) + max_bits(ib) + bit_length(k) < 62) {
        std::vector<std::int64_t> la(ia.size()), lb(ib.size());
        for (std::size_t t = 0; t < ia.size(); ++t) la[t] = ia[t].get_si();
        for (std::size_t t = 0; t < ib.size(); ++t) lb[t] = ib[t].get_si();
        std::vector<std::int64_t> acc(m);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t t = 0; t < k; ++t) {
                const std::int64_t x = la[i * k + t];
                if (x == 0) continue;
                const std::int64_t* brow = &lb[t * m];
                for (std::size_t j = 0; j < m; ++j) acc[j] += x * brow[j];
            }
            for (std::size_t j = 0; j < m; ++j)
                c(i, j) = BigRational(mpz_class(static_cast<long>(acc[j])), scale);
        }
        return c;
    }
    std::vector<mpz_class> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& z : acc) z = 0;
        for (std::size_t t = 0; t < k; ++t) {
            const mpz_class& x = ia[i * k + t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                mpz_addmul(acc[j].get_mpz_t(), x.get_mpz_t(), ib[t * m + j].get_mpz_t());
        }
        for (std::size_t j = 0; j < m; ++j) c(i, j) = BigRational(acc[j], scale);
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& x)
{
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        mpq_class acc;
        for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j).raw() * x[j].raw();
        y[i] = BigRational(acc);
    }
    return y;
}

Vector operator*(const Vector& x, const Matrix& a)
{
    if (a.rows_ != x.size()) throw std::invalid_argument("vector-matrix: shape mismatch");
    std::vector<mpq_class> acc(a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols_; ++j) acc[j] += x[i].raw() * a(i, j).raw();
    }
    Vector y(a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) y[j] = BigRational(acc[j]);
    return y;
}

// ---------------------------------------------------------------- circulants

Vector shift(const Vector& v)
{
    if (v.empty()) throw std::invalid_argument("empty");
    Vector out(v.size());
    out[0] = v[v.size() - 1];
    for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
}

Matrix circulant(const CirculantSpec& spec)
{
    const Vector& c = spec.generator;
    if (c.empty()) throw std::invalid_argument("empty");
    const std::size_t m = c.size();
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = c[(j + m - i) % m];
    return out;
}

CirculantSpec circ_mul(const CirculantSpec& a, const CirculantSpec& b)
{
    if (a.generator.size() != b.generator.size()) throw std::invalid_argument("circ_mul: length mismatch");
    if (a.generator.empty()) throw std::invalid_argument("empty");
    return CirculantSpec{a.generator * circulant(b)};
}

// ---------------------------------------------------------------- elimination

Matrix gauss_jordan_inverse(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    std::vector<mpq_class> a(n * n), inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m(i, j).raw();
            inv[i * n + j] = i == j ? 1 : 0;
        }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv * n + col]) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[col * n + j]);
                std::swap(inv[piv * n + j], inv[col * n + j]);
            }
        const mpq_class p = a[col * n + col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] /= p;
            inv[col * n + j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const mpq_class f = a[r * n + col];
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] -= f * a[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }

    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = BigRational(inv[i * n + j]);
    return out;
}

namespace {

// In-place Bareiss on an integer matrix with `cols` columns, reducing the
// leading `rows` rows. Returns the rank; `det_sign` tracks row swaps. When the
// matrix is square and full rank, the last pivot is the determinant.
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols, int& det_sign)
{
    det_sign = 1;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
            det_sign = -det_sign;
        }
        const mpz_class& p = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_class& lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class& x = a[i * cols + j];
                x *= p;
                mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), a[r * cols + j].get_mpz_t());
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

}  // namespace

BigRational determinant(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return BigRational(1);
    mpz_class scale;
    auto a = m.scaled_integers(scale);
    int sign = 1;
    if (bareiss(a, n, n, sign) < n) return BigRational(0);
    const mpz_class& last = a[n * n - 1];
    mpz_class scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), n);
    return BigRational(sign < 0 ? mpz_class(-last) : last, scale_pow);
}

BigRational cofactor(const Matrix& m, std::size_t i, std::size_t j)
{
    if (!m.is_square() || m.rows() < 2) throw std::invalid_argument("cofactor: need square matrix of order >= 2");
    if (i >= m.rows() || j >= m.cols()) throw std::out_of_range("cofactor index out of range");
    const BigRational minor = determinant(m.minor_matrix(i, j));
    return (i + j) % 2 == 0 ? minor : -minor;
}

Matrix adjugate(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t n = m.rows();
    if (n == 1) return Matrix::identity(1);
    Matrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj(j, i) = cofactor(m, i, j);
    return adj;
}

std::size_t rank(const Matrix& m)
{
    mpz_class scale;
    auto a = m.scaled_integers(scale);
    int sign = 1;
    return bareiss(a, m.rows(), m.cols(), sign);
}

bool has_tail_symmetry(const Vector& v)
{
    const std::size_t m = v.size();
    for (std::size_t i = 1; i < m; ++i)
        if (v[i] != v[m - i]) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("compare: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return std::pair{i, j};
    return std::nullopt;
}

// ---------------------------------------------------------------- serialization

nlohmann::json to_json(const Vector& v)
{
    auto arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

nlohmann::json to_json(const Matrix& m)
{
    auto entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(to_json(m.row(i)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Vector vector_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw std::invalid_argument("vector JSON must be an array");
    std::vector<BigRational> out;
    for (const auto& e : j) out.push_back(BigRational::parse(e.get<std::string>()));
    return Vector(std::move(out));
}

Matrix matrix_from_json(const nlohmann::json& j)
{
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vector r = vector_from_json(entries[i]);
        if (r.size() != cols) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

std::string to_csv(const Matrix& m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace wheeldist
