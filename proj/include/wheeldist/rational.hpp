#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wheeldist {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class; every constructor and every
/// arithmetic result is canonicalized before it is observable.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}  // NOLINT(implicit)
    BigRational(long num, long den);
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(mpq_class q);

    /// Parses "p" or "p/q" (optional leading '-', q != 0). Non-canonical
    /// input such as "2/4" is accepted and reduced.
    static BigRational parse(std::string_view text);

    /// "p/q" with the sign on p, or "p" when q = 1.
    std::string str() const;

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// 2^e as an exact integer.
BigRational pow2(unsigned long e);

}  // namespace wheeldist
