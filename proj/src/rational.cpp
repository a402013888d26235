#include "wheeldist/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wheeldist {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

BigRational::BigRational(long num, long den) : q_(num, den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

BigRational::BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

BigRational& BigRational::operator/=(const BigRational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::parse(std::string_view text)
{
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw bad();
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw bad();
    if (negative) p = -p;
    return BigRational(p, q);
}

std::string BigRational::str() const
{
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigRational pow2(unsigned long e)
{
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
    return BigRational(z, mpz_class(1));
}

}  // namespace wheeldist
