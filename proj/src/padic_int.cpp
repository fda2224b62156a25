#include "padicop/padic_int.hpp"

#include <algorithm>

namespace padicop {

namespace {

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void check_precision(int prec)
{
    if (prec < 1)
        throw Error(ErrorKind::InsufficientPrecision,
                    "precision must be at least one digit, got " + std::to_string(prec));
}

} // namespace

Prime::Prime(unsigned long p) : p_(p)
{
    if (p == 2)
        throw Error(ErrorKind::InvalidArgument, "p = 2 is not supported");
    if (!is_prime(p))
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

mpz_class Prime::power(int e) const
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p_, static_cast<unsigned long>(std::max(e, 0)));
    return r;
}

std::string Valuation::to_string() const
{
    return at_least_ ? ">=" + std::to_string(value_) : std::to_string(value_);
}

AbsoluteValue absolute_value(Prime p, Valuation v)
{
    return {p.value(), -v.value(), v.is_at_least()};
}

PadicInt::PadicInt(Prime p, int precision, const mpz_class& n) : p_(p), prec_(precision)
{
    check_precision(precision);
    mpz_fdiv_r(residue_.get_mpz_t(), n.get_mpz_t(), modulus().get_mpz_t());
}

PadicInt PadicInt::from_string(const std::string& decimal, Prime p, int precision)
{
    mpz_class n;
    if (decimal.empty() || n.set_str(decimal, 10) != 0)
        throw Error(ErrorKind::InvalidArgument, "not a decimal integer: '" + decimal + "'");
    return PadicInt(p, precision, n);
}

Valuation PadicInt::valuation() const
{
    if (residue_ == 0)
        return Valuation::at_least(prec_);
    return Valuation::exact(static_cast<int>(mpz_remove(mpz_class().get_mpz_t(), residue_.get_mpz_t(),
                                                        mpz_class(p_.value()).get_mpz_t())));
}

unsigned long PadicInt::reduce_mod_p() const
{
    return mpz_fdiv_ui(residue_.get_mpz_t(), p_.value());
}

PadicInt PadicInt::truncated(int precision) const
{
    if (precision > prec_)
        throw Error(ErrorKind::PrecisionExceeded, "cannot truncate a " + std::to_string(prec_) +
                                                      "-digit value to " + std::to_string(precision) +
                                                      " digits");
    return PadicInt(p_, precision, residue_);
}

PadicInt PadicInt::lifted(int precision) const
{
    if (precision < prec_)
        return truncated(precision);
    return PadicInt(p_, precision, residue_);
}

mpz_class PadicInt::leading_digits(int count) const
{
    mpz_class r = residue_ % p_.power(std::min(count, prec_));
    return r;
}

void PadicInt::check_same_prime(const PadicInt& other) const
{
    if (!(p_ == other.p_))
        throw Error(ErrorKind::PrimeMismatch, "p = " + std::to_string(p_.value()) + " vs p = " +
                                                  std::to_string(other.p_.value()));
}

PadicInt PadicInt::operator-() const
{
    return PadicInt(p_, prec_, -residue_);
}

PadicInt& PadicInt::operator+=(const PadicInt& other)
{
    check_same_prime(other);
    prec_ = std::min(prec_, other.prec_);
    mpz_class sum = residue_ + other.residue_;
    mpz_fdiv_r(residue_.get_mpz_t(), sum.get_mpz_t(), modulus().get_mpz_t());
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& other)
{
    check_same_prime(other);
    prec_ = std::min(prec_, other.prec_);
    mpz_class diff = residue_ - other.residue_;
    mpz_fdiv_r(residue_.get_mpz_t(), diff.get_mpz_t(), modulus().get_mpz_t());
    return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& other)
{
    check_same_prime(other);
    prec_ = std::min(prec_, other.prec_);
    mpz_class prod = residue_ * other.residue_;
    mpz_fdiv_r(residue_.get_mpz_t(), prod.get_mpz_t(), modulus().get_mpz_t());
    return *this;
}

PadicInt PadicInt::pow(const mpz_class& exponent) const
{
    if (exponent < 0)
        throw Error(ErrorKind::InvalidArgument, "negative exponent");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), exponent.get_mpz_t(), modulus().get_mpz_t());
    return PadicInt(p_, prec_, r);
}

PadicInt PadicInt::inverse() const
{
    if (!is_unit())
        throw Error(ErrorKind::DivisionByHigherValuation, "inverse of a non-unit " + to_string());
    mpz_class r;
    mpz_invert(r.get_mpz_t(), residue_.get_mpz_t(), modulus().get_mpz_t());
    return PadicInt(p_, prec_, r);
}

PadicInt divide_exact(const PadicInt& a, const PadicInt& b)
{
    if (!(a.prime() == b.prime()))
        throw Error(ErrorKind::PrimeMismatch, "divide_exact across primes");
    const Prime p = a.prime();
    const int prec = std::min(a.precision(), b.precision());
    const Valuation vb = b.truncated(prec).valuation();
    if (vb.is_at_least())
        throw Error(ErrorKind::InsufficientPrecision, "divisor vanishes at precision " + std::to_string(prec));
    const int w = vb.value();
    const PadicInt at = a.truncated(prec);
    const Valuation va = at.valuation();
    if (va.is_exact() && va.value() < w)
        throw Error(ErrorKind::DivisionByHigherValuation, "v(divisor) = " + std::to_string(w) +
                                                              " exceeds v(dividend) = " +
                                                              std::to_string(va.value()));
    const int out = prec - w;
    if (out < 1)
        throw Error(ErrorKind::InsufficientPrecision, "division by p^" + std::to_string(w) +
                                                          " leaves no digits of " + std::to_string(prec));
    const mpz_class pw = p.power(w);
    const mpz_class num = at.residue() / pw;
    const mpz_class unit = b.truncated(prec).residue() / pw;
    const PadicInt u(p, out, unit);
    return PadicInt(p, out, num) * u.inverse();
}

bool congruent(const PadicInt& a, const PadicInt& b, int digits)
{
    if (!(a.prime() == b.prime()))
        throw Error(ErrorKind::PrimeMismatch, "congruence across primes");
    if (digits > std::min(a.precision(), b.precision()))
        throw Error(ErrorKind::PrecisionExceeded, "congruence mod p^" + std::to_string(digits) +
                                                      " needs that many known digits");
    if (digits <= 0)
        return true;
    const mpz_class diff = a.residue() - b.residue();
    return mpz_divisible_p(diff.get_mpz_t(), a.prime().power(digits).get_mpz_t()) != 0;
}

int ceil_log(Prime p, const mpz_class& n)
{
    int e = 0;
    mpz_class q = 1;
    while (q < n) {
        q *= p.value();
        ++e;
    }
    return e;
}

int floor_log(Prime p, const mpz_class& n)
{
    int e = 0;
    mpz_class q = p.value();
    while (q <= n) {
        q *= p.value();
        ++e;
    }
    return e;
}

long factorial_valuation(Prime p, long n)
{
    long v = 0;
    for (long q = n / static_cast<long>(p.value()); q > 0; q /= static_cast<long>(p.value()))
        v += q;
    return v;
}

int integer_valuation(Prime p, const mpz_class& n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "valuation of integer zero");
    mpz_class rest;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), mpz_class(p.value()).get_mpz_t()));
}

} // namespace padicop
