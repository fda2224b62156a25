#pragma once

#include "padicop/padic_int.hpp"

namespace padicop {

/// Truncation control for every infinite series: series run at
/// target + guard digits and results are reported to `target` digits.
struct SeriesBudget {
    int target = 32;
    int guard = 0;

    int working() const noexcept { return target + guard; }

    /// Smallest guard with guard >= ceil(log_p(K_max)) + 2, K_max being the
    /// longest series truncation needed at target + guard digits.
    static SeriesBudget automatic(Prime p, int target);
    /// Explicit guard; rejected if below the automatic minimum.
    static SeriesBudget with_guard(Prime p, int target, int guard);

    friend bool operator==(const SeriesBudget&, const SeriesBudget&) = default;
};

/// An element s of Z_p with s = 1 mod p.
class PrincipalUnit {
public:
    explicit PrincipalUnit(PadicInt value);
    static PrincipalUnit one(Prime p, int precision) { return PrincipalUnit(PadicInt::one(p, precision)); }

    const PadicInt& value() const noexcept { return value_; }
    /// z = s - 1, of valuation >= 1.
    PadicInt minus_one() const { return value_ - PadicInt::one(value_.prime(), value_.precision()); }
    Prime prime() const noexcept { return value_.prime(); }
    int precision() const noexcept { return value_.precision(); }

    friend PrincipalUnit operator*(const PrincipalUnit& a, const PrincipalUnit& b)
    {
        return PrincipalUnit(a.value_ * b.value_);
    }
    friend bool operator==(const PrincipalUnit&, const PrincipalUnit&) = default;

private:
    PadicInt value_;
};

/// P_n(lambda) = lambda (lambda - 1) ... (lambda - n + 1) / n!. Known to
/// prec(lambda) - v_p(n!) digits.
PadicInt mahler_coeff(unsigned long n, const PadicInt& lambda);

/// (1+z)^lambda through its Mahler expansion sum_n z^n P_n(lambda).
PrincipalUnit principal_power(const PadicInt& z, const PadicInt& lambda, const SeriesBudget& budget);

/// (1+z)^e for a nonnegative integer e, by binary exponentiation.
PrincipalUnit principal_power(const PadicInt& z, const mpz_class& exponent);

/// p-adic logarithm of a principal unit: sum (-1)^{k-1} (u-1)^k / k.
PadicInt plog(const PrincipalUnit& u, const SeriesBudget& budget);

/// p-adic exponential, convergent for v(x) >= 1 when p is odd.
PrincipalUnit pexp(const PadicInt& x, const SeriesBudget& budget);

/// The exponent zeta with s = (1+p)^zeta, i.e. log s / log(1+p).
PadicInt zeta_of(const PrincipalUnit& s, const SeriesBudget& budget);

/// Number of Mahler terms (n = 0..M-1) needed so that every dropped term
/// z^n P_n has valuation >= target + guard, given v(z) = v_z.
int truncation_length(int v_z, const SeriesBudget& budget);

/// Terms k = 1..K-1 of the log series suffice at `digits` digits when the
/// argument has valuation v: k*v - floor(log_p k) >= digits for all k >= K.
int log_truncation_length(Prime p, int v, int digits);

/// Terms k = 0..K-1 of the exp series suffice at `digits` digits when the
/// argument has valuation v.
int exp_truncation_length(Prime p, int v, int digits);

/// Valuation lower bound on |a_n(lambda) - (1+p)^{zeta lambda}| when zeta is
/// cut after digit n: p^{-n-1} sup_{k>=1} p^{-k+(k-1)/(p-1)}.
int digit_truncation_error(int n, Prime p);

} // namespace padicop
