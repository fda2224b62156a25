#include "padicop/functions.hpp"

#include <algorithm>
#include <vector>

namespace padicop {

namespace {

// Caps the digit extension used to absorb divisions by n!.
constexpr long kMaxExtension = 1L << 16;

PadicInt small_int(Prime p, int prec, long n)
{
    return PadicInt::from_integer(mpz_class(n), p, prec);
}

// P_0(lambda), ..., P_{count-1}(lambda), each exact mod p^digits at the
// representative of lambda. One pass of P_n = P_{n-1} (lambda - n + 1) / n,
// started with enough extra digits that the divisions by n never reach the
// reported ones.
std::vector<PadicInt> mahler_sequence(const PadicInt& lambda, unsigned long count, int digits)
{
    const Prime p = lambda.prime();
    std::vector<PadicInt> out;
    out.reserve(count);
    if (count == 0)
        return out;
    const long extension = factorial_valuation(p, static_cast<long>(count) - 1);
    if (extension > kMaxExtension)
        throw Error(ErrorKind::InsufficientPrecision, "Mahler coefficient needs " + std::to_string(extension) +
                                                          " extra digits");
    const int start = digits + static_cast<int>(extension);
    const PadicInt lam = lambda.lifted(start);
    PadicInt coeff = PadicInt::one(p, start);
    out.push_back(coeff.truncated(digits));
    for (unsigned long n = 1; n < count; ++n) {
        coeff *= lam - small_int(p, start, static_cast<long>(n) - 1);
        coeff = divide_exact(coeff, small_int(p, coeff.precision(), static_cast<long>(n)));
        out.push_back(coeff.truncated(digits));
    }
    return out;
}

// Log series at `digits` digits for y = u - 1 with v(y) >= 1.
PadicInt log_series(const PadicInt& y, int digits)
{
    const Prime p = y.prime();
    if (y.lifted(digits).is_zero())
        return PadicInt::zero(p, digits);
    const int v = y.valuation().value();
    const int terms = log_truncation_length(p, v, digits);
    const int extra = terms > 1 ? floor_log(p, terms - 1) : 0;
    const int work = digits + extra;
    const PadicInt yw = y.lifted(work);
    PadicInt power = yw;
    PadicInt sum = PadicInt::zero(p, digits);
    for (int k = 1; k < terms; ++k) {
        const PadicInt term = divide_exact(power, small_int(p, work, k)).truncated(digits);
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
        power *= yw;
    }
    return sum;
}

} // namespace

SeriesBudget SeriesBudget::automatic(Prime p, int target)
{
    if (target < 1)
        throw Error(ErrorKind::InsufficientPrecision, "target precision must be >= 1");
    int guard = 2;
    for (;;) {
        const int work = target + guard;
        const int longest = std::max({log_truncation_length(p, 1, work), exp_truncation_length(p, 1, work), work});
        const int needed = ceil_log(p, longest) + 2;
        if (needed <= guard)
            return SeriesBudget{target, guard};
        guard = needed;
    }
}

SeriesBudget SeriesBudget::with_guard(Prime p, int target, int guard)
{
    const SeriesBudget minimal = automatic(p, target);
    if (guard < minimal.guard)
        throw Error(ErrorKind::InvalidArgument, "guard " + std::to_string(guard) + " is below the minimum " +
                                                    std::to_string(minimal.guard) + " for p = " +
                                                    std::to_string(p.value()));
    return SeriesBudget{target, guard};
}

PrincipalUnit::PrincipalUnit(PadicInt value) : value_(std::move(value))
{
    if (value_.reduce_mod_p() != 1)
        throw Error(ErrorKind::NotPrincipal, value_.to_string() + " is not 1 mod p");
}

PadicInt mahler_coeff(unsigned long n, const PadicInt& lambda)
{
    // P_n moves by at most |n!|^{-1} |h| when lambda moves by h.
    const long loss = factorial_valuation(lambda.prime(), static_cast<long>(n));
    const long digits = lambda.precision() - loss;
    if (digits < 1)
        throw Error(ErrorKind::InsufficientPrecision, "P_" + std::to_string(n) + " loses " + std::to_string(loss) +
                                                          " of " + std::to_string(lambda.precision()) + " digits");
    return mahler_sequence(lambda, n + 1, static_cast<int>(digits)).back();
}

PrincipalUnit principal_power(const PadicInt& z, const PadicInt& lambda, const SeriesBudget& budget)
{
    const Prime p = z.prime();
    if (!(lambda.prime() == p))
        throw Error(ErrorKind::PrimeMismatch, "base and exponent over different primes");
    const Valuation vz = z.valuation();
    if (vz.is_exact() && vz.value() == 0)
        throw Error(ErrorKind::NotPrincipal, "1 + " + z.to_string() + " is not a principal unit");
    // (1+z)^lambda is |z|-Lipschitz in lambda.
    const int out = std::min({budget.target, z.precision(), lambda.precision() + vz.value()});
    if (vz.is_at_least())
        return PrincipalUnit::one(p, out);

    const int work = budget.working();
    const int terms = truncation_length(vz.value(), budget);
    const auto coeffs = mahler_sequence(lambda, static_cast<unsigned long>(terms), work);
    const PadicInt zw = z.lifted(work);
    PadicInt power = PadicInt::one(p, work);
    PadicInt sum = PadicInt::zero(p, work);
    for (const auto& c : coeffs) {
        sum += power * c;
        power *= zw;
    }
    return PrincipalUnit(sum.truncated(out));
}

PrincipalUnit principal_power(const PadicInt& z, const mpz_class& exponent)
{
    if (z.is_unit())
        throw Error(ErrorKind::NotPrincipal, "1 + " + z.to_string() + " is not a principal unit");
    return PrincipalUnit((PadicInt::one(z.prime(), z.precision()) + z).pow(exponent));
}

PadicInt plog(const PrincipalUnit& u, const SeriesBudget& budget)
{
    const int out = std::min(budget.target, u.precision());
    return log_series(u.minus_one(), budget.working()).truncated(out);
}

PrincipalUnit pexp(const PadicInt& x, const SeriesBudget& budget)
{
    const Prime p = x.prime();
    const Valuation vx = x.valuation();
    if (vx.is_exact() && vx.value() == 0)
        throw Error(ErrorKind::OutOfConvergenceDomain, "exp needs v(x) >= 1, got x = " + x.to_string());
    const int out = std::min(budget.target, x.precision());
    if (vx.is_at_least())
        return PrincipalUnit::one(p, out);

    const int digits = budget.working();
    const int terms = exp_truncation_length(p, vx.value(), digits);
    const long extension = factorial_valuation(p, terms - 1);
    if (extension > kMaxExtension)
        throw Error(ErrorKind::InsufficientPrecision, "exp series needs " + std::to_string(extension) +
                                                          " extra digits");
    const int work = digits + static_cast<int>(extension);
    const PadicInt xw = x.lifted(work);
    PadicInt term = PadicInt::one(p, work);
    PadicInt sum = PadicInt::one(p, digits);
    for (int k = 1; k < terms; ++k) {
        term *= xw;
        term = divide_exact(term, small_int(p, term.precision(), k));
        sum += term.truncated(digits);
    }
    return PrincipalUnit(sum.truncated(out));
}

PadicInt zeta_of(const PrincipalUnit& s, const SeriesBudget& budget)
{
    const Prime p = s.prime();
    const int work = budget.working();
    const PadicInt log_s = log_series(s.minus_one(), work).truncated(std::min(work, s.precision()));
    const PadicInt log_base = log_series(small_int(p, work, static_cast<long>(p.value())), work);
    // v(log(1+p)) = 1: one digit is spent on the division.
    const PadicInt zeta = divide_exact(log_s, log_base);
    return zeta.truncated(std::min(budget.target, zeta.precision()));
}

int truncation_length(int v_z, const SeriesBudget& budget)
{
    if (v_z < 1)
        throw Error(ErrorKind::NotPrincipal, "Mahler truncation needs v(z) >= 1");
    const int work = budget.working();
    return (work + v_z - 1) / v_z;
}

int log_truncation_length(Prime p, int v, int digits)
{
    if (v < 1)
        throw Error(ErrorKind::NotPrincipal, "log series needs v(u - 1) >= 1");
    // k*v - floor(log_p k) is nondecreasing for v >= 1, so the first hit is final.
    int k = 1;
    while (static_cast<long>(k) * v - floor_log(p, k) < digits)
        ++k;
    return k;
}

int exp_truncation_length(Prime p, int v, int digits)
{
    if (v < 1)
        throw Error(ErrorKind::OutOfConvergenceDomain, "exp series needs v(x) >= 1");
    // v_p(k!) <= (k-1)/(p-1); the resulting lower bound on the term valuation
    // is nondecreasing in k.
    const long step = static_cast<long>(p.value()) - 1;
    long k = 1;
    while (k * v - (k - 1) / step < digits)
        ++k;
    return static_cast<int>(k);
}

int digit_truncation_error(int n, Prime p)
{
    // The exponent -k + (k-1)/(p-1) = -(k(p-2) + 1)/(p-1) decreases in k for
    // p >= 3, so the supremum over k >= 1 sits at k = 1 where it equals -1.
    (void)p;
    return n + 1 + 1;
}

} // namespace padicop
