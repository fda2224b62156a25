#include "padicop/unitary_group.hpp"

#include <algorithm>

namespace padicop {

namespace {

PadicMatrix divide_entries(const PadicMatrix& a, const PadicInt& d)
{
    const std::size_t n = a.dimension();
    std::vector<PadicInt> out;
    out.reserve(n * n);
    int prec = a.precision();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.push_back(divide_exact(a(i, j), d));
            prec = std::min(prec, out.back().precision());
        }
    std::vector<mpz_class> residues;
    residues.reserve(out.size());
    for (const auto& x : out)
        residues.push_back(x.residue());
    return PadicMatrix(a.prime(), prec, n, residues);
}

PadicInt small_int(Prime p, int prec, long n)
{
    return PadicInt::from_integer(mpz_class(n), p, prec);
}

int min_precision(const PrincipalUnit& a, const PrincipalUnit& b, int cap)
{
    return std::min({a.precision(), b.precision(), cap});
}

GroupCheck compare(const PadicMatrix& lhs, const PadicMatrix& rhs, int required)
{
    const PadicMatrix diff = lhs - rhs;
    const Valuation observed = op_norm(diff);
    const bool pass = observed.value() >= required;
    return {pass, observed, required};
}

} // namespace

UnitaryOperator::UnitaryOperator(PadicMatrix u, StrongNormalCertificate v_cert)
    : u_(std::move(u)), v_cert_(std::move(v_cert))
{
    const Valuation norm = op_norm(v_cert_.matrix());
    if (norm.is_exact() && norm.value() == 0)
        throw Error(ErrorKind::NormTooLarge, "||V|| = 1, a unitary needs ||V|| < 1");
}

std::vector<PrincipalUnit> UnitaryOperator::spectrum() const
{
    std::vector<PrincipalUnit> out;
    for (const auto& l : v_cert_.eigenvalues())
        out.emplace_back(PadicInt::one(l.prime(), l.precision()) + l);
    return out;
}

PadicMatrix UnitaryOperator::spectral_measure(const SpectralSubset& subset) const
{
    return padicop::spectral_measure(v_cert_, subset);
}

UnitaryOperator make_unitary(const PadicMatrix& v)
{
    const Valuation norm = op_norm(v);
    if (norm.is_exact() && norm.value() == 0)
        throw Error(ErrorKind::NormTooLarge, "V has a unit entry");
    try {
        auto cert = certify_by_shift_and_scale(v);
        return UnitaryOperator(PadicMatrix::identity(v.prime(), v.precision(), v.dimension()) + v,
                               std::move(cert));
    } catch (const Error& e) {
        if (!is_refusal(e.kind()))
            throw;
        throw Error(ErrorKind::CertificationFailed, e.what());
    }
}

OneParamGroup::OneParamGroup(StrongNormalCertificate generator, SeriesBudget budget)
    : generator_(std::move(generator)), budget_(budget)
{
    if (budget_.target < 1 || budget_.guard < 0)
        throw Error(ErrorKind::InvalidArgument, "invalid series budget");
}

OneParamGroup OneParamGroup::from_generator(const PadicMatrix& a, SeriesBudget budget)
{
    return OneParamGroup(certify_by_shift_and_scale(a), budget);
}

int OneParamGroup::precision() const
{
    return std::min(budget_.target, generator_.precision());
}

UnitaryOperator evaluate(const OneParamGroup& group, const PrincipalUnit& s)
{
    if (!(s.prime() == group.prime()))
        throw Error(ErrorKind::PrimeMismatch, "parameter over a different prime");
    const PadicInt z = s.minus_one();
    const SeriesBudget& budget = group.budget();
    auto v_cert = pushforward(group.generator(), [&](const PadicInt& lambda) {
        return principal_power(z, lambda, budget).minus_one();
    });
    const PadicMatrix& v = v_cert.matrix();
    PadicMatrix u = PadicMatrix::identity(v.prime(), v.precision(), v.dimension()) + v;
    return UnitaryOperator(std::move(u), std::move(v_cert));
}

PadicMatrix evaluate_mahler_series(const OneParamGroup& group, const PrincipalUnit& s)
{
    const Prime p = group.prime();
    const int out = std::min(group.precision(), s.precision());
    const PadicMatrix a = group.generator().matrix().truncated(std::min(out, group.generator().matrix().precision()));
    const std::size_t n = a.dimension();
    const PadicInt z = s.minus_one().truncated(out);
    PadicMatrix sum = PadicMatrix::identity(p, out, n);
    if (z.is_zero())
        return sum;

    const int terms = truncation_length(z.valuation().value(), SeriesBudget{out, 0});
    PadicMatrix coeff = PadicMatrix::identity(p, out, n);
    PadicInt zpow = PadicInt::one(p, out);
    for (int k = 1; k < terms; ++k) {
        coeff = coeff * (a - small_int(p, out, k - 1) * PadicMatrix::identity(p, out, n));
        coeff = divide_entries(coeff, small_int(p, coeff.precision(), k));
        zpow *= z;
        // v(z^k) >= k > v(k!), so the digits lost to the divisions are
        // covered by the power of z.
        sum += zpow * coeff.lifted(out);
    }
    return sum;
}

GroupCheck verify_group_law(const OneParamGroup& group, const PrincipalUnit& s1, const PrincipalUnit& s2,
                            int digits)
{
    const PadicMatrix lhs = evaluate(group, s1 * s2).matrix();
    const PadicMatrix rhs = evaluate(group, s1).matrix() * evaluate(group, s2).matrix();
    if (digits > std::min(lhs.precision(), rhs.precision()))
        throw Error(ErrorKind::PrecisionExceeded, "group law checked to " + std::to_string(digits) +
                                                      " digits, only " +
                                                      std::to_string(std::min(lhs.precision(), rhs.precision())) +
                                                      " known");
    return compare(lhs.truncated(digits), rhs.truncated(digits), digits);
}

GroupCheck verify_group_law(const OneParamGroup& group, const PrincipalUnit& s1, const PrincipalUnit& s2)
{
    return verify_group_law(group, s1, s2, min_precision(s1, s2, group.precision()));
}

GroupCheck lipschitz_check(const OneParamGroup& group, const PrincipalUnit& s1, const PrincipalUnit& s2)
{
    const PadicMatrix u1 = evaluate(group, s1).matrix();
    const PadicMatrix u2 = evaluate(group, s2).matrix();
    const int digits = std::min(u1.precision(), u2.precision());
    const Valuation gap = (s1.value() - s2.value()).valuation();
    const int required = gap.is_at_least() ? digits : std::min(gap.value(), digits);
    return compare(u1.truncated(digits), u2.truncated(digits), required);
}

OneParamGroup stone_recover(const PadicMatrix& u_at_one_plus_p, const SeriesBudget& budget)
{
    const Prime p = u_at_one_plus_p.prime();
    const int prec = u_at_one_plus_p.precision();
    const PadicMatrix v = u_at_one_plus_p - PadicMatrix::identity(p, prec, u_at_one_plus_p.dimension());

    auto v_cert = [&] {
        try {
            return certify_by_shift_and_scale(v);
        } catch (const Error& e) {
            if (!is_refusal(e.kind()))
                throw;
            throw Error(ErrorKind::CertificationFailed, std::string("U(1+p) - I: ") + e.what());
        }
    }();
    for (const auto& l : v_cert.eigenvalues()) {
        const Valuation vl = l.valuation();
        if (vl.is_exact() && vl.value() == 0)
            throw Error(ErrorKind::SpectrumNotInPZp,
                        "eigenvalue " + l.to_string() + " of U(1+p) - I is not in pZ_p");
    }
    // Over Q_p a certified V with spectrum in pZ_p already has ||V|| < 1.
    const Valuation norm = op_norm(v);
    if (norm.is_exact() && norm.value() == 0)
        throw Error(ErrorKind::NotPrincipalSpectrum, "U(1+p) is not unitary: ||U(1+p) - I|| = 1");

    std::vector<PadicInt> exponents;
    exponents.reserve(v_cert.size());
    for (const auto& l : v_cert.eigenvalues())
        exponents.push_back(zeta_of(PrincipalUnit(PadicInt::one(p, l.precision()) + l), budget));

    PadicMatrix a = PadicMatrix::zero(p, prec, v.dimension());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        a += exponents[i] * v_cert.projectors()[i];
    return OneParamGroup(StrongNormalCertificate(std::move(a), std::move(exponents), v_cert.projectors()), budget);
}

PadicMatrix operator_log_generator(const PadicMatrix& v, const SeriesBudget& budget)
{
    const Prime p = v.prime();
    const Valuation norm = op_norm(v);
    if (norm.is_exact() && norm.value() == 0)
        throw Error(ErrorKind::NormTooLarge, "log(I + V) needs ||V|| < 1");
    const int digits = std::min(v.precision(), budget.working());
    const PadicInt log_base = plog(PrincipalUnit(small_int(p, budget.working(), static_cast<long>(p.value()) + 1)),
                                   SeriesBudget{budget.working(), budget.guard});
    if (v.is_zero())
        return PadicMatrix::zero(p, std::min(budget.target, digits - 1), v.dimension());

    const int terms = log_truncation_length(p, norm.value(), digits);
    const int extra = terms > 1 ? floor_log(p, terms - 1) : 0;
    const PadicMatrix vw = v.lifted(digits + extra);
    PadicMatrix power = vw;
    PadicMatrix sum = PadicMatrix::zero(p, digits, v.dimension());
    for (int k = 1; k < terms; ++k) {
        const PadicMatrix term = divide_entries(power, small_int(p, power.precision(), k)).truncated(digits);
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
        power = power * vw;
    }
    const PadicMatrix a = divide_entries(sum, log_base.truncated(digits));
    return a.truncated(std::min(budget.target, a.precision()));
}

PadicMatrix digit_limit_approx(const OneParamGroup& group, const PrincipalUnit& s, int n)
{
    const Prime p = group.prime();
    const PadicInt zeta = zeta_of(s, group.budget());
    const mpz_class exponent = zeta.leading_digits(n + 1);
    const PrincipalUnit base(small_int(p, s.precision(), static_cast<long>(p.value()) + 1));
    return matpow(evaluate(group, base).matrix(), exponent);
}

std::vector<ConvergenceRow> convergence_table(const OneParamGroup& group, const PrincipalUnit& s, int max_n)
{
    const PadicMatrix exact = evaluate(group, s).matrix();
    std::vector<ConvergenceRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        const PadicMatrix approx = digit_limit_approx(group, s, n);
        const Valuation err = op_norm(approx - exact);
        const int bound = digit_truncation_error(n, group.prime());
        rows.push_back({n, err, bound, err.is_at_least() || err.value() >= bound});
    }
    return rows;
}

PrincipalUnit additive_reparam(const PadicInt& z, const SeriesBudget& budget)
{
    const Prime p = z.prime();
    const PadicInt pz = PadicInt::from_integer(z.residue() * p.value(), p, z.precision() + 1);
    return pexp(pz, budget);
}

PadicMatrix additive_evaluate(const OneParamGroup& group, const PadicInt& z)
{
    return evaluate(group, additive_reparam(z, group.budget())).matrix();
}

PadicInt additive_generator_point(Prime p, const SeriesBudget& budget)
{
    const int work = budget.working();
    const PadicInt log_base =
        plog(PrincipalUnit(small_int(p, work, static_cast<long>(p.value()) + 1)), SeriesBudget{work, budget.guard});
    const PadicInt point = divide_exact(log_base, small_int(p, work, static_cast<long>(p.value())));
    return point.truncated(std::min(budget.target, point.precision()));
}

OneParamGroup additive_recover(const PadicMatrix& w_at_generator_point, const SeriesBudget& budget)
{
    return stone_recover(w_at_generator_point, budget);
}

} // namespace padicop
