#pragma once

#include <vector>

#include "padicop/functions.hpp"
#include "padicop/spectral.hpp"

namespace padicop {

/// U = I + V with ||V|| < 1 and V strongly normal. The spectrum of U is the
/// image of the spectrum of V under lambda -> 1 + lambda, and
/// E_U(M) = E_V(phi^{-1}(M)), so both share the projector list.
class UnitaryOperator {
public:
    UnitaryOperator(PadicMatrix u, StrongNormalCertificate v_cert);

    const PadicMatrix& matrix() const noexcept { return u_; }
    const PadicMatrix& perturbation() const noexcept { return v_cert_.matrix(); }
    const StrongNormalCertificate& perturbation_certificate() const noexcept { return v_cert_; }
    /// 1 + lambda_i over the spectrum of V, in certificate order.
    std::vector<PrincipalUnit> spectrum() const;
    /// E_U over a subset of the spectrum indices.
    PadicMatrix spectral_measure(const SpectralSubset& subset) const;

private:
    PadicMatrix u_;
    StrongNormalCertificate v_cert_;
};

UnitaryOperator make_unitary(const PadicMatrix& v);

/// s -> s^A over the principal units, for a certified generator A with
/// spectrum in Z_p and ||A|| <= 1.
class OneParamGroup {
public:
    OneParamGroup(StrongNormalCertificate generator, SeriesBudget budget);
    /// Certifies A (shift-and-scale route) first.
    static OneParamGroup from_generator(const PadicMatrix& a, SeriesBudget budget);

    const StrongNormalCertificate& generator() const noexcept { return generator_; }
    const SeriesBudget& budget() const noexcept { return budget_; }
    Prime prime() const noexcept { return generator_.prime(); }
    /// Digits to which evaluate() results are claimed.
    int precision() const;

private:
    StrongNormalCertificate generator_;
    SeriesBudget budget_;
};

/// U(s) = sum_i (1+z)^{lambda_i} E_i, z = s - 1.
UnitaryOperator evaluate(const OneParamGroup& group, const PrincipalUnit& s);

/// Second route to U(s): the operator Mahler series sum_n z^n P_n(A) with
/// P_n(A) = A (A - I) ... (A - (n-1) I) / n!.
PadicMatrix evaluate_mahler_series(const OneParamGroup& group, const PrincipalUnit& s);

struct GroupCheck {
    bool pass;
    /// Valuation of the discrepancy actually observed.
    Valuation observed;
    /// The valuation the discrepancy has to reach.
    int required;
    /// observed - required (capped observation counts at its cap).
    int margin() const { return observed.value() - required; }
};

/// U(s1 s2) = U(s1) U(s2) mod p^digits.
GroupCheck verify_group_law(const OneParamGroup& group, const PrincipalUnit& s1, const PrincipalUnit& s2,
                            int digits);
GroupCheck verify_group_law(const OneParamGroup& group, const PrincipalUnit& s1, const PrincipalUnit& s2);

/// v(U(s1) - U(s2)) >= v(s1 - s2).
GroupCheck lipschitz_check(const OneParamGroup& group, const PrincipalUnit& s1, const PrincipalUnit& s2);

/// Recovers A from U(1+p) = I + V: A = log(I + V) / log(1+p), computed on
/// the spectrum of V. Requires the spectrum of V to lie in pZ_p.
OneParamGroup stone_recover(const PadicMatrix& u_at_one_plus_p, const SeriesBudget& budget);

/// The same generator through the operator series
/// (1/log(1+p)) sum_{k>=1} (-1)^{k-1} V^k / k.
PadicMatrix operator_log_generator(const PadicMatrix& v, const SeriesBudget& budget);

/// [U(1+p)]^{zeta_0 + zeta_1 p + ... + zeta_n p^n} with zeta = zeta_of(s).
PadicMatrix digit_limit_approx(const OneParamGroup& group, const PrincipalUnit& s, int n);

struct ConvergenceRow {
    int n;
    Valuation error;  // v(approximation - U(s))
    int bound;        // proven lower bound on that valuation
    bool within_bound;
};

std::vector<ConvergenceRow> convergence_table(const OneParamGroup& group, const PrincipalUnit& s, int max_n);

/// s = exp(p z), the principal unit attached to z in Z_p.
PrincipalUnit additive_reparam(const PadicInt& z, const SeriesBudget& budget);
/// W(z) = U(exp(p z)) = e^{p z A}.
PadicMatrix additive_evaluate(const OneParamGroup& group, const PadicInt& z);
/// z* = log(1+p) / p, the point with exp(p z*) = 1 + p.
PadicInt additive_generator_point(Prime p, const SeriesBudget& budget);
/// Recovers A from W(z*); W(z*) - I must have spectrum in pZ_p.
OneParamGroup additive_recover(const PadicMatrix& w_at_generator_point, const SeriesBudget& budget);

} // namespace padicop
