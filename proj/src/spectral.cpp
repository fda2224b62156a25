#include "padicop/spectral.hpp"

#include <algorithm>

namespace padicop {

namespace {

// Lagrange interpolant of the indicator of eigenvalue i. Every inverted
// difference is a unit when the eigenvalues are distinct mod p.
PadicMatrix lagrange_projector(const PadicMatrix& a, const std::vector<PadicInt>& eig, std::size_t i)
{
    const Prime p = a.prime();
    const std::size_t n = a.dimension();
    PadicMatrix e = PadicMatrix::identity(p, a.precision(), n);
    PadicInt denom = PadicInt::one(p, a.precision());
    for (std::size_t j = 0; j < eig.size(); ++j) {
        if (j == i)
            continue;
        e = e * (a - eig[j] * PadicMatrix::identity(p, a.precision(), n));
        denom *= eig[i] - eig[j];
    }
    return denom.inverse() * e;
}

} // namespace

StrongNormalCertificate::StrongNormalCertificate(PadicMatrix matrix, std::vector<PadicInt> eigenvalues,
                                                 std::vector<PadicMatrix> projectors)
    : matrix_(std::move(matrix)), eigenvalues_(std::move(eigenvalues)), projectors_(std::move(projectors))
{
    if (eigenvalues_.empty() || eigenvalues_.size() != projectors_.size())
        throw Error(ErrorKind::DimensionMismatch, "certificate needs one projector per eigenvalue");
    for (const auto& e : projectors_)
        if (e.dimension() != matrix_.dimension() || !(e.prime() == matrix_.prime()))
            throw Error(ErrorKind::DimensionMismatch, "projector does not match the certified matrix");
    for (const auto& l : eigenvalues_)
        if (!(l.prime() == matrix_.prime()))
            throw Error(ErrorKind::PrimeMismatch, "eigenvalue over a different prime");
}

int StrongNormalCertificate::precision() const
{
    int prec = matrix_.precision();
    for (const auto& l : eigenvalues_)
        prec = std::min(prec, l.precision());
    for (const auto& e : projectors_)
        prec = std::min(prec, e.precision());
    return prec;
}

StrongNormalCertificate certify_strongly_normal(const PadicMatrix& a)
{
    const ResidueMatrix reduced = reduction(a);
    if (!is_nondegenerate(reduced))
        throw Error(ErrorKind::DegenerateReduction, "reduction is a scalar multiple of the identity");

    const auto roots = residue_eigen(reduced);
    int found = 0;
    for (const auto& r : roots) {
        if (r.multiplicity > 1)
            throw Error(ErrorKind::RepeatedResidueEigenvalue,
                        "residue eigenvalue " + std::to_string(r.root) + " has multiplicity " +
                            std::to_string(r.multiplicity));
        found += r.multiplicity;
    }
    if (found < static_cast<int>(a.dimension()))
        throw Error(ErrorKind::ResidueEigenvalueDeficit,
                    "only " + std::to_string(found) + " of " + std::to_string(a.dimension()) +
                        " eigenvalues lie in the residue field");

    const CharPoly f = char_poly(a);
    std::vector<PadicInt> eig;
    eig.reserve(roots.size());
    for (const auto& r : roots)
        eig.push_back(hensel_lift_root(f, r.root));

    std::vector<PadicMatrix> projectors;
    projectors.reserve(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i)
        projectors.push_back(lagrange_projector(a, eig, i));
    return StrongNormalCertificate(a, std::move(eig), std::move(projectors));
}

StrongNormalCertificate certify_by_shift_and_scale(const PadicMatrix& a)
{
    try {
        return certify_strongly_normal(a);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateReduction)
            throw;
    }
    const Prime p = a.prime();
    const int prec = a.precision();
    const std::size_t n = a.dimension();
    const PadicInt shift = a(0, 0);
    const PadicMatrix rest = a - shift * PadicMatrix::identity(p, prec, n);
    if (rest.is_zero())
        return StrongNormalCertificate(a, {shift}, {PadicMatrix::identity(p, prec, n)});

    // The reduction is scalar, so rest = 0 mod p and w >= 1.
    const int w = op_norm(rest).value();
    if (prec - w < 1)
        throw Error(ErrorKind::InsufficientPrecision, "scaling by p^" + std::to_string(w) + " exhausts " +
                                                          std::to_string(prec) + " digits");
    const mpz_class pw = p.power(w);
    std::vector<mpz_class> scaled;
    scaled.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scaled.push_back(rest.residue(i, j) / pw);
    const auto inner = certify_by_shift_and_scale(PadicMatrix(p, prec - w, n, scaled));

    const PadicInt factor = PadicInt::from_integer(pw, p, prec);
    std::vector<PadicInt> eig;
    eig.reserve(inner.size());
    for (const auto& mu : inner.eigenvalues())
        eig.push_back(shift + factor * mu.lifted(prec));
    return StrongNormalCertificate(a, std::move(eig), inner.projectors());
}

PadicMatrix spectral_measure(const StrongNormalCertificate& cert, const SpectralSubset& subset)
{
    PadicMatrix e = PadicMatrix::zero(cert.prime(), cert.precision(), cert.dimension());
    std::vector<bool> seen(cert.size(), false);
    for (std::size_t i : subset) {
        if (i >= cert.size())
            throw Error(ErrorKind::InvalidArgument, "spectral index " + std::to_string(i) + " out of range");
        if (seen[i])
            continue;
        seen[i] = true;
        e += cert.projectors()[i];
    }
    return e;
}

PadicMatrix functional_calculus(const StrongNormalCertificate& cert, const ScalarFunction& phi)
{
    PadicMatrix out = PadicMatrix::zero(cert.prime(), cert.precision(), cert.dimension());
    for (std::size_t i = 0; i < cert.size(); ++i)
        out += phi(cert.eigenvalues()[i]) * cert.projectors()[i];
    return out;
}

StrongNormalCertificate pushforward(const StrongNormalCertificate& cert, const ScalarFunction& phi)
{
    std::vector<PadicInt> values;
    std::vector<PadicMatrix> projectors;
    for (std::size_t i = 0; i < cert.size(); ++i) {
        const PadicInt v = phi(cert.eigenvalues()[i]);
        bool merged = false;
        for (std::size_t j = 0; j < values.size() && !merged; ++j) {
            const int digits = std::min(v.precision(), values[j].precision());
            if (congruent(v, values[j], digits)) {
                projectors[j] += cert.projectors()[i];
                merged = true;
            }
        }
        if (!merged) {
            values.push_back(v);
            projectors.push_back(cert.projectors()[i]);
        }
    }
    PadicMatrix image = PadicMatrix::zero(cert.prime(), cert.precision(), cert.dimension());
    for (std::size_t j = 0; j < values.size(); ++j)
        image += values[j] * projectors[j];
    return StrongNormalCertificate(std::move(image), std::move(values), std::move(projectors));
}

ScalarFunction polynomial_function(std::vector<PadicInt> coeffs)
{
    return [coeffs = std::move(coeffs)](const PadicInt& x) {
        PadicInt acc = PadicInt::zero(x.prime(), x.precision());
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    };
}

ScalarFunction mahler_series_function(std::vector<PadicInt> coeffs)
{
    return [coeffs = std::move(coeffs)](const PadicInt& x) {
        PadicInt acc = PadicInt::zero(x.prime(), x.precision());
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            acc += coeffs[n] * mahler_coeff(n, x);
        return acc;
    };
}

OrthogonalityCheck check_orthogonality(const StrongNormalCertificate& cert, const PadicVector& f)
{
    if (f.size() != cert.dimension())
        throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(f.size()) +
                                                      " vs dimension " + std::to_string(cert.dimension()));
    int prec = cert.precision();
    for (const auto& x : f)
        prec = std::min(prec, x.precision());
    PadicVector g;
    for (const auto& x : f)
        g.push_back(x.truncated(prec));

    const Valuation norm = vector_norm(g);
    Valuation sup = Valuation::at_least(prec);
    for (const auto& e : cert.projectors()) {
        const Valuation v = vector_norm(padicop::apply(e.truncated(prec), g));
        if (v.is_exact() && (sup.is_at_least() || v.value() < sup.value()))
            sup = v;
    }
    return {norm, sup, norm == sup};
}

CertificateCheck verify_certificate(const StrongNormalCertificate& cert, int digits)
{
    CertificateCheck check;
    const Prime p = cert.prime();
    const std::size_t n = cert.dimension();
    const auto& es = cert.projectors();
    const auto& ls = cert.eigenvalues();
    PadicMatrix sum = PadicMatrix::zero(p, cert.precision(), n);
    PadicMatrix recon = sum;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!congruent(es[i] * es[i], es[i], digits))
            check.idempotent = false;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const PadicMatrix zero = PadicMatrix::zero(p, cert.precision(), n);
            if (!congruent(es[i] * es[j], zero, digits) || !congruent(es[j] * es[i], zero, digits))
                check.orthogonal = false;
            if (congruent(ls[i], ls[j], digits))
                check.distinct = false;
        }
        const Valuation norm = op_norm(es[i]);
        if (!(norm.is_exact() && norm.value() == 0))
            check.unit_norm = false;
        sum += es[i];
        recon += ls[i] * es[i];
    }
    check.partition = congruent(sum, PadicMatrix::identity(p, cert.precision(), n), digits);
    check.reconstructs = congruent(recon, cert.matrix(), digits);
    return check;
}

} // namespace padicop
