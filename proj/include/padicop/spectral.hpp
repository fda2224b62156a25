#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "padicop/functions.hpp"
#include "padicop/matrix.hpp"

namespace padicop {

/// Spectral data of a strongly normal matrix: distinct eigenvalues
/// lambda_1..lambda_k in Z_p and idempotents E_1..E_k with
/// sum E_i = I, E_i E_j = 0 (i != j) and A = sum lambda_i E_i.
class StrongNormalCertificate {
public:
    StrongNormalCertificate(PadicMatrix matrix, std::vector<PadicInt> eigenvalues,
                            std::vector<PadicMatrix> projectors);

    const PadicMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<PadicInt>& eigenvalues() const noexcept { return eigenvalues_; }
    const std::vector<PadicMatrix>& projectors() const noexcept { return projectors_; }
    std::size_t size() const noexcept { return eigenvalues_.size(); }
    std::size_t dimension() const noexcept { return matrix_.dimension(); }
    Prime prime() const noexcept { return matrix_.prime(); }
    /// Digits to which every identity of the certificate holds.
    int precision() const;

private:
    PadicMatrix matrix_;
    std::vector<PadicInt> eigenvalues_;
    std::vector<PadicMatrix> projectors_;
};

/// Certifies A through its reduction: A must be nondegenerate and its
/// reduction must have n distinct eigenvalues in F_p. Those are Hensel-lifted
/// and the projectors are the Lagrange interpolants
/// E_i = prod_{j != i} (A - lambda_j I) / (lambda_i - lambda_j).
StrongNormalCertificate certify_strongly_normal(const PadicMatrix& a);

/// Wider route for matrices whose reduction is scalar: writes
/// A = c I + p^w B with B not scalar mod p, certifies B (recursively), and
/// maps the spectrum back by lambda -> c + p^w lambda. Projectors are
/// inherited from B, so they carry w fewer digits. An exactly scalar A
/// yields the one-point spectrum {c} with E = I.
StrongNormalCertificate certify_by_shift_and_scale(const PadicMatrix& a);

/// Indices into a certificate's spectrum: the open-closed subsets of a finite
/// spectrum are exactly its subsets.
using SpectralSubset = std::vector<std::size_t>;

/// E(L) = sum_{i in L} E_i.
PadicMatrix spectral_measure(const StrongNormalCertificate& cert, const SpectralSubset& subset);

using ScalarFunction = std::function<PadicInt(const PadicInt&)>;

/// phi(A) = sum phi(lambda_i) E_i.
PadicMatrix functional_calculus(const StrongNormalCertificate& cert, const ScalarFunction& phi);

/// Spectral data of phi(A): eigenvalues phi(lambda_i), with projectors of
/// eigenvalues that coincide at the working precision merged,
/// E_{phi(A)}(M) = E_A(phi^{-1}(M)).
StrongNormalCertificate pushforward(const StrongNormalCertificate& cert, const ScalarFunction& phi);

/// lambda -> sum c_k lambda^k.
ScalarFunction polynomial_function(std::vector<PadicInt> coeffs);
/// lambda -> sum c_n P_n(lambda) over the Mahler basis.
ScalarFunction mahler_series_function(std::vector<PadicInt> coeffs);

struct OrthogonalityCheck {
    Valuation norm;           // ||f||
    Valuation sup_projected;  // max_i ||E_i f||
    bool holds;
};

/// ||f|| = sup_L ||E(L) f||, checked over singleton L.
OrthogonalityCheck check_orthogonality(const StrongNormalCertificate& cert, const PadicVector& f);
inline bool verify_orthogonality(const StrongNormalCertificate& cert, const PadicVector& f)
{
    return check_orthogonality(cert, f).holds;
}

/// Result of re-verifying every certificate identity at `digits` digits.
struct CertificateCheck {
    bool idempotent = true;     // E_i^2 = E_i
    bool orthogonal = true;     // E_i E_j = 0
    bool partition = true;      // sum E_i = I
    bool reconstructs = true;   // sum lambda_i E_i = A
    bool unit_norm = true;      // ||E_i|| = 1
    bool distinct = true;       // lambda_i pairwise distinct

    bool ok() const { return idempotent && orthogonal && partition && reconstructs && unit_norm && distinct; }
};

CertificateCheck verify_certificate(const StrongNormalCertificate& cert, int digits);
inline CertificateCheck verify_certificate(const StrongNormalCertificate& cert)
{
    return verify_certificate(cert, cert.precision());
}

} // namespace padicop
