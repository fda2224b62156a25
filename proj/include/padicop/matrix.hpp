#pragma once

#include <cstddef>
#include <vector>

#include "padicop/padic_int.hpp"

namespace padicop {

using PadicVector = std::vector<PadicInt>;

/// Square matrix over Z_p with the sup operator norm ||A|| = max |a_ij|.
/// Entries share the prime and the precision.
class PadicMatrix {
public:
    PadicMatrix(Prime p, int precision, std::size_t n);
    PadicMatrix(Prime p, int precision, std::size_t n, const std::vector<mpz_class>& row_major);

    static PadicMatrix identity(Prime p, int precision, std::size_t n);
    static PadicMatrix zero(Prime p, int precision, std::size_t n) { return PadicMatrix(p, precision, n); }
    static PadicMatrix diagonal(const PadicVector& diag);
    static PadicMatrix from_rows(Prime p, int precision, const std::vector<std::vector<long>>& rows);

    Prime prime() const noexcept { return p_; }
    int precision() const noexcept { return prec_; }
    std::size_t dimension() const noexcept { return n_; }

    PadicInt operator()(std::size_t i, std::size_t j) const;
    const mpz_class& residue(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const PadicInt& value);

    PadicMatrix truncated(int precision) const;
    /// Zero-pads every entry; see PadicInt::lifted.
    PadicMatrix lifted(int precision) const;
    bool is_zero() const;

    PadicMatrix& operator+=(const PadicMatrix& other);
    PadicMatrix& operator-=(const PadicMatrix& other);
    friend PadicMatrix operator+(PadicMatrix a, const PadicMatrix& b) { return a += b; }
    friend PadicMatrix operator-(PadicMatrix a, const PadicMatrix& b) { return a -= b; }
    friend PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b);
    friend PadicMatrix operator*(const PadicInt& c, const PadicMatrix& a);
    friend bool operator==(const PadicMatrix&, const PadicMatrix&) = default;

private:
    void check_compatible(const PadicMatrix& other) const;
    void reduce_all();

    Prime p_;
    int prec_;
    std::size_t n_;
    std::vector<mpz_class> data_;
};

PadicMatrix scalar_mul(const PadicInt& c, const PadicMatrix& a);
/// a^e by binary exponentiation, e >= 0.
PadicMatrix matpow(const PadicMatrix& a, const mpz_class& exponent);
PadicVector apply(const PadicMatrix& a, const PadicVector& f);

/// Min entry valuation; ||A|| = p^{-value}. Zero matrix gives AtLeastN.
Valuation op_norm(const PadicMatrix& a);
/// Sup norm of a vector as a valuation.
Valuation vector_norm(const PadicVector& f);
/// Entrywise congruence mod p^digits.
bool congruent(const PadicMatrix& a, const PadicMatrix& b, int digits);

/// Matrix over the residue field F_p.
struct ResidueMatrix {
    unsigned long p;
    std::size_t n;
    std::vector<unsigned long> entries;

    unsigned long operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;
};

ResidueMatrix reduction(const PadicMatrix& a);

/// False iff the reduction is nu * I for some nu in F_p.
bool is_nondegenerate(const ResidueMatrix& a);

/// Monic polynomial over F_p, coefficients lowest degree first.
struct ResiduePoly {
    unsigned long p;
    std::vector<unsigned long> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    unsigned long evaluate(unsigned long x) const;
};

struct RootMultiplicity {
    unsigned long root;
    int multiplicity;
};

ResiduePoly residue_char_poly(const ResidueMatrix& a);
/// Roots of the characteristic polynomial lying in F_p, ascending. The
/// multiplicities sum to less than n when the polynomial does not split.
std::vector<RootMultiplicity> residue_eigen(const ResidueMatrix& a);

/// Monic polynomial over Z_p, coefficients lowest degree first.
struct CharPoly {
    std::vector<PadicInt> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    PadicInt evaluate(const PadicInt& x) const;
    CharPoly derivative() const;
};

/// det(xI - A), division-free (Berkowitz), exact mod p^N.
CharPoly char_poly(const PadicMatrix& a);

/// Newton lift of a simple root r0 of f mod p to a root mod p^digits.
PadicInt hensel_lift_root(const CharPoly& f, unsigned long r0, int digits);
inline PadicInt hensel_lift_root(const CharPoly& f, unsigned long r0)
{
    return hensel_lift_root(f, r0, f.coeffs.front().precision());
}

/// Coefficients (lowest first) of det(xI - A) for a row-major n x n matrix
/// of residues, computed mod `modulus` without divisions.
std::vector<mpz_class> berkowitz(const std::vector<mpz_class>& a, std::size_t n, const mpz_class& modulus);

} // namespace padicop
