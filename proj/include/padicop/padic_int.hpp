#pragma once

#include <string>

#include <gmpxx.h>

#include "padicop/error.hpp"

namespace padicop {

/// An odd prime. p = 2 is rejected: the group-theoretic results need exp to
/// converge on pZ_p and the principal units to be torsion-free.
class Prime {
public:
    explicit Prime(unsigned long p);

    unsigned long value() const noexcept { return p_; }
    mpz_class power(int e) const;

    friend bool operator==(Prime, Prime) = default;

private:
    unsigned long p_;
};

/// p-adic valuation of an element known mod p^N. Zero (or anything that
/// vanishes at the tracked precision) gets the sentinel AtLeastN.
class Valuation {
public:
    static Valuation exact(int v) { return Valuation(v, false); }
    static Valuation at_least(int n) { return Valuation(n, true); }

    bool is_exact() const noexcept { return !at_least_; }
    bool is_at_least() const noexcept { return at_least_; }
    /// v for an exact valuation, N for AtLeastN.
    int value() const noexcept { return value_; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    std::string to_string() const;

private:
    Valuation(int v, bool at_least) : value_(v), at_least_(at_least) {}

    int value_;
    bool at_least_;
};

/// |x| = p^{exponent}, kept exact.
struct AbsoluteValue {
    unsigned long p;
    int exponent;
    bool upper_bound_only;
};

AbsoluteValue absolute_value(Prime p, Valuation v);

/// Element of Z_p known mod p^N, stored as its canonical residue in [0, p^N).
class PadicInt {
public:
    PadicInt(Prime p, int precision, const mpz_class& n);

    static PadicInt from_integer(const mpz_class& n, Prime p, int precision)
    {
        return PadicInt(p, precision, n);
    }
    static PadicInt from_string(const std::string& decimal, Prime p, int precision);
    static PadicInt zero(Prime p, int precision) { return PadicInt(p, precision, 0); }
    static PadicInt one(Prime p, int precision) { return PadicInt(p, precision, 1); }

    Prime prime() const noexcept { return p_; }
    int precision() const noexcept { return prec_; }
    const mpz_class& residue() const noexcept { return residue_; }
    mpz_class modulus() const { return p_.power(prec_); }

    Valuation valuation() const;
    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return reduce_mod_p() != 0; }
    unsigned long reduce_mod_p() const;

    /// Drops digits: the result is known mod p^precision only.
    PadicInt truncated(int precision) const;
    /// Reinterprets the canonical residue at a higher precision (zero-pads the
    /// digits). Sound only when the caller accounts for the unknown digits,
    /// e.g. when they are later multiplied by a high enough power of p.
    PadicInt lifted(int precision) const;
    /// Digit-wise: the integer representative with digits 0..count-1.
    mpz_class leading_digits(int count) const;

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& other);
    PadicInt& operator-=(const PadicInt& other);
    PadicInt& operator*=(const PadicInt& other);

    friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
    friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
    friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }

    /// Binary exponentiation with a nonnegative integer exponent.
    PadicInt pow(const mpz_class& exponent) const;
    /// Multiplicative inverse of a unit.
    PadicInt inverse() const;

    /// Same prime, precision and residue.
    friend bool operator==(const PadicInt& a, const PadicInt& b)
    {
        return a.p_ == b.p_ && a.prec_ == b.prec_ && a.residue_ == b.residue_;
    }

    std::string to_string() const { return residue_.get_str(); }

private:
    void check_same_prime(const PadicInt& other) const;

    Prime p_;
    int prec_;
    mpz_class residue_;
};

/// c with b*c = a mod p^{N-w}, w = v(b). Precision drops by w.
PadicInt divide_exact(const PadicInt& a, const PadicInt& b);

/// a = b mod p^digits.
bool congruent(const PadicInt& a, const PadicInt& b, int digits);

/// Smallest e with p^e >= n (n >= 1).
int ceil_log(Prime p, const mpz_class& n);
/// Largest e with p^e <= n (n >= 1).
int floor_log(Prime p, const mpz_class& n);
/// v_p(n!) by Legendre's formula.
long factorial_valuation(Prime p, long n);
/// v_p(n) for n != 0.
int integer_valuation(Prime p, const mpz_class& n);

} // namespace padicop
