#pragma once

// Seeded generators shared by the unit and acceptance suites. Random
// certifiable matrices are built by the oracle as P D P^{-1}, so their
// eigenvalues and projectors are known independently of the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "padicop/matrix.hpp"
#include "padicop/sampling.hpp"

namespace testing_support {

struct KnownMatrix {
    padicop::PadicMatrix matrix;
    std::vector<mpz_class> eigenvalues;
    std::vector<padicop::PadicMatrix> projectors;
};

inline mpz_class power_of(unsigned long p, int e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
    return r;
}

// Integer basis with small entries that stays invertible mod p.
inline std::vector<std::vector<long>> random_basis(std::mt19937_64& rng, unsigned long p, std::size_t n)
{
    for (;;) {
        std::vector<std::vector<long>> basis(n, std::vector<long>(n));
        oracle::RationalMatrix q(n, std::vector<oracle::BigRational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                basis[i][j] = static_cast<long>(rng() % 5) - 2;
                q[i][j] = basis[i][j];
            }
        const oracle::BigRational det = oracle::determinant(q);
        if (det != 0 && mpz_class(det.get_num()) % p != 0)
            return basis;
    }
}

// n <= p eigenvalues with distinct residues; `scale` multiplies them by p^scale.
inline KnownMatrix random_known(std::mt19937_64& rng, unsigned long p, std::size_t n, int prec, int scale = 0)
{
    std::vector<unsigned long> residues(p);
    std::iota(residues.begin(), residues.end(), 0UL);
    std::shuffle(residues.begin(), residues.end(), rng);
    const mpz_class pn = power_of(p, prec);
    std::vector<mpz_class> eig;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class tail = 0;
        for (int d = 0; d < 6; ++d)
            tail = tail * p + rng() % p;
        mpz_class l = (residues[i] + p * tail) * power_of(p, scale);
        eig.push_back(l % pn);
    }
    const auto conj = oracle::conjugate(eig, random_basis(rng, p, n), p, prec);
    const padicop::Prime pr(p);
    KnownMatrix out{padicop::PadicMatrix(pr, prec, n, conj.entries), eig, {}};
    for (const auto& e : conj.projectors)
        out.projectors.emplace_back(pr, prec, n, e);
    return out;
}

inline std::size_t random_dimension(std::mt19937_64& rng, unsigned long p)
{
    const std::size_t cap = std::min<std::size_t>(p, 8);
    return 2 + rng() % (cap - 1);
}

inline padicop::PadicVector random_vector(padicop::Sampler& s, padicop::Prime p, int prec, std::size_t n)
{
    padicop::PadicVector f;
    for (std::size_t i = 0; i < n; ++i)
        f.push_back(s.multiple_of_power(p, prec, static_cast<int>(s.below(3))));
    return f;
}

inline bool same_mod(const mpz_class& a, const mpz_class& b, unsigned long p, int digits)
{
    const mpz_class m = power_of(p, digits);
    mpz_class d = (a - b) % m;
    return d == 0;
}

} // namespace testing_support
