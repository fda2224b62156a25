#include <doctest.h>

#include "oracle.hpp"
#include "padicop/functions.hpp"

using oracle::BigRational;
using oracle::SeriesKind;

TEST_CASE("oracle_power")
{
    CHECK(oracle::oracle_power(6, 2, 5, 4) == 36);
    for (long b : {0L, 1L, 7L, -3L})
        CHECK(oracle::oracle_power(b, 0, 5, 4) == 1);
    CHECK(oracle::oracle_power(-1, 3, 5, 2) == 24);

    const padicop::Prime p5(5);
    const auto z = padicop::PadicInt::from_integer(5, p5, 6);
    const mpz_class e = 125;
    CHECK(padicop::principal_power(z, e).value().residue() == oracle::oracle_power(6, e, 5, 6));
}

TEST_CASE("exact reduction")
{
    CHECK(oracle::reduce(BigRational(1, 2), 5, 3) == 63);
    CHECK(oracle::reduce(BigRational(-7), 5, 2) == 18);
    CHECK_THROWS_AS(oracle::reduce(BigRational(1, 5), 5, 3), oracle::DenominatorNotInvertible);
    CHECK(oracle::valuation(BigRational(50, 3), 5) == 2);
    CHECK(oracle::valuation(BigRational(3, 25), 5) == -2);
}

TEST_CASE("series partial sums")
{
    CHECK(oracle::oracle_series(SeriesKind::Log, 1, 30, 5, 16) == 0);
    CHECK(oracle::oracle_series(SeriesKind::Exp, 0, 30, 5, 16) == 1);

    // exp(log 6) = 6, with the log partial sum fed back as an exact rational.
    BigRational log6 = 0;
    BigRational y = 5;
    BigRational power = 1;
    for (int k = 1; k < 60; ++k) {
        power *= y;
        log6 += (k % 2 == 1 ? power : BigRational(-power)) / k;
    }
    log6.canonicalize();
    CHECK(oracle::oracle_series(SeriesKind::Exp, log6, 60, 5, 20) == 6);
    CHECK(oracle::oracle_series(SeriesKind::Exp, log6, 60, 5, 20) ==
          oracle::oracle_series_reversed(SeriesKind::Exp, log6, 60, 5, 20));
    CHECK(oracle::oracle_series(SeriesKind::Log, 6, 60, 5, 20) ==
          oracle::oracle_series_reversed(SeriesKind::Log, 6, 60, 5, 20));

    // Too few exp terms for a non-integral argument leaves a p in a denominator.
    CHECK_THROWS_AS(oracle::oracle_series(SeriesKind::Exp, 1, 6, 5, 4), oracle::DenominatorNotInvertible);
}

TEST_CASE("Mahler partial sums")
{
    CHECK(oracle::oracle_mahler(5, 2, 3, 5, 8) == 36);
    CHECK(oracle::binomial(7, 3) == 35);
    CHECK(oracle::binomial(BigRational(1, 2), 2) == BigRational(-1, 8));
}

TEST_CASE("conjugated matrices")
{
    const auto c = oracle::conjugate({2, mpz_class(-1)}, {{1, 1}, {2, -1}}, 5, 8);
    // P D P^{-1} with P = [[1,1],[2,-1]] is [[0,1],[2,1]].
    const mpz_class m = 390625;
    CHECK(c.entries == std::vector<mpz_class>{0, 1, 2, 1});
    // E_1 = [[1,1],[2,2]] / 3
    const mpz_class third = oracle::reduce(BigRational(1, 3), 5, 8);
    CHECK(c.projectors[0] == std::vector<mpz_class>{third, third, (2 * third) % m, (2 * third) % m});
    CHECK(oracle::poly_from_roots({2, mpz_class(-1)}) == std::vector<mpz_class>{-2, -1, 1});
    CHECK(oracle::determinant({{1, 1}, {2, -1}}) == -3);
    const oracle::RationalMatrix p{{1, 1}, {2, -1}};
    CHECK(oracle::multiply(p, oracle::inverse(p)) == oracle::RationalMatrix{{1, 0}, {0, 1}});
    CHECK_THROWS(oracle::inverse({{1, 2}, {2, 4}}));
}
