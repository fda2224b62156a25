#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "padicop/matrix.hpp"
#include "padicop/sampling.hpp"
#include "support.hpp"

using namespace padicop;

namespace {

const Prime p5(5);

PadicMatrix M(const std::vector<std::vector<long>>& rows, int prec = 32, Prime p = p5)
{
    return PadicMatrix::from_rows(p, prec, rows);
}

PadicInt Z(long n, int prec = 32, Prime p = p5)
{
    return PadicInt::from_integer(n, p, prec);
}

CharPoly poly(const std::vector<long>& coeffs, int prec, Prime p)
{
    CharPoly f;
    for (long c : coeffs)
        f.coeffs.push_back(Z(c, prec, p));
    return f;
}

ResidueMatrix R(unsigned long p, const std::vector<unsigned long>& entries)
{
    std::size_t n = 1;
    while (n * n < entries.size())
        ++n;
    return ResidueMatrix{p, n, entries};
}

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

PadicMatrix random_matrix(Sampler& s, Prime p, int prec, std::size_t n, int min_v)
{
    PadicMatrix a(p, prec, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.set(i, j, s.multiple_of_power(p, prec, min_v + static_cast<int>(s.below(3))));
    return a;
}

} // namespace

TEST_CASE("operator norm")
{
    CHECK(op_norm(M({{5, 1}, {0, 25}})) == Valuation::exact(0));
    CHECK(op_norm(PadicMatrix::zero(p5, 32, 3)) == Valuation::at_least(32));
    CHECK(op_norm(M({{5, 10}, {25, 5}})) == Valuation::exact(1));
    CHECK(op_norm(PadicMatrix::identity(p5, 32, 4)) == Valuation::exact(0));
}

TEST_CASE("ring operations")
{
    const PadicMatrix a = M({{1, 2}, {3, 4}});
    CHECK(a * PadicMatrix::identity(p5, 32, 2) == a);
    CHECK(M({{2, 0}, {0, 3}}) * M({{5, 0}, {0, 7}}) == M({{10, 0}, {0, 21}}));
    CHECK(a + a == scalar_mul(Z(2), a));
    CHECK(a - a == PadicMatrix::zero(p5, 32, 2));
    CHECK(matpow(a, 3) == a * a * a);
    CHECK(matpow(a, 0) == PadicMatrix::identity(p5, 32, 2));
    CHECK(PadicMatrix::diagonal({Z(1), Z(2)}) == M({{1, 0}, {0, 2}}));

    const PadicVector f{Z(1), Z(1)};
    const PadicVector g = padicop::apply(a, f);
    CHECK(g[0] == Z(3));
    CHECK(g[1] == Z(7));

    CHECK(kind_of([&] { return a * PadicMatrix::identity(p5, 32, 3); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { return a + M({{1, 0}, {0, 1}}, 32, Prime(7)); }) == ErrorKind::PrimeMismatch);
    CHECK(kind_of([] { return M({{1, 2}, {3}}); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { return padicop::apply(a, PadicVector{Z(1)}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("property: norm is ultrametric and submultiplicative")
{
    Sampler s(101);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + s.below(4);
        const PadicMatrix a = random_matrix(s, p5, 32, n, 0);
        const PadicMatrix b = random_matrix(s, p5, 32, n, static_cast<int>(s.below(2)));
        const int va = op_norm(a).value();
        const int vb = op_norm(b).value();
        CHECK(op_norm(a + b).value() >= std::min(va, vb));
        CHECK(op_norm(a * b).value() >= va + vb);
    }
}

TEST_CASE("reduction and nondegeneracy")
{
    CHECK(reduction(M({{6, 1}, {0, 7}})) == R(5, {1, 1, 0, 2}));
    CHECK(reduction(scalar_mul(Z(5), M({{6, 1}, {0, 7}}))) == R(5, {0, 0, 0, 0}));
    CHECK_FALSE(is_nondegenerate(R(5, {1, 0, 0, 1})));
    CHECK(is_nondegenerate(R(5, {1, 1, 0, 1})));
    CHECK_FALSE(is_nondegenerate(R(5, {0, 0, 0, 0})));
    CHECK_FALSE(is_nondegenerate(R(5, {3})));
}

TEST_CASE("residue characteristic polynomial and eigenvalues")
{
    const ResiduePoly f = residue_char_poly(R(5, {0, 1, 2, 1}));
    // x^2 - x - 2
    CHECK(f.coeffs == std::vector<unsigned long>{3, 4, 1});
    const auto roots = residue_eigen(R(5, {0, 1, 2, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].root == 4);
    CHECK(roots[1].multiplicity == 1);

    const auto id = residue_eigen(R(5, {1, 0, 0, 1}));
    REQUIRE(id.size() == 1);
    CHECK(id[0].root == 1);
    CHECK(id[0].multiplicity == 2);

    const auto fib = residue_eigen(R(5, {0, 1, 1, 1}));
    CHECK(residue_char_poly(R(5, {0, 1, 1, 1})).coeffs == std::vector<unsigned long>{4, 4, 1});
    REQUIRE(fib.size() == 1);
    CHECK(fib[0].root == 3);
    CHECK(fib[0].multiplicity == 2);

    // x^2 + 1 has no roots mod 7.
    CHECK(residue_eigen(R(7, {0, 6, 1, 0})).empty());
}

TEST_CASE("characteristic polynomial over Z_p")
{
    const CharPoly f = char_poly(M({{0, 1}, {2, 1}}));
    REQUIRE(f.degree() == 2);
    CHECK(f.coeffs[0] == Z(-2));
    CHECK(f.coeffs[1] == Z(-1));
    CHECK(f.coeffs[2] == Z(1));
    CHECK(f.derivative().coeffs.size() == 2);
    CHECK(f.evaluate(Z(2)).is_zero());
    CHECK(f.evaluate(Z(-1)).is_zero());

    SUBCASE("against the product of known linear factors")
    {
        std::mt19937_64 rng(5);
        for (unsigned long pv : {3UL, 5UL, 7UL}) {
            for (int i = 0; i < 10; ++i) {
                const std::size_t n = testing_support::random_dimension(rng, pv);
                const auto known = testing_support::random_known(rng, pv, n, 32);
                const auto expected = oracle::poly_from_roots(known.eigenvalues);
                const CharPoly g = char_poly(known.matrix);
                REQUIRE(g.coeffs.size() == expected.size());
                for (std::size_t k = 0; k < expected.size(); ++k)
                    CHECK(testing_support::same_mod(g.coeffs[k].residue(), expected[k], pv, 32));
            }
        }
    }
    SUBCASE("Berkowitz handles p <= n")
    {
        // diag(0,1,2,3) over Z_3: the divisions of trace-based methods fail here.
        const auto c = berkowitz({0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3}, 4, 81);
        const auto e = oracle::poly_from_roots({0, 1, 2, 3});
        for (std::size_t k = 0; k < e.size(); ++k)
            CHECK(testing_support::same_mod(c[k], e[k], 3, 4));
    }
}

TEST_CASE("Hensel lifting")
{
    const Prime p7(7);
    const CharPoly f = poly({-2, -1, 1}, 32, p5);
    CHECK(hensel_lift_root(f, 2) == Z(2));

    const CharPoly g = poly({-2, 0, 1}, 32, p7);
    const PadicInt r = hensel_lift_root(g, 3);
    CHECK(r.reduce_mod_p() == 3);
    CHECK(r * r == Z(2, 32, p7));
    CHECK(r.precision() == 32);
    CHECK(hensel_lift_root(g, 4, 10) * hensel_lift_root(g, 4, 10) == Z(2, 10, p7));

    CHECK(kind_of([] { hensel_lift_root(poly({-1, -1, 1}, 32, p5), 3); }) == ErrorKind::NotASimpleRoot);
    CHECK(kind_of([&] { hensel_lift_root(f, 1); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { hensel_lift_root(f, 2, 40); }) == ErrorKind::PrecisionExceeded);
}

TEST_CASE("property: lifted roots are roots and reduce to the seed")
{
    Sampler s(103);
    for (unsigned long pv : {3UL, 5UL, 7UL}) {
        const Prime p(pv);
        for (int i = 0; i < 50; ++i) {
            // (x - a)(x - b) + p c with a != b mod p keeps both roots simple.
            const unsigned long a = s.below(pv);
            const unsigned long b = (a + 1 + s.below(pv - 1)) % pv;
            const PadicInt c = s.multiple_of_power(p, 32, 1);
            CharPoly f;
            f.coeffs = {Z(static_cast<long>(a * b), 32, p) + c, Z(-static_cast<long>(a + b), 32, p), Z(1, 32, p)};
            for (unsigned long r0 : {a, b}) {
                const PadicInt r = hensel_lift_root(f, r0);
                CHECK(r.reduce_mod_p() == r0);
                CHECK(f.evaluate(r).is_zero());
            }
        }
    }
}
