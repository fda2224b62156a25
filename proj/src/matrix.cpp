#include "padicop/matrix.hpp"

#include <algorithm>

namespace padicop {

PadicMatrix::PadicMatrix(Prime p, int precision, std::size_t n)
    : p_(p), prec_(precision), n_(n), data_(n * n, mpz_class(0))
{
    if (precision < 1)
        throw Error(ErrorKind::InsufficientPrecision, "matrix precision must be >= 1");
    if (n == 0)
        throw Error(ErrorKind::DimensionMismatch, "empty matrix");
}

PadicMatrix::PadicMatrix(Prime p, int precision, std::size_t n, const std::vector<mpz_class>& row_major)
    : PadicMatrix(p, precision, n)
{
    if (row_major.size() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n * n) + " entries, got " +
                                                      std::to_string(row_major.size()));
    data_ = row_major;
    reduce_all();
}

PadicMatrix PadicMatrix::identity(Prime p, int precision, std::size_t n)
{
    PadicMatrix m(p, precision, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

PadicMatrix PadicMatrix::diagonal(const PadicVector& diag)
{
    if (diag.empty())
        throw Error(ErrorKind::DimensionMismatch, "empty diagonal");
    int prec = diag.front().precision();
    for (const auto& d : diag)
        prec = std::min(prec, d.precision());
    PadicMatrix m(diag.front().prime(), prec, diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m.set(i, i, diag[i]);
    return m;
}

PadicMatrix PadicMatrix::from_rows(Prime p, int precision, const std::vector<std::vector<long>>& rows)
{
    std::vector<mpz_class> flat;
    for (const auto& row : rows) {
        if (row.size() != rows.size())
            throw Error(ErrorKind::DimensionMismatch, "matrix rows must be square");
        for (long v : row)
            flat.emplace_back(v);
    }
    return PadicMatrix(p, precision, rows.size(), flat);
}

PadicInt PadicMatrix::operator()(std::size_t i, std::size_t j) const
{
    return PadicInt(p_, prec_, data_[i * n_ + j]);
}

void PadicMatrix::set(std::size_t i, std::size_t j, const PadicInt& value)
{
    if (!(value.prime() == p_))
        throw Error(ErrorKind::PrimeMismatch, "entry over a different prime");
    if (value.precision() < prec_) {
        prec_ = value.precision();
        reduce_all();
    }
    data_[i * n_ + j] = value.residue();
    reduce_all();
}

void PadicMatrix::reduce_all()
{
    const mpz_class m = p_.power(prec_);
    for (auto& x : data_)
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
}

PadicMatrix PadicMatrix::truncated(int precision) const
{
    if (precision > prec_)
        throw Error(ErrorKind::PrecisionExceeded, "cannot truncate to more digits than known");
    PadicMatrix m = *this;
    m.prec_ = precision;
    m.reduce_all();
    return m;
}

PadicMatrix PadicMatrix::lifted(int precision) const
{
    if (precision <= prec_)
        return truncated(precision);
    PadicMatrix m = *this;
    m.prec_ = precision;
    return m;
}

bool PadicMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

void PadicMatrix::check_compatible(const PadicMatrix& other) const
{
    if (!(p_ == other.p_))
        throw Error(ErrorKind::PrimeMismatch, "matrices over different primes");
    if (n_ != other.n_)
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(n_) + "x" + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

PadicMatrix& PadicMatrix::operator+=(const PadicMatrix& other)
{
    check_compatible(other);
    prec_ = std::min(prec_, other.prec_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    reduce_all();
    return *this;
}

PadicMatrix& PadicMatrix::operator-=(const PadicMatrix& other)
{
    check_compatible(other);
    prec_ = std::min(prec_, other.prec_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    reduce_all();
    return *this;
}

PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b)
{
    a.check_compatible(b);
    const std::size_t n = a.n_;
    PadicMatrix c(a.p_, std::min(a.prec_, b.prec_), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const mpz_class& aik = a.data_[i * n + k];
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c.data_[i * n + j] += aik * b.data_[k * n + j];
        }
    c.reduce_all();
    return c;
}

PadicMatrix operator*(const PadicInt& s, const PadicMatrix& a)
{
    if (!(s.prime() == a.p_))
        throw Error(ErrorKind::PrimeMismatch, "scalar over a different prime");
    PadicMatrix c = a;
    c.prec_ = std::min(a.prec_, s.precision());
    for (auto& x : c.data_)
        x *= s.residue();
    c.reduce_all();
    return c;
}

PadicMatrix scalar_mul(const PadicInt& c, const PadicMatrix& a)
{
    return c * a;
}

PadicMatrix matpow(const PadicMatrix& a, const mpz_class& exponent)
{
    if (exponent < 0)
        throw Error(ErrorKind::InvalidArgument, "negative matrix exponent");
    PadicMatrix result = PadicMatrix::identity(a.prime(), a.precision(), a.dimension());
    PadicMatrix base = a;
    mpz_class e = exponent;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

PadicVector apply(const PadicMatrix& a, const PadicVector& f)
{
    if (f.size() != a.dimension())
        throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(f.size()) +
                                                      " against a " + std::to_string(a.dimension()) +
                                                      "-dimensional operator");
    PadicVector out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        PadicInt acc = PadicInt::zero(a.prime(), a.precision());
        for (std::size_t j = 0; j < a.dimension(); ++j)
            acc += a(i, j) * f[j];
        out.push_back(acc);
    }
    return out;
}

Valuation op_norm(const PadicMatrix& a)
{
    Valuation best = Valuation::at_least(a.precision());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            const Valuation v = a(i, j).valuation();
            if (v.is_exact() && (best.is_at_least() || v.value() < best.value()))
                best = v;
        }
    return best;
}

Valuation vector_norm(const PadicVector& f)
{
    if (f.empty())
        throw Error(ErrorKind::DimensionMismatch, "empty vector");
    int prec = f.front().precision();
    for (const auto& x : f)
        prec = std::min(prec, x.precision());
    Valuation best = Valuation::at_least(prec);
    for (const auto& x : f) {
        const Valuation v = x.truncated(prec).valuation();
        if (v.is_exact() && (best.is_at_least() || v.value() < best.value()))
            best = v;
    }
    return best;
}

bool congruent(const PadicMatrix& a, const PadicMatrix& b, int digits)
{
    if (a.dimension() != b.dimension())
        throw Error(ErrorKind::DimensionMismatch, "congruence between different dimensions");
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j)
            if (!congruent(a(i, j), b(i, j), digits))
                return false;
    return true;
}

ResidueMatrix reduction(const PadicMatrix& a)
{
    ResidueMatrix r{a.prime().value(), a.dimension(), {}};
    r.entries.reserve(a.dimension() * a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j)
            r.entries.push_back(mpz_fdiv_ui(a.residue(i, j).get_mpz_t(), r.p));
    return r;
}

bool is_nondegenerate(const ResidueMatrix& a)
{
    const unsigned long nu = a(0, 0);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            if (a(i, j) != (i == j ? nu : 0))
                return true;
    return false;
}

std::vector<mpz_class> berkowitz(const std::vector<mpz_class>& a, std::size_t n, const mpz_class& modulus)
{
    auto at = [&](std::size_t i, std::size_t j) -> const mpz_class& { return a[i * n + j]; };
    auto reduce = [&](mpz_class& x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()); };

    // Highest degree first while building.
    std::vector<mpz_class> poly{1};
    for (std::size_t r = 0; r < n; ++r) {
        // Column of the Toeplitz factor: 1, -a_rr, -R S, -R A_r S, ..., -R A_r^{r-1} S
        // with A_r the leading r x r block, S = A[0..r)[r], R = A[r][0..r).
        std::vector<mpz_class> col(r + 2);
        col[0] = 1;
        col[1] = -at(r, r);
        reduce(col[1]);
        std::vector<mpz_class> vec(r);
        for (std::size_t i = 0; i < r; ++i)
            vec[i] = at(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            mpz_class dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                dot += at(r, i) * vec[i];
            col[k + 2] = -dot;
            reduce(col[k + 2]);
            std::vector<mpz_class> next(r, 0);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j)
                    next[i] += at(i, j) * vec[j];
                reduce(next[i]);
            }
            vec = std::move(next);
        }
        std::vector<mpz_class> grown(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                grown[i] += col[i - j] * poly[j];
            reduce(grown[i]);
        }
        poly = std::move(grown);
    }
    std::reverse(poly.begin(), poly.end());
    return poly;
}

unsigned long ResiduePoly::evaluate(unsigned long x) const
{
    unsigned long long acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = (acc * x + *it) % p;
    return static_cast<unsigned long>(acc);
}

ResiduePoly residue_char_poly(const ResidueMatrix& a)
{
    std::vector<mpz_class> flat(a.entries.begin(), a.entries.end());
    const auto coeffs = berkowitz(flat, a.n, mpz_class(a.p));
    ResiduePoly f{a.p, {}};
    for (const auto& c : coeffs)
        f.coeffs.push_back(c.get_ui());
    return f;
}

std::vector<RootMultiplicity> residue_eigen(const ResidueMatrix& a)
{
    ResiduePoly f = residue_char_poly(a);
    const unsigned long p = a.p;
    std::vector<RootMultiplicity> roots;
    for (unsigned long r = 0; r < p && f.degree() > 0; ++r) {
        int mult = 0;
        while (f.degree() > 0 && f.evaluate(r) == 0) {
            // Synthetic division by (x - r).
            std::vector<unsigned long> q(f.degree());
            unsigned long long carry = 0;
            for (std::size_t k = f.degree(); k-- > 0;) {
                carry = (carry * r + f.coeffs[k + 1]) % p;
                q[k] = static_cast<unsigned long>(carry);
            }
            f.coeffs = std::move(q);
            ++mult;
        }
        if (mult > 0)
            roots.push_back({r, mult});
    }
    return roots;
}

PadicInt CharPoly::evaluate(const PadicInt& x) const
{
    PadicInt acc = PadicInt::zero(x.prime(), x.precision());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

CharPoly CharPoly::derivative() const
{
    CharPoly d;
    const Prime p = coeffs.front().prime();
    if (coeffs.size() == 1) {
        d.coeffs.push_back(PadicInt::zero(p, coeffs.front().precision()));
        return d;
    }
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.coeffs.push_back(PadicInt::from_integer(mpz_class(static_cast<unsigned long>(k)), p,
                                                  coeffs[k].precision()) *
                           coeffs[k]);
    return d;
}

CharPoly char_poly(const PadicMatrix& a)
{
    std::vector<mpz_class> flat;
    flat.reserve(a.dimension() * a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j)
            flat.push_back(a.residue(i, j));
    CharPoly f;
    for (const auto& c : berkowitz(flat, a.dimension(), a.prime().power(a.precision())))
        f.coeffs.emplace_back(a.prime(), a.precision(), c);
    return f;
}

PadicInt hensel_lift_root(const CharPoly& f, unsigned long r0, int digits)
{
    const Prime p = f.coeffs.front().prime();
    int prec = f.coeffs.front().precision();
    for (const auto& c : f.coeffs)
        prec = std::min(prec, c.precision());
    if (digits > prec)
        throw Error(ErrorKind::PrecisionExceeded, "polynomial known to " + std::to_string(prec) +
                                                      " digits, lift to " + std::to_string(digits) + " requested");
    CharPoly g;
    for (const auto& c : f.coeffs)
        g.coeffs.push_back(c.truncated(digits));
    const CharPoly dg = g.derivative();

    PadicInt r = PadicInt::from_integer(mpz_class(r0), p, digits);
    if (g.evaluate(r).reduce_mod_p() != 0)
        throw Error(ErrorKind::InvalidArgument, std::to_string(r0) + " is not a root mod p");
    if (dg.evaluate(r).reduce_mod_p() == 0)
        throw Error(ErrorKind::NotASimpleRoot, std::to_string(r0) + " is a multiple root mod p");

    // Quadratic convergence: ceil(log2 digits) + 1 steps always suffice.
    for (int step = 0; step < 64; ++step) {
        const PadicInt fr = g.evaluate(r);
        if (fr.is_zero())
            return r;
        r -= fr * dg.evaluate(r).inverse();
    }
    throw Error(ErrorKind::InsufficientPrecision, "Newton iteration did not settle");
}

} // namespace padicop
