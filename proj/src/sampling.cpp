#include "padicop/sampling.hpp"

#include <algorithm>

namespace padicop {

PadicInt Sampler::padic_int(Prime p, int precision)
{
    mpz_class r = 0;
    for (int d = 0; d < precision; ++d)
        r = r * p.value() + below(p.value());
    return PadicInt::from_integer(r, p, precision);
}

PadicInt Sampler::unit(Prime p, int precision)
{
    PadicInt x = padic_int(p, precision);
    const unsigned long digit = x.reduce_mod_p();
    if (digit == 0)
        x += PadicInt::from_integer(1 + below(p.value() - 1), p, precision);
    return x;
}

PadicInt Sampler::multiple_of_power(Prime p, int precision, int v)
{
    return PadicInt::from_integer(p.power(v), p, precision) * padic_int(p, precision);
}

PrincipalUnit Sampler::principal_unit(Prime p, int precision, int max_valuation)
{
    const int v = 1 + static_cast<int>(below(static_cast<std::uint64_t>(std::max(max_valuation, 1))));
    return PrincipalUnit(PadicInt::one(p, precision) + multiple_of_power(p, precision, v));
}

} // namespace padicop
