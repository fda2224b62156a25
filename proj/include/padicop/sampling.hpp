#pragma once

#include <cstdint>
#include <random>

#include "padicop/functions.hpp"

namespace padicop {

/// Deterministic sampler. Digits are drawn as raw mt19937_64 output mod p, so
/// a seed reproduces the same values on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    /// Uniform-ish integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

    /// Random element of Z_p mod p^precision.
    PadicInt padic_int(Prime p, int precision);
    PadicInt unit(Prime p, int precision);
    /// Random element of p^v Z_p (v >= 0).
    PadicInt multiple_of_power(Prime p, int precision, int v);
    /// 1 + p x with x random; valuation of s - 1 drawn in [1, max_valuation].
    PrincipalUnit principal_unit(Prime p, int precision, int max_valuation = 1);

private:
    std::mt19937_64 rng_;
};

} // namespace padicop
