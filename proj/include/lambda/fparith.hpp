#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace lambda {

/// Residue in [0, p). Arithmetic goes through PrimeContext.
struct Fp {
    std::uint32_t value = 0;

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr bool operator==(Fp, Fp) = default;
};

/// Field F_p for an odd prime p, with factorial tables for Lucas digits.
class PrimeContext {
public:
    static constexpr std::uint32_t kMaxPrime = 65521;

    /// Throws DomainError unless p is an odd prime <= kMaxPrime.
    explicit PrimeContext(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Fp zero() const { return {0}; }
    Fp one() const { return {1}; }
    Fp from_int(std::int64_t v) const;
    /// Symmetric representative in (-p/2, p/2].
    std::int64_t to_signed(Fp a) const;

    Fp add(Fp a, Fp b) const;
    Fp sub(Fp a, Fp b) const;
    Fp neg(Fp a) const;
    Fp mul(Fp a, Fp b) const;
    Fp inv(Fp a) const;  // a != 0
    Fp pow(Fp a, std::uint64_t e) const;

    /// C(n, k) mod p via base-p digits. Zero for k > n, n < 0 or k < 0.
    Fp binom(std::int64_t n, std::int64_t k) const;

    friend bool operator==(const PrimeContext& a, const PrimeContext& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
    std::shared_ptr<const std::vector<std::uint32_t>> fact_;
    std::shared_ptr<const std::vector<std::uint32_t>> inv_fact_;
};

bool is_prime(std::uint64_t n);

Fp binom_mod_p(std::int64_t n, std::int64_t k, const PrimeContext& ctx);

/// a(k,j) = (-1)^{j+1} C((p-1)(k-j)-1, j)
Fp coeff_a(std::int64_t k, std::int64_t j, const PrimeContext& ctx);
/// b(k,j) = (-1)^j C((p-1)(k-j), j)
Fp coeff_b(std::int64_t k, std::int64_t j, const PrimeContext& ctx);

/// N(k) = floor(k - (k+1)/p); -1 means an empty summation range.
std::int64_t bound_N(std::int64_t k, const PrimeContext& ctx);
/// N'(k) = floor(k - k/p)
std::int64_t bound_Nprime(std::int64_t k, const PrimeContext& ctx);

/// p-adic valuation of n >= 1. Throws DomainError for n <= 0.
int valuation_p(std::int64_t n, const PrimeContext& ctx);
int valuation(std::int64_t n, std::uint32_t p);

}  // namespace lambda
