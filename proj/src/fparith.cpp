#include "lambda/fparith.hpp"

#include "lambda/errors.hpp"

#include <string>

namespace lambda {

namespace {

// floor(a / b) for b > 0
std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b) != 0 && a < 0)
        --q;
    return q;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeContext::PrimeContext(std::uint32_t p) : p_(p)
{
    if (p < 3 || p > kMaxPrime || !is_prime(p))
        throw DomainError("p must be an odd prime <= " + std::to_string(kMaxPrime) + ", got " + std::to_string(p));
    std::vector<std::uint32_t> fact(p), inv_fact(p);
    fact[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i)
        fact[i] = static_cast<std::uint32_t>(std::uint64_t(fact[i - 1]) * i % p);
    fact_ = std::make_shared<const std::vector<std::uint32_t>>(fact);
    inv_fact[p - 1] = inv(Fp{fact[p - 1]}).value;
    for (std::uint32_t i = p - 1; i > 0; --i)
        inv_fact[i - 1] = static_cast<std::uint32_t>(std::uint64_t(inv_fact[i]) * i % p);
    inv_fact_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(inv_fact));
}

Fp PrimeContext::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return {static_cast<std::uint32_t>(r)};
}

std::int64_t PrimeContext::to_signed(Fp a) const
{
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
}

Fp PrimeContext::add(Fp a, Fp b) const
{
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
}

Fp PrimeContext::sub(Fp a, Fp b) const
{
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
}

Fp PrimeContext::neg(Fp a) const
{
    return {a.value == 0 ? 0 : p_ - a.value};
}

Fp PrimeContext::mul(Fp a, Fp b) const
{
    return {static_cast<std::uint32_t>(std::uint64_t(a.value) * b.value % p_)};
}

Fp PrimeContext::pow(Fp a, std::uint64_t e) const
{
    Fp r = one();
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fp PrimeContext::inv(Fp a) const
{
    if (a.is_zero())
        throw DomainError("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

Fp PrimeContext::binom(std::int64_t n, std::int64_t k) const
{
    if (n < 0 || k < 0 || k > n)
        return zero();
    const auto& fact = *fact_;
    const auto& inv_fact = *inv_fact_;
    std::uint64_t r = 1;
    while (k > 0) {
        auto nd = static_cast<std::uint32_t>(n % p_);
        auto kd = static_cast<std::uint32_t>(k % p_);
        if (kd > nd)
            return zero();
        r = r * fact[nd] % p_ * inv_fact[kd] % p_ * inv_fact[nd - kd] % p_;
        n /= p_;
        k /= p_;
    }
    return {static_cast<std::uint32_t>(r)};
}

Fp binom_mod_p(std::int64_t n, std::int64_t k, const PrimeContext& ctx)
{
    return ctx.binom(n, k);
}

Fp coeff_a(std::int64_t k, std::int64_t j, const PrimeContext& ctx)
{
    Fp c = ctx.binom(std::int64_t(ctx.p() - 1) * (k - j) - 1, j);
    return (j % 2 == 0) ? ctx.neg(c) : c;
}

Fp coeff_b(std::int64_t k, std::int64_t j, const PrimeContext& ctx)
{
    Fp c = ctx.binom(std::int64_t(ctx.p() - 1) * (k - j), j);
    return (j % 2 == 0) ? c : ctx.neg(c);
}

std::int64_t bound_N(std::int64_t k, const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    return floor_div(k * p - (k + 1), p);
}

std::int64_t bound_Nprime(std::int64_t k, const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    return floor_div(k * p - k, p);
}

int valuation(std::int64_t n, std::uint32_t p)
{
    if (n <= 0)
        throw DomainError("p-adic valuation needs n >= 1, got " + std::to_string(n));
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

int valuation_p(std::int64_t n, const PrimeContext& ctx)
{
    return valuation(n, ctx.p());
}

}  // namespace lambda
