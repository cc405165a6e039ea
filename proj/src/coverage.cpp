#include "lambda/coverage.hpp"

#include "lambda/errors.hpp"
#include "lambda/fparith.hpp"

#include <algorithm>
#include <string>

namespace lambda {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("integer overflow in Mori arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw DomainError("integer overflow in Mori arithmetic");
    return r;
}

std::int64_t ipow(std::int64_t base, std::int64_t e)
{
    std::int64_t r = 1;
    for (std::int64_t t = 0; t < e; ++t)
        r = checked_mul(r, base);
    return r;
}

void require_odd_prime(std::uint32_t p)
{
    PrimeContext check(p);
}

}  // namespace

std::string_view to_string(CertificateKind kind)
{
    return kind == CertificateKind::CurtisResidue ? "CURTIS_RESIDUE" : "ODD_PRIMARY";
}

std::string_view to_string(Statement s)
{
    switch (s) {
    case Statement::A:
        return "A";
    case Statement::B:
        return "B";
    default:
        return "";
    }
}

bool statement_A_applies(std::uint32_t p, std::int64_t k)
{
    return k % p != 1;
}

bool statement_B_applies(std::uint32_t p, std::int64_t k)
{
    return k % p != 0;
}

namespace {

std::optional<Certificate> odd_primary(std::int64_t n, std::uint32_t p)
{
    const std::int64_t step = 2 * std::int64_t(p - 1);
    if (n < 3 || (n - 1) % step != 0)
        return std::nullopt;
    Certificate c{n, CertificateKind::OddPrimary, p, (n - 1) / step, Statement::None};
    c.statement = statement_A_applies(p, c.k) ? Statement::A : Statement::B;
    return c;
}

}  // namespace

Certificate certify_dimension(std::int64_t n)
{
    if (n < 2)
        throw DomainError("certify_dimension needs n >= 2, got " + std::to_string(n));
    if (n % 8 != 1)
        return Certificate{n, CertificateKind::CurtisResidue, 0, 0, Statement::None};
    // n = 8l + 1 = 2(3-1)(2l) + 1
    return *odd_primary(n, 3);
}

std::vector<Certificate> all_certificates(std::int64_t n, std::uint32_t max_prime)
{
    if (n < 2)
        throw DomainError("certify_dimension needs n >= 2, got " + std::to_string(n));
    std::vector<Certificate> out;
    if (n % 8 != 1)
        out.push_back(Certificate{n, CertificateKind::CurtisResidue, 0, 0, Statement::None});
    for (std::uint32_t p = 3; p <= max_prime; p += 2)
        if (is_prime(p))
            if (auto c = odd_primary(n, p))
                out.push_back(*c);
    return out;
}

std::optional<std::string> validate(const Certificate& c)
{
    if (c.n < 2)
        return "n < 2";
    if (c.kind == CertificateKind::CurtisResidue) {
        if (c.n % 8 == 1)
            return "residue certificate for n = 1 mod 8";
        return std::nullopt;
    }
    if (c.p < 3 || !is_prime(c.p))
        return "p is not an odd prime";
    if (c.n < 3 || c.k < 1)
        return "needs n >= 3 and k >= 1";
    if (2 * std::int64_t(c.p - 1) * c.k + 1 != c.n)
        return "n != 2(p-1)k + 1";
    if (c.statement == Statement::A && !statement_A_applies(c.p, c.k))
        return "statement A needs k != 1 mod p";
    if (c.statement == Statement::B && !statement_B_applies(c.p, c.k))
        return "statement B needs k != 0 mod p";
    if (c.statement == Statement::None)
        return "missing statement tag";
    return std::nullopt;
}

EInvariant e_invariant(std::int64_t f)
{
    if (f < 0)
        throw DomainError("f must be >= 0");
    return {-1, -f - 1};
}

MoriWindow mori_window(const MoriParams& q)
{
    require_odd_prime(q.p);
    if (q.f < 0 || q.g < 0 || q.i < 1 || q.j < 1)
        throw DomainError("Mori parameters need f, g >= 0 and i, j >= 1");
    const std::int64_t p = q.p;
    const std::int64_t u = q.u();
    const std::int64_t pf = ipow(p, q.f);
    const std::int64_t pg = ipow(p, q.g);
    const std::int64_t vi = valuation(q.i, q.p);
    const std::int64_t vj = valuation(q.j, q.p);
    const std::int64_t stem_i = checked_mul(checked_mul(q.i, p - 1), pf);  // i(p-1)p^f
    const std::int64_t vsum = valuation(checked_add(checked_mul(q.i, pf), checked_mul(q.j, pg)), q.p);

    MoriWindow w;
    w.u_condition = vj + q.g + 1 < u && u <= vi + q.f + 1 + stem_i;
    w.lower = u + vsum - vi - q.f - stem_i;
    w.upper = u + vsum - vj - q.g;
    return w;
}

bool mori_check(const MoriParams& params, std::int64_t n)
{
    const MoriWindow w = mori_window(params);
    return w.u_condition && w.lower <= n && n < w.upper;
}

FinalRemarkInstance final_remark_instance(std::uint32_t p, std::int64_t k)
{
    require_odd_prime(p);
    if (k < 1)
        throw DomainError("final remark instance needs k >= 1");
    const std::int64_t pp = p;
    FinalRemarkInstance r;
    r.params = MoriParams{p, pp - 2, 0, checked_mul(pp * pp, k) - 1, ipow(pp, pp - 2)};
    r.window = mori_window(r.params);
    r.n_min = std::max<std::int64_t>(1, r.window.lower);
    r.n_max = r.window.upper - 1;
    r.verdict = r.window.u_condition && r.n_min <= r.n_max;
    r.target_dimension = checked_add(checked_mul(2 * (pp - 1), checked_add(checked_mul(ipow(pp, pp), k), 1)), 1);
    return r;
}

}  // namespace lambda
