#include "lambda/coverage.hpp"
#include "lambda/errors.hpp"

#include <doctest.h>

using namespace lambda;

namespace {

std::int64_t nu(std::int64_t x, std::int64_t p)
{
    std::int64_t e = 0;
    for (; x % p == 0; x /= p)
        ++e;
    return e;
}

std::int64_t power(std::int64_t b, std::int64_t e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// both inequality chains written out literally
bool literal_mori(std::int64_t p, std::int64_t f, std::int64_t g, std::int64_t i, std::int64_t j, std::int64_t n)
{
    const std::int64_t u = f + g + 2;
    const std::int64_t s = i * (p - 1) * power(p, f);
    const std::int64_t v = nu(i * power(p, f) + j * power(p, g), p);
    return nu(j, p) + g + 1 < u && u <= nu(i, p) + f + 1 + s && u + v - nu(i, p) - f - s <= n &&
           n < u + v - nu(j, p) - g;
}

}  // namespace

TEST_SUITE("coverage") {

TEST_CASE("certificate examples")
{
    const auto six = certify_dimension(6);
    CHECK(six.kind == CertificateKind::CurtisResidue);
    const auto nine = certify_dimension(9);
    CHECK(nine.kind == CertificateKind::OddPrimary);
    CHECK(nine.p == 3);
    CHECK(nine.k == 2);
    CHECK(nine.statement == Statement::A);
    const auto seventeen = certify_dimension(17);
    CHECK(seventeen.p == 3);
    CHECK(seventeen.k == 4);
    CHECK(seventeen.statement == Statement::B);
    bool has_five = false;
    for (const auto& c : all_certificates(17, 13)) {
        CHECK_FALSE(validate(c).has_value());
        has_five |= c.kind == CertificateKind::OddPrimary && c.p == 5 && c.k == 2;
    }
    CHECK(has_five);
    CHECK_THROWS_AS(certify_dimension(1), DomainError);
}

TEST_CASE("statement residues")
{
    CHECK_FALSE(statement_A_applies(3, 4));
    CHECK(statement_B_applies(3, 4));
    CHECK(statement_A_applies(3, 5));
    CHECK(statement_B_applies(3, 5));
    CHECK(statement_A_applies(3, 3));
    CHECK_FALSE(statement_B_applies(3, 3));
    CHECK_FALSE(statement_A_applies(3, 1));
    CHECK(statement_B_applies(3, 1));
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
        for (std::int64_t k = 1; k <= 500; ++k)
            REQUIRE((statement_A_applies(p, k) || statement_B_applies(p, k)));
}

TEST_CASE("validation catches broken certificates")
{
    CHECK(validate({9, CertificateKind::CurtisResidue}).has_value());
    CHECK(validate({9, CertificateKind::OddPrimary, 3, 3, Statement::A}).has_value());
    CHECK(validate({13, CertificateKind::OddPrimary, 3, 3, Statement::B}).has_value());
    CHECK(validate({13, CertificateKind::OddPrimary, 4, 2, Statement::A}).has_value());
    CHECK_FALSE(validate({13, CertificateKind::OddPrimary, 3, 3, Statement::A}).has_value());
}

TEST_CASE("certificates round trip their dimension")
{
    for (std::int64_t n = 2; n <= 5000; ++n) {
        const auto c = certify_dimension(n);
        REQUIRE_FALSE(validate(c).has_value());
        REQUIRE((c.kind == CertificateKind::CurtisResidue) == (n % 8 != 1));
        if (c.kind == CertificateKind::OddPrimary)
            REQUIRE(2 * (c.p - 1) * c.k + 1 == n);
        for (const auto& a : all_certificates(n, 13)) {
            REQUIRE_FALSE(validate(a).has_value());
            if (a.kind == CertificateKind::OddPrimary)
                REQUIRE(2 * (a.p - 1) * a.k + 1 == n);
        }
    }
}

TEST_CASE("e-invariant")
{
    const auto e = e_invariant(3);
    CHECK(e.sign == -1);
    CHECK(e.p_exponent == -4);
}

TEST_CASE("mori window against literal inequalities")
{
    for (std::uint32_t p : {3u, 5u})
        for (std::int64_t f = 0; f <= 2; ++f)
            for (std::int64_t g = 0; g <= 2; ++g)
                for (std::int64_t i = 1; i <= 12; ++i)
                    for (std::int64_t j = 1; j <= 12; ++j)
                        for (std::int64_t n = -60; n <= 60; ++n)
                            REQUIRE(mori_check({p, f, g, i, j}, n) == literal_mori(p, f, g, i, j, n));
}

TEST_CASE("mori boundaries")
{
    // nu(j) + g + 1 = u: f = 0, g = 0, j = 3 -> nu = 1, 1 + 0 + 1 = 2 = u
    for (std::int64_t n = -50; n <= 50; ++n)
        CHECK_FALSE(mori_check({3, 0, 0, 1, 3}, n));
    // u > nu(i) + f + 1 + i(p-1)p^f: impossible for i >= 1 once u = f+g+2 with g small, so push g
    const MoriParams big_g{3, 0, 5, 1, 1};
    CHECK(big_g.u() > 0 + 0 + 1 + 2);
    for (std::int64_t n = -50; n <= 50; ++n)
        CHECK_FALSE(mori_check(big_g, n));
    CHECK(mori_check({3, 1, 0, 8, 3}, 2));
    CHECK_THROWS_AS(mori_window({3, -1, 0, 1, 1}), DomainError);
}

TEST_CASE("final remark instances")
{
    const auto a = final_remark_instance(3, 1);
    CHECK(a.params.f == 1);
    CHECK(a.params.g == 0);
    CHECK(a.params.i == 8);
    CHECK(a.params.j == 3);
    CHECK(a.verdict);
    CHECK(a.target_dimension == 113);
    for (auto [p, k] : {std::pair<std::uint32_t, std::int64_t>{3, 1}, {3, 2}, {3, 3}, {5, 1}, {7, 2}}) {
        const auto r = final_remark_instance(p, k);
        CHECK(r.verdict);
        CHECK(r.n_min <= r.n_max);
        for (std::int64_t n = r.n_min; n <= r.n_max; ++n)
            CHECK(literal_mori(p, r.params.f, r.params.g, r.params.i, r.params.j, n));
    }
    CHECK(final_remark_instance(5, 1).target_dimension == 2 * 4 * (3125 + 1) + 1);
    CHECK_THROWS_AS(final_remark_instance(3, 0), DomainError);
    CHECK_THROWS_AS(final_remark_instance(4, 1), DomainError);
}

}
