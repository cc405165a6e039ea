#include "lambda/errors.hpp"
#include "lambda/hopf.hpp"
#include "lambda/io.hpp"

#include <doctest.h>

using namespace lambda;

namespace {
Element el(std::string_view text, const PrimeContext& f)
{
    Rewriter rw(f);
    return rw.normalize(parse_terms(text, f));
}
}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("hopf map on words")
{
    PrimeContext f(3);
    CHECK(hopf_map(el("m2 m1 l1", f), f) == el("m1 l1", f));
    CHECK(hopf_map(el("m2", f), f) == el("1", f));
    CHECK(hopf_map(el("l2 l1", f), f).is_zero());
    CHECK(hopf_map(el("l1", f), f).is_zero());
    CHECK(hopf_map(el("1", f), f).is_zero());
    for (int k = 0; k <= 5; ++k) {
        Monomial x(k, Generator::mu(1));
        x.push_back(Generator::lambda(2));
        CHECK(hopf_map(Element::monomial(f, x, f.one()), f).is_zero());
    }
    CHECK(hopf_map(el("2 m2 m6 l1 + m1 l1", f), f) == el("2 m6 l1", f));
    CHECK_THROWS_AS(hopf_map(el("l3", f), f), DomainError);
    CHECK(hopf_degree_shift(f) == 8);
}

TEST_CASE("short exact sequence examples")
{
    const auto r = ses_dimension_check(3, 12);
    CHECK(r.ok());
    auto find = [&](std::int64_t m, std::int64_t l) {
        for (const auto& c : r.cells)
            if (c.m == m && c.l == l)
                return c;
        FAIL("cell missing");
        return SesCell{};
    };
    const auto a = find(8, 1);
    CHECK(a.dim_lambda2 == 1);
    CHECK(a.dim_image == 1);
    CHECK(a.dim_lambda1 + a.dim_lambda2_ideal == 0);
    const auto b = find(7, 1);
    CHECK(b.dim_lambda2_ideal == 1);
    CHECK(b.dim_lambda1 + b.dim_image == 0);
    const auto c = find(3, 1);
    CHECK(c.dim_lambda1 == 1);
    CHECK(c.dim_lambda2_ideal + c.dim_image == 0);
}

TEST_CASE("short exact sequence and chain map at p = 5")
{
    CHECK(ses_dimension_check(5, 40).ok());
    PrimeContext f(5);
    Rewriter rw(f);
    Differential d(rw);
    const auto r = chain_map_check(d, 40);
    CHECK(r.ok());
    CHECK(r.words_checked > 0);
}

TEST_CASE("lemma span")
{
    const auto s = lemma_span(2);
    REQUIRE(s.u_basis.size() == 3);
    REQUIRE(s.v_basis.size() == 3);
    CHECK(to_text(s.u_basis[0]) == "m1 m1 l2");
    CHECK(to_text(s.u_basis[1]) == "m1 m2 l1");
    CHECK(to_text(s.u_basis[2]) == "m2 m1 l1");
    CHECK(to_text(s.v_basis[0]) == "m1 m1 l1 l1");
    CHECK(to_text(s.v_basis[2]) == "l1 m1 m1 l1");
}

TEST_CASE("lemma matrix examples")
{
    PrimeContext f3(3), f5(5);
    Rewriter rw3(f3), rw5(f5);
    Differential d3(rw3), d5(rw5);
    CHECK(lemma_matrix(1, d3).to_dense(f3) == std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 1}});
    CHECK(lemma_matrix(1, d3) == FpMatrix::from_dense(f3, {{-2, 1}, {1, -2}}));
    const auto m4 = lemma_matrix(4, d5);
    CHECK(m4 == FpMatrix::from_dense(f5, {{-2, 1, 0, 0, 0},
                                           {1, -2, 1, 0, 0},
                                           {0, 1, -2, 1, 0},
                                           {0, 0, 1, -2, 1},
                                           {0, 0, 0, 1, -2}}));
}

TEST_CASE("lemma verdicts")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeContext f(p);
        Rewriter rw(f);
        Differential d(rw);
        for (int k = 1; k <= 12; ++k) {
            const auto v = lemma_verdict(k, d);
            REQUIRE(v.consistent());
            REQUIRE(v.is_isomorphism == ((k + 2) % static_cast<int>(p) != 0));
        }
        const auto edge = lemma_verdict(static_cast<int>(p) - 2, d);
        CHECK(edge.det.is_zero());
        CHECK_FALSE(edge.is_isomorphism);
    }
    PrimeContext f(3);
    Rewriter rw(f);
    Differential d(rw);
    const auto v1 = lemma_verdict(1, d);
    CHECK(v1.det.is_zero());
    CHECK(v1.rank == 1);
    const auto v2 = lemma_verdict(2, d);
    CHECK(v2.det.value == 2);
    CHECK(v2.is_isomorphism);
}

TEST_CASE("proposition check at p = 3")
{
    PrimeContext f(3);
    Rewriter rw(f);
    Differential d(rw);
    const auto two = proposition_check(2, d);
    CHECK_FALSE(two.applicable);
    CHECK_FALSE(two.hits);
    for (int k : {4, 5, 7, 8}) {
        const auto r = proposition_check(k, d);
        CHECK(r.applicable);
        CHECK(r.target_class_nonzero);
        CHECK_FALSE(r.hits);
    }
    // k divisible by p: no claim either way; record what the computation says
    const auto three = proposition_check(3, d);
    CHECK(three.applicable);
    MESSAGE("k=3 hits=" << three.hits);
}

}
