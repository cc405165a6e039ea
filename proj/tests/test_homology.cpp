#include "oracles.hpp"

#include "lambda/errors.hpp"
#include "lambda/homology.hpp"
#include "lambda/io.hpp"

#include <doctest.h>

#include <map>

using namespace lambda;

namespace {

struct MemoryStore : CellStore {
    std::map<BasisKey, E2Cell> cells;
    std::size_t loads = 0;
    std::optional<E2Cell> load(const BasisKey& key) override
    {
        ++loads;
        auto it = cells.find(key);
        return it == cells.end() ? std::nullopt : std::optional<E2Cell>(it->second);
    }
    void store(const E2Cell& cell) override { cells[cell.key] = cell; }
};

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("pi_index")
{
    CHECK(pi_index(1, 3) == 6);
    CHECK(pi_index(2, 0) == 5);
    for (std::int64_t k = 1; k <= 8; ++k)
        CHECK(pi_index(1, 4 * k - 1) == 4 * k + 2);
}

TEST_CASE("d matrices")
{
    PrimeContext f(3);
    Rewriter rw(f);
    Differential d(rw);
    CHECK(d_matrix({3, 1, 3, 1, Ideal::LambdaIdeal}, d).is_zero());
    const auto m = d_matrix({3, 2, 8, 1, Ideal::Full}, d);
    REQUIRE(m.cols == 1);
    const IndexedBasis target(basis({3, 2, 7, 2, Ideal::Full}));
    CHECK(m.columns[0] == coordinates(rw.normalize(parse_terms("- l2 m0 - 2 l1 m1 + m1 l1", f)), target));
}

TEST_CASE("coordinates reject words outside the cell")
{
    PrimeContext f(3);
    const IndexedBasis target(basis({3, 1, 3, 1, Ideal::LambdaIdeal}));
    CHECK_THROWS_AS(coordinates(Element::monomial(f, parse_monomial("l2"), f.one()), target), std::logic_error);
}

TEST_CASE("consecutive d matrices compose to zero")
{
    for (std::uint32_t p : {3u, 5u}) {
        PrimeContext f(p);
        Rewriter rw(f);
        Differential d(rw);
        for (std::uint32_t n : {1u, 2u, 3u})
            for (Ideal ideal : {Ideal::LambdaIdeal, Ideal::Full})
                for (std::int64_t m = 2; m <= 26; ++m)
                    for (std::int64_t l = 0; l <= 5; ++l) {
                        const auto first = d_matrix({p, n, m, l, ideal}, d);
                        const auto second = d_matrix({p, n, m - 1, l + 1, ideal}, d);
                        REQUIRE(multiply(second, first, f).is_zero());
                    }
    }
}

TEST_CASE("examples on the n=1 page")
{
    const auto cells = e2_page(3, 1, 30, Ideal::LambdaIdeal);
    std::map<std::pair<std::int64_t, std::int64_t>, E2Cell> by;
    for (const auto& c : cells) {
        CHECK(c.dim_e2 <= c.dim_e1);
        CHECK(c.dim_e1 == basis(c.key).size());
        CHECK(c.dim_e1 > 0);
        by[{c.key.m, c.key.l}] = c;
    }
    CHECK(by.at({3, 1}).dim_e2 == 1);
    PrimeContext f(3);
    Rewriter rw(f);
    Differential d(rw);
    for (std::int64_t k = 1; k <= 6; ++k) {
        CHECK(by.at({4 * k - 1, k}).dim_e2 >= 1);
        Monomial x(k - 1, Generator::mu(1));
        x.push_back(Generator::lambda(1));
        CHECK(represents_nonzero_class({3, 1, 4 * k - 1, k, Ideal::LambdaIdeal}, Element::monomial(f, x, f.one()), d));
    }
}

TEST_CASE("boundaries")
{
    PrimeContext f(3);
    Rewriter rw(f);
    Differential d(rw);
    const auto b = d.d(parse_monomial("m1 l2"));
    CHECK(is_boundary({3, 2, 10, 3, Ideal::LambdaIdeal}, b, d));
    CHECK_FALSE(represents_nonzero_class({3, 2, 10, 3, Ideal::LambdaIdeal}, b, d));
    CHECK_FALSE(is_boundary({3, 1, 3, 1, Ideal::LambdaIdeal}, Element::monomial(f, parse_monomial("l1"), f.one()), d));
}

TEST_CASE("e2 page matches the dense oracle")
{
    for (std::uint32_t n : {1u, 2u}) {
        const auto cells = e2_page(3, n, 20, Ideal::LambdaIdeal);
        const auto dense = oracle::dense_e2(3, n, 20, true, 20);
        REQUIRE(cells.size() == dense.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            REQUIRE(cells[i].key.m == dense[i].m);
            REQUIRE(cells[i].key.l == dense[i].l);
            REQUIRE(cells[i].dim_e1 == dense[i].dim_e1);
            REQUIRE(cells[i].dim_e2 == dense[i].dim_e2);
        }
    }
    E2Options full;
    full.max_length = 4;
    const auto cells = e2_page(3, 2, 16, Ideal::Full, full);
    const auto dense = oracle::dense_e2(3, 2, 16, false, 4);
    REQUIRE(cells.size() == dense.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(cells[i].dim_e1 == dense[i].dim_e1);
        CHECK(cells[i].dim_e2 == dense[i].dim_e2);
    }
}

TEST_CASE("parallel and serial pages agree, include_empty adds empty cells")
{
    E2Options serial, parallel, empty;
    parallel.jobs = 3;
    empty.include_empty = true;
    const auto a = e2_page(5, 2, 40, Ideal::LambdaIdeal, serial);
    CHECK(a == e2_page(5, 2, 40, Ideal::LambdaIdeal, parallel));
    const auto all = e2_page(5, 2, 40, Ideal::LambdaIdeal, empty);
    CHECK(all.size() > a.size());
    std::size_t nonempty = 0;
    for (const auto& c : all)
        nonempty += c.dim_e1 > 0;
    CHECK(nonempty == a.size());
}

TEST_CASE("store is consulted before computing")
{
    MemoryStore store;
    E2Options opts;
    opts.store = &store;
    const auto cold = e2_page(3, 1, 20, Ideal::LambdaIdeal, opts);
    CHECK(!store.cells.empty());
    const auto warm = e2_page(3, 1, 20, Ideal::LambdaIdeal, opts);
    CHECK(cold == warm);
}

TEST_CASE("resource and domain guards")
{
    E2Options opts;
    opts.max_cells = 3;
    CHECK_THROWS_AS(e2_page(3, 1, 30, Ideal::LambdaIdeal, opts), ResourceError);
    CHECK_THROWS_AS(e2_page(3, 1, -1, Ideal::LambdaIdeal), DomainError);
}

}
