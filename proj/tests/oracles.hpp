#pragma once

// Slow reference implementations used only by the tests. Nothing here calls
// into the straightening, differential or linear algebra code of the library;
// field arithmetic and the Generator/Monomial value types are shared.

#include "lambda/algebra.hpp"
#include "lambda/fparith.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace oracle {

using lambda::Fp;
using lambda::Generator;
using lambda::Monomial;
using lambda::PrimeContext;

using Combination = std::map<Monomial, Fp>;

/// C(n, k) mod p from Pascal's triangle (n < 2048).
Fp pascal_binom(std::int64_t n, std::int64_t k, const PrimeContext& ctx);

/// Table t[n][k] = C(n, k) mod p for n, k <= n_max: exact big-integer Pascal
/// rows, each entry reduced only at the end.
std::vector<std::vector<std::uint32_t>> bigint_binom_table(std::uint32_t n_max, std::uint32_t p);

bool admissible(const Monomial& w, std::uint32_t p);

/// Right-hand side of the relation for an inadmissible pair, straight from
/// the summation formula.
Combination relation_rhs(Generator a, Generator b, const PrimeContext& ctx);

/// Rewrites the leftmost inadmissible pair until nothing changes. No memo.
Combination naive_normalize(const Combination& x, const PrimeContext& ctx);
Combination naive_normalize(const Monomial& w, const PrimeContext& ctx);

/// d on generators from the summation formula, normalized naively.
Combination naive_d_generator(Generator g, const PrimeContext& ctx);
/// Graded Leibniz rule applied letter by letter on the free word.
Combination naive_d(const Monomial& w, const PrimeContext& ctx);

/// Brute-force admissible words of (Lambda(n) or its lambda ideal) in
/// bidegree (m, l), sorted lexicographically by generator code.
std::vector<Monomial> brute_basis(std::uint32_t p, std::uint32_t n, std::int64_t m, std::int64_t l, bool lambda_ideal);

/// Every word (admissible or not) of degree m and length l.
std::vector<Monomial> free_words(std::uint32_t p, std::int64_t m, std::int64_t l);

struct DenseCell {
    std::int64_t m = 0;
    std::int64_t l = 0;
    std::size_t dim_e1 = 0;
    std::size_t dim_e2 = 0;
};

/// E^2 page from dense matrices over F_p; only cells with dim_e1 > 0.
/// max_length bounds the lengths considered for the full algebra.
std::vector<DenseCell> dense_e2(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, bool lambda_ideal,
                                std::int64_t max_length);

std::size_t dense_rank(std::vector<std::vector<Fp>> rows, const PrimeContext& ctx);

/// Quotient of the free algebra by the two-sided relation ideal, one
/// bidegree at a time: spans the ideal by padded relations and reduces by
/// row reduction with inadmissible words eliminated first.
class IdealQuotient {
public:
    explicit IdealQuotient(const PrimeContext& ctx) : ctx_(ctx) {}

    /// Admissible form of a free word, or nullopt if the reduction leaves an
    /// inadmissible component (the relations would not span).
    std::optional<Combination> reduce(const Monomial& w);

    /// Cells whose admissible words turned out dependent modulo the ideal.
    std::size_t degenerate_cells() const { return degenerate_; }

private:
    struct Cell;
    Cell& cell(std::int64_t m, std::size_t l);

    PrimeContext ctx_;
    std::map<std::pair<std::int64_t, std::size_t>, std::shared_ptr<Cell>> cells_;
    std::size_t degenerate_ = 0;
};

}  // namespace oracle
