#pragma once

#include "lambda/algebra.hpp"
#include "lambda/differential.hpp"
#include "lambda/linalg.hpp"
#include "lambda/rewrite.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lambda {

/// Algebraic James-Hopf map Lambda(2) -> Lambda(2p): strips a leading mu_2,
/// kills words led by lambda_1, mu_1, lambda_2, mu_0 and the unit.
/// Throws DomainError on a term with first index > 2.
Element hopf_map(const Element& x, const PrimeContext& ctx);

/// Grading shift of the Hopf map: (degree of mu_2, 1).
std::int64_t hopf_degree_shift(const PrimeContext& ctx);

struct SesCell {
    std::int64_t m = 0;
    std::int64_t l = 0;
    std::size_t dim_lambda2 = 0;      // Lambda(2)_{m,l}
    std::size_t dim_lambda1 = 0;      // Lambda(1)_{m,l}
    std::size_t dim_lambda2_ideal = 0; // lambda_2 Lambda(2p-1) in bidegree (m,l)
    std::size_t dim_image = 0;        // Lambda(2p)_{m - deg mu_2, l - 1}
    bool words_match = true;          // word sets agree, not only dimensions
    bool ok() const { return words_match && dim_lambda2 == dim_lambda1 + dim_lambda2_ideal + dim_image; }
};

struct SesReport {
    std::uint32_t p = 3;
    std::int64_t max_degree = 0;
    std::int64_t max_length = 0;
    std::vector<SesCell> cells;  // nonempty cells only
    std::vector<SesCell> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks 0 -> Lambda(1) + lambda_2 Lambda(2p-1) -> Lambda(2) -> Lambda(2p) -> 0
/// cell by cell for m <= max_degree, l <= max_length (< 0: default cap).
SesReport ses_dimension_check(std::uint32_t p, std::int64_t max_degree, std::int64_t max_length = -1);

struct ChainMapFailure {
    Monomial word;
    Element h_of_d;
    Element d_of_h;
};

struct ChainMapReport {
    std::size_t words_checked = 0;
    std::vector<ChainMapFailure> failures;  // first few only
    std::size_t failure_count = 0;
    bool ok() const { return failure_count == 0; }
};

/// Compares h(d x) with d(h x) on the admissible words of Lambda(2).
ChainMapReport chain_map_check(Differential& d, std::int64_t max_degree, std::int64_t max_length = -1);

/// u_0 = mu_1^k lambda_2, u_i = mu_1^{k-i} mu_2 mu_1^{i-1} lambda_1 (1 <= i <= k),
/// v_i = mu_1^{k-i} lambda_1 mu_1^i lambda_1 (0 <= i <= k).
struct LemmaSpan {
    int k = 1;
    std::vector<Monomial> u_basis;
    std::vector<Monomial> v_basis;
};

LemmaSpan lemma_span(int k);

/// Matrix of d on span(u) in the v-basis; column i is d(u_i). Throws
/// std::logic_error if some d(u_i) has a component outside span(v).
FpMatrix lemma_matrix(int k, Differential& d);

struct LemmaVerdict {
    int k = 1;
    std::uint32_t p = 3;
    FpMatrix matrix;
    Fp det;
    Fp det_formula;  // (-1)^{k+1} (k+2)
    std::size_t rank = 0;
    bool is_isomorphism = false;
    /// det agrees with the closed form and with the rank.
    bool consistent() const { return det == det_formula && (rank == matrix.cols) == !det.is_zero(); }
};

LemmaVerdict lemma_verdict(int k, Differential& d);

struct PropositionResult {
    int k = 2;
    std::uint32_t p = 3;
    bool applicable = false;  // k >= 3, so that mu_1^{k-3} lambda_1 exists
    BasisKey source;          // Lambda-lambda(2) cell of mu_2 mu_1^{k-3} lambda_1
    BasisKey target;          // Lambda-lambda(2p) cell of mu_1^{k-3} lambda_1
    std::size_t dim_cycles = 0;
    bool target_class_nonzero = false;
    bool hits = false;  // some E^2 class maps onto a nonzero multiple of the target class
};

/// E^2-level test: does a class in E^2(2) map onto [mu_1^{k-3} lambda_1] in E^2(2p)?
PropositionResult proposition_check(int k, Differential& d);

}  // namespace lambda
