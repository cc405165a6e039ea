#pragma once

#include "lambda/algebra.hpp"
#include "lambda/differential.hpp"
#include "lambda/linalg.hpp"
#include "lambda/rewrite.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace lambda {

/// One bidegree of the E^2 page of (Lambda(n) or Lambda-lambda(n), d).
struct E2Cell {
    BasisKey key;
    std::size_t dim_e1 = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image_in = 0;
    std::size_t dim_e2 = 0;
    std::int64_t pi_index = 0;

    friend bool operator==(const E2Cell&, const E2Cell&) = default;
};

/// Homotopy degree a class in filtration degree m of the complex for
/// S^{2n+1} contributes to: m + 2n + 1. This is a bookkeeping convention.
std::int64_t pi_index(std::int64_t n, std::int64_t m);

/// Basis of one cell with a lookup table from word to position.
class IndexedBasis {
public:
    IndexedBasis() = default;
    explicit IndexedBasis(std::vector<Monomial> words);

    const std::vector<Monomial>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    std::optional<std::uint32_t> find(const Monomial& w) const;

private:
    std::vector<Monomial> words_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

/// Coordinates of x in the target basis. Throws std::logic_error naming the
/// offending word if x has a term outside it.
SparseColumn coordinates(const Element& x, const IndexedBasis& target);

/// Matrix of d from cell (m, l) to cell (m-1, l+1), columns in basis order.
FpMatrix d_matrix(const BasisKey& key, Differential& d);
FpMatrix d_matrix(const IndexedBasis& source, const IndexedBasis& target, Differential& d);

/// E^2 dimensions at one bidegree.
E2Cell e2_cell(const BasisKey& key, Differential& d);

/// Whether x (homogeneous, in the cell named by key) is d of something in
/// cell (m+1, l-1).
bool is_boundary(const BasisKey& key, const Element& x, Differential& d);

/// x is a cycle that is not a boundary.
bool represents_nonzero_class(const BasisKey& key, const Element& x, Differential& d);

/// Persistence hook for computed cells.
class CellStore {
public:
    virtual ~CellStore() = default;
    virtual std::optional<E2Cell> load(const BasisKey& key) = 0;
    virtual void store(const E2Cell& cell) = 0;
};

struct E2Options {
    bool include_empty = false;
    std::size_t jobs = 1;
    std::int64_t max_length = -1;  // Full ideal only; < 0 means default_length_cap
    SignConvention sign = kDefaultSign;
    RewriteOptions rewrite = {};
    std::size_t max_cells = 100'000;
    CellStore* store = nullptr;
};

/// All cells with m <= max_degree, ordered by (m, l).
std::vector<E2Cell> e2_page(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, Ideal ideal,
                            const E2Options& options = {});

/// Largest length that can occur in cell degree m for the ideal.
std::int64_t max_cell_length(std::uint32_t p, std::int64_t m, Ideal ideal, std::int64_t full_cap);

}  // namespace lambda
