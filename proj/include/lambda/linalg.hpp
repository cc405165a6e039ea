#pragma once

#include "lambda/fparith.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lambda {

/// Sparse column: (row, value) pairs sorted by row, no zeros.
using SparseColumn = std::vector<std::pair<std::uint32_t, Fp>>;

/// Sparse matrix over F_p stored by columns.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseColumn> columns;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    Fp at(std::size_t r, std::size_t c) const;
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    /// Row-major dense input, values reduced mod p.
    static FpMatrix from_dense(const PrimeContext& ctx, const std::vector<std::vector<std::int64_t>>& rows);
    /// Dense view with symmetric representatives, row-major.
    std::vector<std::vector<std::int64_t>> to_dense(const PrimeContext& ctx) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

/// Incremental column echelon form. Pivot of a column is its largest row.
class ColumnReducer {
public:
    ColumnReducer(const PrimeContext& ctx, std::size_t rows);

    /// Reduces col against the stored pivots; keeps it if nonzero. Returns
    /// true when the column was independent of the ones added before.
    bool add(SparseColumn col);
    /// Whether col lies in the span of the added columns.
    bool contains(SparseColumn col) const;
    std::size_t rank() const { return rank_; }
    /// Reduced columns indexed by pivot row (empty where no pivot).
    const std::vector<SparseColumn>& columns() const { return by_pivot_; }

private:
    void reduce(SparseColumn& col) const;

    const PrimeContext* ctx_;
    std::vector<SparseColumn> by_pivot_;  // indexed by pivot row
    std::size_t rank_ = 0;
};

std::size_t rank_fp(const FpMatrix& mat, const PrimeContext& ctx);

/// Basis of the null space, each vector indexed by column of mat.
std::vector<SparseColumn> kernel_basis(const FpMatrix& mat, const PrimeContext& ctx);

/// Determinant of a square matrix by elimination. Throws DomainError if not square.
Fp determinant(const FpMatrix& mat, const PrimeContext& ctx);

/// a * b; throws DomainError on shape mismatch.
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, const PrimeContext& ctx);

}  // namespace lambda
