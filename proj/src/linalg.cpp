#include "lambda/linalg.hpp"

#include "lambda/errors.hpp"

#include <algorithm>
#include <map>

namespace lambda {

Fp FpMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : Fp{0};
}

std::size_t FpMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns)
        n += c.size();
    return n;
}

FpMatrix FpMatrix::from_dense(const PrimeContext& ctx, const std::vector<std::vector<std::int64_t>>& rows)
{
    FpMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols)
            throw DomainError("ragged dense matrix");
        for (std::size_t c = 0; c < m.cols; ++c) {
            Fp v = ctx.from_int(rows[r][c]);
            if (!v.is_zero())
                m.columns[c].emplace_back(static_cast<std::uint32_t>(r), v);
        }
    }
    return m;
}

std::vector<std::vector<std::int64_t>> FpMatrix::to_dense(const PrimeContext& ctx) const
{
    std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c)
        for (auto [r, v] : columns[c])
            out[r][c] = ctx.to_signed(v);
    return out;
}

ColumnReducer::ColumnReducer(const PrimeContext& ctx, std::size_t rows) : ctx_(&ctx), by_pivot_(rows) {}

void ColumnReducer::reduce(SparseColumn& col) const
{
    SparseColumn tmp;
    while (!col.empty()) {
        const auto [pivot, value] = col.back();
        const SparseColumn& basis = by_pivot_[pivot];
        if (basis.empty())
            return;
        // col -= (value / basis.pivot) * basis
        const Fp factor = ctx_->mul(value, ctx_->inv(basis.back().second));
        tmp.clear();
        auto a = col.begin(), ae = col.end();
        auto b = basis.begin(), be = basis.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                tmp.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                tmp.emplace_back(b->first, ctx_->neg(ctx_->mul(factor, b->second)));
                ++b;
            } else {
                Fp v = ctx_->sub(a->second, ctx_->mul(factor, b->second));
                if (!v.is_zero())
                    tmp.emplace_back(a->first, v);
                ++a;
                ++b;
            }
        }
        col.swap(tmp);
    }
}

bool ColumnReducer::add(SparseColumn col)
{
    reduce(col);
    if (col.empty())
        return false;
    const auto pivot = col.back().first;
    by_pivot_[pivot] = std::move(col);
    ++rank_;
    return true;
}

bool ColumnReducer::contains(SparseColumn col) const
{
    reduce(col);
    return col.empty();
}

std::size_t rank_fp(const FpMatrix& mat, const PrimeContext& ctx)
{
    ColumnReducer red(ctx, mat.rows);
    for (const auto& c : mat.columns)
        red.add(c);
    return red.rank();
}

std::vector<SparseColumn> kernel_basis(const FpMatrix& mat, const PrimeContext& ctx)
{
    // Reduce the stacked columns [I; A] with the image rows shifted past the
    // identity block. Pivots are largest rows, so a reduced column whose pivot
    // falls in the identity block has zero image: it is a kernel vector.
    ColumnReducer red(ctx, mat.rows + mat.cols);
    std::vector<SparseColumn> out;
    const auto shift = static_cast<std::uint32_t>(mat.cols);
    for (std::size_t c = 0; c < mat.cols; ++c) {
        SparseColumn col;
        col.emplace_back(static_cast<std::uint32_t>(c), ctx.one());
        for (auto [r, v] : mat.columns[c])
            col.emplace_back(shift + r, v);
        red.add(col);
    }
    for (const auto& col : red.columns())
        if (!col.empty() && col.back().first < shift)
            out.push_back(col);
    return out;
}

Fp determinant(const FpMatrix& mat, const PrimeContext& ctx)
{
    if (mat.rows != mat.cols)
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = mat.rows;
    std::vector<std::vector<Fp>> a(n, std::vector<Fp>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (auto [r, v] : mat.columns[c])
            a[r][c] = v;
    Fp det = ctx.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero())
            ++piv;
        if (piv == n)
            return ctx.zero();
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = ctx.neg(det);
        }
        det = ctx.mul(det, a[c][c]);
        const Fp inv = ctx.inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero())
                continue;
            const Fp f = ctx.mul(a[r][c], inv);
            for (std::size_t k = c; k < n; ++k)
                a[r][k] = ctx.sub(a[r][k], ctx.mul(f, a[c][k]));
        }
    }
    return det;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, const PrimeContext& ctx)
{
    if (a.cols != b.rows)
        throw DomainError("matrix shape mismatch in multiply");
    FpMatrix out(a.rows, b.cols);
    for (std::size_t c = 0; c < b.cols; ++c) {
        std::map<std::uint32_t, Fp> acc;
        for (auto [k, v] : b.columns[c])
            for (auto [r, w] : a.columns[k]) {
                Fp& slot = acc[r];
                slot = ctx.add(slot, ctx.mul(v, w));
            }
        for (auto [r, v] : acc)
            if (!v.is_zero())
                out.columns[c].emplace_back(r, v);
    }
    return out;
}

}  // namespace lambda
