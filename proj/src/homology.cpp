#include "lambda/homology.hpp"

#include "lambda/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace lambda {

std::int64_t pi_index(std::int64_t n, std::int64_t m)
{
    return m + 2 * n + 1;
}

IndexedBasis::IndexedBasis(std::vector<Monomial> words) : words_(std::move(words))
{
    index_.reserve(words_.size());
    for (std::uint32_t i = 0; i < words_.size(); ++i)
        index_.emplace(words_[i], i);
}

std::optional<std::uint32_t> IndexedBasis::find(const Monomial& w) const
{
    if (auto it = index_.find(w); it != index_.end())
        return it->second;
    return std::nullopt;
}

SparseColumn coordinates(const Element& x, const IndexedBasis& target)
{
    SparseColumn col;
    col.reserve(x.size());
    for (const auto& t : x.terms()) {
        auto idx = target.find(t.word);
        if (!idx)
            throw std::logic_error("term " + to_text(t.word) + " lies outside the target cell");
        col.emplace_back(*idx, t.coeff);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return col;
}

FpMatrix d_matrix(const IndexedBasis& source, const IndexedBasis& target, Differential& d)
{
    FpMatrix mat(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c)
        mat.columns[c] = coordinates(d.d(source.words()[c]), target);
    return mat;
}

namespace {

BasisKey shifted(BasisKey key, std::int64_t dm, std::int64_t dl)
{
    key.m += dm;
    key.l += dl;
    return key;
}

}  // namespace

FpMatrix d_matrix(const BasisKey& key, Differential& d)
{
    IndexedBasis source(basis(key));
    IndexedBasis target(basis(shifted(key, -1, 1)));
    return d_matrix(source, target, d);
}

E2Cell e2_cell(const BasisKey& key, Differential& d)
{
    const auto& ctx = d.field();
    E2Cell cell;
    cell.key = key;
    cell.pi_index = pi_index(key.n, key.m);

    IndexedBasis here(basis(key));
    cell.dim_e1 = here.size();
    if (here.size() == 0)
        return cell;

    IndexedBasis below(basis(shifted(key, -1, 1)));
    cell.dim_kernel = here.size() - rank_fp(d_matrix(here, below, d), ctx);

    if (key.l >= 1) {
        IndexedBasis above(basis(shifted(key, 1, -1)));
        if (above.size() > 0)
            cell.dim_image_in = rank_fp(d_matrix(above, here, d), ctx);
    }
    if (cell.dim_image_in > cell.dim_kernel)
        throw std::logic_error("image exceeds kernel: d^2 != 0 at this cell");
    cell.dim_e2 = cell.dim_kernel - cell.dim_image_in;
    return cell;
}

bool is_boundary(const BasisKey& key, const Element& x, Differential& d)
{
    const auto& ctx = d.field();
    IndexedBasis here(basis(key));
    SparseColumn target = coordinates(x, here);
    if (target.empty())
        return true;
    if (key.l < 1)
        return false;
    IndexedBasis above(basis(shifted(key, 1, -1)));
    ColumnReducer red(ctx, here.size());
    for (const auto& w : above.words())
        red.add(coordinates(d.d(w), here));
    return red.contains(std::move(target));
}

bool represents_nonzero_class(const BasisKey& key, const Element& x, Differential& d)
{
    return d.is_cycle(x) && !is_boundary(key, x, d);
}

std::int64_t max_cell_length(std::uint32_t p, std::int64_t m, Ideal ideal, std::int64_t full_cap)
{
    if (ideal == Ideal::LambdaIdeal)
        return m / (2 * std::int64_t(p) - 3);
    return full_cap;
}

std::vector<E2Cell> e2_page(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, Ideal ideal,
                            const E2Options& options)
{
    PrimeContext ctx(p);
    if (max_degree < 0)
        throw DomainError("max_degree must be >= 0");
    if (n < 1)
        throw DomainError("n must be >= 1");
    const std::int64_t cap = options.max_length < 0 ? default_length_cap(max_degree) : options.max_length;

    std::vector<BasisKey> keys;
    for (std::int64_t m = 0; m <= max_degree; ++m)
        for (std::int64_t l = 0; l <= max_cell_length(p, m, ideal, cap); ++l) {
            keys.push_back(BasisKey{p, n, m, l, ideal});
            if (keys.size() > options.max_cells)
                throw ResourceError("E2 page exceeds " + std::to_string(options.max_cells) + " cells");
        }

    std::vector<std::optional<E2Cell>> results(keys.size());
    std::atomic<std::size_t> next{0};
    std::mutex store_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            Rewriter rw(ctx, options.rewrite);
            Differential d(rw, options.sign);
            for (std::size_t i = next++; i < keys.size(); i = next++) {
                std::optional<E2Cell> cached;
                if (options.store) {
                    std::lock_guard lock(store_mutex);
                    cached = options.store->load(keys[i]);
                }
                if (cached) {
                    results[i] = *cached;
                    continue;
                }
                results[i] = e2_cell(keys[i], d);
                if (options.store) {
                    std::lock_guard lock(store_mutex);
                    options.store->store(*results[i]);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = keys.size();
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, keys.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<E2Cell> cells;
    for (auto& r : results)
        if (r && (options.include_empty || r->dim_e1 > 0))
            cells.push_back(*r);
    return cells;
}

}  // namespace lambda
