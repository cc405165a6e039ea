#pragma once

#include "lambda/fparith.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <initializer_list>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lambda {

enum class Kind : std::uint8_t { Lambda = 0, Mu = 1 };

/// lambda_i (i >= 1) or mu_j (j >= 0), packed as 2*index + kind.
/// The packed order is the basis order: by index, lambda before mu.
class Generator {
public:
    constexpr Generator() = default;

    static Generator lambda(std::uint32_t i);
    static Generator mu(std::uint32_t j);
    static constexpr Generator from_code(std::uint32_t code) { return Generator(code); }

    constexpr Kind kind() const { return (code_ & 1u) ? Kind::Mu : Kind::Lambda; }
    constexpr bool is_lambda() const { return (code_ & 1u) == 0; }
    constexpr bool is_mu() const { return (code_ & 1u) != 0; }
    constexpr std::uint32_t index() const { return code_ >> 1; }
    constexpr std::uint32_t code() const { return code_; }

    friend constexpr auto operator<=>(Generator, Generator) = default;

private:
    constexpr explicit Generator(std::uint32_t code) : code_(code) {}
    std::uint32_t code_ = 1;  // mu_0
};

/// A word nu_{i_1} ... nu_{i_l}; the empty word is the unit. Short words
/// live inline, which keeps straightening off the allocator.
/// Word of generators with inline storage for typical lengths. Moves are
/// declared noexcept so std::vector relocates instead of copying.
class Monomial : public boost::container::small_vector<Generator, 14> {
    using Base = boost::container::small_vector<Generator, 14>;

public:
    using Base::Base;
    Monomial() = default;
    Monomial(std::initializer_list<Generator> gens) : Base(gens) {}
    Monomial(const Monomial&) = default;
    Monomial(Monomial&& other) noexcept : Base(std::move(static_cast<Base&>(other))) {}
    Monomial& operator=(const Monomial&) = default;
    Monomial& operator=(Monomial&& other) noexcept
    {
        Base::operator=(std::move(static_cast<Base&>(other)));
        return *this;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
    friend auto operator<=>(const Monomial& a, const Monomial& b)
    {
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline std::span<const Generator> view(const Monomial& m) { return {m.data(), m.size()}; }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

std::int64_t degree(Generator g, const PrimeContext& ctx);
std::int64_t degree(std::span<const Generator> mon, const PrimeContext& ctx);
inline std::int64_t degree(const Monomial& mon, const PrimeContext& ctx) { return degree(view(mon), ctx); }

/// Largest index allowed right after g: p*i - 1 after lambda_i, p*i after mu_i.
std::uint64_t successor_bound(Generator g, std::uint32_t p);

inline bool pair_admissible(Generator a, Generator b, std::uint32_t p)
{
    return b.index() <= successor_bound(a, p);
}

bool is_admissible(std::span<const Generator> mon, const PrimeContext& ctx);
inline bool is_admissible(const Monomial& mon, const PrimeContext& ctx) { return is_admissible(view(mon), ctx); }

/// Words are in Lambda(n) when i_1 <= n (the unit always is).
inline bool in_unstable(std::span<const Generator> mon, std::uint32_t n)
{
    return mon.empty() || mon.front().index() <= n;
}
inline bool in_unstable(const Monomial& mon, std::uint32_t n) { return in_unstable(view(mon), n); }

enum class Ideal : std::uint8_t { Full, LambdaIdeal };

/// Names a graded piece Lambda(n)_{m,l} or Lambda-lambda(n)_{m,l}.
struct BasisKey {
    std::uint32_t p = 3;
    std::uint32_t n = 1;
    std::int64_t m = 0;
    std::int64_t l = 0;
    Ideal ideal = Ideal::Full;

    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Admissible words in the cell, sorted in basis order (lexicographic on packed codes).
std::vector<Monomial> basis(const BasisKey& key);

/// Length cap used by sweeps over all lengths up to a degree bound.
std::int64_t default_length_cap(std::int64_t max_degree);

/// (m, l) -> basis for one (p, n, ideal) family.
using BigradedTable = std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Monomial>>;

struct EnumerationLimits {
    std::int64_t max_length = -1;       // < 0: default_length_cap(max_degree)
    std::size_t max_words = 50'000'000;  // total words across all cells
};

/// Bases for every (m, l) with m <= max_degree and l <= the length cap. Throws
/// ResourceError when more than limits.max_words words would be produced.
BigradedTable enumerate_up_to(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, Ideal ideal,
                              EnumerationLimits limits = {});

/// Calls visit(word) for each admissible word with first index <= n,
/// degree <= max_degree and length <= max_length, in basis order per prefix.
template <class Visit>
void for_each_admissible(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, std::int64_t max_length,
                         Ideal ideal, Visit&& visit);

// Text grammar: "l<i>" / "m<j>" tokens separated by spaces; "1" is the unit.
std::string to_text(std::span<const Generator> mon);
inline std::string to_text(const Monomial& mon) { return to_text(view(mon)); }
std::string to_token(Generator g);
Generator parse_generator(std::string_view token);
Monomial parse_monomial(std::string_view text);

// --- template implementation ---

namespace detail {

template <class Visit>
void admissible_dfs(std::uint32_t p, std::uint64_t bound, std::int64_t rem_deg, std::int64_t rem_len, Ideal ideal,
                    Monomial& word, Visit& visit)
{
    const std::int64_t q = 2 * static_cast<std::int64_t>(p - 1);
    if (ideal == Ideal::Full || (!word.empty() && word.back().is_lambda()))
        visit(static_cast<const Monomial&>(word));
    if (rem_len == 0)
        return;
    for (std::uint64_t idx = 0; idx <= bound; ++idx) {
        if (q * static_cast<std::int64_t>(idx) - 1 > rem_deg)
            break;
        if (idx >= 1) {
            std::int64_t d = q * static_cast<std::int64_t>(idx) - 1;
            word.push_back(Generator::lambda(static_cast<std::uint32_t>(idx)));
            admissible_dfs(p, std::uint64_t(p) * idx - 1, rem_deg - d, rem_len - 1, ideal, word, visit);
            word.pop_back();
        }
        std::int64_t d = q * static_cast<std::int64_t>(idx);
        if (d <= rem_deg && !(ideal == Ideal::LambdaIdeal && idx == 0)) {
            word.push_back(Generator::mu(static_cast<std::uint32_t>(idx)));
            admissible_dfs(p, std::uint64_t(p) * idx, rem_deg - d, rem_len - 1, ideal, word, visit);
            word.pop_back();
        }
    }
}

}  // namespace detail

template <class Visit>
void for_each_admissible(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, std::int64_t max_length,
                         Ideal ideal, Visit&& visit)
{
    Monomial word;
    if (max_degree < 0)
        return;
    detail::admissible_dfs(p, n, max_degree, max_length, ideal, word, visit);
}

}  // namespace lambda
