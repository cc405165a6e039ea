#pragma once

#include "lambda/algebra.hpp"
#include "lambda/rewrite.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>

namespace lambda {

/// How d passes a left factor x: d(xy) = d(x)y + s(x) x d(y), with s(x) = 1
/// (Unsigned) or (-1)^{deg x} (TopologicalDegreeSign).
enum class SignConvention : std::uint8_t { Unsigned, TopologicalDegreeSign };

/// The convention under which d^2 = 0; see select_sign_convention().
inline constexpr SignConvention kDefaultSign = SignConvention::TopologicalDegreeSign;

std::string_view to_string(SignConvention s);

/// The differential on Lambda extended from generators as a derivation.
/// Holds a per-instance cache of d on admissible words; not thread-safe.
class Differential {
public:
    explicit Differential(Rewriter& rewriter, SignConvention sign = kDefaultSign,
                          std::size_t memo_limit = 2'000'000);

    SignConvention sign() const { return sign_; }
    Rewriter& rewriter() { return rw_; }
    const PrimeContext& field() const { return rw_.field(); }

    const Element& d_generator(Generator g);
    /// d of an admissible word.
    Element d(const Monomial& word);
    Element d(const Element& x);
    bool is_cycle(const Element& x);
    /// d(d(word)) == 0, without materializing the sorted result.
    bool squares_to_zero(const Monomial& word);

    /// out += coeff * d(word)
    void accumulate(const Monomial& word, Fp coeff, LinearCombination& out);

    void clear_memo() { memo_.clear(); }

private:
    const Element& d_cached(const Monomial& word);
    Fp sign_of(Generator g) const;

    Rewriter& rw_;
    SignConvention sign_;
    std::size_t memo_limit_;
    std::unordered_map<std::uint32_t, Element> gen_memo_;
    GenerationalMemo<Monomial, Element, MonomialHash> memo_;
    int depth_ = 0;
};

struct SignSelection {
    bool unsigned_passes = false;
    bool graded_passes = false;
    std::size_t words_checked = 0;
    /// Exactly one convention passed.
    bool unique() const { return unsigned_passes != graded_passes; }
    SignConvention selected() const
    {
        return graded_passes ? SignConvention::TopologicalDegreeSign : SignConvention::Unsigned;
    }
};

/// Checks d^2 = 0 on admissible words of Lambda(n) with degree <= max_degree
/// under both conventions.
SignSelection select_sign_convention(std::uint32_t p, std::uint32_t n, std::int64_t max_degree);

}  // namespace lambda
