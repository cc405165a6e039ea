#pragma once

#include "lambda/algebra.hpp"
#include "lambda/memo.hpp"
#include "lambda/fparith.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace lambda {

struct Term {
    Monomial word;
    Fp coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Finite F_p-combination of monomials in canonical form: terms sorted in
/// basis order, no zero coefficients. Produced by Rewriter, so every word is
/// admissible unless built by hand through from_terms.
class Element {
public:
    Element() = default;
    explicit Element(std::uint32_t p) : p_(p) {}

    /// Sorts, merges equal words and drops zeros.
    static Element from_terms(const PrimeContext& ctx, std::vector<Term> terms);
    static Element monomial(const PrimeContext& ctx, Monomial word, Fp coeff);

    std::uint32_t p() const { return p_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Fp coefficient(const Monomial& word) const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::uint32_t p_ = 0;
    std::vector<Term> terms_;
};

/// Accumulator used while building elements. Small combinations are scanned
/// linearly; a hash index is built once they grow past a few dozen words.
class LinearCombination {
public:
    explicit LinearCombination(const PrimeContext& ctx) : ctx_(&ctx) {}

    void add(const Monomial& word, Fp coeff);
    void add(Monomial&& word, Fp coeff);
    void add(const Element& x, Fp scale);
    /// Number of stored words, including any that cancelled to zero.
    std::size_t size() const { return terms_.size(); }
    Element to_element() const;
    /// Unsorted snapshot of the nonzero terms.
    std::vector<Term> terms() const;
    /// Moves the nonzero terms out and leaves the accumulator empty.
    std::vector<Term> release();

private:
    static constexpr std::size_t kLinearLimit = 24;
    Term* find(const Monomial& word);

    const PrimeContext* ctx_;
    std::vector<Term> terms_;  // may hold cancelled (zero) entries
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

Element add(const PrimeContext& ctx, const Element& a, const Element& b);
Element scale(const PrimeContext& ctx, const Element& a, Fp c);

struct RewriteOptions {
    /// Maximum number of term insertions per top-level call.
    std::size_t term_budget = 10'000'000;
    /// Memo entries kept before the product cache is flushed.
    std::size_t memo_limit = 4'000'000;
};

/// Straightening of words into the admissible basis via the four relation
/// families. Not thread-safe: use one instance per worker.
class Rewriter {
public:
    explicit Rewriter(PrimeContext ctx, RewriteOptions options = {});

    const PrimeContext& field() const { return ctx_; }
    std::uint32_t p() const { return ctx_.p(); }
    const RewriteOptions& options() const { return options_; }

    /// Right-hand side of the relation for an inadmissible pair (a, b).
    /// Throws std::logic_error on an admissible pair.
    const Element& straighten_pair(Generator a, Generator b);

    /// coeff * word written in the admissible basis.
    Element normalize(std::span<const Generator> word, Fp coeff);
    Element normalize(std::span<const Generator> word) { return normalize(word, ctx_.one()); }
    Element normalize(const Monomial& word, Fp coeff) { return normalize(view(word), coeff); }
    Element normalize(const Monomial& word) { return normalize(view(word), ctx_.one()); }
    /// Normalizes every term of a (possibly inadmissible) combination.
    Element normalize(const std::vector<Term>& terms);

    Element multiply(const Element& a, const Element& b);

    /// out += coeff * normalize(g . word) for admissible word.
    void left_multiply(Generator g, const Monomial& word, Fp coeff, LinearCombination& out);

    std::size_t memo_size() const { return product_memo_.size(); }
    void clear_memo();

private:
    class Scope;

    void add_term(LinearCombination& out, Monomial&& word, Fp coeff);
    const Element& left_product(const Monomial& key);

    PrimeContext ctx_;
    RewriteOptions options_;
    std::unordered_map<std::uint64_t, Element> pair_memo_;
    // key is the inadmissible word g . w with w admissible
    GenerationalMemo<Monomial, Element, MonomialHash> product_memo_;
    int depth_ = 0;
    std::size_t budget_used_ = 0;
};

}  // namespace lambda
