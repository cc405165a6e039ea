#include "lambda/rewrite.hpp"

#include "lambda/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lambda {

Element Element::from_terms(const PrimeContext& ctx, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word < b.word; });
    Element e(ctx.p());
    for (auto& t : terms) {
        if (!e.terms_.empty() && e.terms_.back().word == t.word)
            e.terms_.back().coeff = ctx.add(e.terms_.back().coeff, t.coeff);
        else
            e.terms_.push_back(std::move(t));
        if (e.terms_.back().coeff.is_zero())
            e.terms_.pop_back();
    }
    return e;
}

Element Element::monomial(const PrimeContext& ctx, Monomial word, Fp coeff)
{
    Element e(ctx.p());
    if (!coeff.is_zero())
        e.terms_.push_back({std::move(word), coeff});
    return e;
}

Fp Element::coefficient(const Monomial& word) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                               [](const Term& t, const Monomial& w) { return t.word < w; });
    return (it != terms_.end() && it->word == word) ? it->coeff : Fp{0};
}

Term* LinearCombination::find(const Monomial& word)
{
    if (terms_.size() <= kLinearLimit) {
        for (auto& t : terms_)
            if (t.word == word)
                return &t;
        return nullptr;
    }
    if (index_.empty())
        for (std::uint32_t i = 0; i < terms_.size(); ++i)
            index_.emplace(terms_[i].word, i);
    auto it = index_.find(word);
    return it == index_.end() ? nullptr : &terms_[it->second];
}

void LinearCombination::add(const Monomial& word, Fp coeff)
{
    if (coeff.is_zero())
        return;
    if (Term* t = find(word)) {
        t->coeff = ctx_->add(t->coeff, coeff);
        return;
    }
    terms_.push_back({word, coeff});
    if (!index_.empty())
        index_.emplace(word, static_cast<std::uint32_t>(terms_.size() - 1));
}

void LinearCombination::add(Monomial&& word, Fp coeff)
{
    if (coeff.is_zero())
        return;
    if (Term* t = find(word)) {
        t->coeff = ctx_->add(t->coeff, coeff);
        return;
    }
    terms_.push_back({std::move(word), coeff});
    if (!index_.empty())
        index_.emplace(terms_.back().word, static_cast<std::uint32_t>(terms_.size() - 1));
}

void LinearCombination::add(const Element& x, Fp scale)
{
    if (scale.is_zero())
        return;
    for (const auto& t : x.terms())
        add(t.word, ctx_->mul(t.coeff, scale));
}

std::vector<Term> LinearCombination::terms() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        if (!t.coeff.is_zero())
            out.push_back(t);
    return out;
}

std::vector<Term> LinearCombination::release()
{
    std::vector<Term> out = std::move(terms_);
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_.clear();
    index_.clear();
    return out;
}

Element LinearCombination::to_element() const
{
    return Element::from_terms(*ctx_, terms());
}

Element add(const PrimeContext& ctx, const Element& a, const Element& b)
{
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return Element::from_terms(ctx, std::move(terms));
}

Element scale(const PrimeContext& ctx, const Element& a, Fp c)
{
    std::vector<Term> terms = a.terms();
    for (auto& t : terms)
        t.coeff = ctx.mul(t.coeff, c);
    return Element::from_terms(ctx, std::move(terms));
}

// Tracks nesting so that caches are only flushed and budgets only reset
// at the outermost public call.
class Rewriter::Scope {
public:
    explicit Scope(Rewriter& rw) : rw_(rw)
    {
        if (rw_.depth_++ == 0) {
            rw_.budget_used_ = 0;
            rw_.product_memo_.rotate();
        }
    }
    ~Scope() { --rw_.depth_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

private:
    Rewriter& rw_;
};

Rewriter::Rewriter(PrimeContext ctx, RewriteOptions options)
    : ctx_(std::move(ctx)), options_(options), product_memo_(options.memo_limit)
{
}

void Rewriter::clear_memo()
{
    if (depth_ != 0)
        throw std::logic_error("clear_memo during rewriting");
    product_memo_.clear();
}

const Element& Rewriter::straighten_pair(Generator a, Generator b)
{
    const std::uint64_t key = (std::uint64_t(a.code()) << 32) | b.code();
    if (auto it = pair_memo_.find(key); it != pair_memo_.end())
        return it->second;

    const std::int64_t p = ctx_.p();
    const std::int64_t i = a.index();
    const std::int64_t shift = a.is_lambda() ? 0 : 1;
    const std::int64_t k = static_cast<std::int64_t>(b.index()) - p * i - shift;
    if (k < 0)
        throw std::logic_error("straighten_pair on admissible pair " + to_token(a) + " " + to_token(b));

    auto make = [](bool lam, std::int64_t idx) {
        return lam ? Generator::lambda(static_cast<std::uint32_t>(idx))
                   : Generator::mu(static_cast<std::uint32_t>(idx));
    };

    // nu_i nu'_{pi+k+s} = sum_j a(k,j) nu_{i+k-j} nu'_{pi+j+s}
    //   (+ sum_j b(k,j) mu_{i+k-j} lambda_{pi+j} when nu = lambda, nu' = mu)
    std::vector<Term> terms;
    for (std::int64_t j = 0; j <= bound_N(k, ctx_); ++j)
        terms.push_back({{make(a.is_lambda(), i + k - j), make(b.is_lambda(), p * i + j + shift)}, coeff_a(k, j, ctx_)});
    if (a.is_lambda() && b.is_mu())
        for (std::int64_t j = 0; j <= bound_Nprime(k, ctx_); ++j)
            terms.push_back({{make(false, i + k - j), make(true, p * i + j)}, coeff_b(k, j, ctx_)});

    return pair_memo_.emplace(key, Element::from_terms(ctx_, std::move(terms))).first->second;
}

void Rewriter::add_term(LinearCombination& out, Monomial&& word, Fp coeff)
{
    if (++budget_used_ > options_.term_budget)
        throw ResourceError("straightening exceeded the term budget of " + std::to_string(options_.term_budget));
    out.add(std::move(word), coeff);
}

const Element& Rewriter::left_product(const Monomial& key)
{
    if (const Element* hit = product_memo_.find(key))
        return *hit;

    const Generator g = key[0];
    const Monomial rest(key.begin() + 2, key.end());
    const Element& rhs = straighten_pair(g, key[1]);
    LinearCombination acc(ctx_);
    for (const auto& t : rhs.terms()) {
        LinearCombination inner(ctx_);
        left_multiply(t.word[1], rest, ctx_.one(), inner);
        for (const auto& it : inner.release())
            left_multiply(t.word[0], it.word, ctx_.mul(t.coeff, it.coeff), acc);
    }
    return product_memo_.emplace(key, Element::from_terms(ctx_, acc.release()));
}

void Rewriter::left_multiply(Generator g, const Monomial& word, Fp coeff, LinearCombination& out)
{
    Scope scope(*this);
    if (coeff.is_zero())
        return;
    Monomial key;
    key.reserve(word.size() + 1);
    key.push_back(g);
    key.insert(key.end(), word.begin(), word.end());
    if (word.empty() || pair_admissible(g, word[0], ctx_.p())) {
        add_term(out, std::move(key), coeff);
        return;
    }
    const Element& prod = left_product(key);
    for (const auto& t : prod.terms())
        add_term(out, Monomial(t.word), ctx_.mul(coeff, t.coeff));
}

Element Rewriter::normalize(std::span<const Generator> word, Fp coeff)
{
    Scope scope(*this);
    if (coeff.is_zero())
        return Element(ctx_.p());
    if (word.empty())
        return Element::monomial(ctx_, {}, coeff);
    // fold from the right; every intermediate is a combination of admissible words
    LinearCombination cur(ctx_);
    cur.add(Monomial{word.back()}, coeff);
    for (std::size_t t = word.size() - 1; t-- > 0;) {
        LinearCombination next(ctx_);
        for (const auto& term : cur.release())
            left_multiply(word[t], term.word, term.coeff, next);
        cur = std::move(next);
    }
    return Element::from_terms(ctx_, cur.release());
}

Element Rewriter::normalize(const std::vector<Term>& terms)
{
    Scope scope(*this);
    LinearCombination acc(ctx_);
    for (const auto& t : terms)
        acc.add(normalize(t.word, t.coeff), ctx_.one());
    return acc.to_element();
}

Element Rewriter::multiply(const Element& a, const Element& b)
{
    if (a.p() != ctx_.p() || b.p() != ctx_.p())
        throw DomainError("multiply: elements over different primes");
    Scope scope(*this);
    LinearCombination acc(ctx_);
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            // a-term is admissible, so fold its letters onto b-term from the right
            LinearCombination cur(ctx_);
            cur.add(tb.word, ctx_.mul(ta.coeff, tb.coeff));
            for (std::size_t t = ta.word.size(); t-- > 0;) {
                LinearCombination next(ctx_);
                for (const auto& term : cur.release())
                    left_multiply(ta.word[t], term.word, term.coeff, next);
                cur = std::move(next);
            }
            acc.add(cur.to_element(), ctx_.one());
        }
    }
    return acc.to_element();
}

}  // namespace lambda
