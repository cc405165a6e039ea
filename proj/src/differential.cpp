#include "lambda/differential.hpp"

#include <stdexcept>

namespace lambda {

std::string_view to_string(SignConvention s)
{
    return s == SignConvention::Unsigned ? "unsigned" : "topological-degree-sign";
}

Differential::Differential(Rewriter& rewriter, SignConvention sign, std::size_t memo_limit)
    : rw_(rewriter), sign_(sign), memo_limit_(memo_limit), memo_(memo_limit)
{
}

Fp Differential::sign_of(Generator g) const
{
    const auto& ctx = rw_.field();
    if (sign_ == SignConvention::Unsigned || g.is_mu())
        return ctx.one();
    return ctx.neg(ctx.one());  // lambda generators have odd degree
}

const Element& Differential::d_generator(Generator g)
{
    if (auto it = gen_memo_.find(g.code()); it != gen_memo_.end())
        return it->second;
    const auto& ctx = rw_.field();
    const std::int64_t k = g.index();
    auto lam = [](std::int64_t i) { return Generator::lambda(static_cast<std::uint32_t>(i)); };
    auto mu = [](std::int64_t i) { return Generator::mu(static_cast<std::uint32_t>(i)); };
    std::vector<Term> terms;
    if (g.is_lambda()) {
        for (std::int64_t j = 1; j <= bound_N(k, ctx); ++j)
            terms.push_back({{lam(k - j), lam(j)}, coeff_a(k, j, ctx)});
    } else {
        for (std::int64_t j = 0; j <= bound_N(k, ctx); ++j)
            terms.push_back({{lam(k - j), mu(j)}, coeff_a(k, j, ctx)});
        for (std::int64_t j = 1; j <= bound_Nprime(k, ctx); ++j)
            terms.push_back({{mu(k - j), lam(j)}, coeff_b(k, j, ctx)});
    }
    return gen_memo_.emplace(g.code(), rw_.normalize(terms)).first->second;
}

const Element& Differential::d_cached(const Monomial& word)
{
    if (const Element* hit = memo_.find(word))
        return *hit;

    const auto& ctx = rw_.field();
    LinearCombination acc(ctx);
    if (!word.empty()) {
        const Generator g = word[0];
        const Monomial rest(word.begin() + 1, word.end());
        // d(g) . rest
        for (const auto& t : d_generator(g).terms()) {
            LinearCombination inner(ctx);
            rw_.left_multiply(t.word[1], rest, ctx.one(), inner);
            for (const auto& it : inner.release())
                rw_.left_multiply(t.word[0], it.word, ctx.mul(t.coeff, it.coeff), acc);
        }
        // s(g) g . d(rest)
        if (!rest.empty()) {
            const Fp s = sign_of(g);
            for (const auto& t : d_cached(rest).terms())
                rw_.left_multiply(g, t.word, ctx.mul(s, t.coeff), acc);
        }
    }
    return memo_.emplace(word, Element::from_terms(ctx, acc.release()));
}

void Differential::accumulate(const Monomial& word, Fp coeff, LinearCombination& out)
{
    if (depth_ == 0)
        memo_.rotate();
    ++depth_;
    try {
        out.add(d_cached(word), coeff);
    } catch (...) {
        --depth_;
        throw;
    }
    --depth_;
}

Element Differential::d(const Monomial& word)
{
    LinearCombination acc(rw_.field());
    accumulate(word, rw_.field().one(), acc);
    return acc.to_element();
}

Element Differential::d(const Element& x)
{
    LinearCombination acc(rw_.field());
    for (const auto& t : x.terms())
        accumulate(t.word, t.coeff, acc);
    return acc.to_element();
}

bool Differential::squares_to_zero(const Monomial& word)
{
    if (depth_ == 0)
        memo_.rotate();
    LinearCombination acc(rw_.field());
    ++depth_;
    try {
        for (const auto& t : d_cached(word).terms())
            acc.add(d_cached(t.word), t.coeff);
    } catch (...) {
        --depth_;
        throw;
    }
    --depth_;
    return acc.release().empty();
}

bool Differential::is_cycle(const Element& x)
{
    return d(x).is_zero();
}

SignSelection select_sign_convention(std::uint32_t p, std::uint32_t n, std::int64_t max_degree)
{
    PrimeContext ctx(p);
    SignSelection sel;
    Rewriter rw(ctx);
    Differential du(rw, SignConvention::Unsigned);
    Differential dg(rw, SignConvention::TopologicalDegreeSign);
    sel.unsigned_passes = true;
    sel.graded_passes = true;
    const std::int64_t cap = max_degree / (2 * std::int64_t(p) - 3) + 2;
    for_each_admissible(p, n, max_degree, cap, Ideal::Full, [&](const Monomial& w) {
        ++sel.words_checked;
        if (sel.unsigned_passes && !du.d(du.d(w)).is_zero())
            sel.unsigned_passes = false;
        if (sel.graded_passes && !dg.d(dg.d(w)).is_zero())
            sel.graded_passes = false;
    });
    return sel;
}

}  // namespace lambda
