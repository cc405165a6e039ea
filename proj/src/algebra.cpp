#include "lambda/algebra.hpp"

#include "lambda/errors.hpp"

#include <charconv>
#include <limits>

namespace lambda {

Generator Generator::lambda(std::uint32_t i)
{
    if (i == 0 || i > (std::numeric_limits<std::uint32_t>::max() >> 1))
        throw DomainError("lambda index must be >= 1");
    return Generator(i << 1);
}

Generator Generator::mu(std::uint32_t j)
{
    if (j > (std::numeric_limits<std::uint32_t>::max() >> 1))
        throw DomainError("mu index out of range");
    return Generator((j << 1) | 1u);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    // FNV-1a over the packed codes
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Generator g : m) {
        h ^= g.code();
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::int64_t degree(Generator g, const PrimeContext& ctx)
{
    const std::int64_t q = 2 * static_cast<std::int64_t>(ctx.p() - 1);
    return q * g.index() - (g.is_lambda() ? 1 : 0);
}

std::int64_t degree(std::span<const Generator> mon, const PrimeContext& ctx)
{
    std::int64_t d = 0;
    for (Generator g : mon)
        d += degree(g, ctx);
    return d;
}

std::uint64_t successor_bound(Generator g, std::uint32_t p)
{
    std::uint64_t b = std::uint64_t(p) * g.index();
    return g.is_lambda() ? b - 1 : b;
}

bool is_admissible(std::span<const Generator> mon, const PrimeContext& ctx)
{
    for (std::size_t t = 0; t + 1 < mon.size(); ++t)
        if (!pair_admissible(mon[t], mon[t + 1], ctx.p()))
            return false;
    return true;
}

namespace {

struct CellSearch {
    std::uint32_t p;
    std::int64_t q;
    std::int64_t min_letter;  // smallest degree a letter may have
    Ideal ideal;
    std::vector<Monomial>* out;
    Monomial word;

    void run(std::uint64_t bound, std::int64_t rem_deg, std::int64_t rem_len)
    {
        if (rem_len == 0) {
            if (rem_deg == 0 && (ideal == Ideal::Full || (!word.empty() && word.back().is_lambda())))
                out->push_back(word);
            return;
        }
        if (rem_deg < (rem_len - 1) * min_letter)
            return;
        if (bound == 0) {
            // only mu_0 can follow; it has degree 0
            if (rem_deg == 0 && ideal == Ideal::Full) {
                word.insert(word.end(), static_cast<std::size_t>(rem_len), Generator::mu(0));
                out->push_back(word);
                word.resize(word.size() - static_cast<std::size_t>(rem_len));
            }
            return;
        }
        for (std::uint64_t idx = 0; idx <= bound; ++idx) {
            const std::int64_t base = q * static_cast<std::int64_t>(idx);
            if (base - 1 > rem_deg)
                break;
            if (idx >= 1) {
                std::int64_t rest = rem_deg - (base - 1);
                if (rest >= (rem_len - 1) * min_letter) {
                    word.push_back(Generator::lambda(static_cast<std::uint32_t>(idx)));
                    run(std::uint64_t(p) * idx - 1, rest, rem_len - 1);
                    word.pop_back();
                }
            }
            if (base <= rem_deg && !(ideal == Ideal::LambdaIdeal && idx == 0)) {
                word.push_back(Generator::mu(static_cast<std::uint32_t>(idx)));
                run(std::uint64_t(p) * idx, rem_deg - base, rem_len - 1);
                word.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Monomial> basis(const BasisKey& key)
{
    PrimeContext ctx(key.p);
    std::vector<Monomial> out;
    if (key.m < 0 || key.l < 0)
        return out;
    if (key.l == 0) {
        if (key.m == 0 && key.ideal == Ideal::Full)
            out.emplace_back();
        return out;
    }
    CellSearch search{key.p, 2 * std::int64_t(key.p - 1),
                      key.ideal == Ideal::LambdaIdeal ? 2 * std::int64_t(key.p) - 3 : 0, key.ideal, &out, {}};
    search.run(key.n, key.m, key.l);
    return out;
}

std::int64_t default_length_cap(std::int64_t max_degree)
{
    return 2 * max_degree;
}

BigradedTable enumerate_up_to(std::uint32_t p, std::uint32_t n, std::int64_t max_degree, Ideal ideal,
                              EnumerationLimits limits)
{
    PrimeContext ctx(p);
    if (max_degree < 0)
        throw DomainError("max_degree must be >= 0");
    const std::int64_t cap = limits.max_length < 0 ? default_length_cap(max_degree) : limits.max_length;
    BigradedTable table;
    std::size_t count = 0;
    for_each_admissible(p, n, max_degree, cap, ideal, [&](const Monomial& w) {
        if (++count > limits.max_words)
            throw ResourceError("basis enumeration exceeded " + std::to_string(limits.max_words) + " words");
        table[{degree(w, ctx), static_cast<std::int64_t>(w.size())}].push_back(w);
    });
    // DFS visits prefixes before extensions, which is already lexicographic order.
    return table;
}

std::string to_token(Generator g)
{
    return (g.is_lambda() ? "l" : "m") + std::to_string(g.index());
}

std::string to_text(std::span<const Generator> mon)
{
    if (mon.empty())
        return "1";
    std::string s;
    for (Generator g : mon) {
        if (!s.empty())
            s += ' ';
        s += to_token(g);
    }
    return s;
}

Generator parse_generator(std::string_view token)
{
    if (token.size() < 2 || (token[0] != 'l' && token[0] != 'm'))
        throw DomainError("bad generator token '" + std::string(token) + "'");
    std::uint32_t idx = 0;
    auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw DomainError("bad generator index in '" + std::string(token) + "'");
    return token[0] == 'l' ? Generator::lambda(idx) : Generator::mu(idx);
}

Monomial parse_monomial(std::string_view text)
{
    Monomial mon;
    std::size_t pos = 0;
    bool saw_unit = false;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t')
            ++end;
        if (end == pos)
            break;
        auto tok = text.substr(pos, end - pos);
        if (tok == "1")
            saw_unit = true;
        else
            mon.push_back(parse_generator(tok));
        pos = end;
    }
    if (saw_unit && !mon.empty())
        throw DomainError("unit token '1' cannot be combined with generators");
    if (!saw_unit && mon.empty())
        throw DomainError("empty monomial (use '1' for the unit)");
    return mon;
}

}  // namespace lambda
