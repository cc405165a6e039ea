#include "lambda/io.hpp"

#include "lambda/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace lambda {

std::string format_element(const Element& x, const PrimeContext& ctx)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        std::int64_t c = ctx.to_signed(t.coeff);
        if (c < 0) {
            out += first ? "- " : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        if (c != 1 || t.word.empty())
            out += std::to_string(c) + (t.word.empty() ? "" : " ");
        if (!t.word.empty())
            out += to_text(t.word);
        first = false;
    }
    return out;
}

namespace {

bool parse_integer(std::string_view tok, std::int64_t& value)
{
    if (tok.empty())
        return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view text)
{
    std::vector<std::string_view> toks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        if (end > pos)
            toks.push_back(text.substr(pos, end - pos));
        pos = end;
    }
    return toks;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text, const PrimeContext& ctx)
{
    const auto toks = split_ws(text);
    if (toks.empty())
        throw DomainError("empty element");
    if (toks.size() == 1 && toks[0] == "0")
        return {};

    std::vector<Term> terms;
    std::vector<std::string_view> body;
    bool negative = false;

    auto flush = [&] {
        std::int64_t coeff = 1;
        std::size_t start = 0;
        if (std::int64_t v = 0; parse_integer(body[0], v)) {
            coeff = v;  // a lone integer is a multiple of the unit
            start = 1;
        }
        Monomial word;
        for (std::size_t t = start; t < body.size(); ++t) {
            if (body[t] == "1" && body.size() - start == 1)
                continue;
            word.push_back(parse_generator(body[t]));
        }
        terms.push_back({std::move(word), ctx.from_int(negative ? -coeff : coeff)});
        body.clear();
    };

    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] == "+" || toks[i] == "-") {
            if (!body.empty())
                flush();
            else if (i != 0)
                throw DomainError("two signs in a row");
            negative = toks[i] == "-";
        } else {
            body.push_back(toks[i]);
        }
    }
    if (body.empty())
        throw DomainError("element ends with a sign");
    flush();
    return terms;
}

std::string_view to_string(Ideal ideal)
{
    return ideal == Ideal::Full ? "full" : "lambda";
}

Ideal parse_ideal(std::string_view s)
{
    if (s == "full")
        return Ideal::Full;
    if (s == "lambda")
        return Ideal::LambdaIdeal;
    throw DomainError("ideal must be 'full' or 'lambda', got '" + std::string(s) + "'");
}

json to_json(const Element& x)
{
    json terms = json::array();
    for (const auto& t : x.terms()) {
        json word = json::array();
        for (Generator g : t.word)
            word.push_back(to_token(g));
        terms.push_back({{"coeff", t.coeff.value}, {"word", std::move(word)}});
    }
    return {{"p", x.p()}, {"terms", std::move(terms)}};
}

Element element_from_json(const json& j, const PrimeContext& ctx)
{
    if (j.at("p").get<std::uint32_t>() != ctx.p())
        throw DomainError("element JSON has a different prime");
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Monomial word;
        for (const auto& tok : t.at("word"))
            word.push_back(parse_generator(tok.get<std::string>()));
        if (!is_admissible(word, ctx))
            throw DomainError("element JSON has an inadmissible word: " + to_text(word));
        terms.push_back({std::move(word), ctx.from_int(t.at("coeff").get<std::int64_t>())});
    }
    return Element::from_terms(ctx, std::move(terms));
}

json to_json(const E2Cell& c)
{
    return {{"p", c.key.p},
            {"n", c.key.n},
            {"ideal", to_string(c.key.ideal)},
            {"m", c.key.m},
            {"l", c.key.l},
            {"dim_e1", c.dim_e1},
            {"dim_kernel", c.dim_kernel},
            {"dim_image_in", c.dim_image_in},
            {"dim_e2", c.dim_e2},
            {"pi_index", c.pi_index}};
}

E2Cell e2_cell_from_json(const json& j)
{
    E2Cell c;
    c.key.p = j.at("p").get<std::uint32_t>();
    c.key.n = j.at("n").get<std::uint32_t>();
    c.key.ideal = parse_ideal(j.at("ideal").get<std::string>());
    c.key.m = j.at("m").get<std::int64_t>();
    c.key.l = j.at("l").get<std::int64_t>();
    c.dim_e1 = j.at("dim_e1").get<std::size_t>();
    c.dim_kernel = j.at("dim_kernel").get<std::size_t>();
    c.dim_image_in = j.at("dim_image_in").get<std::size_t>();
    c.dim_e2 = j.at("dim_e2").get<std::size_t>();
    c.pi_index = j.at("pi_index").get<std::int64_t>();
    if (c.dim_e2 + c.dim_image_in != c.dim_kernel || c.dim_kernel > c.dim_e1)
        throw DomainError("inconsistent E2 cell record");
    return c;
}

json to_json(const LemmaVerdict& v, const PrimeContext& ctx)
{
    return {{"k", v.k},
            {"p", v.p},
            {"matrix", v.matrix.to_dense(ctx)},
            {"det", ctx.to_signed(v.det)},
            {"det_formula", ctx.to_signed(v.det_formula)},
            {"rank", v.rank},
            {"is_isomorphism", v.is_isomorphism}};
}

json to_json(const Certificate& c)
{
    json j = {{"n", c.n}, {"kind", to_string(c.kind)}};
    if (c.kind == CertificateKind::OddPrimary) {
        j["p"] = c.p;
        j["k"] = c.k;
        j["statement"] = to_string(c.statement);
    }
    return j;
}

json to_json(const FinalRemarkInstance& r)
{
    return {{"p", r.params.p},
            {"f", r.params.f},
            {"g", r.params.g},
            {"i", r.params.i},
            {"j", r.params.j},
            {"u", r.params.u()},
            {"u_condition", r.window.u_condition},
            {"n_window", {r.n_min, r.n_max}},
            {"verdict", r.verdict},
            {"target_dimension", r.target_dimension}};
}

json to_json(const PropositionResult& r)
{
    json j = {{"k", r.k}, {"p", r.p}, {"applicable", r.applicable}, {"hits", r.hits}};
    if (r.applicable) {
        j["source"] = {{"n", r.source.n}, {"m", r.source.m}, {"l", r.source.l}};
        j["target"] = {{"n", r.target.n}, {"m", r.target.m}, {"l", r.target.l}};
        j["dim_cycles"] = r.dim_cycles;
        j["target_class_nonzero"] = r.target_class_nonzero;
    }
    return j;
}

std::string csv_header()
{
    return "p,n,ideal,m,l,dim_e1,dim_e2,pi_index";
}

std::string to_csv_row(const E2Cell& c)
{
    std::ostringstream os;
    os << c.key.p << ',' << c.key.n << ',' << to_string(c.key.ideal) << ',' << c.key.m << ',' << c.key.l << ','
       << c.dim_e1 << ',' << c.dim_e2 << ',' << c.pi_index;
    return os.str();
}

std::string render_chart(const std::vector<E2Cell>& cells)
{
    if (cells.empty())
        return "(empty)\n";
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> grid;  // (l, stem) -> dim
    std::int64_t lo = cells.front().pi_index, hi = lo, lmax = 0;
    for (const auto& c : cells) {
        grid[{c.key.l, c.pi_index}] += c.dim_e2;
        lo = std::min(lo, c.pi_index);
        hi = std::max(hi, c.pi_index);
        lmax = std::max(lmax, c.key.l);
    }
    std::ostringstream os;
    const auto& k = cells.front().key;
    os << "E2 p=" << k.p << " n=" << k.n << " ideal=" << to_string(k.ideal) << " (rows: length l, columns: pi_index)\n";
    for (std::int64_t l = lmax; l >= 0; --l) {
        os << (l < 10 ? " " : "") << l << " |";
        for (std::int64_t s = lo; s <= hi; ++s) {
            auto it = grid.find({l, s});
            std::size_t d = it == grid.end() ? 0 : it->second;
            std::string cell = d == 0 ? "." : std::to_string(d);
            os << std::string(cell.size() < 3 ? 3 - cell.size() : 1, ' ') << cell;
        }
        os << '\n';
    }
    os << "   +" << std::string(static_cast<std::size_t>(3 * (hi - lo + 1)), '-') << '\n' << "    ";
    for (std::int64_t s = lo; s <= hi; ++s) {
        std::string lab = std::to_string(s);
        os << std::string(lab.size() < 3 ? 3 - lab.size() : 1, ' ') << lab;
    }
    os << '\n';
    return os.str();
}

}  // namespace lambda
