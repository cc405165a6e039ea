#include "cli.hpp"

#include "lambda/algebra.hpp"
#include "lambda/cache.hpp"
#include "lambda/coverage.hpp"
#include "lambda/differential.hpp"
#include "lambda/errors.hpp"
#include "lambda/homology.hpp"
#include "lambda/hopf.hpp"
#include "lambda/io.hpp"
#include "lambda/rewrite.hpp"

#include <CLI11.hpp>

#include <memory>
#include <optional>
#include <ostream>

namespace lambda::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Options {
    std::uint32_t p = 3;
    std::uint32_t n = 1;
    std::int64_t m = 0;
    std::int64_t l = 1;
    std::int64_t k = 1;
    std::int64_t max_deg = 20;
    std::int64_t max_len = -1;
    std::size_t term_budget = RewriteOptions{}.term_budget;
    std::size_t jobs = 1;
    std::string ideal = "lambda";
    std::string format;
    std::string sign = "graded";
    std::string element;
    std::optional<std::string> cache_dir;
    bool include_empty = false;
    // certify
    std::int64_t cert_n = 0;
    std::int64_t from = 0;
    std::int64_t to = 0;
    bool all = false;
    std::uint32_t max_prime = 13;
    // mori
    std::int64_t f = 0, g = 0, i = 1, j = 1;
    std::optional<std::int64_t> mori_n;
    bool final_remark = false;
};

Format parse_format(const std::string& s, Format fallback)
{
    if (s.empty())
        return fallback;
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    throw DomainError("--format must be text, json or csv");
}

SignConvention parse_sign(const std::string& s)
{
    if (s == "graded")
        return SignConvention::TopologicalDegreeSign;
    if (s == "unsigned")
        return SignConvention::Unsigned;
    throw DomainError("--sign must be graded or unsigned");
}

RewriteOptions rewrite_options(const Options& o)
{
    RewriteOptions r;
    r.term_budget = o.term_budget;
    return r;
}

void cmd_basis(const Options& o, std::ostream& out)
{
    PrimeContext ctx(o.p);
    const BasisKey key{o.p, o.n, o.m, o.l, parse_ideal(o.ideal)};
    const auto words = basis(key);
    switch (parse_format(o.format, Format::Text)) {
    case Format::Json: {
        json list = json::array();
        for (const auto& w : words)
            list.push_back(to_text(w));
        out << json{{"p", o.p}, {"n", o.n}, {"m", o.m}, {"l", o.l}, {"ideal", o.ideal}, {"basis", list}}.dump() << '\n';
        break;
    }
    case Format::Csv:
        out << "p,n,ideal,m,l,word\n";
        for (const auto& w : words)
            out << o.p << ',' << o.n << ',' << o.ideal << ',' << o.m << ',' << o.l << ',' << to_text(w) << '\n';
        break;
    case Format::Text:
        for (const auto& w : words)
            out << to_text(w) << '\n';
        break;
    }
}

void print_element(const Element& x, const PrimeContext& ctx, Format fmt, std::ostream& out)
{
    if (fmt == Format::Json)
        out << to_json(x).dump() << '\n';
    else if (fmt == Format::Text)
        out << format_element(x, ctx) << '\n';
    else
        throw DomainError("csv output is not available for elements");
}

void cmd_reduce(const Options& o, std::ostream& out)
{
    PrimeContext ctx(o.p);
    Rewriter rw(ctx, rewrite_options(o));
    print_element(rw.normalize(parse_terms(o.element, ctx)), ctx, parse_format(o.format, Format::Text), out);
}

void cmd_diff(const Options& o, std::ostream& out)
{
    PrimeContext ctx(o.p);
    Rewriter rw(ctx, rewrite_options(o));
    Differential d(rw, parse_sign(o.sign));
    print_element(d.d(rw.normalize(parse_terms(o.element, ctx))), ctx, parse_format(o.format, Format::Text), out);
}

void cmd_e2(const Options& o, std::ostream& out, std::ostream& err)
{
    PrimeContext ctx(o.p);
    E2Options opts;
    opts.include_empty = o.include_empty;
    opts.jobs = o.jobs;
    opts.max_length = o.max_len;
    opts.sign = parse_sign(o.sign);
    opts.rewrite = rewrite_options(o);
    std::unique_ptr<ContentCache> cache;
    if (auto dir = ContentCache::resolve_dir(o.cache_dir)) {
        cache = std::make_unique<ContentCache>(*dir, opts.sign);
        opts.store = cache.get();
    }
    const auto cells = e2_page(o.p, o.n, o.max_deg, parse_ideal(o.ideal), opts);
    switch (parse_format(o.format, Format::Text)) {
    case Format::Json: {
        json list = json::array();
        for (const auto& c : cells)
            list.push_back(to_json(c));
        out << list.dump() << '\n';
        break;
    }
    case Format::Csv:
        out << csv_header() << '\n';
        for (const auto& c : cells)
            out << to_csv_row(c) << '\n';
        break;
    case Format::Text:
        out << render_chart(cells);
        break;
    }
    if (cache)
        err << "cache: " << cache->hits() << " hits, " << cache->misses() << " misses\n";
}

void cmd_lemma2(const Options& o, std::ostream& out)
{
    PrimeContext ctx(o.p);
    if (o.k < 1)
        throw DomainError("--k must be >= 1");
    Rewriter rw(ctx, rewrite_options(o));
    Differential d(rw, parse_sign(o.sign));
    const auto v = lemma_verdict(static_cast<int>(o.k), d);
    if (parse_format(o.format, Format::Json) == Format::Text) {
        out << "k=" << v.k << " p=" << v.p << '\n';
        for (const auto& row : v.matrix.to_dense(ctx)) {
            for (auto x : row)
                out << (x >= 0 ? "  " : " ") << x;
            out << '\n';
        }
        out << "det=" << ctx.to_signed(v.det) << " det_formula=" << ctx.to_signed(v.det_formula)
            << " is_isomorphism=" << (v.is_isomorphism ? "true" : "false") << '\n';
    } else {
        out << to_json(v, ctx).dump() << '\n';
    }
}

void cmd_hopf_check(const Options& o, std::ostream& out)
{
    PrimeContext ctx(o.p);
    Rewriter rw(ctx, rewrite_options(o));
    Differential d(rw, parse_sign(o.sign));
    const auto ses = ses_dimension_check(o.p, o.max_deg, o.max_len);
    const auto chain = chain_map_check(d, o.max_deg, o.max_len);
    json failures = json::array();
    for (const auto& c : ses.failures)
        failures.push_back({{"m", c.m}, {"l", c.l}, {"dim_lambda2", c.dim_lambda2}, {"dim_lambda1", c.dim_lambda1},
                            {"dim_lambda2_ideal", c.dim_lambda2_ideal}, {"dim_image", c.dim_image},
                            {"words_match", c.words_match}});
    json chain_failures = json::array();
    for (const auto& f : chain.failures)
        chain_failures.push_back({{"word", to_text(f.word)}, {"h_of_d", format_element(f.h_of_d, ctx)},
                                  {"d_of_h", format_element(f.d_of_h, ctx)}});
    json report = {{"p", o.p},
                   {"max_degree", o.max_deg},
                   {"max_length", ses.max_length},
                   {"ses_cells", ses.cells.size()},
                   {"ses_ok", ses.ok()},
                   {"ses_failures", failures},
                   {"chain_words", chain.words_checked},
                   {"chain_ok", chain.ok()},
                   {"chain_failure_count", chain.failure_count},
                   {"chain_failures", chain_failures}};
    if (parse_format(o.format, Format::Json) == Format::Text)
        out << "ses: " << ses.cells.size() << " cells, " << ses.failures.size() << " failures\n"
            << "chain map: " << chain.words_checked << " words, " << chain.failure_count << " failures\n";
    else
        out << report.dump() << '\n';
}

void cmd_prop_check(const Options& o, std::ostream& out)
{
    PrimeContext ctx(o.p);
    if (o.k < 2)
        throw DomainError("--k must be >= 2");
    Rewriter rw(ctx, rewrite_options(o));
    Differential d(rw, parse_sign(o.sign));
    const auto r = proposition_check(static_cast<int>(o.k), d);
    if (parse_format(o.format, Format::Json) == Format::Text)
        out << "k=" << r.k << " p=" << r.p << " hits=" << (r.hits ? "true" : "false") << '\n';
    else
        out << to_json(r).dump() << '\n';
}

void cmd_certify(const Options& o, std::ostream& out)
{
    std::int64_t lo = o.cert_n, hi = o.cert_n;
    if (o.cert_n == 0) {
        if (o.from == 0 || o.to < o.from)
            throw DomainError("certify needs --n or a range --from <= --to");
        lo = o.from;
        hi = o.to;
    }
    const Format fmt = parse_format(o.format, Format::Json);
    if (fmt == Format::Csv)
        out << "n,kind,p,k,statement\n";
    for (std::int64_t n = lo; n <= hi; ++n) {
        std::vector<Certificate> certs =
            o.all ? all_certificates(n, o.max_prime) : std::vector<Certificate>{certify_dimension(n)};
        for (const auto& c : certs) {
            if (auto problem = validate(c))
                throw std::logic_error("invalid certificate for n=" + std::to_string(n) + ": " + *problem);
            if (fmt == Format::Json)
                out << to_json(c).dump() << '\n';
            else if (fmt == Format::Csv)
                out << c.n << ',' << to_string(c.kind) << ',' << c.p << ',' << c.k << ',' << to_string(c.statement)
                    << '\n';
            else
                out << "pi_" << c.n << "(S^2) != 0: " << to_string(c.kind)
                    << (c.kind == CertificateKind::OddPrimary
                            ? " p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) + " (" +
                                  std::string(to_string(c.statement)) + ")"
                            : std::string())
                    << '\n';
        }
    }
}

void cmd_mori(const Options& o, std::ostream& out)
{
    const Format fmt = parse_format(o.format, Format::Json);
    if (o.final_remark) {
        const auto r = final_remark_instance(o.p, o.k);
        if (fmt == Format::Text)
            out << "p=" << o.p << " k=" << o.k << " verdict=" << (r.verdict ? "true" : "false") << " n in [" << r.n_min
                << ", " << r.n_max << "] target pi_" << r.target_dimension << "(S^3)\n";
        else
            out << to_json(r).dump() << '\n';
        return;
    }
    const MoriParams params{o.p, o.f, o.g, o.i, o.j};
    const auto w = mori_window(params);
    json j = {{"p", o.p}, {"f", o.f}, {"g", o.g}, {"i", o.i}, {"j", o.j}, {"u", params.u()},
              {"u_condition", w.u_condition}, {"n_lower", w.lower}, {"n_upper_exclusive", w.upper}};
    if (o.mori_n)
        j["n"] = *o.mori_n, j["holds"] = mori_check(params, *o.mori_n);
    if (fmt == Format::Text)
        out << "u=" << params.u() << " u_condition=" << (w.u_condition ? "true" : "false") << " n window [" << w.lower
            << ", " << w.upper << ")"
            << (o.mori_n ? std::string(" holds=") + (mori_check(params, *o.mori_n) ? "true" : "false") : "") << '\n';
    else
        out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Mod-p lambda algebra: straightening, differential, E2 pages, Hopf map checks"};
    app.require_subcommand(1);

    auto add_p = [&](CLI::App* c) { c->add_option("--p", o.p, "odd prime")->capture_default_str(); };
    auto add_fmt = [&](CLI::App* c) { c->add_option("--format", o.format, "text|json|csv"); };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--term-budget", o.term_budget, "straightening term budget per call")->capture_default_str();
        c->add_option("--sign", o.sign, "graded|unsigned Leibniz sign")->capture_default_str();
    };

    auto* basis_cmd = app.add_subcommand("basis", "admissible basis of one cell");
    add_p(basis_cmd);
    add_fmt(basis_cmd);
    basis_cmd->add_option("--n", o.n, "first-index bound")->capture_default_str();
    basis_cmd->add_option("--m", o.m, "degree")->required();
    basis_cmd->add_option("--l", o.l, "length")->required();
    basis_cmd->add_option("--ideal", o.ideal, "full|lambda")->capture_default_str();

    auto* reduce_cmd = app.add_subcommand("reduce", "straighten an element into the admissible basis");
    add_p(reduce_cmd);
    add_fmt(reduce_cmd);
    add_budget(reduce_cmd);
    reduce_cmd->add_option("element", o.element, "e.g. \"m0 l2\" or \"2 m1 l1 - l1 m1\"")->required();

    auto* diff_cmd = app.add_subcommand("diff", "differential of an element");
    add_p(diff_cmd);
    add_fmt(diff_cmd);
    add_budget(diff_cmd);
    diff_cmd->add_option("element", o.element)->required();

    auto* e2_cmd = app.add_subcommand("e2", "E2 page of Lambda(n) or its lambda-ending ideal");
    add_p(e2_cmd);
    add_fmt(e2_cmd);
    add_budget(e2_cmd);
    e2_cmd->add_option("--n", o.n)->capture_default_str();
    e2_cmd->add_option("--max-deg", o.max_deg)->capture_default_str();
    e2_cmd->add_option("--max-len", o.max_len, "length cap for the full algebra (default 2*max-deg)");
    e2_cmd->add_option("--ideal", o.ideal, "full|lambda")->capture_default_str();
    e2_cmd->add_option("--jobs", o.jobs)->capture_default_str();
    e2_cmd->add_option("--cache-dir", o.cache_dir, "persistent cell cache (or LAMBDA_CACHE_DIR)");
    e2_cmd->add_flag("--include-empty", o.include_empty, "also list cells with dim_e1 = 0");

    auto* lemma_cmd = app.add_subcommand("lemma2", "tridiagonal matrix of d on span(u) and its determinant");
    add_p(lemma_cmd);
    add_fmt(lemma_cmd);
    add_budget(lemma_cmd);
    lemma_cmd->add_option("--k", o.k)->required();

    auto* hopf_cmd = app.add_subcommand("hopf-check", "short exact sequence and chain-map checks for h_p");
    add_p(hopf_cmd);
    add_fmt(hopf_cmd);
    add_budget(hopf_cmd);
    hopf_cmd->add_option("--max-deg", o.max_deg)->capture_default_str();
    hopf_cmd->add_option("--max-len", o.max_len);

    auto* prop_cmd = app.add_subcommand("prop-check", "E2-level Hopf image test for alpha_{k-2}");
    add_p(prop_cmd);
    add_fmt(prop_cmd);
    add_budget(prop_cmd);
    prop_cmd->add_option("--k", o.k)->required();

    auto* cert_cmd = app.add_subcommand("certify", "certificates that pi_n(S^2) is nonzero");
    add_fmt(cert_cmd);
    cert_cmd->add_option("--n", o.cert_n);
    cert_cmd->add_option("--from", o.from);
    cert_cmd->add_option("--to", o.to);
    cert_cmd->add_flag("--all", o.all, "list every certificate, not only the default");
    cert_cmd->add_option("--max-prime", o.max_prime)->capture_default_str();

    auto* mori_cmd = app.add_subcommand("mori", "composition inequality check");
    add_p(mori_cmd);
    add_fmt(mori_cmd);
    mori_cmd->add_option("--f", o.f);
    mori_cmd->add_option("--g", o.g);
    mori_cmd->add_option("--i", o.i);
    mori_cmd->add_option("--j", o.j);
    mori_cmd->add_option("--n", o.mori_n);
    mori_cmd->add_flag("--final", o.final_remark, "use g=0, f=p-2, i=p^2 k-1, j=p^(p-2)");
    mori_cmd->add_option("--k", o.k, "with --final");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kDomainError;
    }

    try {
        // every command that takes --p validates it before doing any work
        if (!cert_cmd->parsed())
            PrimeContext check(o.p);
        if (basis_cmd->parsed())
            cmd_basis(o, out);
        else if (reduce_cmd->parsed())
            cmd_reduce(o, out);
        else if (diff_cmd->parsed())
            cmd_diff(o, out);
        else if (e2_cmd->parsed())
            cmd_e2(o, out, err);
        else if (lemma_cmd->parsed())
            cmd_lemma2(o, out);
        else if (hopf_cmd->parsed())
            cmd_hopf_check(o, out);
        else if (prop_cmd->parsed())
            cmd_prop_check(o, out);
        else if (cert_cmd->parsed())
            cmd_certify(o, out);
        else if (mori_cmd->parsed())
            cmd_mori(o, out);
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

}  // namespace lambda::cli
