#include "lambda/hopf.hpp"

#include "lambda/errors.hpp"
#include "lambda/homology.hpp"

#include <stdexcept>
#include <string>

namespace lambda {

std::int64_t hopf_degree_shift(const PrimeContext& ctx)
{
    return degree(Generator::mu(2), ctx);
}

Element hopf_map(const Element& x, const PrimeContext& ctx)
{
    std::vector<Term> out;
    for (const auto& t : x.terms()) {
        if (!in_unstable(t.word, 2))
            throw DomainError("hopf_map: " + to_text(t.word) + " is not in Lambda(2)");
        if (!t.word.empty() && t.word.front() == Generator::mu(2))
            out.push_back({Monomial(t.word.begin() + 1, t.word.end()), t.coeff});
    }
    return Element::from_terms(ctx, std::move(out));
}

namespace {

std::vector<Monomial> cell(std::uint32_t p, std::uint32_t n, std::int64_t m, std::int64_t l)
{
    if (m < 0 || l < 0)
        return {};
    return basis(BasisKey{p, n, m, l, Ideal::Full});
}

}  // namespace

SesReport ses_dimension_check(std::uint32_t p, std::int64_t max_degree, std::int64_t max_length)
{
    PrimeContext ctx(p);
    SesReport report;
    report.p = p;
    report.max_degree = max_degree;
    report.max_length = max_length < 0 ? default_length_cap(max_degree) : max_length;
    const std::int64_t lam2 = degree(Generator::lambda(2), ctx);
    const std::int64_t mu2 = degree(Generator::mu(2), ctx);

    for (std::int64_t m = 0; m <= max_degree; ++m) {
        for (std::int64_t l = 0; l <= report.max_length; ++l) {
            const auto source = cell(p, 2, m, l);
            const auto low = cell(p, 1, m, l);
            const auto ideal = cell(p, 2 * p - 1, m - lam2, l - 1);
            const auto image = cell(p, 2 * p, m - mu2, l - 1);

            SesCell c{m, l, source.size(), low.size(), ideal.size(), image.size(), true};
            if (c.dim_lambda2 == 0 && c.dim_lambda1 == 0 && c.dim_lambda2_ideal == 0 && c.dim_image == 0)
                continue;

            // Sort the words of Lambda(2) into the three summands and compare as lists.
            std::vector<Monomial> got_low, got_ideal, got_image;
            for (const auto& w : source) {
                if (in_unstable(w, 1))
                    got_low.push_back(w);
                else if (w.front() == Generator::lambda(2))
                    got_ideal.emplace_back(w.begin() + 1, w.end());
                else
                    got_image.emplace_back(w.begin() + 1, w.end());
            }
            c.words_match = got_low == low && got_ideal == ideal && got_image == image;
            report.cells.push_back(c);
            if (!c.ok())
                report.failures.push_back(c);
        }
    }
    return report;
}

ChainMapReport chain_map_check(Differential& d, std::int64_t max_degree, std::int64_t max_length)
{
    const auto& ctx = d.field();
    const std::int64_t cap = max_length < 0 ? default_length_cap(max_degree) : max_length;
    ChainMapReport report;
    for_each_admissible(ctx.p(), 2, max_degree, cap, Ideal::Full, [&](const Monomial& w) {
        ++report.words_checked;
        Element x = Element::monomial(ctx, w, ctx.one());
        Element hd = hopf_map(d.d(w), ctx);
        Element dh = d.d(hopf_map(x, ctx));
        if (hd != dh) {
            ++report.failure_count;
            if (report.failures.size() < 16)
                report.failures.push_back({w, std::move(hd), std::move(dh)});
        }
    });
    return report;
}

LemmaSpan lemma_span(int k)
{
    if (k < 1)
        throw DomainError("lemma needs k >= 1");
    const auto l1 = Generator::lambda(1);
    const auto l2 = Generator::lambda(2);
    const auto m1 = Generator::mu(1);
    const auto m2 = Generator::mu(2);
    const auto uk = static_cast<std::size_t>(k);
    LemmaSpan span;
    span.k = k;

    Monomial u0(uk, m1);
    u0.push_back(l2);
    span.u_basis.push_back(u0);
    for (std::size_t i = 1; i <= uk; ++i) {
        Monomial u(uk - i, m1);
        u.push_back(m2);
        u.insert(u.end(), i - 1, m1);
        u.push_back(l1);
        span.u_basis.push_back(u);
    }
    for (std::size_t i = 0; i <= uk; ++i) {
        Monomial v(uk - i, m1);
        v.push_back(l1);
        v.insert(v.end(), i, m1);
        v.push_back(l1);
        span.v_basis.push_back(v);
    }
    return span;
}

FpMatrix lemma_matrix(int k, Differential& d)
{
    const LemmaSpan span = lemma_span(k);
    IndexedBasis target(span.v_basis);
    FpMatrix mat(span.v_basis.size(), span.u_basis.size());
    for (std::size_t i = 0; i < span.u_basis.size(); ++i) {
        const Element du = d.d(span.u_basis[i]);
        for (const auto& t : du.terms())
            if (!target.find(t.word))
                throw std::logic_error("d(u_" + std::to_string(i) + ") has a component on " + to_text(t.word) +
                                       " outside span(v)");
        mat.columns[i] = coordinates(du, target);
    }
    return mat;
}

LemmaVerdict lemma_verdict(int k, Differential& d)
{
    const auto& ctx = d.field();
    LemmaVerdict v;
    v.k = k;
    v.p = ctx.p();
    v.matrix = lemma_matrix(k, d);
    v.det = determinant(v.matrix, ctx);
    v.det_formula = ctx.from_int(((k + 1) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k + 2));
    v.rank = rank_fp(v.matrix, ctx);
    v.is_isomorphism = v.rank == v.matrix.cols && v.matrix.rows == v.matrix.cols;
    return v;
}

PropositionResult proposition_check(int k, Differential& d)
{
    const auto& ctx = d.field();
    const std::uint32_t p = ctx.p();
    PropositionResult r;
    r.k = k;
    r.p = p;
    if (k < 2)
        throw DomainError("proposition check needs k >= 2");
    if (k < 3)
        return r;  // alpha_{k-2} = mu_1^{k-3} lambda_1 does not exist
    r.applicable = true;

    Monomial alpha(static_cast<std::size_t>(k - 3), Generator::mu(1));
    alpha.push_back(Generator::lambda(1));
    const std::int64_t m_alpha = degree(alpha, ctx);
    const auto l_alpha = static_cast<std::int64_t>(alpha.size());

    r.source = BasisKey{p, 2, m_alpha + hopf_degree_shift(ctx), l_alpha + 1, Ideal::LambdaIdeal};
    r.target = BasisKey{p, 2 * p, m_alpha, l_alpha, Ideal::LambdaIdeal};

    IndexedBasis source(basis(r.source));
    IndexedBasis source_below(basis(BasisKey{p, 2, r.source.m - 1, r.source.l + 1, Ideal::LambdaIdeal}));
    IndexedBasis target(basis(r.target));
    IndexedBasis target_above(basis(BasisKey{p, 2 * p, r.target.m + 1, r.target.l - 1, Ideal::LambdaIdeal}));

    const auto cycles = kernel_basis(d_matrix(source, source_below, d), ctx);
    r.dim_cycles = cycles.size();

    ColumnReducer red(ctx, target.size());
    for (const auto& w : target_above.words())
        red.add(coordinates(d.d(w), target));
    const SparseColumn alpha_col = coordinates(Element::monomial(ctx, alpha, ctx.one()), target);
    r.target_class_nonzero = !red.contains(alpha_col);

    for (const auto& z : cycles) {
        std::vector<Term> terms;
        for (auto [idx, c] : z)
            terms.push_back({source.words()[idx], c});
        const Element image = hopf_map(Element::from_terms(ctx, std::move(terms)), ctx);
        red.add(coordinates(image, target));
    }
    r.hits = r.target_class_nonzero && red.contains(alpha_col);
    return r;
}

}  // namespace lambda
