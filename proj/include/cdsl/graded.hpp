#pragma once

// Degree-d pieces of the double shuffle algebras as kernels of linear systems.

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdsl/dist.hpp"
#include "cdsl/linalg.hpp"

namespace cdsl {

enum class DmrVariant { DmrMuN, DmrBracketN, DmrdMuN, DmrdBracketN };

inline DmrForm variant_form(DmrVariant v)
{
    return (v == DmrVariant::DmrMuN || v == DmrVariant::DmrdMuN) ? DmrForm::MuN : DmrForm::BracketN;
}
inline bool variant_has_dist(DmrVariant v) { return v == DmrVariant::DmrdMuN || v == DmrVariant::DmrdBracketN; }

struct GradedOptions {
    StarTildeScale star_scale = StarTildeScale::transported;
    DistCorrection correction = DistCorrection::class_zero_letter;
    std::size_t word_cap = std::size_t{1} << 16;
};

using SparseRow = std::map<std::size_t, mpq_class>;

struct LinearSystem {
    int N = 0;
    int degree = 0;
    Alphabet alphabet = Alphabet::X;
    std::vector<Word> words;
    std::vector<SparseRow> rows;

    Matrix<RationalField> matrix() const
    {
        Matrix<RationalField> m(RationalField{}, rows.size(), words.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [j, q] : rows[i]) m(i, j) = q;
        return m;
    }
};

namespace detail {

inline void push_row(std::vector<SparseRow>& rows, SparseRow r)
{
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    if (!r.empty()) rows.push_back(std::move(r));
}

} // namespace detail

// Conditions (i)-(iv) (and the distribution conditions for dmrd variants)
// restricted to the degree-d coefficients.
inline LinearSystem dmr_linear_system(int N, int d, DmrVariant variant, const GradedOptions& opt = {})
{
    if (d < 1) throw DomainError("graded piece requires degree >= 1");
    const CycContext& ctx = cyclotomic_context(N);
    const DmrForm form = variant_form(variant);
    const Alphabet A = form_alphabet(form);
    if (word_count(N, d) > opt.word_cap)
        throw ResourceError("graded piece: (N+1)^d = " + std::to_string(word_count(N, d)) + " exceeds cap");

    LinearSystem sys;
    sys.N = N;
    sys.degree = d;
    sys.alphabet = A;
    sys.words = enumerate_words(A, N, d);
    std::unordered_map<Word, std::size_t, WordHash> index;
    for (std::size_t j = 0; j < sys.words.size(); ++j) index.emplace(sys.words[j], j);
    auto col = [&](const Word& w) { return index.at(w); };

    if (d == 1) {
        // (i)
        detail::push_row(sys.rows, {{col(Word(A, {0})), 1}});
        if (form == DmrForm::MuN) {
            detail::push_row(sys.rows, {{col(Word(A, {N})), 1}});
        } else {
            SparseRow r;
            for (int a = 1; a <= N; ++a) r[col(Word(A, {a}))] += 1;
            detail::push_row(sys.rows, r);
        }
        // (iii)
        for (int k = 1; k <= N; ++k) {
            SparseRow r;
            r[col(Word(A, {k}))] += 1;
            r[col(Word(A, {iota_inv(-k, N)}))] -= 1;
            detail::push_row(sys.rows, r);
        }
    }

    const ProductKind sh = form == DmrForm::MuN ? ProductKind::ShuffleX : ProductKind::ShuffleXt;
    const ProductKind st = form == DmrForm::MuN ? ProductKind::HarmonicY : ProductKind::HarmonicYt;
    auto legs = detail::leg_words(sh, N, d);
    auto ylegs = detail::leg_words(st, N, d);

    // (ii)
    for (int a = 1; a < d; ++a)
        for (const Word& u : legs[a])
            for (const Word& v : legs[d - a]) {
                SparseRow r;
                for (const auto& [w, c] : shuffle(u, v)) r[col(w)] += c;
                detail::push_row(sys.rows, r);
            }

    // (iv): (psi_* | w) as a functional of the degree-d coefficients of psi.
    const Word corr_target = word_power(A, 0, d - 1);
    mpq_class corr_scale = 0;
    if (d >= 2)
        corr_scale = form == DmrForm::MuN ? mpq_class(d % 2 == 0 ? -1 : 1, d)
                                          : star_tilde_factor(N, d, opt.star_scale);
    auto add_star_functional = [&](SparseRow& r, const Word& w, std::int64_t c) {
        if (form == DmrForm::MuN) {
            r[col(p_word(w, N))] += c;
            if (d >= 2 && w == word_power(A, N, d)) r[col(corr_target * Word(A, {N}))] += corr_scale * c;
        } else {
            r[col(q_word(w, N))] += c;
            if (d >= 2 && w.depth() == d)
                for (int a = 1; a <= N; ++a) r[col(corr_target * Word(A, {a}))] += corr_scale * c;
        }
    };
    for (int a = 1; a < d; ++a)
        for (const Word& u : ylegs[a])
            for (const Word& v : ylegs[d - a]) {
                SparseRow r;
                for (const auto& [w, c] : word_product(u, v, st, N)) add_star_functional(r, w, c);
                detail::push_row(sys.rows, r);
            }

    if (variant_has_dist(variant)) {
        // Assemble column by column from the residual series of each basis word.
        for (int dv : divisors(N)) {
            DivisorContext dc(N, dv);
            std::map<Word, SparseRow> by_word;
            for (std::size_t j = 0; j < sys.words.size(); ++j) {
                Series e = Series::monomial(ctx, A, d, sys.words[j]);
                const Series res = dist_residual(e, dc, opt.correction);
                for (const auto& [w, c] : res.terms()) {
                    if (!c.is_rational()) throw DomainError("distribution residual is not rational");
                    by_word[w][j] += c.rational_part();
                }
            }
            for (auto& [w, r] : by_word) detail::push_row(sys.rows, std::move(r));
        }
    }
    return sys;
}

struct GradedPiece {
    LinearSystem system;
    Kernel<RationalField> kernel;

    std::size_t dimension() const { return kernel.basis.size(); }

    Series element(const CycContext& ctx, std::size_t i, int D) const
    {
        Series s(ctx, system.alphabet, D);
        for (std::size_t j = 0; j < system.words.size(); ++j)
            if (kernel.basis[i][j] != 0) s.add_term(system.words[j], kernel.basis[i][j]);
        return s;
    }
};

inline GradedPiece dmr_graded_basis(int N, int d, DmrVariant variant, const GradedOptions& opt = {})
{
    GradedPiece p{dmr_linear_system(N, d, variant, opt), {}};
    p.kernel = kernel(p.system.matrix());
    return p;
}

// Same system solved over Q(mu_N).
inline Kernel<CyclotomicField> dmr_graded_basis_cyclotomic(int N, int d, DmrVariant variant,
                                                           const GradedOptions& opt = {})
{
    const CycContext& ctx = cyclotomic_context(N);
    return kernel(extend_scalars(dmr_linear_system(N, d, variant, opt).matrix(), ctx));
}

} // namespace cdsl
