#pragma once

// Double shuffle conditions, derivations and brackets for both forms.

#include <optional>
#include <string>
#include <vector>

#include "cdsl/maps.hpp"
#include "cdsl/products.hpp"

namespace cdsl {

// Power of N in the denominator of the correction term of psi_star_tilde.
//   transported: 1/(n N^n), the value for which F_Y(psi_star_tilde) = psi_star(F(psi)).
//   literal:     1/(n N^{n+1}), as printed in the definition.
enum class StarTildeScale { transported, literal };

inline Series psi_star(const Series& psi)
{
    if (psi.alphabet() != Alphabet::X) throw ContextMismatch("psi_star expects alphabet X");
    const int N = psi.level();
    const int D = psi.max_degree();
    Series out = proj_Y(map_p(psi, true));
    for (int n = 2; n <= D; ++n) {
        Word w = word_power(Alphabet::X, 0, n - 1) * Word(Alphabet::X, {N});
        CycNum c = psi.coefficient(w);
        if (c.is_zero()) continue;
        c *= mpq_class(n % 2 == 0 ? -1 : 1, n);
        out.add_term(word_power(Alphabet::X, N, n), c);
    }
    return out;
}

inline mpq_class star_tilde_factor(int N, int n, StarTildeScale scale)
{
    mpz_class den = n;
    const int power = scale == StarTildeScale::transported ? n : n + 1;
    for (int i = 0; i < power; ++i) den *= N;
    return mpq_class((n % 2 == 0 ? -1 : 1) * detail::star_tilde_sign, 1) / mpq_class(den);
}

inline Series psi_star_tilde(const Series& psi, StarTildeScale scale = StarTildeScale::transported)
{
    if (psi.alphabet() != Alphabet::Xt) throw ContextMismatch("psi_star_tilde expects alphabet Xt");
    const CycContext& ctx = psi.context();
    const int N = ctx.N;
    const int D = psi.max_degree();
    Series out = proj_Y(map_q(psi, true));
    for (int n = 2; n <= D; ++n) {
        CycNum s(ctx);
        for (int a = 1; a <= N; ++a)
            s += psi.coefficient(word_power(Alphabet::Xt, 0, n - 1) * Word(Alphabet::Xt, {a}));
        if (s.is_zero()) continue;
        s *= star_tilde_factor(N, n, scale);
        // All N^n words in the class letters.
        std::string buf(n, 1);
        while (true) {
            out.add_unchecked(Word(Alphabet::Xt, buf), s);
            int i = n - 1;
            while (i >= 0 && buf[i] == N) buf[i--] = 1;
            if (i < 0) break;
            ++buf[i];
        }
    }
    return out;
}

enum class DmrForm { MuN, BracketN };
enum class DmrField { Q, QmuN };

inline Alphabet form_alphabet(DmrForm f) { return f == DmrForm::MuN ? Alphabet::X : Alphabet::Xt; }

struct DmrOptions {
    DmrField field = DmrField::Q;
    StarTildeScale star_scale = StarTildeScale::transported;
};

struct DmrReport {
    DmrForm form = DmrForm::MuN;
    int max_degree = 0;
    CycNum constant_term;
    std::vector<CycNum> cond_i;
    PrimitivityResult cond_ii;
    // Indexed by letter code 1..N (entry k-1).
    std::vector<CycNum> cond_iii;
    PrimitivityResult cond_iv;
    bool rational = true;
    bool field_ok = true;
    std::vector<std::string> warnings;

    bool cond_i_ok() const
    {
        for (const auto& c : cond_i)
            if (!c.is_zero()) return false;
        return true;
    }
    bool cond_iii_ok() const
    {
        for (const auto& c : cond_iii)
            if (!c.is_zero()) return false;
        return true;
    }
    bool member() const
    {
        return constant_term.is_zero() && cond_i_ok() && cond_ii.primitive && cond_iii_ok() &&
               cond_iv.primitive && field_ok;
    }
    // First failing condition, or empty when member.
    std::string first_failure() const
    {
        if (!constant_term.is_zero()) return "constant term";
        if (!cond_i_ok()) return "(i)";
        if (!cond_ii.primitive) return "(ii)";
        if (!cond_iii_ok()) return "(iii)";
        if (!cond_iv.primitive) return "(iv)";
        if (!field_ok) return "rationality";
        return "";
    }
};

inline DmrReport dmr_check(const Series& psi, DmrForm form, const DmrOptions& opt = {})
{
    if (psi.alphabet() != form_alphabet(form)) throw ContextMismatch("dmr_check: alphabet does not match form");
    const CycContext& ctx = psi.context();
    const int N = ctx.N;
    const int D = psi.max_degree();
    const Alphabet A = psi.alphabet();
    auto coeff = [&](std::initializer_list<int> codes) {
        Word w(A, codes);
        return w.degree() <= D ? psi.coefficient(w) : CycNum(ctx);
    };

    DmrReport r;
    r.form = form;
    r.max_degree = D;
    r.constant_term = psi.coefficient(Word(A));
    if (form == DmrForm::MuN) {
        r.cond_i = {coeff({0}), coeff({N})};
    } else {
        CycNum s(ctx);
        for (int a = 1; a <= N; ++a) s += coeff({a});
        r.cond_i = {coeff({0}), s};
    }
    r.cond_ii = is_primitive(psi, form == DmrForm::MuN ? ProductKind::ShuffleX : ProductKind::ShuffleXt);
    for (int k = 1; k <= N; ++k) r.cond_iii.push_back(coeff({k}) - coeff({iota_inv(-k, N)}));
    const Series star = form == DmrForm::MuN ? psi_star(psi) : psi_star_tilde(psi, opt.star_scale);
    r.cond_iv = is_primitive(star, form == DmrForm::MuN ? ProductKind::HarmonicY : ProductKind::HarmonicYt);
    r.rational = psi.is_rational();
    r.field_ok = opt.field == DmrField::QmuN || r.rational;

    if (form == DmrForm::MuN) {
        // Higher-k symmetry of psi_star; diagnostics only.
        for (int k = 2; k <= D; ++k)
            for (int m = 1; m <= N; ++m) {
                Word a = word_power(A, 0, k - 1) * Word(A, {m});
                Word b = word_power(A, 0, k - 1) * Word(A, {iota_inv(-m, N)});
                CycNum lhs = star.coefficient(a);
                CycNum rhs = star.coefficient(b);
                if (k % 2 == 0) rhs = -rhs;
                if (lhs != rhs)
                    r.warnings.push_back("psi_* symmetry fails at k=" + std::to_string(k) +
                                         ", m=" + std::to_string(m));
            }
    }
    return r;
}

// d_psi(x0) = 0, d_psi(x_m) = [x_m, t_m(psi)];
// dt_psi(xt) = 0, dt_psi(xt_a) = T_a([sum_b xt_b, psi]).
inline Series derivation(const Series& psi, const Series& target)
{
    psi.check_compatible(target);
    const CycContext& ctx = psi.context();
    const int N = ctx.N;
    const int D = std::min(psi.max_degree(), target.max_degree());
    const Alphabet A = psi.alphabet();
    std::vector<Series> image;
    image.reserve(N + 1);
    image.emplace_back(ctx, A, D);
    if (A == Alphabet::X) {
        for (int m = 1; m <= N; ++m) {
            Series x = letter(ctx, A, D, m);
            image.push_back(commutator(x, map_t_zeta(psi.truncated(D), m)));
        }
    } else {
        Series sum(ctx, A, D);
        for (int b = 1; b <= N; ++b) sum += letter(ctx, A, D, b);
        Series c = commutator(sum, psi.truncated(D));
        for (int a = 1; a <= N; ++a) image.push_back(map_T(c, a));
    }
    Series out(ctx, A, D);
    for (const auto& [w, c] : target.terms()) {
        if (w.degree() > D) continue;
        for (int i = 0; i < w.degree(); ++i) {
            const int code = w[i];
            if (code == 0) continue;
            Word pre = w.subword(0, i), post = w.subword(i + 1);
            for (const auto& [v, b] : image[code].terms()) {
                if (w.degree() - 1 + v.degree() > D) continue;
                out.add_unchecked(pre * v * post, c * b);
            }
        }
    }
    return out;
}

inline Series bracket(const Series& a, const Series& b)
{
    return derivation(a, b) - derivation(b, a) + commutator(a, b);
}

} // namespace cdsl
