#pragma once

// Divisor maps and the distribution conditions.
//
// Letters of X_d and Xt_d live inside the level-N letter space: x_{zeta^{dm}} keeps
// code dm, and xt_beta (beta mod N/d) is stored as the code of nu_d(beta) = d*beta.

#include <string>
#include <utility>
#include <vector>

#include "cdsl/dshuffle.hpp"

namespace cdsl {

struct DivisorContext {
    int N;
    int d;
    int sub; // N / d

    DivisorContext(int level, int divisor) : N(level), d(divisor), sub(0)
    {
        if (divisor < 1 || level % divisor != 0) throw DomainError("d must divide N");
        sub = level / divisor;
    }

    // nu_d : Z/(N/d) -> dZ/NZ, as residues.
    int nu(int beta) const { return mod_residue(static_cast<long long>(d) * beta, N); }
    int nu_inv(int alpha) const
    {
        if (!in_image(alpha)) throw DomainError("nu_inv: alpha not in dZ/NZ");
        return mod_residue(alpha, N) / d % sub;
    }
    bool in_image(int alpha) const { return mod_residue(alpha, N) % d == 0; }
};

inline std::vector<int> divisors(int N)
{
    std::vector<int> v;
    for (int d = 1; d <= N; ++d)
        if (N % d == 0) v.push_back(d);
    return v;
}

inline LetterMorphism morphism_pd(const DivisorContext& dc)
{
    LetterMorphism m = identity_morphism(dc.N, Alphabet::X);
    m.images[0] = {{0, dc.d, 0}};
    for (int c = 1; c <= dc.N; ++c) m.images[c] = {{iota_inv(static_cast<long long>(dc.d) * c, dc.N), 1, 0}};
    return m;
}

inline LetterMorphism morphism_id(const DivisorContext& dc)
{
    LetterMorphism m = identity_morphism(dc.N, Alphabet::X);
    for (int c = 1; c <= dc.N; ++c)
        if (c % dc.d != 0) m.images[c].clear();
    return m;
}

inline LetterMorphism morphism_pd_tilde(const DivisorContext& dc)
{
    LetterMorphism m = identity_morphism(dc.N, Alphabet::Xt);
    for (int c = 0; c <= dc.N; ++c) {
        if (c == 0 || c % dc.d == 0) m.images[c] = {{c, dc.d, 0}};
        else m.images[c].clear();
    }
    return m;
}

inline LetterMorphism morphism_id_tilde(const DivisorContext& dc)
{
    LetterMorphism m = identity_morphism(dc.N, Alphabet::Xt);
    for (int c = 1; c <= dc.N; ++c) m.images[c] = {{iota_inv(static_cast<long long>(dc.d) * c, dc.N), 1, 0}};
    return m;
}

// F at level N/d with the root zeta_N^d; only letters of Xt_d are admissible.
inline LetterMorphism morphism_F_d(const DivisorContext& dc)
{
    LetterMorphism m{Alphabet::Xt, Alphabet::X, dc.N, std::vector<std::vector<LetterMorphism::Image>>(dc.N + 1)};
    m.images[0] = {{0, 1, 0}};
    for (int c = dc.d; c <= dc.N; c += dc.d)
        for (int k = 1; k <= dc.sub; ++k)
            m.images[c].push_back({dc.d * k, 1, -static_cast<long long>(k) * c});
    return m;
}

inline LetterMorphism morphism_F_d_inv(const DivisorContext& dc)
{
    LetterMorphism m{Alphabet::X, Alphabet::Xt, dc.N, std::vector<std::vector<LetterMorphism::Image>>(dc.N + 1)};
    m.images[0] = {{0, 1, 0}};
    for (int c = dc.d; c <= dc.N; c += dc.d)
        for (int a = 1; a <= dc.sub; ++a)
            m.images[c].push_back({dc.d * a, mpq_class(1, dc.sub), static_cast<long long>(a) * c});
    return m;
}

namespace detail {

inline void check_support(const Series& f, int d, const char* what)
{
    for (const auto& [w, c] : f.terms())
        for (int i = 0; i < w.degree(); ++i)
            if (w[i] % d != 0) throw DomainError(std::string(what) + ": letter outside the divisor alphabet");
}

} // namespace detail

inline Series map_pd_star(const Series& f, const DivisorContext& dc) { return apply_morphism(morphism_pd(dc), f); }
inline Series map_id_star(const Series& f, const DivisorContext& dc) { return apply_morphism(morphism_id(dc), f); }
inline Series map_pd_star_tilde(const Series& f, const DivisorContext& dc)
{
    return apply_morphism(morphism_pd_tilde(dc), f);
}
inline Series map_id_star_tilde(const Series& f, const DivisorContext& dc)
{
    return apply_morphism(morphism_id_tilde(dc), f);
}
inline Series map_F_d(const Series& f, const DivisorContext& dc)
{
    detail::check_support(f, dc.d, "F_d");
    return apply_morphism(morphism_F_d(dc), f);
}
inline Series map_F_d_inv(const Series& f, const DivisorContext& dc)
{
    detail::check_support(f, dc.d, "F_d^{-1}");
    return apply_morphism(morphism_F_d_inv(dc), f);
}

// Reading of the scalar in front of sum_beta xt_beta in the tilde distribution
// condition.
//   class_zero_letter: coefficient of the letter xt_0 (code N).
//   tilde_letter:      coefficient of the letter xt.
//   transported:       sum of the coefficients of xt_alpha, alpha in (N/d)Z/NZ;
//                      the value matching the other form under F.
enum class DistCorrection { class_zero_letter, tilde_letter, transported };

inline CycNum dist_correction_scalar(const Series& psi, const DivisorContext& dc, DistCorrection mode)
{
    const Alphabet A = psi.alphabet();
    if (psi.max_degree() < 1) return CycNum(psi.context());
    if (A == Alphabet::X) {
        CycNum s(psi.context());
        for (int c = dc.d; c <= dc.N; c += dc.d) s += psi.coefficient(Word(A, {c}));
        return s;
    }
    switch (mode) {
    case DistCorrection::class_zero_letter: return psi.coefficient(Word(A, {dc.N}));
    case DistCorrection::tilde_letter: return psi.coefficient(Word(A, {0}));
    case DistCorrection::transported: {
        CycNum s(psi.context());
        for (int c = dc.sub; c <= dc.N; c += dc.sub) s += psi.coefficient(Word(A, {c}));
        return s;
    }
    }
    return CycNum(psi.context());
}

// p^d(psi) - i_d(psi) - correction, for one divisor.
inline Series dist_residual(const Series& psi, const DivisorContext& dc,
                            DistCorrection mode = DistCorrection::class_zero_letter)
{
    const Alphabet A = psi.alphabet();
    Series r = A == Alphabet::X ? map_pd_star(psi, dc) - map_id_star(psi, dc)
                                : map_pd_star_tilde(psi, dc) - map_id_star_tilde(psi, dc);
    const CycNum s = dist_correction_scalar(psi, dc, mode);
    if (!s.is_zero() && psi.max_degree() >= 1) {
        if (A == Alphabet::X) {
            r.add_term(Word(A, {dc.N}), -s);
        } else {
            for (int c = dc.d; c <= dc.N; c += dc.d) r.add_term(Word(A, {c}), -s);
        }
    }
    return r;
}

struct DmrdReport {
    DmrReport base;
    std::vector<std::pair<int, Series>> residuals;

    bool dist_ok() const
    {
        for (const auto& [d, s] : residuals)
            if (!s.is_zero()) return false;
        return true;
    }
    bool member() const { return base.member() && dist_ok(); }
};

struct DmrdOptions {
    DmrOptions dmr;
    DistCorrection correction = DistCorrection::class_zero_letter;
};

inline DmrdReport dmrd_check(const Series& psi, DmrForm form, const DmrdOptions& opt = {})
{
    DmrdReport r{dmr_check(psi, form, opt.dmr), {}};
    for (int d : divisors(psi.level())) {
        DivisorContext dc(psi.level(), d);
        r.residuals.emplace_back(d, dist_residual(psi, dc, opt.correction));
    }
    return r;
}

} // namespace cdsl
