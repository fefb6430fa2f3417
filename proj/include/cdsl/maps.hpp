#pragma once

// Structure maps between Q(mu_N)<<X>> and Q(mu_N)<<Xt>>.

#include <string>
#include <unordered_map>
#include <vector>

#include "cdsl/detail/fault_injection.hpp"
#include "cdsl/series.hpp"

namespace cdsl {

// Algebra morphism sending each letter to a combination sum q * zeta^e * letter.
struct LetterMorphism {
    struct Image {
        int code;
        mpq_class q;
        long long e;
    };
    Alphabet source = Alphabet::X;
    Alphabet target = Alphabet::X;
    int N = 0;
    std::vector<std::vector<Image>> images; // indexed by source code 0..N
};

// Applies the morphism one letter position at a time so that terms sharing a
// partially rewritten prefix are merged early.
inline Series apply_morphism(const LetterMorphism& m, const Series& f)
{
    if (f.alphabet() != m.source) throw ContextMismatch("morphism applied to wrong alphabet");
    if (f.level() != m.N) throw ContextMismatch("morphism applied at wrong level");
    const CycContext& ctx = f.context();
    std::vector<bool> uniform(m.images.size(), true);
    for (std::size_t l = 0; l < m.images.size(); ++l)
        for (const auto& img : m.images[l])
            if (img.q != m.images[l].front().q) uniform[l] = false;
    using Map = std::unordered_map<std::string, CycNum>;
    Map cur;
    int longest = 0;
    for (const auto& [w, c] : f.terms()) {
        cur.emplace(w.raw(), c);
        longest = std::max(longest, w.degree());
    }
    for (int p = 0; p < longest; ++p) {
        Map next;
        next.reserve(cur.size() * 2);
        for (auto& [s, c] : cur) {
            if (static_cast<int>(s.size()) <= p) {
                auto [it, ins] = next.try_emplace(s, ctx);
                it->second += c;
                continue;
            }
            const int l = static_cast<unsigned char>(s[p]);
            const auto& imgs = m.images[l];
            if (imgs.empty()) continue;
            // Scale once when every image of this letter carries the same rational.
            const bool shared = uniform[l];
            CycNum scaled = shared && imgs.front().q != 1 ? c * imgs.front().q : CycNum();
            const CycNum& base = shared && imgs.front().q != 1 ? scaled : c;
            const mpq_class one = 1;
            std::string t = s;
            for (const auto& img : imgs) {
                t[p] = static_cast<char>(img.code);
                auto [it, ins] = next.try_emplace(t, ctx);
                it->second.add_scaled_zeta(base, shared ? one : img.q, img.e);
            }
        }
        cur.clear();
        for (auto& [s, c] : next)
            if (!c.is_zero()) cur.emplace(s, std::move(c));
    }
    Series out(ctx, m.target, f.max_degree());
    for (auto& [s, c] : cur) out.add_unchecked(Word(m.target, s), c);
    return out;
}

inline LetterMorphism identity_morphism(int N, Alphabet a)
{
    LetterMorphism m{a, a, N, std::vector<std::vector<LetterMorphism::Image>>(N + 1)};
    for (int c = 0; c <= N; ++c) m.images[c] = {{c, 1, 0}};
    return m;
}

// F(xt) = x0, F(xt_a) = sum_m zeta^{-m a} x_m.
inline LetterMorphism morphism_F(int N)
{
    LetterMorphism m{Alphabet::Xt, Alphabet::X, N, std::vector<std::vector<LetterMorphism::Image>>(N + 1)};
    m.images[0] = {{0, 1, 0}};
    for (int a = 1; a <= N; ++a)
        for (int k = 1; k <= N; ++k) m.images[a].push_back({k, 1, -static_cast<long long>(k) * a});
    return m;
}

// F^{-1}(x0) = xt, F^{-1}(x_m) = (1/N) sum_a zeta^{a m} xt_a.
inline LetterMorphism morphism_F_inv(int N)
{
    LetterMorphism m{Alphabet::X, Alphabet::Xt, N, std::vector<std::vector<LetterMorphism::Image>>(N + 1)};
    m.images[0] = {{0, 1, 0}};
    for (int k = 1; k <= N; ++k)
        for (int a = 1; a <= N; ++a) m.images[k].push_back({a, mpq_class(1, N), static_cast<long long>(a) * k});
    return m;
}

inline LetterMorphism morphism_t_zeta(int N, int shift)
{
    LetterMorphism m = identity_morphism(N, Alphabet::X);
    for (int c = 1; c <= N; ++c) m.images[c] = {{iota_inv(c + shift, N), 1, 0}};
    return m;
}

inline LetterMorphism morphism_t_tilde(int N, int a)
{
    LetterMorphism m = identity_morphism(N, Alphabet::Xt);
    for (int c = 1; c <= N; ++c) m.images[c] = {{c, 1, static_cast<long long>(a) * c}};
    return m;
}

inline LetterMorphism morphism_delta(int N, Alphabet alph, int gamma)
{
    if (std::gcd(mod_residue(gamma, N), N) != 1) throw DomainError("delta: gamma must be a unit mod N");
    LetterMorphism m = identity_morphism(N, alph);
    for (int c = 1; c <= N; ++c) m.images[c] = {{iota_inv(static_cast<long long>(gamma) * c, N), 1, 0}};
    return m;
}

// Words ending in the zero letter are killed.
inline Series proj_Y(const Series& f)
{
    Series out(f.context(), f.alphabet(), f.max_degree());
    for (const auto& [w, c] : f.terms())
        if (in_Y(w)) out.add_unchecked(w, c);
    return out;
}

template <class Fn>
Series map_words(const Series& f, Fn fn)
{
    Series out(f.context(), f.alphabet(), f.max_degree());
    for (const auto& [w, c] : f.terms()) out.add_unchecked(fn(w), c);
    return out;
}

// Root letters (m_1..m_r) -> partial sums (m_1, m_1+m_2, ...).
inline Word p_word(const Word& w, int N)
{
    Word r = w;
    long long acc = 0;
    for (int i = 0; i < w.degree(); ++i) {
        if (w[i] == 0) continue;
        acc += w[i];
        r.set(i, iota_inv(acc, N));
    }
    return r;
}

// Consecutive differences (n_1, n_2 - n_1, ...).
inline Word p_inv_word(const Word& w, int N)
{
    Word r = w;
    long long prev = 0;
    for (int i = 0; i < w.degree(); ++i) {
        if (w[i] == 0) continue;
        r.set(i, iota_inv(w[i] - prev, N));
        prev = w[i];
    }
    return r;
}

// (a_1..a_r) -> (a_1 - a_2, ..., a_{r-1} - a_r, a_r).
inline Word q_word(const Word& w, int N)
{
    Word r = w;
    int last = -1;
    for (int i = w.degree() - 1; i >= 0; --i) {
        if (w[i] == 0) continue;
        if (last >= 0) r.set(i, iota_inv(w[i] + detail::qt_sign * static_cast<long long>(w[last]), N));
        last = i;
    }
    return r;
}

// Suffix sums a_i + ... + a_r.
inline Word q_inv_word(const Word& w, int N)
{
    Word r = w;
    long long acc = 0;
    for (int i = w.degree() - 1; i >= 0; --i) {
        if (w[i] == 0) continue;
        acc += w[i];
        r.set(i, iota_inv(acc, N));
    }
    return r;
}

inline Series map_p(const Series& f, bool inverse = false)
{
    if (f.alphabet() != Alphabet::X) throw ContextMismatch("map_p expects alphabet X");
    const int N = f.level();
    return inverse ? map_words(f, [N](const Word& w) { return p_inv_word(w, N); })
                   : map_words(f, [N](const Word& w) { return p_word(w, N); });
}

inline Series map_q(const Series& f, bool inverse = false)
{
    if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("map_q expects alphabet Xt");
    const int N = f.level();
    return inverse ? map_words(f, [N](const Word& w) { return q_inv_word(w, N); })
                   : map_words(f, [N](const Word& w) { return q_word(w, N); });
}

inline Series map_t_zeta(const Series& f, int shift)
{
    return apply_morphism(morphism_t_zeta(f.level(), shift), f);
}

inline Series map_t_tilde(const Series& f, int a)
{
    return apply_morphism(morphism_t_tilde(f.level(), a), f);
}

// T_a = (1/N) sum_m zeta^{-m a} t_m, evaluated as written.
inline Series map_T(const Series& f, int a)
{
    if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("map_T expects alphabet Xt");
    const CycContext& ctx = f.context();
    const int N = ctx.N;
    Series out(ctx, Alphabet::Xt, f.max_degree());
    for (int m = 1; m <= N; ++m) {
        CycNum w = zeta_power(ctx, detail::ta_sign * static_cast<long long>(m) * a);
        w *= mpq_class(1, N);
        out += map_t_tilde(f, m) * w;
    }
    return out;
}

inline Series map_F(const Series& f) { return apply_morphism(morphism_F(f.level()), f); }
inline Series map_F_inv(const Series& f) { return apply_morphism(morphism_F_inv(f.level()), f); }

inline Series map_F_Y(const Series& f)
{
    if (!f.supported_on_Y()) throw NotInYError("F_Y: input not supported on Yt");
    return map_F(f);
}

inline Series map_F_Y_inv(const Series& f)
{
    if (!f.supported_on_Y()) throw NotInYError("F_Y^{-1}: input not supported on Y");
    return map_F_inv(f);
}

inline Series map_delta(const Series& f, int gamma)
{
    if (f.alphabet() != Alphabet::X) throw ContextMismatch("delta expects alphabet X");
    return apply_morphism(morphism_delta(f.level(), Alphabet::X, gamma), f);
}

inline Series map_delta_tilde(const Series& f, int gamma)
{
    if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("delta_tilde expects alphabet Xt");
    return apply_morphism(morphism_delta(f.level(), Alphabet::Xt, gamma), f);
}

enum class GaloisVariant { Delta, DeltaTilde, CoeffOnly };

// sigma on coefficients, combined with delta_k (resp. delta_tilde_k) on words.
inline Series galois_act(const Series& f, GaloisElement s, GaloisVariant v)
{
    const CycContext& ctx = f.context();
    Series coeffs(ctx, f.alphabet(), f.max_degree());
    for (const auto& [w, c] : f.terms()) coeffs.add_unchecked(w, galois_apply(ctx, s, c));
    switch (v) {
    case GaloisVariant::CoeffOnly: return coeffs;
    case GaloisVariant::Delta: return map_delta(coeffs, s.k);
    case GaloisVariant::DeltaTilde: return map_delta_tilde(coeffs, s.k);
    }
    return coeffs;
}

enum class MapId {
    ProjY, P, Pinv, Qt, Qtinv, Tzeta, Tta, TTa, F, Finv, FY, FYinv,
    Delta, DeltaTilde, GaloisDelta, GaloisDeltaTilde, SigmaCoeff
};

struct MapDescriptor {
    MapId id = MapId::ProjY;
    int param = 0;
};

inline const std::vector<std::pair<std::string, MapId>>& map_names()
{
    static const std::vector<std::pair<std::string, MapId>> names = {
        {"ProjY", MapId::ProjY}, {"P", MapId::P}, {"Pinv", MapId::Pinv}, {"Qt", MapId::Qt},
        {"Qtinv", MapId::Qtinv}, {"Tzeta", MapId::Tzeta}, {"Tta", MapId::Tta}, {"TTa", MapId::TTa},
        {"F", MapId::F}, {"Finv", MapId::Finv}, {"FY", MapId::FY}, {"FYinv", MapId::FYinv},
        {"Delta", MapId::Delta}, {"DeltaTilde", MapId::DeltaTilde}, {"GaloisDelta", MapId::GaloisDelta},
        {"GaloisDeltaTilde", MapId::GaloisDeltaTilde}, {"SigmaCoeff", MapId::SigmaCoeff}};
    return names;
}

inline bool map_takes_param(MapId id)
{
    switch (id) {
    case MapId::Tzeta: case MapId::Tta: case MapId::TTa: case MapId::Delta: case MapId::DeltaTilde:
    case MapId::GaloisDelta: case MapId::GaloisDeltaTilde: case MapId::SigmaCoeff:
        return true;
    default:
        return false;
    }
}

inline Series apply_map(const MapDescriptor& d, const Series& f)
{
    const int N = f.level();
    if (map_takes_param(d.id) && (d.param < 1 || d.param > N))
        throw DomainError("map parameter must lie in [1, N]");
    switch (d.id) {
    case MapId::ProjY: return proj_Y(f);
    case MapId::P: return map_p(f, false);
    case MapId::Pinv: return map_p(f, true);
    case MapId::Qt: return map_q(f, false);
    case MapId::Qtinv: return map_q(f, true);
    case MapId::Tzeta:
        if (f.alphabet() != Alphabet::X) throw ContextMismatch("Tzeta expects alphabet X");
        return map_t_zeta(f, d.param);
    case MapId::Tta:
        if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("Tta expects alphabet Xt");
        return map_t_tilde(f, d.param);
    case MapId::TTa: return map_T(f, d.param);
    case MapId::F:
        if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("F expects alphabet Xt");
        return map_F(f);
    case MapId::Finv:
        if (f.alphabet() != Alphabet::X) throw ContextMismatch("Finv expects alphabet X");
        return map_F_inv(f);
    case MapId::FY:
        if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("FY expects alphabet Xt");
        return map_F_Y(f);
    case MapId::FYinv:
        if (f.alphabet() != Alphabet::X) throw ContextMismatch("FYinv expects alphabet X");
        return map_F_Y_inv(f);
    case MapId::Delta: return map_delta(f, d.param);
    case MapId::DeltaTilde: return map_delta_tilde(f, d.param);
    case MapId::GaloisDelta:
        if (f.alphabet() != Alphabet::X) throw ContextMismatch("GaloisDelta expects alphabet X");
        return galois_act(f, galois_element(f.context(), d.param), GaloisVariant::Delta);
    case MapId::GaloisDeltaTilde:
        if (f.alphabet() != Alphabet::Xt) throw ContextMismatch("GaloisDeltaTilde expects alphabet Xt");
        return galois_act(f, galois_element(f.context(), d.param), GaloisVariant::DeltaTilde);
    case MapId::SigmaCoeff: return galois_act(f, galois_element(f.context(), d.param), GaloisVariant::CoeffOnly);
    }
    return f;
}

} // namespace cdsl
