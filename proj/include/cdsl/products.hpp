#pragma once

// Shuffle and harmonic products on words; dual coproducts on truncated series.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cdsl/series.hpp"

namespace cdsl {

enum class ProductKind { ShuffleX, ShuffleXt, HarmonicY, HarmonicYt };

inline Alphabet product_alphabet(ProductKind k)
{
    return (k == ProductKind::ShuffleX || k == ProductKind::HarmonicY) ? Alphabet::X : Alphabet::Xt;
}
inline bool is_harmonic(ProductKind k) { return k == ProductKind::HarmonicY || k == ProductKind::HarmonicYt; }

using WordPoly = std::map<Word, std::int64_t>;
using YPoly = std::map<YWord, std::int64_t>;

// Sum over all interleavings, one per choice of the positions taken by u.
inline WordPoly shuffle(const Word& u, const Word& v)
{
    if (u.alphabet() != v.alphabet()) throw ContextMismatch("shuffle: alphabet mismatch");
    const int a = u.degree(), b = v.degree(), n = a + b;
    if (n > 62) throw ResourceError("shuffle: words too long");
    WordPoly out;
    std::string buf(n, 0);
    // Gosper's hack over n-bit masks with exactly a bits set.
    std::uint64_t mask = a == 0 ? 0 : (std::uint64_t{1} << a) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (true) {
        int iu = 0, iv = 0;
        for (int p = 0; p < n; ++p)
            buf[p] = static_cast<char>((mask >> p) & 1 ? u[iu++] : v[iv++]);
        out[Word(u.alphabet(), buf)] += 1;
        if (a == 0 || a == n) break;
        std::uint64_t c = mask & -mask;
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (mask >= limit) break;
    }
    return out;
}

namespace detail {

inline void harmonic_paths(const YWord& u, const YWord& v, std::size_t i, std::size_t j,
                           std::vector<YLetter>& prefix, bool merge_all, int N, YPoly& out)
{
    if (i == u.letters.size() && j == v.letters.size()) {
        out[YWord(u.alphabet, prefix)] += 1;
        return;
    }
    if (i < u.letters.size()) {
        prefix.push_back(u.letters[i]);
        harmonic_paths(u, v, i + 1, j, prefix, merge_all, N, out);
        prefix.pop_back();
    }
    if (j < v.letters.size()) {
        prefix.push_back(v.letters[j]);
        harmonic_paths(u, v, i, j + 1, prefix, merge_all, N, out);
        prefix.pop_back();
    }
    if (i < u.letters.size() && j < v.letters.size()) {
        const YLetter& p = u.letters[i];
        const YLetter& q = v.letters[j];
        if (merge_all) {
            prefix.push_back({p.k + q.k, iota_inv(p.m + q.m, N)});
        } else if (p.m == q.m) {
            prefix.push_back({p.k + q.k, p.m});
        } else {
            return;
        }
        harmonic_paths(u, v, i + 1, j + 1, prefix, merge_all, N, out);
        prefix.pop_back();
    }
}

} // namespace detail

// Quasi-shuffle: enumerates the lattice paths (take u, take v, merge both).
inline YPoly harmonic(const YWord& u, const YWord& v, ProductKind kind, int N)
{
    if (!is_harmonic(kind)) throw DomainError("harmonic: kind is not harmonic");
    if (u.alphabet != v.alphabet || u.alphabet != product_alphabet(kind))
        throw ContextMismatch("harmonic: kind/alphabet mismatch");
    YPoly out;
    std::vector<YLetter> prefix;
    detail::harmonic_paths(u, v, 0, 0, prefix, kind == ProductKind::HarmonicY, N, out);
    return out;
}

// Product of two X-encoded words; harmonic kinds factor through Y.
inline WordPoly word_product(const Word& u, const Word& v, ProductKind kind, int N)
{
    if (u.alphabet() != product_alphabet(kind) || v.alphabet() != product_alphabet(kind))
        throw ContextMismatch("word_product: kind/alphabet mismatch");
    if (!is_harmonic(kind)) return shuffle(u, v);
    WordPoly out;
    for (const auto& [y, c] : harmonic(y_factor(u), y_factor(v), kind, N)) out[y_embed(y)] += c;
    return out;
}

namespace detail {

// Basis words that may appear as tensor legs, grouped by degree.
inline std::vector<std::vector<Word>> leg_words(ProductKind kind, int N, int D)
{
    std::vector<std::vector<Word>> by_deg(D + 1);
    for (int d = 0; d <= D; ++d)
        for (Word& w : enumerate_words(product_alphabet(kind), N, d))
            if (!is_harmonic(kind) || in_Y(w)) by_deg[d].push_back(std::move(w));
    return by_deg;
}

inline CycNum pair_against(const Series& f, const WordPoly& p)
{
    CycNum acc(f.context());
    for (const auto& [w, c] : p) {
        auto it = f.terms().find(w);
        if (it != f.terms().end()) acc += it->second * mpq_class(c);
    }
    return acc;
}

inline void check_input(const Series& f, ProductKind kind)
{
    if (f.alphabet() != product_alphabet(kind)) throw ContextMismatch("coproduct: alphabet mismatch");
    if (is_harmonic(kind) && !f.supported_on_Y())
        throw NotInYError("harmonic coproduct: series has support outside Y");
}

} // namespace detail

// Entries (f | u . v) for every pair of legs with deg u + deg v <= D.
inline TensorSeries coproduct(const Series& f, ProductKind kind)
{
    detail::check_input(f, kind);
    const int D = f.max_degree();
    const int N = f.level();
    TensorSeries out(f.context(), f.alphabet(), D);
    auto legs = detail::leg_words(kind, N, D);
    for (int s = 0; s <= D; ++s)
        for (int a = 0; a <= s; ++a)
            for (const Word& u : legs[a])
                for (const Word& v : legs[s - a])
                    out.add_term(u, v, detail::pair_against(f, word_product(u, v, kind, N)));
    return out;
}

struct PrimitivityWitness {
    Word left;
    Word right;
    CycNum value;
};

struct PrimitivityResult {
    bool primitive = true;
    std::optional<PrimitivityWitness> witness;
    std::size_t violations = 0;
};

// Reports the first violating pair in (degree, lexicographic) order.
inline PrimitivityResult is_primitive(const Series& f, ProductKind kind)
{
    detail::check_input(f, kind);
    const int D = f.max_degree();
    const int N = f.level();
    PrimitivityResult res;
    if (f.is_zero()) return res;
    auto legs = detail::leg_words(kind, N, D);
    for (int s = 2; s <= D; ++s)
        for (int a = 1; a < s; ++a)
            for (const Word& u : legs[a])
                for (const Word& v : legs[s - a]) {
                    CycNum val = detail::pair_against(f, word_product(u, v, kind, N));
                    if (val.is_zero()) continue;
                    if (!res.witness) res.witness = PrimitivityWitness{u, v, val};
                    res.primitive = false;
                    ++res.violations;
                }
    return res;
}

} // namespace cdsl
