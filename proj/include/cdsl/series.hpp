#pragma once

// Degree-truncated noncommutative series with coefficients in Q(mu_N).

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdsl/cyclo.hpp"
#include "cdsl/words.hpp"

namespace cdsl {

class Series {
public:
    using Terms = std::unordered_map<Word, CycNum, WordHash>;

    Series(const CycContext& ctx, Alphabet a, int max_degree) : ctx_(&ctx), alphabet_(a), D_(max_degree)
    {
        if (max_degree < 0) throw DomainError("Series: negative truncation degree");
    }

    static Series monomial(const CycContext& ctx, Alphabet a, int D, const Word& w, const CycNum& c)
    {
        Series s(ctx, a, D);
        s.add_term(w, c);
        return s;
    }
    static Series monomial(const CycContext& ctx, Alphabet a, int D, const Word& w,
                           const mpq_class& q = 1)
    {
        return monomial(ctx, a, D, w, CycNum(ctx, q));
    }
    static Series constant(const CycContext& ctx, Alphabet a, int D, const mpq_class& q)
    {
        return monomial(ctx, a, D, Word(a), q);
    }

    const CycContext& context() const { return *ctx_; }
    int level() const { return ctx_->N; }
    Alphabet alphabet() const { return alphabet_; }
    int max_degree() const { return D_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Words of degree > D are dropped silently (truncation).
    void add_term(const Word& w, const CycNum& c)
    {
        if (w.degree() > D_) return;
        check_word(w);
        if (c.context_ptr() != ctx_) throw ContextMismatch("Series: coefficient at wrong level");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_term(const Word& w, const mpq_class& q) { add_term(w, CycNum(*ctx_, q)); }

    // Same as add_term but for hot loops that already validated the word.
    void add_unchecked(const Word& w, const CycNum& c)
    {
        if (w.degree() > D_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CycNum coefficient(const Word& w) const
    {
        if (w.degree() > D_)
            throw TruncationError("coefficient of " + w.to_string() + " beyond truncation degree " +
                                  std::to_string(D_));
        if (w.alphabet() != alphabet_) throw ContextMismatch("pairing across alphabets");
        auto it = terms_.find(w);
        return it == terms_.end() ? CycNum(*ctx_) : it->second;
    }

    bool is_rational() const
    {
        for (const auto& [w, c] : terms_)
            if (!c.is_rational()) return false;
        return true;
    }

    bool supported_on_Y() const
    {
        for (const auto& [w, c] : terms_)
            if (!in_Y(w)) return false;
        return true;
    }

    Series truncated(int D) const
    {
        Series r(*ctx_, alphabet_, D);
        for (const auto& [w, c] : terms_)
            if (w.degree() <= D) r.terms_.emplace(w, c);
        return r;
    }

    Series homogeneous_part(int d) const
    {
        Series r(*ctx_, alphabet_, D_);
        for (const auto& [w, c] : terms_)
            if (w.degree() == d) r.terms_.emplace(w, c);
        return r;
    }

    std::vector<std::pair<Word, CycNum>> sorted_terms() const
    {
        std::vector<std::pair<Word, CycNum>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    Series& operator+=(const Series& o)
    {
        check_compatible(o);
        D_ = std::min(D_, o.D_);
        drop_above(D_);
        for (const auto& [w, c] : o.terms_) add_unchecked(w, c);
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        check_compatible(o);
        D_ = std::min(D_, o.D_);
        drop_above(D_);
        for (const auto& [w, c] : o.terms_) add_unchecked(w, -c);
        return *this;
    }
    Series& operator*=(const CycNum& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, x] : terms_) x *= c;
        return *this;
    }
    Series& operator*=(const mpq_class& q)
    {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, x] : terms_) x *= q;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const CycNum& c) { return a *= c; }
    friend Series operator*(const CycNum& c, Series a) { return a *= c; }
    friend Series operator*(Series a, const mpq_class& q) { return a *= q; }
    friend Series operator*(const mpq_class& q, Series a) { return a *= q; }
    Series operator-() const
    {
        Series r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    // Concatenation product, truncated at the smaller degree bound.
    friend Series operator*(const Series& f, const Series& g)
    {
        f.check_compatible(g);
        Series r(*f.ctx_, f.alphabet_, std::min(f.D_, g.D_));
        for (const auto& [u, a] : f.terms_) {
            if (u.degree() > r.D_) continue;
            for (const auto& [v, b] : g.terms_) {
                if (u.degree() + v.degree() > r.D_) continue;
                r.add_unchecked(u * v, a * b);
            }
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b)
    {
        if (a.ctx_ != b.ctx_ || a.alphabet_ != b.alphabet_ || a.D_ != b.D_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (const auto& [w, c] : a.terms_) {
            auto it = b.terms_.find(w);
            if (it == b.terms_.end() || it->second != c) return false;
        }
        return true;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    void check_compatible(const Series& o) const
    {
        if (ctx_ != o.ctx_) throw ContextMismatch("Series: different levels");
        if (alphabet_ != o.alphabet_) throw ContextMismatch("Series: different alphabets");
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& [w, c] : sorted_terms()) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*[" + w.to_string() + "]";
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_word(const Word& w) const
    {
        if (w.alphabet() != alphabet_) throw ContextMismatch("Series: word from another alphabet");
        for (int i = 0; i < w.degree(); ++i)
            if (w[i] > ctx_->N) throw DomainError("Series: letter code exceeds N");
    }
    void drop_above(int D)
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->first.degree() > D ? terms_.erase(it) : std::next(it);
    }

    const CycContext* ctx_;
    Alphabet alphabet_;
    int D_;
    Terms terms_;
};

inline CycNum pairing(const Series& f, const Word& w) { return f.coefficient(w); }

inline Series commutator(const Series& f, const Series& g) { return f * g - g * f; }

// Letter as a series: x_code.
inline Series letter(const CycContext& ctx, Alphabet a, int D, int code)
{
    return Series::monomial(ctx, a, D, Word(a, {code}));
}

struct PairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept
    {
        WordHash h;
        return h(p.first) * 1000003u ^ h(p.second);
    }
};

// Sparse element of the completed tensor square; deg u + deg v <= D.
class TensorSeries {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::unordered_map<Key, CycNum, PairHash>;

    TensorSeries(const CycContext& ctx, Alphabet a, int D) : ctx_(&ctx), alphabet_(a), D_(D) {}

    const CycContext& context() const { return *ctx_; }
    Alphabet alphabet() const { return alphabet_; }
    int max_degree() const { return D_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& u, const Word& v, const CycNum& c)
    {
        if (u.degree() + v.degree() > D_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{u, v}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CycNum coefficient(const Word& u, const Word& v) const
    {
        if (u.degree() + v.degree() > D_) throw TruncationError("tensor coefficient beyond truncation");
        auto it = terms_.find(Key{u, v});
        return it == terms_.end() ? CycNum(*ctx_) : it->second;
    }

    std::vector<std::pair<Key, CycNum>> sorted_terms() const
    {
        std::vector<std::pair<Key, CycNum>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    friend bool operator==(const TensorSeries& a, const TensorSeries& b)
    {
        if (a.ctx_ != b.ctx_ || a.alphabet_ != b.alphabet_ || a.D_ != b.D_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (const auto& [k, c] : a.terms_) {
            auto it = b.terms_.find(k);
            if (it == b.terms_.end() || it->second != c) return false;
        }
        return true;
    }

private:
    const CycContext* ctx_;
    Alphabet alphabet_;
    int D_;
    Terms terms_;
};

struct RandomSeriesOptions {
    bool rational = true;
    // Probability that a given word receives a nonzero coefficient.
    double density = 0.1;
    bool zero_constant_term = true;
    int min_degree = 0;
    // Restrict the support to Y (resp. Yt) words.
    bool y_supported = false;
};

// Deterministic for a fixed seed; uses raw engine output so results do not depend
// on the standard library's distribution implementations.
inline Series random_series(const CycContext& ctx, Alphabet a, int D, std::uint64_t seed,
                            const RandomSeriesOptions& opt = {})
{
    std::mt19937_64 rng(seed);
    const std::uint64_t threshold =
        opt.density >= 1.0 ? ~std::uint64_t{0}
                           : static_cast<std::uint64_t>(opt.density * 18446744073709551615.0);
    auto small = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    Series s(ctx, a, D);
    if (opt.density <= 0) return s;
    for (int d = std::max(opt.min_degree, opt.zero_constant_term ? 1 : 0); d <= D; ++d) {
        for (const Word& w : enumerate_words(a, ctx.N, d)) {
            if (opt.y_supported && !in_Y(w)) continue;
            if (rng() > threshold) continue;
            std::vector<mpq_class> c(ctx.phi, 0);
            const int slots = opt.rational ? 1 : ctx.phi;
            for (int i = 0; i < slots; ++i) {
                int num = small(-5, 5);
                int den = small(1, 4);
                c[i] = mpq_class(num, den);
            }
            if (opt.rational && c[0] == 0) c[0] = 1;
            s.add_term(w, CycNum(ctx, std::move(c)));
        }
    }
    return s;
}

} // namespace cdsl
