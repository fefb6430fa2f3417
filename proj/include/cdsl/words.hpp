#pragma once

// Words over X = {x0, x_{zeta^m}} and Xt = {xt, xt_alpha}.
//
// Letter codes: 0 is x0 (resp. xt); m in [1, N] is x_{zeta^m} (resp. xt_{iota(m)}).
// Code N stands for x_1 and for the class of 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "cdsl/cyclo.hpp"
#include "cdsl/error.hpp"

namespace cdsl {

enum class Alphabet : std::uint8_t { X, Xt };

inline const char* alphabet_tag(Alphabet a) { return a == Alphabet::X ? "X" : "Xt"; }

// Representative of a residue in [1, N].
inline int iota_inv(long long a, int N)
{
    int r = mod_residue(a, N);
    return r == 0 ? N : r;
}

class Word {
public:
    Word() = default;
    explicit Word(Alphabet a) : alphabet_(a) {}
    Word(Alphabet a, std::initializer_list<int> codes) : alphabet_(a)
    {
        for (int c : codes) push_back(c);
    }
    Word(Alphabet a, const std::vector<int>& codes) : alphabet_(a)
    {
        for (int c : codes) push_back(c);
    }
    Word(Alphabet a, std::string raw) : alphabet_(a), letters_(std::move(raw)) {}

    Alphabet alphabet() const { return alphabet_; }
    int degree() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
    int back() const { return static_cast<unsigned char>(letters_.back()); }
    const std::string& raw() const { return letters_; }

    void push_back(int code)
    {
        if (code < 0 || code > max_level) throw DomainError("letter code out of range");
        letters_.push_back(static_cast<char>(code));
    }
    void set(std::size_t i, int code) { letters_[i] = static_cast<char>(code); }

    Word subword(std::size_t pos, std::size_t len = std::string::npos) const
    {
        return Word(alphabet_, letters_.substr(pos, len));
    }

    std::vector<int> codes() const
    {
        std::vector<int> v;
        v.reserve(letters_.size());
        for (std::size_t i = 0; i < letters_.size(); ++i) v.push_back((*this)[i]);
        return v;
    }

    // Number of root (non-zero) letters.
    int depth() const
    {
        int r = 0;
        for (char c : letters_) r += (c != 0);
        return r;
    }

    friend Word operator*(const Word& u, const Word& v)
    {
        if (u.alphabet_ != v.alphabet_) throw ContextMismatch("concatenation across alphabets");
        return Word(u.alphabet_, u.letters_ + v.letters_);
    }

    friend bool operator==(const Word&, const Word&) = default;

    // Alphabet, then degree, then lexicographic by code.
    friend std::strong_ordering operator<=>(const Word& u, const Word& v)
    {
        if (u.alphabet_ != v.alphabet_) return u.alphabet_ <=> v.alphabet_;
        if (u.letters_.size() != v.letters_.size()) return u.letters_.size() <=> v.letters_.size();
        int c = u.letters_.compare(v.letters_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const
    {
        if (empty()) return "1";
        const char* z = alphabet_ == Alphabet::X ? "x" : "xt";
        std::string s;
        for (int i = 0; i < degree(); ++i) {
            if (i) s += ' ';
            s += z;
            if ((*this)[i] != 0) s += std::to_string((*this)[i]);
            else if (alphabet_ == Alphabet::X) s += '0';
        }
        return s;
    }

private:
    Alphabet alphabet_ = Alphabet::X;
    std::string letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept
    {
        return std::hash<std::string>{}(w.raw()) * 31u + static_cast<std::size_t>(w.alphabet());
    }
};

inline Word word_power(Alphabet a, int code, int n)
{
    Word w(a);
    for (int i = 0; i < n; ++i) w.push_back(code);
    return w;
}

// y_{k,m} <-> x0^{k-1} x_m (and the Yt analogue).
struct YLetter {
    int k = 1;
    int m = 1;
    friend bool operator==(const YLetter&, const YLetter&) = default;
    friend auto operator<=>(const YLetter&, const YLetter&) = default;
};

struct YWord {
    Alphabet alphabet = Alphabet::X;
    std::vector<YLetter> letters;

    YWord() = default;
    YWord(Alphabet a, std::vector<YLetter> l) : alphabet(a), letters(std::move(l)) {}

    int weight() const
    {
        int w = 0;
        for (auto& l : letters) w += l.k;
        return w;
    }
    friend bool operator==(const YWord&, const YWord&) = default;
    friend auto operator<=>(const YWord&, const YWord&) = default;
};

inline Word y_embed(const YWord& y)
{
    Word w(y.alphabet);
    for (const auto& l : y.letters) {
        if (l.k < 1 || l.m < 1) throw DomainError("y_embed: invalid Y letter");
        for (int i = 1; i < l.k; ++i) w.push_back(0);
        w.push_back(l.m);
    }
    return w;
}

inline bool in_Y(const Word& w) { return w.empty() || w.back() != 0; }

inline YWord y_factor(const Word& w)
{
    if (!in_Y(w)) throw NotInYError("word " + w.to_string() + " ends in the zero letter");
    YWord y(w.alphabet(), {});
    int k = 1;
    for (int i = 0; i < w.degree(); ++i) {
        if (w[i] == 0) {
            ++k;
        } else {
            y.letters.push_back({k, w[i]});
            k = 1;
        }
    }
    return y;
}

inline constexpr std::size_t default_word_cap = std::size_t{1} << 21;

inline std::size_t word_count(int N, int degree)
{
    std::size_t n = 1;
    for (int i = 0; i < degree; ++i) {
        n *= static_cast<std::size_t>(N + 1);
        if (n > (std::size_t{1} << 40)) break;
    }
    return n;
}

// All words of the given degree, lexicographic with the zero letter first.
inline std::vector<Word> enumerate_words(Alphabet a, int N, int degree, std::size_t cap = default_word_cap)
{
    if (degree < 0) throw DomainError("enumerate_words: negative degree");
    const std::size_t total = word_count(N, degree);
    if (total > cap)
        throw ResourceError("enumerate_words: " + std::to_string(total) + " words exceed cap " +
                            std::to_string(cap));
    std::vector<Word> out;
    out.reserve(total);
    std::string cur(degree, 0);
    while (true) {
        out.emplace_back(a, cur);
        int i = degree - 1;
        while (i >= 0 && cur[i] == N) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

inline std::vector<Word> enumerate_words_up_to(Alphabet a, int N, int max_degree,
                                               std::size_t cap = default_word_cap)
{
    std::vector<Word> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto part = enumerate_words(a, N, d, cap);
        if (out.size() + part.size() > cap) throw ResourceError("enumerate_words_up_to: cap exceeded");
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Sum of the class letters, as residues mod N.
inline int word_weight(const Word& w, int N)
{
    long long s = 0;
    for (int i = 0; i < w.degree(); ++i) s += w[i];
    return mod_residue(s, N);
}

} // namespace cdsl
