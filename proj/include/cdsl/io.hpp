#pragma once

// JSON encoding of Series and TensorSeries.
//
//   {"N":3,"alphabet":"X","max_degree":4,"rational":true,
//    "terms":[{"word":[0,1],"coeff":["1/2","0"]}]}
//
// Terms are written in word order so that output is deterministic.

#include <string>

#include <json.hpp>

#include "cdsl/series.hpp"

namespace cdsl {

using json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

inline json cycnum_to_json(const CycNum& c)
{
    json a = json::array();
    for (const auto& q : c.coeffs()) a.push_back(rational_to_string(q));
    return a;
}

inline json word_to_json(const Word& w)
{
    json a = json::array();
    for (int i = 0; i < w.degree(); ++i) a.push_back(w[i]);
    return a;
}

inline json to_json(const Series& f)
{
    json j;
    j["N"] = f.level();
    j["alphabet"] = alphabet_tag(f.alphabet());
    j["max_degree"] = f.max_degree();
    j["rational"] = f.is_rational();
    json terms = json::array();
    for (const auto& [w, c] : f.sorted_terms()) terms.push_back({{"word", word_to_json(w)}, {"coeff", cycnum_to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

inline json to_json(const TensorSeries& t)
{
    json j;
    j["N"] = t.context().N;
    j["alphabet"] = alphabet_tag(t.alphabet());
    j["max_degree"] = t.max_degree();
    json terms = json::array();
    for (const auto& [k, c] : t.sorted_terms())
        terms.push_back({{"left", word_to_json(k.first)}, {"right", word_to_json(k.second)}, {"coeff", cycnum_to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

inline std::string serialize(const Series& f) { return to_json(f).dump(); }
inline std::string serialize(const TensorSeries& t) { return to_json(t).dump(); }

namespace detail {

inline const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw ParseError(ParseErrorKind::missing_field, name);
    return j.at(name);
}

inline mpq_class parse_rational(const json& j)
{
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw ParseError(ParseErrorKind::bad_rational, "coefficient entries must be strings");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    auto digits = [](const std::string& t, bool sign) {
        std::size_t i = (sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) throw ParseError(ParseErrorKind::bad_rational, "'" + s + "'");
    mpq_class q;
    q.get_num() = mpz_class(num[0] == '+' ? num.substr(1) : num);
    q.get_den() = mpz_class(den);
    if (q.get_den() == 0) throw ParseError(ParseErrorKind::bad_rational, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline CycNum parse_cycnum(const CycContext& ctx, const json& j)
{
    if (!j.is_array()) throw ParseError(ParseErrorKind::coefficient_length, "coeff must be an array");
    if (static_cast<int>(j.size()) != ctx.phi)
        throw ParseError(ParseErrorKind::coefficient_length,
                         "expected " + std::to_string(ctx.phi) + " entries, got " + std::to_string(j.size()));
    std::vector<mpq_class> c;
    for (const auto& e : j) c.push_back(parse_rational(e));
    return CycNum(ctx, std::move(c));
}

inline Word parse_word(Alphabet a, int N, const json& j)
{
    if (!j.is_array()) throw ParseError(ParseErrorKind::letter_out_of_range, "word must be an integer array");
    Word w(a);
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(ParseErrorKind::letter_out_of_range, "letters must be integers");
        const long v = e.get<long>();
        if (v < 0 || v > N) throw ParseError(ParseErrorKind::letter_out_of_range, std::to_string(v));
        w.push_back(static_cast<int>(v));
    }
    return w;
}

struct Header {
    const CycContext* ctx;
    Alphabet alphabet;
    int D;
};

inline Header parse_header(const json& j)
{
    const json& n = field(j, "N");
    if (!n.is_number_integer() || n.get<long>() < 3 || n.get<long>() > max_level)
        throw ParseError(ParseErrorKind::bad_level, n.dump());
    const json& a = field(j, "alphabet");
    Alphabet alph;
    if (a == "X") alph = Alphabet::X;
    else if (a == "Xt") alph = Alphabet::Xt;
    else throw ParseError(ParseErrorKind::unknown_alphabet, a.dump());
    const json& d = field(j, "max_degree");
    if (!d.is_number_integer() || d.get<long>() < 0) throw ParseError(ParseErrorKind::missing_field, "max_degree");
    return {&cyclotomic_context(n.get<int>()), alph, d.get<int>()};
}

inline json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorKind::malformed_json, e.what());
    }
}

} // namespace detail

inline Series series_from_json(const json& j)
{
    const auto h = detail::parse_header(j);
    Series f(*h.ctx, h.alphabet, h.D);
    const json& terms = detail::field(j, "terms");
    if (!terms.is_array()) throw ParseError(ParseErrorKind::missing_field, "terms must be an array");
    for (const auto& t : terms) {
        Word w = detail::parse_word(h.alphabet, h.ctx->N, detail::field(t, "word"));
        if (w.degree() > h.D) throw ParseError(ParseErrorKind::letter_out_of_range, "word longer than max_degree");
        f.add_term(w, detail::parse_cycnum(*h.ctx, detail::field(t, "coeff")));
    }
    return f;
}

inline TensorSeries tensor_from_json(const json& j)
{
    const auto h = detail::parse_header(j);
    TensorSeries f(*h.ctx, h.alphabet, h.D);
    const json& terms = detail::field(j, "terms");
    if (!terms.is_array()) throw ParseError(ParseErrorKind::missing_field, "terms must be an array");
    for (const auto& t : terms) {
        Word u = detail::parse_word(h.alphabet, h.ctx->N, detail::field(t, "left"));
        Word v = detail::parse_word(h.alphabet, h.ctx->N, detail::field(t, "right"));
        if (u.degree() + v.degree() > h.D)
            throw ParseError(ParseErrorKind::letter_out_of_range, "tensor term longer than max_degree");
        f.add_term(u, v, detail::parse_cycnum(*h.ctx, detail::field(t, "coeff")));
    }
    return f;
}

inline Series deserialize_series(const std::string& text) { return series_from_json(detail::parse_text(text)); }
inline TensorSeries deserialize_tensor(const std::string& text) { return tensor_from_json(detail::parse_text(text)); }

} // namespace cdsl
