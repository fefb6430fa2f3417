#include "test_util.hpp"

using namespace cdsl;
using namespace cdsl::testing;

namespace {

ParseErrorKind parse_kind(const std::string& text)
{
    try {
        deserialize_series(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return ParseErrorKind::malformed_json;
}

} // namespace

TEST(Io, RoundTripRandomSeries)
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        const int N = 3 + static_cast<int>(s % 4);
        const Alphabet A = s % 2 ? Alphabet::X : Alphabet::Xt;
        Series f = rnd(N, A, 3, s, {.rational = s % 3 != 0, .density = 0.2, .zero_constant_term = s % 5 != 0});
        const std::string text = serialize(f);
        Series g = deserialize_series(text);
        EXPECT_EQ(f, g);
        EXPECT_EQ(g.max_degree(), 3);
        EXPECT_EQ(g.alphabet(), A);
        EXPECT_EQ(serialize(g), text);
    }
}

TEST(Io, RoundTripTensor)
{
    Series f = rnd(3, Alphabet::X, 3, 8, {.density = 0.4});
    TensorSeries t = coproduct(f, ProductKind::ShuffleX);
    EXPECT_EQ(deserialize_tensor(serialize(t)), t);
}

TEST(Io, Format)
{
    Series f = build(3, Alphabet::X, 2, {{{0, 3}, mpq_class(1, 2)}});
    EXPECT_EQ(serialize(f),
              R"({"N":3,"alphabet":"X","max_degree":2,"rational":true,"terms":[{"word":[0,3],"coeff":["1/2","0"]}]})");
}

TEST(Io, AcceptsIntegerCoefficients)
{
    Series f = deserialize_series(R"({"N":3,"alphabet":"Xt","max_degree":1,"terms":[{"word":[1],"coeff":[2,"-1/3"]}]})");
    EXPECT_EQ(f.coefficient(Xt({1})), q(3, 2) + zeta(3, 1) * mpq_class(-1, 3));
}

TEST(Io, ParseErrors)
{
    EXPECT_EQ(parse_kind("{not json"), ParseErrorKind::malformed_json);
    EXPECT_EQ(parse_kind(R"({"alphabet":"X","max_degree":1,"terms":[]})"), ParseErrorKind::missing_field);
    EXPECT_EQ(parse_kind(R"({"N":3,"alphabet":"Z","max_degree":1,"terms":[]})"), ParseErrorKind::unknown_alphabet);
    EXPECT_EQ(parse_kind(R"({"N":2,"alphabet":"X","max_degree":1,"terms":[]})"), ParseErrorKind::bad_level);
    EXPECT_EQ(parse_kind(R"({"N":61,"alphabet":"X","max_degree":1,"terms":[]})"), ParseErrorKind::bad_level);
    EXPECT_EQ(parse_kind(R"({"N":3,"alphabet":"X","max_degree":1,"terms":[{"word":[4],"coeff":["1","0"]}]})"),
              ParseErrorKind::letter_out_of_range);
    EXPECT_EQ(parse_kind(R"({"N":3,"alphabet":"X","max_degree":1,"terms":[{"word":[1],"coeff":["1"]}]})"),
              ParseErrorKind::coefficient_length);
    EXPECT_EQ(parse_kind(R"({"N":3,"alphabet":"X","max_degree":1,"terms":[{"word":[1],"coeff":["1/0","0"]}]})"),
              ParseErrorKind::bad_rational);
    EXPECT_EQ(parse_kind(R"({"N":3,"alphabet":"X","max_degree":1,"terms":[{"word":[1],"coeff":["1.5","0"]}]})"),
              ParseErrorKind::bad_rational);
    EXPECT_EQ(parse_kind(R"({"N":3,"alphabet":"X","max_degree":1,"terms":[{"word":[1,1],"coeff":["1","0"]}]})"),
              ParseErrorKind::letter_out_of_range);
}
