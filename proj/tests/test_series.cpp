#include "test_util.hpp"

using namespace cdsl;
using namespace cdsl::testing;

TEST(Series, CommutatorWithSelfVanishes)
{
    for (std::uint64_t s = 0; s < 10; ++s) {
        Series f = rnd(3, Alphabet::X, 4, s, {.rational = false, .density = 0.2});
        EXPECT_TRUE(commutator(f, f).is_zero());
    }
}

TEST(Series, ConcatenationOfLetters)
{
    Series f = letter(ctx(3), Alphabet::X, 3, 0) * letter(ctx(3), Alphabet::X, 3, 1);
    EXPECT_EQ(f, mono(3, Alphabet::X, 3, X({0, 1})));
}

TEST(Series, ProductTruncates)
{
    Series a = mono(3, Alphabet::X, 2, X({1, 1}));
    EXPECT_TRUE((a * a).is_zero());
}

TEST(Series, Pairing)
{
    Series f = build(3, Alphabet::X, 2, {{{0, 1}, 1}, {{1, 0}, 2}});
    EXPECT_EQ(pairing(f, X({1, 0})), q(3, 2));
    EXPECT_THROW(pairing(f, X({1, 1, 1})), TruncationError);
}

TEST(Series, PairingAgainstImageOfF)
{
    // (F(xt_a) | x_m) = zeta^{-m a}.
    for (int N : {3, 4, 5})
        for (int a = 1; a <= N; ++a) {
            Series img = map_F(mono(N, Alphabet::Xt, 1, Xt({a})));
            for (int m = 1; m <= N; ++m) EXPECT_EQ(pairing(img, X({m})), zeta(N, -m * a));
        }
    EXPECT_EQ(pairing(map_F(mono(3, Alphabet::Xt, 1, Xt({1}))), X({1})), zeta(3, -1));
}

TEST(Series, RandomIsDeterministic)
{
    for (std::uint64_t s = 0; s < 5; ++s) {
        EXPECT_EQ(rnd(4, Alphabet::Xt, 3, s), rnd(4, Alphabet::Xt, 3, s));
        EXPECT_TRUE(rnd(4, Alphabet::Xt, 3, s).is_rational());
    }
    EXPECT_TRUE(rnd(4, Alphabet::X, 3, 1, {.density = 0}).is_zero());
}

TEST(Series, RandomRespectsOptions)
{
    Series f = rnd(3, Alphabet::X, 3, 11, {.density = 1.0, .zero_constant_term = true, .y_supported = true});
    EXPECT_TRUE(f.supported_on_Y());
    EXPECT_TRUE(f.coefficient(X({})).is_zero());
    EXPECT_FALSE(rnd(3, Alphabet::X, 3, 12, {.rational = false, .density = 1.0}).is_rational());
}

TEST(Series, MismatchedContextsThrow)
{
    Series a = mono(3, Alphabet::X, 2, X({1}));
    Series b = mono(4, Alphabet::X, 2, X({1}));
    Series c = mono(3, Alphabet::Xt, 2, Xt({1}));
    EXPECT_THROW(a + b, ContextMismatch);
    EXPECT_THROW(a * c, ContextMismatch);
}

TEST(Series, AddingTermsCancels)
{
    Series f(ctx(3), Alphabet::X, 2);
    f.add_term(X({1}), mpq_class(1, 2));
    f.add_term(X({1}), mpq_class(-1, 2));
    EXPECT_TRUE(f.is_zero());
    // Terms above the truncation degree are dropped.
    f.add_term(X({1, 1, 1}), mpq_class(1));
    EXPECT_TRUE(f.is_zero());
}

TEST(Series, HomogeneousPartsSum)
{
    Series f = rnd(3, Alphabet::X, 3, 4, {.density = 0.5, .zero_constant_term = false});
    Series g(ctx(3), Alphabet::X, 3);
    for (int d = 0; d <= 3; ++d) g += f.homogeneous_part(d);
    EXPECT_EQ(f, g);
}
