#include "test_util.hpp"

using namespace cdsl;
using namespace cdsl::testing;

TEST(Maps, ProjY)
{
    EXPECT_TRUE(proj_Y(mono(3, Alphabet::X, 2, X({1, 0}))).is_zero());
    EXPECT_EQ(proj_Y(mono(3, Alphabet::X, 2, X({0, 1}))), mono(3, Alphabet::X, 2, X({0, 1})));
    Series f = build(3, Alphabet::X, 2, {{{}, 1}, {{0}, 1}});
    EXPECT_EQ(proj_Y(f), build(3, Alphabet::X, 2, {{{}, 1}}));
}

TEST(Maps, PartialSums)
{
    EXPECT_EQ(p_word(X({1, 2}), 5), X({1, 3}));
    EXPECT_EQ(p_word(X({0}), 5), X({0}));
    EXPECT_EQ(p_inv_word(X({2, 4}), 5), X({2, 2}));
    EXPECT_EQ(p_word(X({2, 0, 2, 0}), 3), X({2, 0, 1, 0}));
}

TEST(Maps, PartialSumsAreInverse)
{
    for (int N : {3, 4})
        for (const Word& w : enumerate_words_up_to(Alphabet::X, N, 4)) {
            EXPECT_EQ(p_word(p_inv_word(w, N), N), w);
            EXPECT_EQ(p_inv_word(p_word(w, N), N), w);
        }
}

TEST(Maps, TildeDifferences)
{
    const int N = 5;
    EXPECT_EQ(q_word(Xt({4, 1}), N), Xt({3, 1}));
    EXPECT_EQ(q_word(Xt({0}), N), Xt({0}));
    EXPECT_EQ(q_inv_word(Xt({3, 1}), N), Xt({4, 1}));
    EXPECT_EQ(q_word(Xt({1, 0, 3, 0}), N), Xt({3, 0, 3, 0}));
    for (const Word& w : enumerate_words_up_to(Alphabet::Xt, 4, 4)) {
        EXPECT_EQ(q_word(q_inv_word(w, 4), 4), w);
        EXPECT_EQ(q_inv_word(q_word(w, 4), 4), w);
    }
}

TEST(Maps, RootShift)
{
    EXPECT_EQ(map_t_zeta(mono(5, Alphabet::X, 1, X({2})), 4), mono(5, Alphabet::X, 1, X({1})));
    EXPECT_EQ(map_t_zeta(mono(5, Alphabet::X, 1, X({0})), 4), mono(5, Alphabet::X, 1, X({0})));
}

TEST(Maps, TildeTwist)
{
    for (int N : {3, 4, 5})
        for (int a = 1; a <= N; ++a) {
            EXPECT_EQ(map_t_tilde(mono(N, Alphabet::Xt, 1, Xt({0})), a), mono(N, Alphabet::Xt, 1, Xt({0})));
            for (int al = 1; al <= N; ++al)
                EXPECT_EQ(map_t_tilde(mono(N, Alphabet::Xt, 1, Xt({al})), a),
                          mono(N, Alphabet::Xt, 1, Xt({al}), zeta(N, a * al)));
        }
}

TEST(Maps, WeightProjector)
{
    EXPECT_EQ(map_T(mono(3, Alphabet::Xt, 1, Xt({1})), 1), mono(3, Alphabet::Xt, 1, Xt({1})));
    EXPECT_TRUE(map_T(mono(3, Alphabet::Xt, 1, Xt({1})), 2).is_zero());
    // On monomials T_a keeps exactly the words of weight a.
    for (const Word& w : enumerate_words_up_to(Alphabet::Xt, 4, 3))
        for (int a = 1; a <= 4; ++a) {
            Series m = mono(4, Alphabet::Xt, 3, w);
            EXPECT_EQ(map_T(m, a).is_zero(), word_weight(w, 4) != a % 4);
        }
}

TEST(Maps, FOnGenerators)
{
    EXPECT_EQ(map_F(mono(3, Alphabet::Xt, 1, Xt({0}))), mono(3, Alphabet::X, 1, X({0})));
    // The class-zero letter goes to the sum of all root letters.
    EXPECT_EQ(map_F(mono(3, Alphabet::Xt, 1, Xt({3}))), build(3, Alphabet::X, 1, {{{1}, 1}, {{2}, 1}, {{3}, 1}}));
}

TEST(Maps, FIsInvertibleOnBasis)
{
    for (int N : {3, 4})
        for (const Word& w : enumerate_words_up_to(Alphabet::Xt, N, 3)) {
            Series m = mono(N, Alphabet::Xt, 3, w);
            EXPECT_EQ(map_F_inv(map_F(m)), m);
            Series x = mono(N, Alphabet::X, 3, Word(Alphabet::X, w.codes()));
            EXPECT_EQ(map_F(map_F_inv(x)), x);
        }
}

TEST(Maps, FIntertwinesTwists)
{
    for (int N : {3, 5})
        for (std::uint64_t s = 0; s < 5; ++s) {
            Series f = rnd(N, Alphabet::Xt, 3, s, {.rational = false, .density = 0.3});
            for (int a = 1; a <= N; ++a) EXPECT_EQ(map_F(map_t_tilde(f, a)), map_t_zeta(map_F(f), a));
        }
}

TEST(Maps, FYRequiresYSupport)
{
    EXPECT_THROW(map_F_Y(mono(3, Alphabet::Xt, 2, Xt({1, 0}))), NotInYError);
    EXPECT_THROW(map_F_Y_inv(mono(3, Alphabet::X, 2, X({1, 0}))), NotInYError);
    EXPECT_NO_THROW(map_F_Y(mono(3, Alphabet::Xt, 2, Xt({0, 1}))));
}

TEST(Maps, DeltaTilde)
{
    EXPECT_EQ(map_delta_tilde(mono(5, Alphabet::Xt, 1, Xt({2})), 3), mono(5, Alphabet::Xt, 1, Xt({1})));
    EXPECT_THROW(map_delta(mono(6, Alphabet::X, 1, X({1})), 2), DomainError);
}

TEST(Maps, GaloisOnTildeLetters)
{
    const auto& c3 = ctx(3);
    CycNum r = q(3, 2) + zeta(3, 1) * mpq_class(-1, 3);
    GaloisElement s = galois_element(c3, 2);
    for (int a = 1; a <= 3; ++a) {
        Series f = mono(3, Alphabet::Xt, 1, Xt({a}), r);
        EXPECT_EQ(galois_act(f, s, GaloisVariant::DeltaTilde),
                  mono(3, Alphabet::Xt, 1, Xt({iota_inv(2 * a, 3)}), galois_apply(c3, s, r)));
    }
}

TEST(Maps, ApplyMapByName)
{
    Series f = mono(4, Alphabet::Xt, 2, Xt({1, 3}));
    EXPECT_EQ(apply_map({MapId::Qt, 0}, f), map_q(f));
    EXPECT_THROW(apply_map({MapId::TTa, 0}, f), DomainError);
    EXPECT_THROW(apply_map({MapId::P, 0}, f), ContextMismatch);
}
