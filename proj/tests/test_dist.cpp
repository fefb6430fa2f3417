#include "test_util.hpp"

using namespace cdsl;
using namespace cdsl::testing;

TEST(Dist, Divisors)
{
    EXPECT_EQ(divisors(6), (std::vector<int>{1, 2, 3, 6}));
    EXPECT_THROW(DivisorContext(6, 4), DomainError);
    DivisorContext dc(4, 2);
    EXPECT_EQ(dc.nu(1), 2);
    EXPECT_EQ(dc.nu_inv(2), 1);
    EXPECT_THROW(dc.nu_inv(1), DomainError);
}

TEST(Dist, PushForward)
{
    DivisorContext dc(4, 2);
    EXPECT_EQ(map_pd_star(mono(4, Alphabet::X, 1, X({1})), dc), mono(4, Alphabet::X, 1, X({2})));
    EXPECT_EQ(map_pd_star(mono(4, Alphabet::X, 1, X({0})), dc), mono(4, Alphabet::X, 1, X({0}), q(4, 2)));
    Series f = rnd(4, Alphabet::X, 3, 3, {.rational = false, .density = 0.3});
    EXPECT_EQ(map_pd_star(f, DivisorContext(4, 1)), f);
}

TEST(Dist, Restriction)
{
    DivisorContext dc(4, 2);
    EXPECT_TRUE(map_id_star(mono(4, Alphabet::X, 1, X({1})), dc).is_zero());
    EXPECT_EQ(map_id_star(mono(4, Alphabet::X, 1, X({2})), dc), mono(4, Alphabet::X, 1, X({2})));
    EXPECT_EQ(map_id_star(mono(4, Alphabet::X, 1, X({0})), dc), mono(4, Alphabet::X, 1, X({0})));
}

TEST(Dist, TildeMaps)
{
    // Letters of the level-N/d alphabet sit at the codes nu(beta).
    DivisorContext dc(4, 2);
    EXPECT_EQ(map_pd_star_tilde(mono(4, Alphabet::Xt, 1, Xt({2})), dc), mono(4, Alphabet::Xt, 1, Xt({2}), q(4, 2)));
    EXPECT_TRUE(map_pd_star_tilde(mono(4, Alphabet::Xt, 1, Xt({1})), dc).is_zero());
    EXPECT_EQ(map_id_star_tilde(mono(4, Alphabet::Xt, 1, Xt({1})), dc), mono(4, Alphabet::Xt, 1, Xt({2})));
}

TEST(Dist, FAtSublevel)
{
    DivisorContext dc(4, 2);
    EXPECT_EQ(map_F_d(mono(4, Alphabet::Xt, 1, Xt({0})), dc), mono(4, Alphabet::X, 1, X({0})));
    EXPECT_EQ(map_F_d(mono(4, Alphabet::Xt, 1, Xt({2})), dc), build(4, Alphabet::X, 1, {{{2}, -1}, {{4}, 1}}));
    EXPECT_THROW(map_F_d(mono(4, Alphabet::Xt, 1, Xt({1})), dc), DomainError);
}

TEST(Dist, FAtSublevelIsInvertible)
{
    for (int N : {4, 6})
        for (int d : divisors(N)) {
            DivisorContext dc(N, d);
            for (const Word& w : enumerate_words_up_to(Alphabet::Xt, N, 2)) {
                bool admissible = true;
                for (int c : w.codes()) admissible = admissible && c % d == 0;
                if (!admissible) continue;
                Series m = mono(N, Alphabet::Xt, 2, w);
                EXPECT_EQ(map_F_d_inv(map_F_d(m, dc), dc), m);
            }
        }
}

TEST(Dist, DiagramsOnBasisWords)
{
    for (int N : {4, 6})
        for (int d : divisors(N)) {
            DivisorContext dc(N, d);
            for (const Word& w : enumerate_words_up_to(Alphabet::Xt, N, 2)) {
                Series m = mono(N, Alphabet::Xt, 2, w);
                EXPECT_EQ(map_F_d(map_pd_star_tilde(m, dc), dc), map_pd_star(map_F(m), dc));
                EXPECT_EQ(map_F_d(map_id_star_tilde(m, dc), dc), map_id_star(map_F(m), dc));
            }
        }
}

TEST(Dist, ZeroIsMember)
{
    for (DmrForm f : {DmrForm::MuN, DmrForm::BracketN}) {
        Series z(ctx(6), form_alphabet(f), 3);
        EXPECT_TRUE(dmrd_check(z, f).member());
    }
}

TEST(Dist, DegreeOneResidual)
{
    // x_{-1} at N = 4: p^2 sends it to x_1 while i^2 keeps x_{-1}; the correction
    // removes the x_1 term.
    DivisorContext dc(4, 2);
    Series psi = mono(4, Alphabet::X, 1, X({2}));
    EXPECT_EQ(dist_residual(psi, dc), build(4, Alphabet::X, 1, {{{2}, -1}}));
}
