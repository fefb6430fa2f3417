#include "test_util.hpp"

using namespace cdsl;
using namespace cdsl::testing;

TEST(Graded, DegreeOneHandCount)
{
    // Free parameters: one per pair {m, -m} of nontrivial roots.
    for (int N = 3; N <= 8; ++N) {
        EXPECT_EQ(dmr_graded_basis(N, 1, DmrVariant::DmrMuN).dimension(), static_cast<std::size_t>(N / 2)) << N;
        EXPECT_EQ(dmr_graded_basis(N, 1, DmrVariant::DmrBracketN).dimension(), static_cast<std::size_t>(N / 2)) << N;
    }
}

TEST(Graded, BasisElementsAreMembers)
{
    for (int N : {3, 4})
        for (int d = 1; d <= 3; ++d)
            for (DmrVariant v : {DmrVariant::DmrMuN, DmrVariant::DmrBracketN}) {
                GradedPiece g = dmr_graded_basis(N, d, v);
                for (std::size_t i = 0; i < g.dimension(); ++i) {
                    Series e = g.element(ctx(N), i, d);
                    EXPECT_TRUE(dmr_check(e, variant_form(v)).member()) << N << " " << d << " " << i;
                }
            }
}

TEST(Graded, PerturbedElementsAreNotMembers)
{
    const int N = 3, d = 2;
    for (DmrVariant v : {DmrVariant::DmrMuN, DmrVariant::DmrBracketN}) {
        GradedPiece g = dmr_graded_basis(N, d, v);
        Series e = g.dimension() ? g.element(ctx(N), 0, d) : Series(ctx(N), form_alphabet(variant_form(v)), d);
        for (const Word& w : enumerate_words(form_alphabet(variant_form(v)), N, d)) {
            Series p = e + mono(N, form_alphabet(variant_form(v)), d, w);
            if (!kernel_coordinates(g, p)) {
                EXPECT_FALSE(dmr_check(p, variant_form(v)).member()) << w.to_string();
            }
        }
    }
}

TEST(Graded, FormsAgreeInDimension)
{
    for (int N : {3, 4})
        for (int d = 1; d <= 3; ++d)
            EXPECT_EQ(dmr_graded_basis(N, d, DmrVariant::DmrMuN).dimension(),
                      dmr_graded_basis(N, d, DmrVariant::DmrBracketN).dimension())
                << N << " " << d;
}

TEST(Graded, FCarriesBracketFormOntoMuForm)
{
    for (int N : {3, 4})
        for (int d = 1; d <= 2; ++d) {
            GradedPiece g = dmr_graded_basis(N, d, DmrVariant::DmrBracketN);
            for (std::size_t i = 0; i < g.dimension(); ++i)
                EXPECT_TRUE(dmr_check(map_F(g.element(ctx(N), i, d)), DmrForm::MuN, {.field = DmrField::QmuN}).member());
        }
}

TEST(Graded, LiteralCorrectionScaleBreaksAgreement)
{
    GradedOptions lit;
    lit.star_scale = StarTildeScale::literal;
    bool differs = false;
    for (int N : {3, 4})
        differs = differs || dmr_graded_basis(N, 3, DmrVariant::DmrBracketN, lit).dimension() !=
                                 dmr_graded_basis(N, 3, DmrVariant::DmrMuN).dimension();
    EXPECT_TRUE(differs);
}

TEST(Graded, CyclotomicSolveHasSameDimension)
{
    for (DmrVariant v : {DmrVariant::DmrMuN, DmrVariant::DmrBracketN})
        EXPECT_EQ(dmr_graded_basis_cyclotomic(4, 2, v).basis.size(), dmr_graded_basis(4, 2, v).dimension());
}

TEST(Graded, DistributionVariantsAgreeAtDegreeOne)
{
    for (int N : {4, 6})
        for (DistCorrection c :
             {DistCorrection::class_zero_letter, DistCorrection::tilde_letter, DistCorrection::transported}) {
            GradedOptions o;
            o.correction = c;
            EXPECT_EQ(dmr_graded_basis(N, 1, DmrVariant::DmrdMuN, o).dimension(),
                      dmr_graded_basis(N, 1, DmrVariant::DmrdBracketN, o).dimension());
        }
}

TEST(Graded, DistributionBasisPassesCheck)
{
    const int N = 4;
    for (int d = 1; d <= 2; ++d)
        for (DmrVariant v : {DmrVariant::DmrdMuN, DmrVariant::DmrdBracketN}) {
            GradedPiece g = dmr_graded_basis(N, d, v);
            for (std::size_t i = 0; i < g.dimension(); ++i)
                EXPECT_TRUE(dmrd_check(g.element(ctx(N), i, d), variant_form(v)).member());
        }
}

TEST(Graded, WordCapIsEnforced)
{
    GradedOptions o;
    o.word_cap = 10;
    EXPECT_THROW(dmr_graded_basis(4, 2, DmrVariant::DmrMuN, o), ResourceError);
}
