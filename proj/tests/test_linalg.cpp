#include "test_util.hpp"

using namespace cdsl;
using namespace cdsl::testing;

namespace {

Matrix<RationalField> qmat(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t cols = rows.begin()->size();
    Matrix<RationalField> m(RationalField{}, 0, cols);
    for (const auto& r : rows) {
        std::vector<mpq_class> v;
        for (long x : r) v.emplace_back(x);
        m.append_row(v);
    }
    return m;
}

} // namespace

TEST(Linalg, KernelExamples)
{
    auto k = kernel_basis(qmat({{1, 1}, {1, 1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0][0] + k[0][1], 0);
    EXPECT_NE(k[0][0], 0);
    EXPECT_TRUE(kernel_basis(Matrix<RationalField>::identity(RationalField{}, 4)).empty());
}

TEST(Linalg, RankNullityOnRandomMatrices)
{
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
        Matrix<RationalField> m(RationalField{}, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? mpq_class(static_cast<int>(rng() % 7) - 3) : 0;
        auto k = kernel(m);
        EXPECT_EQ(k.basis.size() + rank(m), c);
        for (const auto& v : k.basis)
            for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
        // Echelon-complement form: unit vectors on the free columns.
        for (std::size_t a = 0; a < k.basis.size(); ++a)
            for (std::size_t b = 0; b < k.free_columns.size(); ++b)
                EXPECT_EQ(k.basis[a][k.free_columns[b]], a == b ? 1 : 0);
    }
}

TEST(Linalg, CyclotomicKernel)
{
    const auto& c = ctx(3);
    CyclotomicField f{&c};
    Matrix<CyclotomicField> m(f, 1, 2);
    m(0, 0) = zeta(3, 1);
    m(0, 1) = q(3, 1);
    auto k = kernel(m);
    ASSERT_EQ(k.basis.size(), 1u);
    EXPECT_TRUE(m.apply(k.basis[0])[0].is_zero());
}

TEST(Linalg, InvariantSubspace)
{
    auto id = Matrix<RationalField>::identity(RationalField{}, 3);
    EXPECT_EQ(invariant_subspace({id}, 3).size(), 3u);
    auto swap = qmat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    auto fixed = invariant_subspace({swap}, 3);
    ASSERT_EQ(fixed.size(), 2u);
    for (const auto& v : fixed) EXPECT_EQ(v[0], v[1]);
}

TEST(Linalg, RestrictionOfScalarsDoublesDimensionAtLevelThree)
{
    const auto& c = ctx(3);
    Matrix<CyclotomicField> M = Matrix<CyclotomicField>::identity(CyclotomicField{&c}, 2);
    auto R = restrict_scalars(M, galois_element(c, 1));
    EXPECT_EQ(R.rows(), 4u);
    EXPECT_EQ(R.cols(), 4u);
    EXPECT_EQ(R, Matrix<RationalField>::identity(RationalField{}, 4));
    // sigma_{-1} on Q(mu_3) has a 1-dimensional fixed space.
    auto fix = invariant_subspace({restrict_scalars(Matrix<CyclotomicField>::identity(CyclotomicField{&c}, 1),
                                                    galois_element(c, 2))},
                                  2);
    EXPECT_EQ(fix.size(), 1u);
}

TEST(Linalg, ExtendScalarsKeepsRank)
{
    auto m = qmat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    EXPECT_EQ(rank(extend_scalars(m, ctx(5))), rank(m));
}
