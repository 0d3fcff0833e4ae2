#include <gtest/gtest.h>

#include "hopfact/linalg.hpp"
#include "support.hpp"

using namespace hopfact;

namespace {

LinearEquation eq(const Field& f, std::vector<long> c, long rhs) {
    LinearEquation e;
    for (long v : c) e.coeffs.push_back(f.from_int(v));
    e.rhs = f.from_int(rhs);
    return e;
}

}  // namespace

TEST(Linalg, UniqueSolution) {
    auto F = Field::rationals();
    auto fam = solve_affine(F, {"u", "v"}, {eq(F, {1, 1}, 3), eq(F, {1, -1}, 1)});
    ASSERT_FALSE(fam.empty);
    EXPECT_EQ(fam.dimension(), 0u);
    EXPECT_EQ(fam.base[0], F.from_int(2));
    EXPECT_EQ(fam.base[1], F.from_int(1));
}

TEST(Linalg, Inconsistent) {
    auto F = Field::rationals();
    auto fam = solve_affine(F, {"u"}, {eq(F, {0}, 1)});
    EXPECT_TRUE(fam.empty);
    EXPECT_FALSE(fam.contains(std::vector<FieldElement>{F.zero()}));
}

TEST(Linalg, FreeVariablesAndMembership) {
    auto F = Field::rationals();
    // u0 + u1 - u2 = 1, u3 unconstrained
    auto fam = solve_affine(F, {"u0", "u1", "u2", "u3"}, {eq(F, {1, 1, -1, 0}, 1)});
    ASSERT_FALSE(fam.empty);
    EXPECT_EQ(fam.dimension(), 3u);
    EXPECT_EQ(fam.free_coordinates, (std::vector<std::size_t>{1, 2, 3}));
    std::vector<FieldElement> p{F.from_int(4), F.from_int(-1), F.from_int(2), F.from_int(7)};
    EXPECT_TRUE(fam.contains(p));
    p[0] = F.from_int(5);
    EXPECT_FALSE(fam.contains(p));
}

TEST(Linalg, RandomSystemsSolutionsSatisfyEquations) {
    std::mt19937_64 rng(3);
    auto F = Field::cyclotomic(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        int n = dim(rng), m = dim(rng);
        std::vector<LinearEquation> eqs;
        // consistent by construction: rhs from a hidden solution
        std::vector<FieldElement> hidden;
        for (int j = 0; j < n; ++j) hidden.push_back(testutil::random_element(F, rng, 3));
        for (int i = 0; i < m; ++i) {
            LinearEquation e;
            e.rhs = F.zero();
            for (int j = 0; j < n; ++j) {
                auto c = (rng() % 3 == 0) ? F.zero() : testutil::random_element(F, rng, 3);
                e.coeffs.push_back(c);
                e.rhs += c * hidden[j];
            }
            eqs.push_back(e);
        }
        std::vector<std::string> names(n, "u");
        auto fam = solve_affine(F, names, eqs);
        ASSERT_FALSE(fam.empty);
        EXPECT_TRUE(fam.contains(hidden));
        std::vector<FieldElement> params;
        for (std::size_t k = 0; k < fam.dimension(); ++k) params.push_back(testutil::random_element(F, rng, 3));
        auto p = fam.point(params);
        for (const auto& e : eqs) {
            FieldElement lhs = F.zero();
            for (int j = 0; j < n; ++j) lhs += e.coeffs[j] * p[j];
            EXPECT_EQ(lhs, e.rhs);
        }
    }
}

TEST(Linalg, MatrixInverse) {
    auto F = Field::rationals();
    Matrix m(F, 2, 2);
    m(0, 0) = F.from_int(1);
    m(0, 1) = F.from_int(2);
    m(1, 0) = F.from_int(3);
    m(1, 1) = F.from_int(4);
    auto inv = m.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE((m * *inv).is_identity());
    Matrix s(F, 2, 2);
    s(0, 0) = F.one();
    s(1, 0) = F.one();
    EXPECT_FALSE(s.inverse().has_value());
}
