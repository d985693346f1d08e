#include <gtest/gtest.h>

#include "oracles.hpp"
#include "suspsplit/constructions.hpp"
#include "suspsplit/filtration.hpp"

using namespace suspsplit;

TEST(Degree, CommutingNerveZ2) {
    auto keyed = commuting_nerve_keyed(cyclic_group(2), 4);
    Filtration F(keyed.space);
    for (int n = 0; n <= 4; ++n)
        for (std::size_t i = 0; i < keyed.keys[static_cast<std::size_t>(n)].size(); ++i) {
            const auto& t = keyed.keys[static_cast<std::size_t>(n)][i];
            int identities = static_cast<int>(std::count(t.begin(), t.end(), 0));
            EXPECT_EQ(F.degree(n, GenId{0, static_cast<int>(i)}), identities);
        }
    // (e, g) = s_0(g)
    EXPECT_EQ(F.degree(2, GenId{0, keyed.find(2, {0, 1})}), 1);
    EXPECT_EQ(F.degree(2, GenId{0, keyed.find(2, {0, 0})}), 2);
    EXPECT_EQ(F.degree(2, GenId{0, keyed.find(2, {1, 1})}), 0);
}

TEST(Degree, DegeneracyRaisesByOne) {
    for (const auto& b : builtin_spaces(3, 2)) {
        const auto& X = *b.space;
        for (int n = 0; n < 3; ++n)
            for (int d = 0; d <= X.level(n).truncation(); ++d)
                for (int g = 0; g < X.level(n).count(d); ++g) {
                    SimplexRef x{{d, g}};
                    const int base = degeneracy_degree(X, n, x);
                    for (int i = 0; i <= n; ++i) EXPECT_EQ(degeneracy_degree(X, n + 1, X.degeneracy_map(n, i).image({d, g})), base + 1) << b.name;
                }
    }
}

TEST(Stage, Basics) {
    Filtration F(commuting_nerve(cyclic_group(2), 3));
    EXPECT_EQ(filtration_stage(F, 2, 0).members.size(), 4);
    EXPECT_EQ(filtration_stage(F, 2, 1).members.size(), 3);
    EXPECT_TRUE(filtration_stage(F, 2, 3).members.empty());
    EXPECT_EQ(filtration_stage(F, 2, 2).members.size(), 1);
    EXPECT_THROW(filtration_stage(F, 2, 4), Error);
    EXPECT_THROW(filtration_stage(F, 5, 0), Error);
}

TEST(Stage, NestedAndClosed) {
    for (const auto& b : builtin_spaces(4, 3)) {
        Filtration F(b.space);
        for (int n = 0; n <= 4; ++n) {
            for (int t = 0; t <= n; ++t) {
                auto hi = F.stage(n, t + 1), lo = F.stage(n, t);
                for (GenId g : hi.members()) EXPECT_TRUE(lo.contains(g));
                EXPECT_TRUE(filtration_stage(F, n, t).closure_defects.empty()) << b.name;
            }
            // top stage is the image of s_0^n
            auto top = F.stage(n, n);
            GeneratorSet image(F.space().level(n));
            const auto& L0 = F.space().level(0);
            for (int d = 0; d <= L0.truncation(); ++d)
                for (int g = 0; g < L0.count(d); ++g) {
                    auto y = horizontal_degeneracy(F.space(), 0, SimplexRef{{d, g}}, DegeneracyWord(static_cast<std::size_t>(n), 0));
                    if (!y.degenerate()) image.set(y.gen);
                }
            EXPECT_EQ(top, image) << b.name << " n=" << n;
        }
    }
}

TEST(Stage, SingularSubspaceOfCommutingNerves) {
    for (const auto& G : {cyclic_group(2), symmetric_group_3(), quaternion_group()}) {
        auto keyed = commuting_nerve_keyed(G, 3);
        Filtration F(keyed.space);
        for (int n = 0; n <= 3; ++n) {
            auto s1 = F.stage(n, 1);
            for (std::size_t i = 0; i < keyed.keys[static_cast<std::size_t>(n)].size(); ++i) {
                const auto& t = keyed.keys[static_cast<std::size_t>(n)][i];
                EXPECT_EQ(s1.contains({0, static_cast<int>(i)}), std::find(t.begin(), t.end(), 0) != t.end());
            }
            auto [all, with_identity] = oracle::commuting_tuple_counts(G.table(), n);
            EXPECT_EQ(s1.size(), with_identity);
            EXPECT_EQ(F.space().level(n).count(0), all);
        }
    }
}

TEST(Quotient, StageQuotients) {
    Filtration F(commuting_nerve(cyclic_group(2), 3));
    auto q = stage_quotient(F, 2, 0);
    EXPECT_TRUE(q.pointed());
    EXPECT_EQ(q.cells().size(), 1u); // only (g, g) survives
    auto top = stage_quotient(F, 2, 2);
    EXPECT_FALSE(top.pointed());
    EXPECT_EQ(top.cells().size(), 1u);
    EXPECT_THROW(stage_quotient(F, 2, 3), Error);
}

TEST(Quotient, CellsAreExactDegree) {
    for (const auto& b : builtin_spaces(4, 2)) {
        Filtration F(b.space);
        for (int n = 0; n <= 4; ++n)
            for (int r = 0; r <= n; ++r)
                for (GenId g : stage_quotient(F, n, r).cells()) EXPECT_EQ(F.degree(n, g), r);
    }
}

TEST(Wedge, S3LevelTwo) {
    Filtration F(commuting_nerve(symmetric_group_3(), 3));
    auto w = wedge_decomposition(F, 2, 1);
    EXPECT_TRUE(w.ok());
    ASSERT_EQ(w.summands.size(), 2u);
    EXPECT_EQ(w.summands[0].classes.size(), 5u);
    EXPECT_EQ(w.summands[1].classes.size(), 5u);
    EXPECT_EQ(w.stage_classes, 10);
    auto single = wedge_decomposition(F, 1, 0);
    ASSERT_EQ(single.summands.size(), 1u);
    EXPECT_TRUE(single.summands[0].J.empty());
    EXPECT_EQ(single.stage_classes, 5);
}

TEST(Wedge, AllBuiltins) {
    for (const auto& b : builtin_spaces(4, 3)) {
        Filtration F(b.space);
        for (int n = 0; n <= 4; ++n)
            for (int r = 0; r <= n; ++r) {
                auto w = wedge_decomposition(F, n, r);
                EXPECT_TRUE(w.ok()) << b.name << " n=" << n << " r=" << r;
                EXPECT_EQ(static_cast<long long>(w.summands.size()), binomial(n, r));
            }
    }
}

TEST(Wedge, CountingIdentityDiscrete) {
    // |X_n| = sum_r C(n, r) * #(horizontally nondegenerate elements of X_{n-r})
    for (const auto& G : {cyclic_group(2), cyclic_group(3), symmetric_group_3(), quaternion_group()}) {
        Filtration F(commuting_nerve(G, 4));
        for (int n = 0; n <= 4; ++n) {
            long long sum = 0;
            for (int r = 0; r <= n; ++r) sum += binomial(n, r) * (F.stage(n - r, 0).size() - F.stage(n - r, 1).size());
            EXPECT_EQ(sum, F.space().level(n).count(0));
        }
    }
}

TEST(Intersection, Cases) {
    Filtration F(commuting_nerve(cyclic_group(2), 3));
    auto rep = intersection_check(F, 2, 1);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.pairs_checked, 1u);
    auto si = horizontal_image(F, 2, AdmissibleSeq({0}));
    auto sj = horizontal_image(F, 2, AdmissibleSeq({1}));
    int common = 0;
    for (GenId g : si.members())
        if (sj.contains(g)) {
            ++common;
            EXPECT_EQ(F.degree(2, g), 2);
        }
    EXPECT_EQ(common, 1);
    EXPECT_EQ(intersection_check(F, 1, 0).pairs_checked, 0u);

    Filtration C(cech_nerve(simplicial_circle(3), 3));
    EXPECT_TRUE(intersection_check(C, 2, 1).ok());
    for (const auto& b : builtin_spaces(4, 2)) {
        Filtration B(b.space);
        for (int n = 0; n <= 4; ++n)
            for (int r = 0; r < n; ++r) EXPECT_TRUE(intersection_check(B, n, r).ok()) << b.name;
    }
}

TEST(Summand, QuotientShape) {
    Filtration F(commuting_nerve(symmetric_group_3(), 3));
    auto q = summand_quotient(F, 2, AdmissibleSeq({1}));
    EXPECT_TRUE(q.pointed());
    EXPECT_EQ(q.cells().size(), 5u);
    auto top = summand_quotient(F, 2, AdmissibleSeq({1, 0}));
    EXPECT_FALSE(top.pointed());
    EXPECT_EQ(top.cells().size(), 1u);
}
