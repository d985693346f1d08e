#include <gtest/gtest.h>

#include "suspsplit/constructions.hpp"
#include "suspsplit/simplicial_set.hpp"

using namespace suspsplit;

namespace {

/// One vertex v, one edge e (both faces v), truncation 3.
SimplicialSetPtr circle3() { return simplicial_circle(3); }

SimplexRef gen(int d, int i) { return SimplexRef{{d, i}}; }

} // namespace

TEST(NormalForm, RewritesToAdmissible) {
    EXPECT_EQ(normal_form({0, 0}), (DegeneracyWord{1, 0}));
    EXPECT_EQ(normal_form({0, 1}), (DegeneracyWord{2, 0}));
    EXPECT_EQ(normal_form({2, 0}), (DegeneracyWord{2, 0}));
    EXPECT_EQ(normal_form({}), DegeneracyWord{});
    EXPECT_EQ(normal_form({0, 0, 0}), (DegeneracyWord{2, 1, 0}));
}

TEST(NormalForm, Idempotent) {
    for (const DegeneracyWord& w : {DegeneracyWord{0, 1, 0}, DegeneracyWord{3, 3, 1}, DegeneracyWord{1, 2, 3}}) {
        auto once = normal_form(w);
        EXPECT_TRUE(is_admissible(once));
        EXPECT_EQ(normal_form(once), once);
    }
}

TEST(NormalForm, RejectsNegativeIndex) { EXPECT_THROW(normal_form({-1}), Error); }

TEST(Face, ThroughDegeneracies) {
    auto X = circle3();
    SimplexRef e = gen(1, 0);
    SimplexRef s0e = degeneracy(*X, e, 0);
    EXPECT_EQ(face(*X, s0e, 1), e);
    EXPECT_EQ(face(*X, s0e, 0), e);
    SimplexRef s1e = degeneracy(*X, e, 1);
    EXPECT_EQ(face(*X, s1e, 0), degeneracy(*X, face(*X, e, 0), 0));
    EXPECT_EQ(face(*X, e, 0), gen(0, 0));
}

TEST(Face, InvalidIndex) {
    auto X = circle3();
    EXPECT_THROW(face(*X, gen(1, 0), 2), Error);
    EXPECT_THROW(face(*X, gen(1, 0), -1), Error);
    EXPECT_THROW(face(*X, gen(0, 0), 0), Error);
}

TEST(Degeneracy, NormalFormResults) {
    auto X = circle3();
    SimplexRef v = gen(0, 0);
    EXPECT_EQ(degeneracy(*X, v, 0), (SimplexRef{{0, 0}, {0}}));
    EXPECT_EQ(degeneracy(*X, degeneracy(*X, v, 0), 0), (SimplexRef{{0, 0}, {1, 0}}));
    auto S = order_complex(boundary_of_simplex(3), 4);
    SimplexRef tri = gen(2, 0);
    SimplexRef s2 = degeneracy(*S, tri, 2);
    EXPECT_EQ(degeneracy(*S, s2, 0), (SimplexRef{{2, 0}, {3, 0}}));
}

TEST(Degeneracy, TruncationIsHard) {
    auto X = circle3();
    SimplexRef top{{1, 0}, {2, 1}};
    EXPECT_EQ(top.dim(), 3);
    EXPECT_THROW(degeneracy(*X, top, 0), Error);
    EXPECT_THROW(degeneracy(*X, gen(1, 0), 2), Error);
}

TEST(Simplices, Enumeration) {
    auto P = point(1);
    auto s = simplices(*P, 1);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], (SimplexRef{{0, 0}, {0}}));

    auto D = order_complex(boundary_of_simplex(2), 2);
    EXPECT_EQ(simplices(*D, 1).size(), 6u);
    EXPECT_EQ(simplices(*D, 0).size(), 3u);
    for (const auto& x : simplices(*D, 0)) EXPECT_FALSE(x.degenerate());
    EXPECT_THROW(simplices(*D, 3), Error);
}

TEST(Simplices, OrderedByGeneratorThenWord) {
    auto X = simplicial_circle(3);
    auto s = simplices(*X, 2);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
}

TEST(Validate, ConstructionsAreClean) {
    EXPECT_TRUE(validate_identities(*order_complex(projective_plane_6(), 3)).ok());
    EXPECT_TRUE(validate_identities(*simplicial_circle(4)).ok());
    EXPECT_TRUE(validate_identities(*point(0)).ok());
    EXPECT_TRUE(validate_identities(*product(simplicial_circle(3), simplicial_circle(3))).ok());
}

TEST(Validate, SwappedFaceIsReported) {
    auto K = order_complex_model(boundary_of_simplex(3), 3);
    auto X = std::make_shared<FiniteSimplicialSet>(*K->set());
    GenId tri{2, 0};
    auto faces = X->faces(tri);
    X->set_face(tri, 0, faces[2]);
    X->set_face(tri, 2, faces[0]);
    auto rep = validate_identities(*X);
    ASSERT_FALSE(rep.ok());
    bool names_generator = false;
    for (const auto& v : rep.violations) names_generator = names_generator || v.simplex.gen == tri;
    EXPECT_TRUE(names_generator);
    EXPECT_NE(rep.violations.front().identity.find("d"), std::string::npos);
}

TEST(Generators, AddValidation) {
    FiniteSimplicialSet X(2);
    X.add_generator(0, {}, "a");
    EXPECT_THROW(X.add_generator(3, {}), Error);
    EXPECT_THROW(X.add_generator(1, {gen(0, 0)}), Error);
    EXPECT_THROW(X.add_generator(1, {gen(0, 0), gen(0, 5)}), Error);
    EXPECT_THROW(X.add_generator(0, {gen(0, 0)}), Error);
    auto e = X.add_generator(1, {gen(0, 0), gen(0, 0)}, "e");
    EXPECT_EQ(X.label(SimplexRef{e}), "e");
    EXPECT_EQ(X.label(SimplexRef{{0, 0}, {0}}), "s0(a)");
}

TEST(SimplicialMaps, ComposeAndCheck) {
    auto X = simplicial_circle(3);
    auto id = identity_map(X);
    EXPECT_TRUE(check_simplicial(id).empty());
    EXPECT_FALSE(injectivity_witness(id).has_value());
    auto twice = compose(id, id);
    EXPECT_EQ(twice.image({1, 0}), gen(1, 0));

    auto P = point(3);
    SimplicialMap collapse(X, P);
    collapse.set_image({0, 0}, gen(0, 0));
    collapse.set_image({1, 0}, SimplexRef{{0, 0}, {0}});
    EXPECT_TRUE(check_simplicial(collapse).empty());
    EXPECT_TRUE(injectivity_witness(collapse).has_value());

    auto D = order_complex(boundary_of_simplex(2), 3);
    SimplicialMap bad(D, D);
    for (int d = 0; d <= 1; ++d)
        for (int g = 0; g < D->count(d); ++g) bad.set_image({d, g}, gen(d, 0));
    EXPECT_FALSE(check_simplicial(bad).empty());
}

TEST(Identities, FaceOfDegeneracyIsIdentity) {
    auto X = product(simplicial_circle(3), simplicial_circle(3));
    for (int n = 0; n < 3; ++n)
        for (const auto& x : simplices(*X, n))
            for (int i = 0; i <= n; ++i) {
                auto s = degeneracy(*X, x, i);
                EXPECT_EQ(face(*X, s, i), x);
                EXPECT_EQ(face(*X, s, i + 1), x);
            }
}

TEST(Identities, DegenerateIffSomeSdFixes) {
    auto X = order_complex(projective_plane_6(), 3);
    for (int n = 1; n <= 3; ++n)
        for (const auto& x : simplices(*X, n)) {
            bool fixed = false;
            for (int i = 0; i < n; ++i) fixed = fixed || degeneracy(*X, face(*X, x, i), i) == x;
            EXPECT_EQ(fixed, x.degenerate());
        }
}

TEST(Identities, EnumerationCountMatchesWords) {
    auto X = order_complex(projective_plane_6(), 3);
    for (int n = 0; n <= 3; ++n) {
        std::size_t expected = 0;
        for (int r = 0; r <= n; ++r) expected += admissible_words_into(n, r).size() * static_cast<std::size_t>(X->count(n - r));
        EXPECT_EQ(simplices(*X, n).size(), expected);
    }
}
