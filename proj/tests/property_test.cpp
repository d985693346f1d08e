#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "suspsplit/constructions.hpp"
#include "suspsplit/homology.hpp"

using namespace suspsplit;

namespace {

constexpr std::uint32_t kSeed = 20240611;

DegeneracyWord random_word(std::mt19937& rng, int max_len, int max_index) {
    std::uniform_int_distribution<int> len(0, max_len), idx(0, max_index);
    DegeneracyWord w(static_cast<std::size_t>(len(rng)));
    for (auto& i : w) i = idx(rng);
    return w;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, int density_pct, int bound) {
    std::uniform_int_distribution<int> pct(0, 99), val(-bound, bound);
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (pct(rng) < density_pct) m.add(i, j, val(rng));
    return m;
}

oracle::Matrix to_dense(const SparseMatrix& m) {
    oracle::Matrix out(static_cast<std::size_t>(m.rows()), std::vector<long long>(static_cast<std::size_t>(m.cols()), 0));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    return out;
}

AbstractSimplicialComplex random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> nfacets(1, 6), size(1, 4), vert(1, 7);
    std::vector<std::vector<int>> facets;
    const int k = nfacets(rng);
    for (int f = 0; f < k; ++f) {
        std::set<int> s;
        const int want = size(rng);
        while (static_cast<int>(s.size()) < want) s.insert(vert(rng));
        facets.emplace_back(s.begin(), s.end());
    }
    return make_complex(facets);
}

} // namespace

TEST(Property, NormalFormIsIdempotentAndConfluent) {
    std::mt19937 rng(kSeed);
    for (int trial = 0; trial < 5000; ++trial) {
        auto u = random_word(rng, 4, 4), v = random_word(rng, 4, 4);
        auto nu = normal_form(u);
        ASSERT_TRUE(is_admissible(nu));
        ASSERT_EQ(normal_form(nu), nu);
        ASSERT_EQ(nu.size(), u.size());
        DegeneracyWord uv = u, unv = u, nuv = nu;
        uv.insert(uv.end(), v.begin(), v.end());
        auto nv = normal_form(v);
        unv.insert(unv.end(), nv.begin(), nv.end());
        nuv.insert(nuv.end(), v.begin(), v.end());
        const auto target = normal_form(uv);
        ASSERT_EQ(normal_form(unv), target);
        ASSERT_EQ(normal_form(nuv), target);
    }
}

TEST(Property, RandomComplexesSatisfyIdentitiesAndEuler) {
    std::mt19937 rng(kSeed + 1);
    for (int trial = 0; trial < 300; ++trial) {
        auto K = random_complex(rng);
        int dim = 0;
        for (const auto& f : K.facets) dim = std::max(dim, static_cast<int>(f.size()) - 1);
        auto X = order_complex(K, dim + 1);
        ASSERT_TRUE(validate_identities(*X).ok());
        auto C = normalized_chains(X);
        for (int d = 1; d <= C.top; ++d) ASSERT_TRUE(C.d_or_empty(d - 1).multiply(C.d(d)).is_zero());
        auto h = homology(C);
        auto ref = oracle::complex_homology(K.facets);
        long long chi_chain = -1, chi_hom = 0; // reduced Euler characteristic
        for (int d = 0; d <= dim; ++d) {
            ASSERT_EQ(h.at(d).betti, ref[static_cast<std::size_t>(d)].betti);
            ASSERT_EQ(std::vector<long long>(h.at(d).torsion.begin(), h.at(d).torsion.end()), ref[static_cast<std::size_t>(d)].torsion);
            chi_chain += (d % 2 ? -1 : 1) * C.size(d);
            chi_hom += (d % 2 ? -1 : 1) * h.at(d).betti;
        }
        ASSERT_EQ(chi_chain, chi_hom);
        // rank-nullity in every degree
        for (int d = 0; d <= dim; ++d) {
            const int z = C.size(d) - rank(C.d_or_empty(d));
            const int b = d + 1 <= C.top ? rank(C.d(d + 1)) : 0;
            ASSERT_EQ(z - b, h.at(d).betti);
        }
    }
}

TEST(Property, SmithRoutesAgree) {
    std::mt19937 rng(kSeed + 2);
    std::uniform_int_distribution<int> dim(0, 7), dens(10, 90);
    for (int trial = 0; trial < 4000; ++trial) {
        auto m = random_matrix(rng, dim(rng), dim(rng), dens(rng), trial % 3 == 0 ? 1 : 6);
        auto sparse = smith_invariants(m);
        auto dense = smith_invariants_dense(m);
        ASSERT_EQ(sparse, dense);
        auto ref = oracle::smith_diagonal(to_dense(m));
        ASSERT_EQ(std::vector<long long>(sparse.begin(), sparse.end()), ref);
        for (std::size_t i = 0; i + 1 < sparse.size(); ++i) ASSERT_EQ(sparse[i + 1] % sparse[i], 0);
        for (auto v : sparse) ASSERT_GT(v, 0);
    }
}

TEST(Property, SmithIsPermutationInvariant) {
    std::mt19937 rng(kSeed + 3);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        auto m = random_matrix(rng, dim(rng), dim(rng), 40, 4);
        std::vector<int> rp(static_cast<std::size_t>(m.rows())), cp(static_cast<std::size_t>(m.cols()));
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        ASSERT_EQ(smith_invariants(m.permuted(rp, cp)), smith_invariants(m));
        ASSERT_EQ(smith_invariants(m.transpose()), smith_invariants(m));
    }
}

TEST(Property, HomologyIsBasisIndependent) {
    std::mt19937 rng(kSeed + 4);
    for (int trial = 0; trial < 200; ++trial) {
        auto K = random_complex(rng);
        auto C = normalized_chains(order_complex(K, 4));
        ChainComplex P = C;
        std::vector<std::vector<int>> perm(static_cast<std::size_t>(C.top) + 1);
        for (int d = 0; d <= C.top; ++d) {
            perm[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(C.size(d)));
            std::iota(perm[static_cast<std::size_t>(d)].begin(), perm[static_cast<std::size_t>(d)].end(), 0);
            std::shuffle(perm[static_cast<std::size_t>(d)].begin(), perm[static_cast<std::size_t>(d)].end(), rng);
        }
        for (int d = 1; d <= C.top; ++d) P.boundary[static_cast<std::size_t>(d)] = C.d(d).permuted(perm[static_cast<std::size_t>(d) - 1], perm[static_cast<std::size_t>(d)]);
        std::vector<int> one{0};
        P.boundary[0] = C.d(0).permuted(C.augmented ? one : std::vector<int>{}, perm[0]);
        P.cells.clear();
        auto a = homology(C), b = homology(P);
        for (int d = 0; d <= C.top; ++d) ASSERT_EQ(a.at(d), b.at(d));
    }
}

TEST(Property, ProductsOfCirclesAreTori) {
    // Kunneth for (S^1)^k: H_d is free of rank C(k, d)
    for (int k = 1; k <= 3; ++k) {
        auto F = product_model(std::vector<SimplicialSetPtr>(static_cast<std::size_t>(k), simplicial_circle(k + 1)));
        auto h = homology(normalized_chains(F->set()));
        for (int d = 1; d <= k; ++d) EXPECT_EQ(h.at(d), (HomologyGroup{static_cast<int>(binomial(k, d)), {}})) << k << " " << d;
    }
}
