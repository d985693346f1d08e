#pragma once

#include <string>
#include <vector>

#include "suspsplit/simplicial_set.hpp"

namespace suspsplit {

/// A horizontally truncated simplicial object in finite simplicial sets.
/// Level n is a FiniteSimplicialSet; hface[n][i] : X_n -> X_{n-1} and
/// hdeg[n][i] : X_n -> X_{n+1} are simplicial maps.
struct SimplicialSpace {
    std::string name;
    std::vector<SimplicialSetPtr> levels;
    std::vector<std::vector<SimplicialMap>> hface; // hface[0] is empty
    std::vector<std::vector<SimplicialMap>> hdeg;  // hdeg[N_h] is empty

    int horizontal_truncation() const { return static_cast<int>(levels.size()) - 1; }
    int vertical_truncation() const { return levels.empty() ? 0 : levels.front()->truncation(); }

    const FiniteSimplicialSet& level(int n) const {
        if (n < 0 || n > horizontal_truncation()) throw Error("level out of range");
        return *levels[static_cast<std::size_t>(n)];
    }

    /// True iff every level is 0-dimensional.
    bool discrete() const {
        for (const auto& l : levels)
            if (l->top_dimension() > 0) return false;
        return true;
    }

    const SimplicialMap& face_map(int n, int i) const {
        if (n < 1 || n > horizontal_truncation() || i < 0 || i > n) throw Error("invalid horizontal face");
        return hface[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
    const SimplicialMap& degeneracy_map(int n, int i) const {
        if (n < 0 || n + 1 > horizontal_truncation() || i < 0 || i > n) throw Error("invalid horizontal degeneracy");
        return hdeg[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
};

/// Applies the horizontal degeneracies of word J = (j_r, ..., j_1) to a
/// simplex x of level n, innermost (j_1) first. Returns a simplex of level n + r.
inline SimplexRef horizontal_degeneracy(const SimplicialSpace& X, int n, const SimplexRef& x, const DegeneracyWord& J) {
    SimplexRef y = x;
    int level = n;
    for (auto it = J.rbegin(); it != J.rend(); ++it) {
        y = X.degeneracy_map(level, *it)(y);
        ++level;
    }
    return y;
}

/// d_{a_1} d_{a_2} ... d_{a_k} applied to a simplex of level n; the last
/// entry acts first. Returns a simplex of level n - k.
inline SimplexRef horizontal_face(const SimplicialSpace& X, int n, const SimplexRef& x, const std::vector<int>& seq) {
    SimplexRef y = x;
    int level = n;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        y = X.face_map(level, *it)(y);
        --level;
    }
    return y;
}

struct HorizontalViolation {
    int level;
    std::string identity;
    GenId generator;
};

/// Horizontal simplicial identities as equalities of maps on generators,
/// plus: every horizontal operator is simplicial and every degeneracy is injective.
inline std::vector<HorizontalViolation> validate_horizontal(const SimplicialSpace& X) {
    std::vector<HorizontalViolation> out;
    const int N = X.horizontal_truncation();
    auto each_gen = [](const FiniteSimplicialSet& L, auto&& fn) {
        for (int d = 0; d <= L.truncation(); ++d)
            for (int g = 0; g < L.count(d); ++g) fn(SimplexRef{{d, g}});
    };
    auto idname = [](std::string a, int i, std::string b, int j) {
        return a + std::to_string(i) + " " + b + std::to_string(j);
    };
    for (int n = 0; n <= N; ++n) {
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                for (const auto& [g, k] : check_simplicial(X.face_map(n, i)))
                    out.push_back({n, idname("d", i, "vertical-face", k), g});
        if (n + 1 <= N)
            for (int i = 0; i <= n; ++i) {
                for (const auto& [g, k] : check_simplicial(X.degeneracy_map(n, i)))
                    out.push_back({n, idname("s", i, "vertical-face", k), g});
                if (auto w = injectivity_witness(X.degeneracy_map(n, i))) out.push_back({n, "s" + std::to_string(i) + " injective", w->second.gen});
            }
        const auto& L = X.level(n);
        // d_i d_j = d_{j-1} d_i for i < j, on level n.
        if (n >= 2)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    each_gen(L, [&](const SimplexRef& x) {
                        if (X.face_map(n - 1, i)(X.face_map(n, j)(x)) != X.face_map(n - 1, j - 1)(X.face_map(n, i)(x)))
                            out.push_back({n, idname("d", i, "d", j), x.gen});
                    });
        // s_i s_j = s_{j+1} s_i for i <= j, on level n.
        if (n + 2 <= N)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    each_gen(L, [&](const SimplexRef& x) {
                        if (X.degeneracy_map(n + 1, i)(X.degeneracy_map(n, j)(x)) != X.degeneracy_map(n + 1, j + 1)(X.degeneracy_map(n, i)(x)))
                            out.push_back({n, idname("s", i, "s", j), x.gen});
                    });
        // d_i s_j on level n.
        if (n + 1 <= N)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i)
                    each_gen(L, [&](const SimplexRef& x) {
                        SimplexRef lhs = X.face_map(n + 1, i)(X.degeneracy_map(n, j)(x));
                        SimplexRef rhs;
                        if (i == j || i == j + 1) rhs = x;
                        else if (i < j) rhs = X.degeneracy_map(n - 1, j - 1)(X.face_map(n, i)(x));
                        else rhs = X.degeneracy_map(n - 1, j)(X.face_map(n, i - 1)(x));
                        if (lhs != rhs) out.push_back({n, idname("d", i, "s", j), x.gen});
                    });
    }
    return out;
}

/// A morphism of simplicial spaces: one simplicial map per level.
struct SpaceMorphism {
    std::vector<SimplicialMap> level_maps;
    const SimplicialMap& at(int n) const { return level_maps.at(static_cast<std::size_t>(n)); }
};

/// Levels and generators where the morphism fails to commute with a horizontal operator.
inline std::vector<HorizontalViolation> validate_morphism(const SimplicialSpace& X, const SimplicialSpace& Y, const SpaceMorphism& f) {
    std::vector<HorizontalViolation> out;
    const int N = std::min(X.horizontal_truncation(), Y.horizontal_truncation());
    if (static_cast<int>(f.level_maps.size()) < N + 1) throw Error("morphism is missing levels");
    for (int n = 0; n <= N; ++n) {
        for (const auto& [g, k] : check_simplicial(f.at(n))) out.push_back({n, "vertical face " + std::to_string(k), g});
        const auto& L = X.level(n);
        for (int d = 0; d <= L.truncation(); ++d)
            for (int g = 0; g < L.count(d); ++g) {
                SimplexRef x{{d, g}};
                if (n >= 1)
                    for (int i = 0; i <= n; ++i)
                        if (f.at(n - 1)(X.face_map(n, i)(x)) != Y.face_map(n, i)(f.at(n)(x))) out.push_back({n, "d" + std::to_string(i), x.gen});
                if (n + 1 <= N)
                    for (int i = 0; i <= n; ++i)
                        if (f.at(n + 1)(X.degeneracy_map(n, i)(x)) != Y.degeneracy_map(n, i)(f.at(n)(x))) out.push_back({n, "s" + std::to_string(i), x.gen});
            }
    }
    return out;
}

} // namespace suspsplit
