#pragma once

#include <string>
#include <vector>

#include "suspsplit/admissible.hpp"
#include "suspsplit/filtration.hpp"

namespace suspsplit {

struct TriangularityViolation {
    AdmissibleSeq I, J;
    SimplexRef x;      // simplex of level n - r
    SimplexRef result; // d_{chi(I)} s_J (x)
};

struct TriangularityReport {
    int level = 0;
    int r = 0;
    std::size_t checks = 0;
    std::vector<TriangularityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For admissible I <= J of length r and every simplex x of level n - r:
/// d_{chi(I)} s_J x = x when I = J, and is horizontally degenerate when I < J.
/// Every vertical simplex up to the vertical truncation is tested.
inline TriangularityReport triangularity_check(const Filtration& F, int n, int r) {
    if (n < 0 || n > F.top_level() || r < 0 || r > n) throw Error("triangularity check out of range");
    const auto& X = F.space();
    TriangularityReport rep{n, r, 0, {}};
    const auto seqs = summand_indices(n, r);
    const auto& L = X.level(n - r);
    for (int d = 0; d <= L.truncation(); ++d)
        for (const auto& x : simplices(L, d))
            for (const auto& J : seqs) {
                SimplexRef sx = horizontal_degeneracy(X, n - r, x, J.indices());
                for (const auto& I : seqs) {
                    SeqOrder ord = compare(I, J);
                    if (ord == SeqOrder::greater) continue;
                    ++rep.checks;
                    SimplexRef y = horizontal_face(X, n, sx, chi(I));
                    bool good = (ord == SeqOrder::equal) ? (y == x) : (F.degree(n - r, y) >= 1);
                    if (!good) rep.violations.push_back({I, J, x, y});
                }
            }
    return rep;
}

struct DeltaComponent {
    AdmissibleSeq J;
    SimplicialMap map; // x -> d_{chi(J)} x, level n -> level n - r
};

/// The coordinates of the product-of-faces map, in ascending order of J.
inline std::vector<DeltaComponent> delta_components(const Filtration& F, int n, int r) {
    if (n < 0 || n > F.top_level() || r < 0 || r > n) throw Error("delta components out of range");
    const auto& X = F.space();
    std::vector<DeltaComponent> out;
    for (const auto& J : summand_indices(n, r)) {
        SimplicialMap m = identity_map(X.levels[static_cast<std::size_t>(n)]);
        int level = n;
        const auto seq = chi(J);
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            m = compose(X.face_map(level, *it), m);
            --level;
        }
        out.push_back({J, std::move(m)});
    }
    return out;
}

struct DeltaViolation {
    AdmissibleSeq J;
    GenId generator;
    int source_degree;
    SimplexRef image;
};

struct DeltaReport {
    int level = 0;
    int r = 0;
    std::size_t checks = 0;
    std::vector<DeltaViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Each component d_{chi(J)} maps S^{r+1}(X_n) into S(X_{n-r}).
inline DeltaReport delta_filtration_check(const Filtration& F, int n, int r) {
    DeltaReport rep{n, r, 0, {}};
    const auto& L = F.space().level(n);
    for (const auto& comp : delta_components(F, n, r))
        for (int d = 0; d <= L.truncation(); ++d)
            for (int g = 0; g < L.count(d); ++g) {
                GenId id{d, g};
                const int deg = F.degree(n, id);
                if (deg < r + 1) continue;
                ++rep.checks;
                SimplexRef y = comp.map.image(id);
                if (F.degree(n - r, y) < 1) rep.violations.push_back({comp.J, id, deg, y});
            }
    return rep;
}

} // namespace suspsplit
