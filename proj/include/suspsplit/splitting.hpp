#pragma once

// The maps lambda(n, J) and their sum H(n), checked as isomorphisms in
// reduced homology; the realization filtration modelled by the total complex
// of the bi-normalized double complex; the E^1 page of its spectral sequence.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suspsplit/degeneracy_calculus.hpp"
#include "suspsplit/homology.hpp"

namespace suspsplit {

/// s_J d_{chi(J)} x, before passing to the quotient s_J(X_{n-r}) / s_J S(X_{n-r}).
inline SimplexRef lambda_image(const SimplicialSpace& X, int n, const SimplexRef& x, const AdmissibleSeq& J) {
    const int r = J.length();
    return horizontal_degeneracy(X, n - r, horizontal_face(X, n, x, chi(J)), J.indices());
}

inline void check_summand_index(int n, const AdmissibleSeq& J) {
    if (J.length() > n || (!J.empty() && J.indices().front() > n - 1)) throw Error("admissible sequence " + to_string(J) + " does not index a summand of level " + std::to_string(n));
}

struct HopfComponent {
    int level = 0;
    AdmissibleSeq J;
    PointedQuotient target;
    std::vector<std::pair<GenId, std::optional<SimplexRef>>> values; // nullopt: the basepoint
};

/// Value table of lambda(n, J) on the generators of level n.
inline HopfComponent hopf_component(const Filtration& F, int n, const AdmissibleSeq& J) {
    check_summand_index(n, J);
    HopfComponent h{n, J, summand_quotient(F, n, J), {}};
    const auto& L = F.space().level(n);
    for (int d = 0; d <= L.truncation(); ++d)
        for (int g = 0; g < L.count(d); ++g) {
            SimplexRef y = lambda_image(F.space(), n, SimplexRef{{d, g}}, J);
            if (h.target.denominator.contains(y.gen)) h.values.push_back({{d, g}, std::nullopt});
            else h.values.push_back({{d, g}, y});
        }
    return h;
}

/// Every summand index of level n: r ascending, then the sequence order.
inline std::vector<AdmissibleSeq> all_summand_indices(int n) {
    std::vector<AdmissibleSeq> out;
    for (int r = 0; r <= n; ++r)
        for (auto& J : summand_indices(n, r)) out.push_back(std::move(J));
    return out;
}

inline CellImage lambda_cells(const Filtration& F, int n, const AdmissibleSeq& J) {
    return [&F, n, J](GenId g) { return std::vector<std::pair<std::int64_t, SimplexRef>>{{1, lambda_image(F.space(), n, SimplexRef{g}, J)}}; };
}

struct SummandChains {
    AdmissibleSeq J;
    PointedQuotient quotient;
    ChainComplex complex;
    HomologyBasis basis;
    ChainMap lambda; // from the source chains
};

/// Chains and homology bases for a source inside level n and a list of summands.
struct LevelChains {
    int level = 0;
    int max_degree = -1;
    PointedQuotient source_quotient;
    ChainComplex source;
    HomologyBasis source_basis;
    std::vector<SummandChains> summands;
};

inline LevelChains level_chains(const Filtration& F, int n, const std::vector<AdmissibleSeq>& seqs, const PointedQuotient& source) {
    LevelChains lc;
    lc.level = n;
    lc.source_quotient = source;
    lc.source = normalized_chains(source);
    lc.max_degree = lc.source.reliable_top();
    lc.source_basis = homology_basis(lc.source, lc.max_degree);
    for (const auto& J : seqs) {
        check_summand_index(n, J);
        SummandChains s;
        s.J = J;
        s.quotient = summand_quotient(F, n, J);
        s.complex = normalized_chains(s.quotient);
        s.basis = homology_basis(s.complex, lc.max_degree);
        s.lambda = chain_map_from(lc.source, s.quotient, s.complex, lambda_cells(F, n, J));
        lc.summands.push_back(std::move(s));
    }
    return lc;
}

/// The sum of the lambda(n, J) in homology, one stacked matrix per degree.
struct BlockMap {
    int level = 0;
    std::vector<AdmissibleSeq> summands;
    std::vector<HomologyGroup> source_groups;
    std::vector<std::vector<HomologyMatrix>> components; // [summand][degree]
    std::vector<HomologyMatrix> stacked;                 // [degree]
    std::vector<IsoCertificate> certificates;            // [degree]

    bool iso() const {
        return std::all_of(certificates.begin(), certificates.end(), [](const IsoCertificate& c) { return c.iso(); });
    }
};

inline BlockMap block_map(const LevelChains& lc) {
    BlockMap H;
    H.level = lc.level;
    for (const auto& s : lc.summands) H.summands.push_back(s.J);
    H.components.resize(lc.summands.size());
    for (int k = 0; k <= lc.max_degree; ++k) {
        const auto& src = lc.source_basis.at(k);
        H.source_groups.push_back(src.group());
        std::vector<HomologyMatrix> parts;
        for (std::size_t s = 0; s < lc.summands.size(); ++s) {
            parts.push_back(induced_matrix(src, lc.summands[s].basis.at(k), lc.summands[s].lambda.at(k)));
            H.components[s].push_back(parts.back());
        }
        H.stacked.push_back(stack(parts, src.group(), k));
        H.certificates.push_back(certify_isomorphism(H.stacked.back()));
    }
    return H;
}

/// H(n) on the reduced homology of the whole level.
inline BlockMap build_H(const Filtration& F, int n) {
    return block_map(level_chains(F, n, all_summand_indices(n), stage_subobject(F, n, 0)));
}

struct BlockEntry {
    AdmissibleSeq row, col; // lambda(n, row) restricted to the summand of col
    int degree = 0;
    bool expect_identity = false;
    bool holds = false;
};

struct StageHomology {
    int r = 0;
    long long multiplicity = 0;       // C(n, r) summands used
    long long wide_multiplicity = 0; // C(n + 1, r) as counted with indices up to n
    std::vector<HomologyGroup> groups;
    std::vector<HomologyGroup> summand_sum;
    bool wedge_identity = false;
};

struct CountingTerm {
    int r = 0;
    long long multiplicity = 0;
    long long rank = 0;
};

/// |X_n| - 1 = sum over r of C(n, r) times the reduced rank of each summand (discrete levels).
struct CountingIdentity {
    long long lhs = 0;
    long long rhs = 0;
    std::vector<CountingTerm> terms;
    bool holds() const { return lhs == rhs; }
};

struct SplitReport {
    int level = 0;
    int max_degree = -1;
    std::vector<HomologyGroup> level_groups;
    std::vector<StageHomology> stages;
    std::vector<std::pair<AdmissibleSeq, std::vector<HomologyGroup>>> summands;
    BlockMap H;
    std::vector<BlockEntry> blocks;
    bool diagonal_identity = false;
    bool block_triangular = false;
    std::size_t chain_checks = 0;
    std::vector<std::string> chain_violations;
    bool coarse_identity = false;
    std::optional<CountingIdentity> counting;
    std::vector<std::string> errors;

    bool ok() const {
        return errors.empty() && H.iso() && diagonal_identity && block_triangular && chain_violations.empty() && coarse_identity &&
               std::all_of(stages.begin(), stages.end(), [](const StageHomology& s) { return s.wedge_identity; }) &&
               (!counting || counting->holds());
    }
};

inline std::vector<HomologyGroup> groups_up_to(const ChainComplex& C, int max_degree) {
    auto h = homology(C);
    std::vector<HomologyGroup> out;
    for (int k = 0; k <= max_degree; ++k) out.push_back(h.get(k));
    return out;
}

namespace detail {

/// The unique J of length r with g in the image of s_J (g of degree exactly r).
inline std::optional<AdmissibleSeq> decomposition_index(const Filtration& F, int n, GenId g, int r) {
    for (const auto& J : summand_indices(n, r))
        if (in_horizontal_image(F.space(), n, SimplexRef{g}, J)) return J;
    return std::nullopt;
}

/// Chain-level form of the triangularity: on a generator g of degree r lying
/// in s_J, lambda(n, J') is the identity for J' = J and lands in the collapsed
/// part for |J'| < r or J' < J of length r.
inline void chain_triangularity(const Filtration& F, int n, SplitReport& rep) {
    const auto& L = F.space().level(n);
    const auto seqs = all_summand_indices(n);
    for (int d = 0; d <= L.truncation(); ++d)
        for (int i = 0; i < L.count(d); ++i) {
            GenId g{d, i};
            const int r = F.degree(n, g);
            auto J = decomposition_index(F, n, g, r);
            if (!J) {
                rep.chain_violations.push_back("generator " + L.label(g) + " of degree " + std::to_string(r) + " lies in no s_J");
                continue;
            }
            for (const auto& Jp : seqs) {
                if (Jp.length() > r) break;
                if (Jp.length() == r && compare(Jp, *J) == SeqOrder::greater) continue;
                ++rep.chain_checks;
                SimplexRef y = lambda_image(F.space(), n, SimplexRef{g}, Jp);
                const bool good = (Jp == *J) ? (y == SimplexRef{g}) : (F.degree(n, y) >= Jp.length() + 1);
                if (!good) rep.chain_violations.push_back("lambda" + to_string(Jp) + " on " + L.label(g) + " gives " + L.label(y));
            }
        }
}

/// lambda(n, J') restricted to the summand of J, in homology: the identity on
/// the diagonal and zero below it.
inline void homology_blocks(const Filtration& F, const LevelChains& lc, SplitReport& rep) {
    rep.diagonal_identity = true;
    rep.block_triangular = true;
    for (const auto& col : lc.summands)
        for (const auto& row : lc.summands) {
            if (row.J.length() > col.J.length()) continue;
            if (row.J.length() == col.J.length() && compare(row.J, col.J) == SeqOrder::greater) continue;
            const bool diag = row.J == col.J;
            std::optional<ChainMap> m;
            try {
                m = chain_map_from(col.complex, row.quotient, row.complex, lambda_cells(F, lc.level, row.J));
            } catch (const Error& e) {
                rep.errors.push_back("lambda" + to_string(row.J) + " on summand " + to_string(col.J) + ": " + e.what());
            }
            for (int k = 0; k <= lc.max_degree; ++k) {
                BlockEntry b{row.J, col.J, k, diag, false};
                if (m) {
                    auto M = induced_matrix(col.basis.at(k), row.basis.at(k), m->at(k));
                    b.holds = diag ? is_identity(M) : is_zero(M);
                }
                if (!b.holds) (diag ? rep.diagonal_identity : rep.block_triangular) = false;
                rep.blocks.push_back(std::move(b));
            }
        }
}

} // namespace detail

/// H(n) is an isomorphism in each reliable degree, together with the coarse
/// identity H~(X_n) = sum_r H~(S^r / S^{r+1}) and the wedge identity per stage.
inline SplitReport verify_theorem_splitting(const Filtration& F, int n) {
    if (n < 0 || n > F.top_level()) throw Error("level out of range");
    SplitReport rep;
    rep.level = n;
    const auto lc = level_chains(F, n, all_summand_indices(n), stage_subobject(F, n, 0));
    rep.max_degree = lc.max_degree;
    rep.H = block_map(lc);
    rep.level_groups = rep.H.source_groups;
    for (const auto& s : lc.summands) {
        std::vector<HomologyGroup> g;
        for (int k = 0; k <= lc.max_degree; ++k) g.push_back(s.basis.at(k).group());
        rep.summands.push_back({s.J, std::move(g)});
    }
    std::vector<std::vector<HomologyGroup>> by_stage;
    for (int r = 0; r <= n; ++r) {
        StageHomology st;
        st.r = r;
        st.multiplicity = binomial(n, r);
        st.wide_multiplicity = binomial(n + 1, r);
        st.groups = groups_up_to(normalized_chains(stage_quotient(F, n, r)), lc.max_degree);
        st.wedge_identity = true;
        for (int k = 0; k <= lc.max_degree; ++k) {
            std::vector<HomologyGroup> parts;
            for (const auto& [J, g] : rep.summands)
                if (J.length() == r) parts.push_back(g[static_cast<std::size_t>(k)]);
            st.summand_sum.push_back(direct_sum(parts));
            st.wedge_identity = st.wedge_identity && same_group(st.summand_sum.back(), st.groups[static_cast<std::size_t>(k)]);
        }
        rep.stages.push_back(std::move(st));
    }
    rep.coarse_identity = true;
    for (int k = 0; k <= lc.max_degree; ++k) {
        std::vector<HomologyGroup> parts;
        for (const auto& st : rep.stages) parts.push_back(st.groups[static_cast<std::size_t>(k)]);
        rep.coarse_identity = rep.coarse_identity && same_group(direct_sum(parts), rep.level_groups[static_cast<std::size_t>(k)]);
    }
    if (F.space().discrete()) {
        CountingIdentity c;
        c.lhs = F.space().level(n).count(0) - 1;
        for (int r = 0; r <= n; ++r) {
            const auto& src = F.space().level(n - r);
            long long rank = (r == n) ? src.count(0) - 1 : F.stage(n - r, 0).count(0) - F.stage(n - r, 1).count(0);
            c.terms.push_back({r, binomial(n, r), rank});
            c.rhs += binomial(n, r) * rank;
        }
        rep.counting = c;
    }
    detail::chain_triangularity(F, n, rep);
    detail::homology_blocks(F, lc, rep);
    return rep;
}

struct RestrictionReport {
    int level = 0;
    int stage = 0;
    std::size_t kill_checks = 0;
    std::vector<std::string> kill_violations;
    BlockMap H; // restricted to S^t(X_n), onto the summands with |J| >= t
    bool ok() const { return kill_violations.empty() && H.iso(); }
};

/// The lambda(n, J) with |J| < t collapse S^t(X_n), and the remaining
/// components restrict to an isomorphism on the homology of S^t(X_n).
inline RestrictionReport verify_restriction(const Filtration& F, int n, int t) {
    if (n < 0 || n > F.top_level() || t < 0 || t > n) throw Error("restriction out of range");
    RestrictionReport rep;
    rep.level = n;
    rep.stage = t;
    const auto& L = F.space().level(n);
    std::vector<AdmissibleSeq> kept;
    for (const auto& J : all_summand_indices(n)) {
        if (J.length() >= t) {
            kept.push_back(J);
            continue;
        }
        for (GenId g : F.stage(n, t).members()) {
            ++rep.kill_checks;
            SimplexRef y = lambda_image(F.space(), n, SimplexRef{g}, J);
            if (F.degree(n, y) < J.length() + 1) rep.kill_violations.push_back("lambda" + to_string(J) + " on " + L.label(g) + " gives " + L.label(y));
        }
    }
    rep.H = block_map(level_chains(F, n, kept, stage_subobject(F, n, t)));
    return rep;
}

// ---------------------------------------------------------------------------
// Realization

/// Total complex of the double complex whose (p, q) term is spanned by the
/// q-simplices of X_p that are nondegenerate in both directions;
/// D = d^h + (-1)^p d^v.
struct TotalComplex {
    ChainComplex complex;
    std::vector<std::vector<std::pair<int, GenId>>> cells; // per total degree: (column, generator)
    int columns = 0;
    std::vector<int> column_truncation;
};

inline TotalComplex total_complex(const Filtration& F, bool augmented) {
    const auto& X = F.space();
    TotalComplex T;
    T.columns = X.horizontal_truncation() + 1;
    int top = 0;
    for (int p = 0; p < T.columns; ++p) {
        T.column_truncation.push_back(X.level(p).truncation());
        top = std::max(top, p + X.level(p).truncation());
    }
    T.cells.resize(static_cast<std::size_t>(top) + 1);
    std::map<std::pair<int, GenId>, int> position;
    for (int p = 0; p < T.columns; ++p) {
        const auto& L = X.level(p);
        for (int q = 0; q <= L.truncation(); ++q)
            for (int g = 0; g < L.count(q); ++g) {
                GenId id{q, g};
                if (F.degree(p, id) != 0) continue;
                auto& bucket = T.cells[static_cast<std::size_t>(p + q)];
                position[{p, id}] = static_cast<int>(bucket.size());
                bucket.push_back({p, id});
            }
    }
    ChainComplex& C = T.complex;
    C.top = top;
    C.augmented = augmented;
    for (const auto& b : T.cells) C.basis_size.push_back(static_cast<int>(b.size()));
    C.boundary.emplace_back(augmented ? 1 : 0, C.size(0));
    if (augmented)
        for (int j = 0; j < C.size(0); ++j) C.boundary[0].add(0, j, 1);
    auto target = [&](int p, const SimplexRef& y) -> std::optional<int> {
        if (y.degenerate() || F.degree(p, y.gen) != 0) return std::nullopt;
        return position.at({p, y.gen});
    };
    for (int k = 1; k <= top; ++k) {
        SparseMatrix D(C.size(k - 1), C.size(k));
        for (int j = 0; j < C.size(k); ++j) {
            auto [p, g] = T.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (g.dim >= 1) {
                const auto& faces = X.level(p).faces(g);
                for (int i = 0; i <= g.dim; ++i)
                    if (auto row = target(p, faces[static_cast<std::size_t>(i)])) D.add(*row, j, ((p + i) % 2 == 0) ? 1 : -1);
            }
            if (p >= 1)
                for (int i = 0; i <= p; ++i)
                    if (auto row = target(p - 1, X.face_map(p, i).image(g))) D.add(*row, j, (i % 2 == 0) ? 1 : -1);
        }
        C.boundary.push_back(std::move(D));
    }
    check_boundaries(C);
    return T;
}

/// F_j / F_{j-1}: the cells of column j with the induced differential.
/// Reduced homology of F_0 uses the augmentation.
inline ChainComplex column_quotient(const TotalComplex& T, int j, bool reduced = true) {
    if (j < 0 || j >= T.columns) throw Error("column out of range");
    const ChainComplex& S = T.complex;
    ChainComplex C;
    C.top = S.top;
    C.augmented = reduced && j == 0;
    std::vector<std::vector<int>> keep(static_cast<std::size_t>(S.top) + 1);
    std::vector<std::vector<int>> index(static_cast<std::size_t>(S.top) + 1);
    C.cells.resize(static_cast<std::size_t>(S.top) + 1);
    for (int k = 0; k <= S.top; ++k) {
        index[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(S.size(k)), -1);
        for (int c = 0; c < S.size(k); ++c)
            if (T.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)].first == j) {
                index[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = static_cast<int>(keep[static_cast<std::size_t>(k)].size());
                keep[static_cast<std::size_t>(k)].push_back(c);
                C.cells[static_cast<std::size_t>(k)].push_back(T.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)].second);
            }
        C.basis_size.push_back(static_cast<int>(keep[static_cast<std::size_t>(k)].size()));
    }
    C.boundary.emplace_back(C.augmented ? 1 : 0, C.size(0));
    if (C.augmented)
        for (int c = 0; c < C.size(0); ++c) C.boundary[0].add(0, c, 1);
    for (int k = 1; k <= S.top; ++k) {
        SparseMatrix D(C.size(k - 1), C.size(k));
        for (int c = 0; c < C.size(k); ++c)
            for (const auto& [row, v] : S.d(k).column(keep[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)])) {
                int r = index[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(row)];
                if (r >= 0) D.add(r, c, v);
            }
        C.boundary.push_back(std::move(D));
    }
    check_boundaries(C);
    return C;
}

struct RealizationReport {
    int column = 0;
    int max_degree = 0;
    std::vector<HomologyGroup> filtration_quotient; // H~_k(F_j / F_{j-1})
    std::vector<HomologyGroup> shifted_level;       // H~_{k-j}(X_j / S(X_j))
    bool ok() const {
        for (std::size_t k = 0; k < filtration_quotient.size(); ++k)
            if (!same_group(filtration_quotient[k], shifted_level[k])) return false;
        return true;
    }
};

inline RealizationReport verify_realization_quotients(const Filtration& F, const TotalComplex& T, int j) {
    if (j < 0 || j > F.top_level()) throw Error("column out of range");
    RealizationReport rep;
    rep.column = j;
    rep.max_degree = j + T.column_truncation[static_cast<std::size_t>(j)] - 1;
    auto lhs = homology(column_quotient(T, j));
    auto rhs = homology(normalized_chains(level_mod_degenerate(F, j)));
    for (int k = 0; k <= rep.max_degree; ++k) {
        rep.filtration_quotient.push_back(lhs.get(k));
        rep.shifted_level.push_back(k < j ? HomologyGroup{} : rhs.get(k - j));
    }
    return rep;
}

inline RealizationReport verify_realization_quotients(const Filtration& F, int j) {
    return verify_realization_quotients(F, total_complex(F, true), j);
}

struct CorollaryReport {
    int level = 0;
    int stage = 0;
    long long multiplicity = 0;
    int shift = 0; // n - t
    std::vector<HomologyGroup> stage_quotient;  // H~_k(S^t / S^{t+1})
    std::vector<HomologyGroup> column;          // H~_{k+n-t}(F_{n-t} / F_{n-t-1})
    std::vector<HomologyGroup> column_sum;      // C(n, t) copies
    bool ok() const {
        for (std::size_t k = 0; k < stage_quotient.size(); ++k)
            if (!same_group(stage_quotient[k], column_sum[k])) return false;
        return true;
    }
};

inline CorollaryReport verify_corollary_shift(const Filtration& F, const TotalComplex& T, int n, int t) {
    if (n < 0 || n > F.top_level() || t < 0 || t > n) throw Error("corollary check out of range");
    CorollaryReport rep;
    rep.level = n;
    rep.stage = t;
    rep.shift = n - t;
    rep.multiplicity = binomial(n, t);
    const int max_degree = std::min(F.space().level(n).truncation(), T.column_truncation[static_cast<std::size_t>(rep.shift)]) - 1;
    auto lhs = homology(normalized_chains(stage_quotient(F, n, t)));
    auto rhs = homology(column_quotient(T, rep.shift));
    for (int k = 0; k <= max_degree; ++k) {
        rep.stage_quotient.push_back(lhs.get(k));
        rep.column.push_back(rhs.get(k + rep.shift));
        rep.column_sum.push_back(power(rep.column.back(), rep.multiplicity));
    }
    return rep;
}

inline CorollaryReport verify_corollary_shift(const Filtration& F, int n, int t) {
    return verify_corollary_shift(F, total_complex(F, true), n, t);
}

// ---------------------------------------------------------------------------
// E^1 page

struct E1Page {
    int columns = 0;
    int max_degree = 0; // vertical degrees computed
    std::vector<std::vector<HomologyGroup>> entries; // [j][k] = H_k(X_j / S(X_j)), column 0 unreduced
    std::vector<std::vector<HomologyMatrix>> d1;     // [j][k], j >= 1, column j -> column j - 1
    bool d1_squared_zero = true;
    // discrete levels only
    std::optional<std::vector<HomologyGroup>> e2;
    std::optional<std::vector<HomologyGroup>> total;
    int reliable_top = -1;
    bool matches_total = true;

    bool ok() const { return d1_squared_zero && matches_total; }
};

inline E1Page segal_E1(const Filtration& F) {
    const auto& X = F.space();
    E1Page page;
    page.columns = X.horizontal_truncation() + 1;
    page.max_degree = X.level(0).truncation() - 1;
    for (int j = 1; j < page.columns; ++j) page.max_degree = std::min(page.max_degree, X.level(j).truncation() - 1);
    std::vector<PointedQuotient> quotients;
    std::vector<ChainComplex> complexes;
    std::vector<HomologyBasis> bases;
    for (int j = 0; j < page.columns; ++j) {
        quotients.push_back(level_mod_degenerate(F, j));
        complexes.push_back(normalized_chains(quotients.back(), false));
        bases.push_back(homology_basis(complexes.back(), page.max_degree));
        std::vector<HomologyGroup> col;
        for (int k = 0; k <= page.max_degree; ++k) col.push_back(bases.back().at(k).group());
        page.entries.push_back(std::move(col));
    }
    page.d1.resize(static_cast<std::size_t>(page.columns));
    for (int j = 1; j < page.columns; ++j) {
        auto image = [&X, j](GenId g) {
            std::vector<std::pair<std::int64_t, SimplexRef>> out;
            for (int i = 0; i <= j; ++i) out.push_back({(i % 2 == 0) ? 1 : -1, X.face_map(j, i).image(g)});
            return out;
        };
        ChainMap m = chain_map_from(complexes[static_cast<std::size_t>(j)], quotients[static_cast<std::size_t>(j) - 1], complexes[static_cast<std::size_t>(j) - 1], image);
        for (int k = 0; k <= page.max_degree; ++k)
            page.d1[static_cast<std::size_t>(j)].push_back(induced_matrix(bases[static_cast<std::size_t>(j)].at(k), bases[static_cast<std::size_t>(j) - 1].at(k), m.at(k)));
    }
    for (int j = 2; j < page.columns; ++j)
        for (int k = 0; k <= page.max_degree; ++k)
            if (!is_zero(compose(page.d1[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(k)], page.d1[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]))) page.d1_squared_zero = false;
    if (X.discrete() && page.max_degree >= 0) {
        ChainComplex E;
        E.top = page.columns - 1;
        for (int j = 0; j < page.columns; ++j) E.basis_size.push_back(page.entries[static_cast<std::size_t>(j)][0].betti);
        E.boundary.emplace_back(0, E.size(0));
        for (int j = 1; j < page.columns; ++j) {
            const auto& M = page.d1[static_cast<std::size_t>(j)][0];
            SparseMatrix B(E.size(j - 1), E.size(j));
            for (int r = 0; r < M.target_count(); ++r)
                for (int c = 0; c < M.source_count(); ++c)
                    if (auto v = M.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) B.add(r, c, v);
            E.boundary.push_back(std::move(B));
        }
        check_boundaries(E);
        page.reliable_top = E.reliable_top();
        page.e2 = groups_up_to(E, page.reliable_top);
        page.total = groups_up_to(total_complex(F, false).complex, page.reliable_top);
        for (int k = 0; k <= page.reliable_top; ++k)
            page.matches_total = page.matches_total && same_group((*page.e2)[static_cast<std::size_t>(k)], (*page.total)[static_cast<std::size_t>(k)]);
    }
    return page;
}

// ---------------------------------------------------------------------------
// Naturality

struct NaturalitySquare {
    AdmissibleSeq J;
    int degree = 0;
    bool commutes = false;
};

struct NaturalityReport {
    int level = 0;
    std::vector<NaturalitySquare> squares;
    std::vector<std::string> errors;
    bool ok() const {
        return errors.empty() && std::all_of(squares.begin(), squares.end(), [](const NaturalitySquare& s) { return s.commutes; });
    }
};

/// lambda_Y(n, J)_* f_* = f^J_* lambda_X(n, J)_* for every summand and reliable degree.
inline NaturalityReport naturality_check(const Filtration& FX, const Filtration& FY, const SpaceMorphism& f, int n) {
    NaturalityReport rep;
    rep.level = n;
    const auto seqs = all_summand_indices(n);
    const auto lx = level_chains(FX, n, seqs, stage_subobject(FX, n, 0));
    const auto ly = level_chains(FY, n, seqs, stage_subobject(FY, n, 0));
    const SimplicialMap& fn = f.at(n);
    CellImage image = [&fn](GenId g) { return std::vector<std::pair<std::int64_t, SimplexRef>>{{1, fn.image(g)}}; };
    try {
        ChainMap on_level = chain_map_from(lx.source, ly.source_quotient, ly.source, image);
        const int top = std::min(lx.max_degree, ly.max_degree);
        for (std::size_t s = 0; s < seqs.size(); ++s) {
            const auto& sx = lx.summands[s];
            const auto& sy = ly.summands[s];
            ChainMap on_summand = chain_map_from(sx.complex, sy.quotient, sy.complex, image);
            for (int k = 0; k <= top; ++k) {
                auto left = compose(induced_matrix(ly.source_basis.at(k), sy.basis.at(k), sy.lambda.at(k)),
                                    induced_matrix(lx.source_basis.at(k), ly.source_basis.at(k), on_level.at(k)));
                auto right = compose(induced_matrix(sx.basis.at(k), sy.basis.at(k), on_summand.at(k)),
                                     induced_matrix(lx.source_basis.at(k), sx.basis.at(k), sx.lambda.at(k)));
                rep.squares.push_back({seqs[s], k, same_map(left, right)});
            }
        }
    } catch (const Error& e) {
        rep.errors.push_back(e.what());
    }
    return rep;
}

} // namespace suspsplit
