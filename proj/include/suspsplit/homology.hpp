#pragma once

// Integer homology of normalized chains.
//
// homology() only needs ranks and invariant factors and goes through the
// sparse SNF. homology_basis() additionally produces explicit generators and
// a coordinate map on cycles, which is what induced maps on homology are
// expressed in. Generators are listed torsion first (in invariant-factor
// order), then free.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "suspsplit/filtration.hpp"
#include "suspsplit/smith.hpp"

namespace suspsplit {

/// Degrees 0..top. boundary[d] : C_d -> C_{d-1}; boundary[0] is the
/// augmentation (a 1 x n_0 row of ones) when augmented, else 0 x n_0.
struct ChainComplex {
    int top = 0;
    bool augmented = false;
    std::vector<int> basis_size;
    std::vector<SparseMatrix> boundary;
    std::vector<std::vector<GenId>> cells; // optional basis labels

    int size(int d) const { return (d < 0 || d > top) ? 0 : basis_size[static_cast<std::size_t>(d)]; }
    /// Highest degree whose homology is not affected by the truncation.
    int reliable_top() const { return top - 1; }

    const SparseMatrix& d(int deg) const { return boundary.at(static_cast<std::size_t>(deg)); }

    /// boundary into degree top+1 is absent: an empty k x 0 matrix.
    SparseMatrix d_or_empty(int deg) const {
        if (deg > top) return SparseMatrix(size(deg - 1), 0);
        return d(deg);
    }
};

/// Throws if some composite of consecutive boundaries is nonzero.
inline void check_boundaries(const ChainComplex& C) {
    for (int d = 1; d <= C.top; ++d)
        if (!C.d(d - 1).multiply(C.d(d)).is_zero()) throw Error("boundary of boundary is nonzero in degree " + std::to_string(d));
}

struct HomologyGroup {
    int betti = 0;
    std::vector<std::int64_t> torsion; // invariant factors > 1, divisibility order

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

inline std::string to_string(const HomologyGroup& h) {
    std::string s;
    if (h.betti == 1) s = "Z";
    else if (h.betti > 1) s = "Z^" + std::to_string(h.betti);
    for (auto t : h.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(t);
    }
    return s.empty() ? "0" : s;
}

/// Direct sum, returned in canonical invariant-factor form.
inline HomologyGroup direct_sum(const std::vector<HomologyGroup>& parts) {
    HomologyGroup out;
    std::vector<std::int64_t> cyc;
    for (const auto& p : parts) {
        out.betti += p.betti;
        cyc.insert(cyc.end(), p.torsion.begin(), p.torsion.end());
    }
    out.torsion = canonical_torsion(cyc);
    return out;
}

inline HomologyGroup power(const HomologyGroup& g, long long copies) {
    return direct_sum(std::vector<HomologyGroup>(static_cast<std::size_t>(copies), g));
}

struct HomologyGroups {
    std::vector<HomologyGroup> degrees; // 0..top
    int reliable_top = 0;               // degrees above are flagged unreliable

    const HomologyGroup& at(int d) const { return degrees.at(static_cast<std::size_t>(d)); }
    HomologyGroup get(int d) const { return (d < 0 || d >= static_cast<int>(degrees.size())) ? HomologyGroup{} : degrees[static_cast<std::size_t>(d)]; }
};

inline HomologyGroups homology(const ChainComplex& C) {
    HomologyGroups out;
    out.reliable_top = C.reliable_top();
    std::vector<std::vector<std::int64_t>> inv(static_cast<std::size_t>(C.top) + 2);
    for (int d = 0; d <= C.top; ++d) inv[static_cast<std::size_t>(d)] = smith_invariants(C.d(d));
    for (int d = 0; d <= C.top; ++d) {
        const int rank_out = static_cast<int>(inv[static_cast<std::size_t>(d)].size());
        const auto& in = inv[static_cast<std::size_t>(d) + 1];
        HomologyGroup h;
        h.betti = C.size(d) - rank_out - static_cast<int>(in.size());
        for (auto t : in)
            if (t > 1) h.torsion.push_back(t);
        out.degrees.push_back(std::move(h));
    }
    return out;
}

/// Normalized chains of numerator / denominator. Cells are the numerator's
/// generators outside the denominator; faces that are degenerate or fall in
/// the denominator are dropped. With `reduced` and an empty denominator the
/// complex is augmented.
inline ChainComplex normalized_chains(const PointedQuotient& Q, bool reduced = true) {
    const auto& X = *Q.level;
    ChainComplex C;
    C.top = X.truncation();
    C.augmented = reduced && !Q.pointed();
    C.cells.resize(static_cast<std::size_t>(C.top) + 1);
    std::map<GenId, int> position;
    for (GenId g : Q.cells()) {
        auto& bucket = C.cells[static_cast<std::size_t>(g.dim)];
        position[g] = static_cast<int>(bucket.size());
        bucket.push_back(g);
    }
    for (int d = 0; d <= C.top; ++d) C.basis_size.push_back(static_cast<int>(C.cells[static_cast<std::size_t>(d)].size()));
    C.boundary.emplace_back(C.augmented ? 1 : 0, C.size(0));
    if (C.augmented)
        for (int j = 0; j < C.size(0); ++j) C.boundary[0].add(0, j, 1);
    for (int d = 1; d <= C.top; ++d) {
        SparseMatrix B(C.size(d - 1), C.size(d));
        for (int j = 0; j < C.size(d); ++j) {
            GenId g = C.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
            const auto& faces = X.faces(g);
            for (int i = 0; i <= d; ++i) {
                const auto& f = faces[static_cast<std::size_t>(i)];
                if (f.degenerate() || Q.denominator.contains(f.gen)) continue;
                if (!Q.numerator.contains(f.gen)) throw Error("numerator is not closed under faces");
                B.add(position.at(f.gen), j, (i % 2 == 0) ? 1 : -1);
            }
        }
        C.boundary.push_back(std::move(B));
    }
    check_boundaries(C);
    return C;
}

inline ChainComplex normalized_chains(const SimplicialSetPtr& X, bool reduced = true) { return normalized_chains(whole_level(X), reduced); }

/// Explicit homology of one degree: generators and a coordinate map on cycles.
struct DegreeBasis {
    int degree = 0;
    int chain_rank = 0;                 // size of C_d
    std::vector<std::int64_t> torsion;  // orders of the torsion generators
    int free_rank = 0;
    SparseMatrix to_kernel;             // q x chain_rank : cycle -> kernel-lattice coordinates
    SparseMatrix change;                // q x q : kernel coordinates -> presentation coordinates
    int first_generator = 0;            // presentation index of the first nontrivial generator
    std::vector<std::vector<std::int64_t>> generators; // chain representatives

    int generator_count() const { return static_cast<int>(torsion.size()) + free_rank; }
    HomologyGroup group() const { return {free_rank, torsion}; }

    /// Coordinates of the class of a cycle: torsion entries reduced into [0, order).
    std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& cycle) const {
        std::vector<std::int64_t> c = to_kernel.apply(cycle);
        std::vector<std::int64_t> y = change.apply(c);
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < torsion.size(); ++i) out.push_back(mod_positive(y[static_cast<std::size_t>(first_generator) + i], torsion[i]));
        for (int i = 0; i < free_rank; ++i) out.push_back(y[static_cast<std::size_t>(first_generator) + torsion.size() + static_cast<std::size_t>(i)]);
        return out;
    }
};

namespace detail {

template <class Int>
DenseMatrix<Int> dense_rows(const DenseMatrix<Int>& m, int from) {
    DenseMatrix<Int> out(m.rows() - from, m.cols());
    for (int r = from; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r - from, c) = m(r, c);
    return out;
}

template <class Int>
DegreeBasis degree_basis(const SparseMatrix& out_boundary, const SparseMatrix& in_boundary, int degree) {
    DegreeBasis b;
    b.degree = degree;
    b.chain_rank = out_boundary.cols();
    const int k = b.chain_rank;
    auto outer = smith_dense(DenseMatrix<Int>::from_sparse(out_boundary), false, true);
    const int s = outer.rank();
    const int q = k - s;
    DenseMatrix<Int> tail = dense_rows(outer.right_inv, s); // q x k
    // image of the incoming boundary in kernel coordinates
    DenseMatrix<Int> M(q, in_boundary.cols());
    for (int c = 0; c < in_boundary.cols(); ++c)
        for (const auto& [r, v] : in_boundary.column(c))
            for (int i = 0; i < q; ++i)
                if (tail(i, r) != 0) M(i, c) += tail(i, r) * Int(v);
    auto pres = smith_dense(std::move(M), true, false);
    int units = 0;
    for (const auto& e : pres.diagonal) {
        if (e == 1) ++units;
        else b.torsion.push_back(to_int64(e));
    }
    b.first_generator = units;
    b.free_rank = q - pres.rank();
    b.to_kernel = tail.to_sparse();
    b.change = pres.left.to_sparse();
    // representatives: K * P^{-1} e_i, K = columns s.. of V
    for (int i = units; i < q; ++i) {
        std::vector<std::int64_t> z(static_cast<std::size_t>(k));
        for (int j = 0; j < q; ++j) {
            const Int& w = pres.left_inv(j, i);
            if (w == 0) continue;
            for (int row = 0; row < k; ++row)
                if (outer.right(row, s + j) != 0) z[static_cast<std::size_t>(row)] = to_int64(Int(z[static_cast<std::size_t>(row)]) + outer.right(row, s + j) * w);
        }
        b.generators.push_back(std::move(z));
    }
    return b;
}

} // namespace detail

struct HomologyBasis {
    std::vector<DegreeBasis> degrees; // 0..max_degree
    int reliable_top = 0;
    const DegreeBasis& at(int d) const { return degrees.at(static_cast<std::size_t>(d)); }
};

/// Explicit homology in degrees 0..max_degree (clamped to the complex).
inline HomologyBasis homology_basis(const ChainComplex& C, int max_degree) {
    HomologyBasis hb;
    hb.reliable_top = C.reliable_top();
    for (int d = 0; d <= std::min(max_degree, C.top); ++d) {
        SparseMatrix out = C.d(d);
        SparseMatrix in = C.d_or_empty(d + 1);
        hb.degrees.push_back(with_overflow_fallback([&]<class Int>() { return detail::degree_basis<Int>(out, in, d); }));
    }
    return hb;
}

/// Chain map between two complexes, one matrix per degree (target x source),
/// plus the component between augmentation terms.
struct ChainMap {
    std::vector<SparseMatrix> components;
    std::int64_t augmentation = 0;
    const SparseMatrix& at(int d) const { return components.at(static_cast<std::size_t>(d)); }
};

/// Throws with the failing degree if f does not commute with the boundaries.
inline void check_chain_map(const ChainComplex& S, const ChainComplex& T, const ChainMap& f) {
    const int top = std::min(S.top, T.top);
    for (int d = 1; d <= top; ++d)
        if (T.d(d).multiply(f.at(d)) != f.at(d - 1).multiply(S.d(d))) throw Error("not a chain map in degree " + std::to_string(d));
    if (T.augmented) {
        SparseMatrix lhs = T.d(0).multiply(f.at(0));
        SparseMatrix rhs(1, S.size(0));
        if (S.augmented)
            for (int j = 0; j < S.size(0); ++j) rhs.add(0, j, f.augmentation);
        if (lhs != rhs) throw Error("chain map does not respect the augmentation");
    }
}

/// A chain map between normalized complexes of pointed quotients, given on
/// each source cell as a signed sum of target simplices. Degenerate simplices
/// and simplices in the target denominator contribute zero.
using CellImage = std::function<std::vector<std::pair<std::int64_t, SimplexRef>>(GenId)>;

inline ChainMap chain_map_from(const ChainComplex& S, const PointedQuotient& target, const ChainComplex& T, const CellImage& image) {
    std::map<GenId, int> position;
    for (const auto& bucket : T.cells)
        for (std::size_t i = 0; i < bucket.size(); ++i) position[bucket[i]] = static_cast<int>(i);
    ChainMap f;
    const int top = std::min(S.top, T.top);
    bool aug_set = false;
    for (int d = 0; d <= top; ++d) {
        SparseMatrix M(T.size(d), S.size(d));
        for (int j = 0; j < S.size(d); ++j) {
            GenId g = S.cells.at(static_cast<std::size_t>(d)).at(static_cast<std::size_t>(j));
            std::int64_t total = 0;
            for (const auto& [coef, y] : image(g)) {
                total += coef;
                if (y.dim() != d) throw Error("cell image has wrong dimension");
                if (y.degenerate() || target.denominator.contains(y.gen)) continue;
                if (!target.numerator.contains(y.gen)) throw Error("cell image leaves the target: " + to_string(y));
                M.add(position.at(y.gen), j, coef);
            }
            if (d == 0 && !aug_set) {
                f.augmentation = (S.augmented && T.augmented) ? total : 0;
                aug_set = true;
            }
        }
        f.components.push_back(std::move(M));
    }
    check_chain_map(S, T, f);
    return f;
}

/// Matrix of a map on homology in generator coordinates (rows: target
/// generators, columns: source generators; torsion rows reduced).
struct HomologyMatrix {
    int degree = 0;
    HomologyGroup source, target;
    std::vector<std::vector<std::int64_t>> rows; // target_count x source_count

    int source_count() const { return static_cast<int>(source.torsion.size()) + source.betti; }
    int target_count() const { return static_cast<int>(target.torsion.size()) + target.betti; }
};

inline HomologyMatrix induced_matrix(const DegreeBasis& src, const DegreeBasis& dst, const SparseMatrix& f_d) {
    HomologyMatrix m;
    m.degree = src.degree;
    m.source = src.group();
    m.target = dst.group();
    m.rows.assign(static_cast<std::size_t>(dst.generator_count()), std::vector<std::int64_t>(static_cast<std::size_t>(src.generator_count())));
    for (int j = 0; j < src.generator_count(); ++j) {
        auto coords = dst.coordinates(f_d.apply(src.generators[static_cast<std::size_t>(j)]));
        for (int i = 0; i < dst.generator_count(); ++i) m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coords[static_cast<std::size_t>(i)];
    }
    return m;
}

/// Stacks maps with a common source into the map to the direct sum of targets.
inline HomologyMatrix stack(const std::vector<HomologyMatrix>& parts, const HomologyGroup& source, int degree) {
    HomologyMatrix m;
    m.degree = degree;
    m.source = source;
    // torsion rows of all parts first, then free rows, to keep the generator convention
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.target.torsion.size(); ++i) {
            m.rows.push_back(p.rows[i]);
            m.target.torsion.push_back(p.target.torsion[i]);
        }
    }
    for (const auto& p : parts)
        for (int i = 0; i < p.target.betti; ++i) {
            m.rows.push_back(p.rows[p.target.torsion.size() + static_cast<std::size_t>(i)]);
            ++m.target.betti;
        }
    return m;
}

struct IsoCertificate {
    bool groups_match = false;   // same rank and torsion invariants
    bool free_unimodular = false; // induced map on free quotients is invertible
    bool surjective = false;
    bool iso() const { return groups_match && free_unimodular && surjective; }
};

/// A surjection between isomorphic finitely generated abelian groups is an
/// isomorphism, so: matching invariants + surjectivity, plus an explicit
/// unimodularity check of the free block.
inline IsoCertificate certify_isomorphism(const HomologyMatrix& m) {
    IsoCertificate c;
    c.groups_match = m.source.betti == m.target.betti &&
                     canonical_torsion(m.source.torsion) == canonical_torsion(m.target.torsion);
    const int st = static_cast<int>(m.source.torsion.size());
    const int tt = static_cast<int>(m.target.torsion.size());
    SparseMatrix free_block(m.target.betti, m.source.betti);
    for (int i = 0; i < m.target.betti; ++i)
        for (int j = 0; j < m.source.betti; ++j) free_block.add(i, j, m.rows[static_cast<std::size_t>(tt + i)][static_cast<std::size_t>(st + j)]);
    c.free_unimodular = is_unimodular(free_block);
    const int rows = m.target_count();
    SparseMatrix aug(rows, m.source_count() + tt);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < m.source_count(); ++j) aug.add(i, j, m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int i = 0; i < tt; ++i) aug.add(i, m.source_count() + i, m.target.torsion[static_cast<std::size_t>(i)]);
    auto inv = smith_invariants(aug);
    c.surjective = static_cast<int>(inv.size()) == rows && std::all_of(inv.begin(), inv.end(), [](std::int64_t v) { return v == 1; });
    return c;
}

/// True iff the homology matrix is the identity (torsion rows compared mod their order).
inline bool is_identity(const HomologyMatrix& m) {
    if (m.source_count() != m.target_count()) return false;
    for (int i = 0; i < m.target_count(); ++i)
        for (int j = 0; j < m.source_count(); ++j) {
            std::int64_t v = m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            std::int64_t want = (i == j) ? 1 : 0;
            if (i < static_cast<int>(m.target.torsion.size())) {
                const auto o = m.target.torsion[static_cast<std::size_t>(i)];
                if (mod_positive(v - want, o) != 0) return false;
            } else if (v != want) {
                return false;
            }
        }
    return true;
}

inline bool is_zero(const HomologyMatrix& m) {
    for (int i = 0; i < m.target_count(); ++i)
        for (int j = 0; j < m.source_count(); ++j) {
            std::int64_t v = m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i < static_cast<int>(m.target.torsion.size())) {
                if (mod_positive(v, m.target.torsion[static_cast<std::size_t>(i)]) != 0) return false;
            } else if (v != 0) {
                return false;
            }
        }
    return true;
}

/// b after a, with torsion rows reduced.
inline HomologyMatrix compose(const HomologyMatrix& b, const HomologyMatrix& a) {
    if (b.source_count() != a.target_count()) throw Error("homology matrices are not composable");
    HomologyMatrix m;
    m.degree = a.degree;
    m.source = a.source;
    m.target = b.target;
    m.rows.assign(static_cast<std::size_t>(b.target_count()), std::vector<std::int64_t>(static_cast<std::size_t>(a.source_count())));
    for (int i = 0; i < b.target_count(); ++i)
        for (int j = 0; j < a.source_count(); ++j) {
            CheckedInt v = 0;
            for (int k = 0; k < a.target_count(); ++k)
                v += CheckedInt(b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * CheckedInt(a.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            std::int64_t e = to_int64(v);
            if (i < static_cast<int>(b.target.torsion.size())) e = mod_positive(e, b.target.torsion[static_cast<std::size_t>(i)]);
            m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    return m;
}

inline bool same_group(const HomologyGroup& a, const HomologyGroup& b) {
    return a.betti == b.betti && canonical_torsion(a.torsion) == canonical_torsion(b.torsion);
}

/// Equality of homology matrices with torsion rows compared mod their order.
inline bool same_map(const HomologyMatrix& a, const HomologyMatrix& b) {
    if (a.rows.size() != b.rows.size() || a.source_count() != b.source_count()) return false;
    HomologyMatrix diff = a;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.rows[i].size(); ++j) diff.rows[i][j] = a.rows[i][j] - b.rows[i][j];
    return is_zero(diff);
}

} // namespace suspsplit
