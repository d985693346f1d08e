#pragma once

// Exact integer matrices and Smith normal form.
//
// Two routes are provided. `smith_dense` works on a dense matrix and can
// track the unimodular transforms on either side; the homology basis code
// needs those. `smith_invariants` is the fast path for invariant factors of
// sparse boundary matrices: Markowitz-ordered elimination on unit pivots, then
// dense SNF on whatever residue is left. Both run in checked 64-bit arithmetic
// and redo the computation with BigInt when an overflow is detected.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "suspsplit/error.hpp"
#include "suspsplit/integer.hpp"

namespace suspsplit {

/// Column-major sparse integer matrix. Entries within a column are sorted by
/// row and never zero.
class SparseMatrix {
public:
    using Entry = std::pair<int, std::int64_t>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& column(int c) const { return columns_[static_cast<std::size_t>(c)]; }

    /// Adds v to entry (r, c).
    void add(int r, int c, std::int64_t v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("sparse matrix index out of range");
        if (v == 0) return;
        auto& col = columns_[static_cast<std::size_t>(c)];
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            it->second = (CheckedInt(it->second) + CheckedInt(v)).value();
            if (it->second == 0) col.erase(it);
        } else {
            col.insert(it, {r, v});
        }
    }

    std::int64_t at(int r, int c) const {
        const auto& col = column(c);
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, int row) { return e.first < row; });
        return (it != col.end() && it->first == r) ? it->second : 0;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    /// this * x for a dense vector x.
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw Error("dimension mismatch in matrix-vector product");
        std::vector<CheckedInt> acc(static_cast<std::size_t>(rows_));
        for (int c = 0; c < cols_; ++c) {
            if (x[static_cast<std::size_t>(c)] == 0) continue;
            for (const auto& [r, v] : column(c)) acc[static_cast<std::size_t>(r)] += CheckedInt(v) * x[static_cast<std::size_t>(c)];
        }
        std::vector<std::int64_t> out(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i].value();
        return out;
    }

    /// this * other.
    SparseMatrix multiply(const SparseMatrix& other) const {
        if (cols_ != other.rows_) throw Error("dimension mismatch in matrix product");
        SparseMatrix out(rows_, other.cols_);
        for (int c = 0; c < other.cols_; ++c) {
            std::map<int, CheckedInt> acc;
            for (const auto& [k, w] : other.column(c))
                for (const auto& [r, v] : column(k)) acc[r] += CheckedInt(v) * w;
            auto& col = out.columns_[static_cast<std::size_t>(c)];
            for (const auto& [r, v] : acc)
                if (v != 0) col.emplace_back(r, v.value());
        }
        return out;
    }

    SparseMatrix transpose() const {
        SparseMatrix out(cols_, rows_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : column(c)) out.columns_[static_cast<std::size_t>(r)].emplace_back(c, v);
        return out;
    }

    /// Permutes rows and columns: entry (r, c) moves to (row_perm[r], col_perm[c]).
    SparseMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
        SparseMatrix out(rows_, cols_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : column(c))
                out.add(row_perm[static_cast<std::size_t>(r)], col_perm[static_cast<std::size_t>(c)], v);
        return out;
    }

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.columns_[static_cast<std::size_t>(i)].emplace_back(i, 1);
        return m;
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

template <class Int>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Int(1);
        return m;
    }

    static DenseMatrix from_sparse(const SparseMatrix& s) {
        DenseMatrix m(s.rows(), s.cols());
        for (int c = 0; c < s.cols(); ++c)
            for (const auto& [r, v] : s.column(c)) m(r, c) = Int(v);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int r, int c) { return data_[idx(r, c)]; }
    const Int& operator()(int r, int c) const { return data_[idx(r, c)]; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[dst] += k * row[src]
    void add_row(int dst, int src, const Int& k) {
        if (k == 0) return;
        for (int c = 0; c < cols_; ++c)
            if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
    }
    /// col[dst] += k * col[src]
    void add_col(int dst, int src, const Int& k) {
        if (k == 0) return;
        for (int r = 0; r < rows_; ++r)
            if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
    }
    void negate_row(int r) {
        for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }

    SparseMatrix to_sparse() const {
        SparseMatrix s(rows_, cols_);
        for (int c = 0; c < cols_; ++c)
            for (int r = 0; r < rows_; ++r)
                if ((*this)(r, c) != 0) s.add(r, c, to_int64((*this)(r, c)));
        return s;
    }

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// U * A * V = diag(d_1, ..., d_rank, 0, ...) with d_i | d_{i+1}, d_i > 0.
template <class Int>
struct SmithForm {
    std::vector<Int> diagonal; // length rank
    DenseMatrix<Int> left, left_inv;   // U, U^{-1} (only if requested)
    DenseMatrix<Int> right, right_inv; // V, V^{-1} (only if requested)
    int rank() const { return static_cast<int>(diagonal.size()); }
};

namespace detail {

template <class Int>
struct SmithWorker {
    DenseMatrix<Int> a;
    bool track_left, track_right;
    DenseMatrix<Int> u, uinv, v, vinv;

    SmithWorker(DenseMatrix<Int> m, bool left, bool right) : a(std::move(m)), track_left(left), track_right(right) {
        if (left) {
            u = DenseMatrix<Int>::identity(a.rows());
            uinv = DenseMatrix<Int>::identity(a.rows());
        }
        if (right) {
            v = DenseMatrix<Int>::identity(a.cols());
            vinv = DenseMatrix<Int>::identity(a.cols());
        }
    }

    void row_add(int dst, int src, const Int& k) {
        a.add_row(dst, src, k);
        if (track_left) {
            u.add_row(dst, src, k);
            uinv.add_col(src, dst, Int(-k));
        }
    }
    void col_add(int dst, int src, const Int& k) {
        a.add_col(dst, src, k);
        if (track_right) {
            v.add_col(dst, src, k);
            vinv.add_row(src, dst, Int(-k));
        }
    }
    void row_swap(int i, int j) {
        a.swap_rows(i, j);
        if (track_left) {
            u.swap_rows(i, j);
            uinv.swap_cols(i, j);
        }
    }
    void col_swap(int i, int j) {
        a.swap_cols(i, j);
        if (track_right) {
            v.swap_cols(i, j);
            vinv.swap_rows(i, j);
        }
    }
    void row_negate(int i) {
        a.negate_row(i);
        if (track_left) {
            u.negate_row(i);
            for (int r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
        }
    }

    std::optional<std::pair<int, int>> min_pivot(int t) const {
        std::optional<std::pair<int, int>> best;
        Int best_abs = 0;
        for (int i = t; i < a.rows(); ++i)
            for (int j = t; j < a.cols(); ++j) {
                const Int& x = a(i, j);
                if (x == 0) continue;
                Int ax = int_abs(x);
                if (!best || ax < best_abs) {
                    best = {i, j};
                    best_abs = ax;
                    if (ax == 1) return best;
                }
            }
        return best;
    }

    SmithForm<Int> run() {
        const int m = a.rows();
        const int n = a.cols();
        int t = 0;
        for (; t < std::min(m, n); ++t) {
            auto piv = min_pivot(t);
            if (!piv) break;
            row_swap(t, piv->first);
            col_swap(t, piv->second);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < m; ++i) {
                    if (a(i, t) == 0) continue;
                    Int q = a(i, t) / a(t, t);
                    row_add(i, t, Int(-q));
                    if (a(i, t) != 0) clean = false;
                }
                for (int j = t + 1; j < n; ++j) {
                    if (a(t, j) == 0) continue;
                    Int q = a(t, j) / a(t, t);
                    col_add(j, t, Int(-q));
                    if (a(t, j) != 0) clean = false;
                }
                if (!clean) {
                    // A smaller remainder appeared in row or column t: move it to the pivot.
                    int bi = t, bj = t;
                    Int best = int_abs(a(t, t));
                    for (int i = t + 1; i < m; ++i)
                        if (a(i, t) != 0 && int_abs(a(i, t)) < best) { best = int_abs(a(i, t)); bi = i; bj = t; }
                    for (int j = t + 1; j < n; ++j)
                        if (a(t, j) != 0 && int_abs(a(t, j)) < best) { best = int_abs(a(t, j)); bi = t; bj = j; }
                    row_swap(t, bi);
                    col_swap(t, bj);
                    continue;
                }
                // Divisibility: every remaining entry must be a multiple of the pivot.
                int bad = -1;
                for (int i = t + 1; i < m && bad < 0; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (a(i, j) % a(t, t) != 0) { bad = i; break; }
                if (bad < 0) break;
                row_add(t, bad, Int(1));
            }
            if (a(t, t) < 0) row_negate(t);
        }
        SmithForm<Int> out;
        for (int i = 0; i < t; ++i) out.diagonal.push_back(a(i, i));
        if (track_left) { out.left = std::move(u); out.left_inv = std::move(uinv); }
        if (track_right) { out.right = std::move(v); out.right_inv = std::move(vinv); }
        return out;
    }
};

template <class Int>
std::vector<std::int64_t> sparse_invariants(const SparseMatrix& m) {
    // rows[r] : col -> value ; cols[c] : set of rows
    std::vector<std::map<int, Int>> rows(static_cast<std::size_t>(m.rows()));
    std::vector<std::set<int>> cols(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) {
            rows[static_cast<std::size_t>(r)][c] = Int(v);
            cols[static_cast<std::size_t>(c)].insert(r);
        }
    std::vector<std::int64_t> invariants;
    for (;;) {
        // Markowitz choice among unit pivots: minimise (row_nnz - 1) * (col_nnz - 1).
        int pr = -1, pc = -1;
        std::size_t best_cost = 0;
        for (int r = 0; r < m.rows(); ++r) {
            const auto& row = rows[static_cast<std::size_t>(r)];
            for (const auto& [c, v] : row) {
                if (v != 1 && v != -1) continue;
                std::size_t cost = (row.size() - 1) * (cols[static_cast<std::size_t>(c)].size() - 1);
                if (pr < 0 || cost < best_cost) {
                    pr = r; pc = c; best_cost = cost;
                }
            }
            if (pr >= 0 && best_cost == 0) break;
        }
        if (pr < 0) break;
        auto& prow = rows[static_cast<std::size_t>(pr)];
        const Int p = prow.at(pc);
        std::vector<int> targets(cols[static_cast<std::size_t>(pc)].begin(), cols[static_cast<std::size_t>(pc)].end());
        for (int r : targets) {
            if (r == pr) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            const Int factor = row.at(pc) * p;
            for (const auto& [c, v] : prow) {
                Int nv = row[c] - factor * v;
                if (nv == 0) {
                    row.erase(c);
                    cols[static_cast<std::size_t>(c)].erase(r);
                } else {
                    row[c] = nv;
                    cols[static_cast<std::size_t>(c)].insert(r);
                }
            }
        }
        for (const auto& [c, v] : prow) cols[static_cast<std::size_t>(c)].erase(pr);
        prow.clear();
        invariants.push_back(1);
    }
    // Dense SNF on the residue.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < m.rows(); ++r)
        if (!rows[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
    for (int c = 0; c < m.cols(); ++c)
        if (!cols[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
    if (!live_rows.empty()) {
        std::map<int, int> col_pos;
        for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<int>(i);
        DenseMatrix<Int> residue(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows[static_cast<std::size_t>(live_rows[i])]) residue(static_cast<int>(i), col_pos[c]) = v;
        auto form = SmithWorker<Int>(std::move(residue), false, false).run();
        for (const auto& d : form.diagonal) invariants.push_back(to_int64(d));
    }
    return invariants;
}

} // namespace detail

template <class Int>
SmithForm<Int> smith_dense(DenseMatrix<Int> a, bool track_left, bool track_right) {
    return detail::SmithWorker<Int>(std::move(a), track_left, track_right).run();
}

/// Invariant factors (the nonzero diagonal of the Smith normal form), in
/// divisibility order.
inline std::vector<std::int64_t> smith_invariants(const SparseMatrix& m) {
    return with_overflow_fallback([&]<class Int>() { return detail::sparse_invariants<Int>(m); });
}

/// Invariant factors computed by the dense route only; used to cross-check the sparse route.
inline std::vector<std::int64_t> smith_invariants_dense(const SparseMatrix& m) {
    return with_overflow_fallback([&]<class Int>() {
        auto form = smith_dense(DenseMatrix<Int>::from_sparse(m), false, false);
        std::vector<std::int64_t> out;
        for (const auto& d : form.diagonal) out.push_back(to_int64(d));
        return out;
    });
}

inline int rank(const SparseMatrix& m) { return static_cast<int>(smith_invariants(m).size()); }

/// True iff m is square and invertible over the integers.
inline bool is_unimodular(const SparseMatrix& m) {
    if (m.rows() != m.cols()) return false;
    auto inv = smith_invariants(m);
    return static_cast<int>(inv.size()) == m.rows() &&
           std::all_of(inv.begin(), inv.end(), [](std::int64_t d) { return d == 1; });
}

/// Canonical invariant factors of the direct sum of cyclic groups Z/t_i.
inline std::vector<std::int64_t> canonical_torsion(const std::vector<std::int64_t>& cyclic_orders) {
    const int n = static_cast<int>(cyclic_orders.size());
    SparseMatrix d(n, n);
    for (int i = 0; i < n; ++i) d.add(i, i, cyclic_orders[static_cast<std::size_t>(i)]);
    std::vector<std::int64_t> out;
    for (auto v : smith_invariants_dense(d))
        if (v > 1) out.push_back(v);
    return out;
}

} // namespace suspsplit
