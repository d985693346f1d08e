#pragma once

// Reference computations that share no code with the library: brute-force
// enumeration, a small dense Smith normal form, bar-complex group homology
// and oriented simplicial-complex homology.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long long>>; // row-major

/// Nonzero diagonal of the Smith form, by repeated gcd elimination.
inline std::vector<long long> smith_diagonal(Matrix a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    auto swap_cols = [&](int x, int y) {
        for (auto& row : a) std::swap(row[x], row[y]);
    };
    std::vector<long long> diag;
    for (int t = 0; t < m && t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the pivot row/column, else of the whole block
            int pr = -1, pc = -1;
            long long best = 0;
            auto consider = [&](int i, int j) {
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pr = i;
                    pc = j;
                }
            };
            for (int i = t; i < m; ++i) consider(i, t);
            for (int j = t; j < n; ++j) consider(t, j);
            if (pr < 0)
                for (int i = t; i < m; ++i)
                    for (int j = t; j < n; ++j) consider(i, j);
            if (pr < 0) return diag;
            std::swap(a[t], a[pr]);
            swap_cols(t, pc);
            const long long p = a[t][t];
            bool reduced = true;
            for (int i = t + 1; i < m; ++i) {
                const long long q = a[i][t] / p;
                for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                reduced = reduced && a[i][t] == 0;
            }
            for (int j = t + 1; j < n; ++j) {
                const long long q = a[t][j] / p;
                for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                reduced = reduced && a[t][j] == 0;
            }
            if (!reduced) continue;
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a[i][j] % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < n; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(std::llabs(a[t][t]));
    }
    return diag;
}

struct Group {
    int betti = 0;
    std::vector<long long> torsion; // factors > 1 in divisibility order
    bool operator==(const Group&) const = default;
};

/// Homology of a complex given by boundary matrices d[k] : C_k -> C_{k-1}
/// (d[0] may be empty), for degrees 0..top-1.
inline std::vector<Group> homology(const std::vector<int>& sizes, const std::vector<Matrix>& d) {
    const int top = static_cast<int>(sizes.size()) - 1;
    std::vector<std::vector<long long>> inv(sizes.size() + 1);
    for (int k = 0; k <= top; ++k) inv[k] = smith_diagonal(d[k]);
    std::vector<Group> out;
    for (int k = 0; k < top; ++k) {
        Group g;
        g.betti = sizes[k] - static_cast<int>(inv[k].size()) - static_cast<int>(inv[k + 1].size());
        for (long long v : inv[k + 1])
            if (v > 1) g.torsion.push_back(v);
        std::sort(g.torsion.begin(), g.torsion.end());
        out.push_back(g);
    }
    return out;
}

// --- finite groups as Cayley tables -----------------------------------------

using Table = std::vector<std::vector<int>>;

inline bool commute(const Table& t, int a, int b) { return t[a][b] == t[b][a]; }

/// Counts all n-tuples over G that pairwise commute, and how many contain the identity.
inline std::pair<long long, long long> commuting_tuple_counts(const Table& t, int n) {
    const int m = static_cast<int>(t.size());
    long long all = 0, with_identity = 0;
    std::vector<int> tup(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) {
            tup[i] = static_cast<int>(c % m);
            c /= m;
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) ok = commute(t, tup[i], tup[j]);
        if (!ok) continue;
        ++all;
        if (std::find(tup.begin(), tup.end(), 0) != tup.end()) ++with_identity;
    }
    return {all, with_identity};
}

/// Orbits of commuting n-tuples under simultaneous conjugation.
inline long long conjugation_orbits(const Table& t, int n) {
    const int m = static_cast<int>(t.size());
    std::vector<int> inv(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (t[a][b] == 0) inv[a] = b;
    std::set<std::vector<int>> seen;
    long long orbits = 0;
    std::vector<int> tup(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) {
            tup[i] = static_cast<int>(c % m);
            c /= m;
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) ok = commute(t, tup[i], tup[j]);
        if (!ok || seen.count(tup)) continue;
        ++orbits;
        for (int g = 0; g < m; ++g) {
            std::vector<int> u;
            for (int x : tup) u.push_back(t[t[g][x]][inv[g]]);
            seen.insert(u);
        }
    }
    return orbits;
}

/// Integral homology of G in degrees 0..max_degree from the unnormalized bar complex.
inline std::vector<Group> group_homology(const Table& t, int max_degree) {
    const int m = static_cast<int>(t.size());
    auto count = [&](int n) {
        long long c = 1;
        for (int i = 0; i < n; ++i) c *= m;
        return static_cast<int>(c);
    };
    auto decode = [&](int code, int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) {
            v[i] = code % m;
            code /= m;
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int code = 0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) code = code * m + v[i];
        return code;
    };
    std::vector<int> sizes;
    std::vector<Matrix> d;
    for (int n = 0; n <= max_degree + 1; ++n) {
        sizes.push_back(count(n));
        if (n == 0) {
            d.push_back(Matrix{});
            continue;
        }
        Matrix B(count(n - 1), std::vector<long long>(count(n), 0));
        for (int code = 0; code < count(n); ++code) {
            auto g = decode(code, n);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                if (i == 0) f.assign(g.begin() + 1, g.end());
                else if (i == n) f.assign(g.begin(), g.end() - 1);
                else {
                    for (int k = 0; k < n; ++k) {
                        if (k == i - 1) f.push_back(t[g[k]][g[k + 1]]);
                        else if (k != i) f.push_back(g[k]);
                    }
                }
                B[encode(f)][code] += (i % 2 == 0) ? 1 : -1;
            }
        }
        d.push_back(std::move(B));
    }
    return homology(sizes, d);
}

// --- simplicial complexes ---------------------------------------------------

using Facets = std::vector<std::vector<int>>;

/// Reduced homology of |K| in degrees 0..dim(K) from oriented simplicial chains.
inline std::vector<Group> complex_homology(const Facets& facets) {
    std::set<std::vector<int>> faces;
    int top = 0;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        top = std::max(top, static_cast<int>(f.size()) - 1);
        const int k = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            faces.insert(s);
        }
    }
    std::vector<std::vector<std::vector<int>>> by_dim(top + 2);
    for (const auto& s : faces) by_dim[s.size() - 1].push_back(s);
    std::vector<int> sizes;
    std::vector<Matrix> d;
    for (int k = 0; k <= top + 1; ++k) {
        sizes.push_back(static_cast<int>(by_dim[k].size()));
        if (k == 0) {
            d.push_back(Matrix(1, std::vector<long long>(by_dim[0].size(), 1))); // augmentation
            continue;
        }
        Matrix B(by_dim[k - 1].size(), std::vector<long long>(by_dim[k].size(), 0));
        for (std::size_t c = 0; c < by_dim[k].size(); ++c)
            for (int i = 0; i <= k; ++i) {
                auto f = by_dim[k][c];
                f.erase(f.begin() + i);
                auto pos = std::find(by_dim[k - 1].begin(), by_dim[k - 1].end(), f) - by_dim[k - 1].begin();
                B[pos][c] += (i % 2 == 0) ? 1 : -1;
            }
        d.push_back(std::move(B));
    }
    return homology(sizes, d);
}

/// Number of weakly increasing (n+1)-tuples of vertices whose support is a face.
inline long long weakly_increasing_tuples(const Facets& facets, int n, bool strictly) {
    std::set<int> verts;
    for (const auto& f : facets) verts.insert(f.begin(), f.end());
    std::vector<int> v(verts.begin(), verts.end());
    long long count = 0;
    std::vector<int> idx(n + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == n + 1) {
            std::set<int> support;
            for (int i : idx) support.insert(v[i]);
            for (const auto& f : facets) {
                std::set<int> fs(f.begin(), f.end());
                if (std::includes(fs.begin(), fs.end(), support.begin(), support.end())) {
                    ++count;
                    return;
                }
            }
            return;
        }
        for (int i = from; i < static_cast<int>(v.size()); ++i) {
            idx[pos] = i;
            rec(pos + 1, strictly ? i + 1 : i);
        }
    };
    rec(0, 0);
    return count;
}

/// All strictly decreasing r-sequences over {0..max_index}, sorted with the
/// literal rule "I < J iff there is p with i_q = j_q for q > p and i_p < j_p"
/// (entries indexed i_r .. i_1 from the left).
inline std::vector<std::vector<int>> admissible_sorted(int max_index, int r) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << (max_index + 1)); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != r) continue;
        std::vector<int> s;
        for (int i = max_index; i >= 0; --i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    auto less = [r](const std::vector<int>& I, const std::vector<int>& J) {
        for (int p = 1; p <= r; ++p) {
            bool above = true;
            for (int q = p + 1; q <= r; ++q) above = above && I[r - q] == J[r - q];
            if (above && I[r - p] < J[r - p]) return true;
        }
        return false;
    };
    std::sort(out.begin(), out.end(), less);
    return out;
}

} // namespace oracle
