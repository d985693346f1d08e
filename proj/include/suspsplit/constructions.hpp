#pragma once

// Builders for the simplicial sets and simplicial spaces the verifiers run on:
// order complexes of simplicial complexes, commuting-tuple nerves of finite
// groups and their conjugation quotients, products, and Cech nerves.

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "suspsplit/model.hpp"
#include "suspsplit/simplicial_space.hpp"

namespace suspsplit {

// ---------------------------------------------------------------------------
// Finite groups

class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Validates a Cayley table with element 0 as the identity.
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "G") {
        FiniteGroup G;
        G.name_ = std::move(name);
        G.order_ = static_cast<int>(table.size());
        if (G.order_ == 0) throw Error("group must be nonempty");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != G.order_) throw Error("Cayley table is not square");
            for (int v : row)
                if (v < 0 || v >= G.order_) throw Error("Cayley table entry out of range");
            G.table_.insert(G.table_.end(), row.begin(), row.end());
        }
        const int m = G.order_;
        for (int a = 0; a < m; ++a)
            if (G.mul(0, a) != a || G.mul(a, 0) != a) throw Error("element 0 is not the identity");
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) throw Error("Cayley table is not associative");
        G.inverse_.assign(static_cast<std::size_t>(m), -1);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (G.mul(a, b) == 0 && G.mul(b, a) == 0) G.inverse_[static_cast<std::size_t>(a)] = b;
        for (int a = 0; a < m; ++a)
            if (G.inverse_[static_cast<std::size_t>(a)] < 0) throw Error("element without inverse");
        return G;
    }

    int order() const { return order_; }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
    bool abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                if (!commute(a, b)) return false;
        return true;
    }
    int element_order(int a) const {
        int k = 1;
        for (int x = a; x != 0; x = mul(x, a)) ++k;
        return k;
    }
    std::vector<std::vector<int>> table() const {
        std::vector<std::vector<int>> t(static_cast<std::size_t>(order_));
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
        return t;
    }

private:
    std::string name_;
    int order_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

inline FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteGroup::from_table(std::move(t), "Z/" + std::to_string(n));
}

/// Permutations of {0,1,2} in lexicographic order (identity first); (ab)(x) = a(b(x)).
inline FiniteGroup symmetric_group_3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup::from_table(std::move(t), "S3");
}

/// Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion_group() {
    // unit products: table over {1, i, j, k} with signs
    const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2;
            int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit[ua][ub] + (s < 0 ? 1 : 0);
        }
    return FiniteGroup::from_table(std::move(t), "Q8");
}

/// G x H with (g, h) encoded as g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
    const int m = G.order() * H.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = G.mul(a / H.order(), b / H.order()) * H.order() + H.mul(a % H.order(), b % H.order());
    return FiniteGroup::from_table(std::move(t), G.name() + "x" + H.name());
}

/// Input error carrying a 1-based line number (0 when not line-specific).
class InputError : public Error {
public:
    InputError(const std::string& path, int line, const std::string& what)
        : Error(path + (line > 0 ? ":" + std::to_string(line) : std::string{}) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, const std::string& path, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw InputError(path, line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw InputError(path, line, "expected an integer, got '" + tok + "'");
    return v;
}

/// CSV: "order,m" then m rows of m entries.
inline FiniteGroup parse_group_csv(std::istream& in, const std::string& path = "<group>") {
    std::string line;
    int lineno = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!trim(line).empty()) return true;
        }
        return false;
    };
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(trim(tok));
        return out;
    };
    if (!next()) throw InputError(path, 0, "empty group file");
    auto header = split(line);
    if (header.size() != 2 || header[0] != "order") throw InputError(path, lineno, "expected header 'order,m'");
    const int m = parse_int(header[1], path, lineno);
    if (m <= 0) throw InputError(path, lineno, "group order must be positive");
    std::vector<std::vector<int>> table;
    for (int r = 0; r < m; ++r) {
        if (!next()) throw InputError(path, lineno + 1, "missing Cayley table row " + std::to_string(r));
        auto toks = split(line);
        if (static_cast<int>(toks.size()) != m) throw InputError(path, lineno, "expected " + std::to_string(m) + " entries");
        std::vector<int> row;
        for (const auto& t : toks) {
            int v = parse_int(t, path, lineno);
            if (v < 0 || v >= m) throw InputError(path, lineno, "entry " + t + " out of range");
            row.push_back(v);
        }
        table.push_back(std::move(row));
    }
    if (next()) throw InputError(path, lineno, "trailing content after Cayley table");
    try {
        return FiniteGroup::from_table(std::move(table), path);
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(path, 0, e.what());
    }
}

inline FiniteGroup load_group_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, 0, "cannot open file");
    return parse_group_csv(in, path);
}

inline std::string group_csv(const FiniteGroup& G) {
    std::ostringstream os;
    os << "order," << G.order() << "\n";
    for (const auto& row : G.table()) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

/// A group homomorphism given by the images of the elements.
struct GroupHom {
    const FiniteGroup* source;
    const FiniteGroup* target;
    std::vector<int> images;
};

inline void validate_hom(const GroupHom& f) {
    if (static_cast<int>(f.images.size()) != f.source->order()) throw Error("homomorphism has wrong number of images");
    for (int a = 0; a < f.source->order(); ++a)
        for (int b = 0; b < f.source->order(); ++b)
            if (f.images[static_cast<std::size_t>(f.source->mul(a, b))] != f.target->mul(f.images[static_cast<std::size_t>(a)], f.images[static_cast<std::size_t>(b)]))
                throw Error("map is not a homomorphism");
}

// ---------------------------------------------------------------------------
// Abstract simplicial complexes

struct AbstractSimplicialComplex {
    std::vector<std::vector<int>> facets; // sorted vertex labels, each nonempty

    std::vector<int> vertices() const {
        std::set<int> v;
        for (const auto& f : facets) v.insert(f.begin(), f.end());
        return {v.begin(), v.end()};
    }

    /// Every nonempty face, sorted by dimension then lexicographically.
    std::vector<std::vector<int>> faces() const {
        std::set<std::vector<int>> all;
        for (const auto& f : facets) {
            const int k = static_cast<int>(f.size());
            for (int mask = 1; mask < (1 << k); ++mask) {
                std::vector<int> s;
                for (int i = 0; i < k; ++i)
                    if (mask & (1 << i)) s.push_back(f[static_cast<std::size_t>(i)]);
                all.insert(std::move(s));
            }
        }
        std::vector<std::vector<int>> out(all.begin(), all.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return out;
    }

    bool contains(const std::vector<int>& sorted_face) const {
        for (const auto& f : facets)
            if (std::includes(f.begin(), f.end(), sorted_face.begin(), sorted_face.end())) return true;
        return false;
    }
};

inline AbstractSimplicialComplex make_complex(std::vector<std::vector<int>> facets) {
    AbstractSimplicialComplex K;
    for (auto& f : facets) {
        if (f.empty()) throw Error("empty facet");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw Error("repeated vertex in facet");
        for (int v : f)
            if (v <= 0) throw Error("vertex labels must be positive");
        K.facets.push_back(std::move(f));
    }
    return K;
}

/// One facet per line, whitespace-separated positive labels; '#' starts a comment line.
inline AbstractSimplicialComplex parse_complex(std::istream& in, const std::string& path = "<complex>") {
    std::vector<std::vector<int>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::stringstream ss(t);
        std::string tok;
        std::vector<int> facet;
        while (ss >> tok) {
            int v = parse_int(tok, path, lineno);
            if (v <= 0) throw InputError(path, lineno, "vertex labels must be positive");
            facet.push_back(v);
        }
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) throw InputError(path, lineno, "repeated vertex in facet");
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw InputError(path, 0, "no facets");
    return make_complex(std::move(facets));
}

inline AbstractSimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, 0, "cannot open file");
    return parse_complex(in, path);
}

inline AbstractSimplicialComplex boundary_of_simplex(int dim) {
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= dim + 1; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= dim + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return make_complex(std::move(facets));
}

/// The 6-vertex minimal triangulation of the real projective plane.
inline AbstractSimplicialComplex projective_plane_6() {
    return make_complex({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

inline AbstractSimplicialComplex disjoint_union(const AbstractSimplicialComplex& A, const AbstractSimplicialComplex& B) {
    const auto va = A.vertices();
    const int shift = va.empty() ? 0 : va.back();
    std::vector<std::vector<int>> facets = A.facets;
    for (auto f : B.facets) {
        for (int& v : f) v += shift;
        facets.push_back(std::move(f));
    }
    return make_complex(std::move(facets));
}

inline std::string tuple_label(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

/// Weakly increasing vertex tuples supported on a simplex of K; faces delete
/// an entry and degeneracies repeat one.
inline std::shared_ptr<ModelledSet<std::vector<int>>> order_complex_model(const AbstractSimplicialComplex& K, int truncation) {
    auto faces = K.faces();
    ModelOps<std::vector<int>> ops;
    ops.all_simplices = [faces](int n) {
        std::set<std::vector<int>> out;
        for (const auto& sigma : faces) {
            const int k = static_cast<int>(sigma.size());
            if (k > n + 1) continue;
            // surjections from n+1 ordered slots onto sigma, weakly increasing:
            // choose the k-1 positions where the value steps up.
            std::vector<int> steps(static_cast<std::size_t>(n), 0);
            std::fill(steps.begin(), steps.begin() + (k - 1), 1);
            std::sort(steps.begin(), steps.end());
            do {
                std::vector<int> t{sigma[0]};
                int idx = 0;
                for (int s : steps) {
                    idx += s;
                    t.push_back(sigma[static_cast<std::size_t>(idx)]);
                }
                out.insert(std::move(t));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
        return std::vector<std::vector<int>>(out.begin(), out.end());
    };
    ops.dim = [](const std::vector<int>& t) { return static_cast<int>(t.size()) - 1; };
    ops.face = [](std::vector<int> t, int i) {
        t.erase(t.begin() + i);
        return t;
    };
    ops.degeneracy = [](std::vector<int> t, int i) {
        t.insert(t.begin() + i, t[static_cast<std::size_t>(i)]);
        return t;
    };
    ops.label = tuple_label;
    return std::make_shared<ModelledSet<std::vector<int>>>(truncation, std::move(ops));
}

inline SimplicialSetPtr order_complex(const AbstractSimplicialComplex& K, int truncation) {
    return order_complex_model(K, truncation)->set();
}

// ---------------------------------------------------------------------------
// Small simplicial sets, products

inline SimplicialSetPtr point(int truncation) {
    auto X = std::make_shared<FiniteSimplicialSet>(truncation);
    X->add_generator(0, {}, "*");
    return X;
}

inline SimplicialSetPtr discrete_set(int points, int truncation) {
    auto X = std::make_shared<FiniteSimplicialSet>(truncation);
    for (int i = 0; i < points; ++i) X->add_generator(0, {}, "p" + std::to_string(i));
    return X;
}

/// One vertex and one edge whose faces are both the vertex.
inline SimplicialSetPtr simplicial_circle(int truncation) {
    auto X = std::make_shared<FiniteSimplicialSet>(truncation);
    X->add_generator(0, {}, "v");
    if (truncation >= 1) X->add_generator(1, {SimplexRef{{0, 0}}, SimplexRef{{0, 0}}}, "e");
    return X;
}

using ProductKey = std::vector<SimplexRef>;

/// Degreewise product of the factors; a tuple is nondegenerate iff the
/// degeneracy words of its coordinates share no index.
inline std::shared_ptr<ModelledSet<ProductKey>> product_model(std::vector<SimplicialSetPtr> factors) {
    if (factors.empty()) throw Error("product of no factors");
    int truncation = factors.front()->truncation();
    for (const auto& f : factors) truncation = std::min(truncation, f->truncation());
    ModelOps<ProductKey> ops;
    ops.all_simplices = [factors](int n) {
        std::vector<ProductKey> out{ProductKey{}};
        for (const auto& f : factors) {
            auto simp = simplices(*f, n);
            std::vector<ProductKey> next;
            for (const auto& partial : out)
                for (const auto& s : simp) {
                    ProductKey k = partial;
                    k.push_back(s);
                    next.push_back(std::move(k));
                }
            out = std::move(next);
        }
        return out;
    };
    ops.dim = [](const ProductKey& k) { return k.front().dim(); };
    ops.face = [factors](ProductKey k, int i) {
        for (std::size_t c = 0; c < k.size(); ++c) k[c] = face(*factors[c], k[c], i);
        return k;
    };
    ops.degeneracy = [factors](ProductKey k, int i) {
        for (std::size_t c = 0; c < k.size(); ++c) k[c] = degeneracy(*factors[c], k[c], i);
        return k;
    };
    ops.label = [factors](const ProductKey& k) {
        std::string s = "(";
        for (std::size_t c = 0; c < k.size(); ++c) s += (c ? "," : "") + factors[c]->label(k[c]);
        return s + ")";
    };
    return std::make_shared<ModelledSet<ProductKey>>(truncation, std::move(ops));
}

inline SimplicialSetPtr product(const SimplicialSetPtr& X, const SimplicialSetPtr& Y) { return product_model({X, Y})->set(); }

// ---------------------------------------------------------------------------
// Simplicial spaces with discrete levels

/// A simplicial space whose level n is the finite set keys[n], with
/// horizontal operators given on keys.
template <class Key>
struct KeyedDiscreteSpace {
    std::shared_ptr<SimplicialSpace> space;
    std::vector<std::vector<Key>> keys;
    std::vector<std::map<Key, int>> index;

    int find(int n, const Key& k) const {
        auto it = index.at(static_cast<std::size_t>(n)).find(k);
        if (it == index[static_cast<std::size_t>(n)].end()) throw Error("key not present in level " + std::to_string(n));
        return it->second;
    }
};

template <class Key>
KeyedDiscreteSpace<Key> build_discrete_space(std::string name, std::vector<std::vector<Key>> levels, int vertical_truncation,
                                             const std::function<Key(int, const Key&, int)>& face_fn,
                                             const std::function<Key(int, const Key&, int)>& degeneracy_fn,
                                             const std::function<std::string(const Key&)>& label) {
    KeyedDiscreteSpace<Key> out;
    auto space = std::make_shared<SimplicialSpace>();
    space->name = std::move(name);
    const int N = static_cast<int>(levels.size()) - 1;
    out.keys = std::move(levels);
    for (int n = 0; n <= N; ++n) {
        auto L = std::make_shared<FiniteSimplicialSet>(vertical_truncation);
        std::map<Key, int> idx;
        for (const auto& k : out.keys[static_cast<std::size_t>(n)]) {
            if (!idx.emplace(k, L->count(0)).second) throw Error("duplicate element in level " + std::to_string(n));
            L->add_generator(0, {}, label(k));
        }
        out.index.push_back(std::move(idx));
        space->levels.push_back(std::move(L));
    }
    space->hface.resize(static_cast<std::size_t>(N) + 1);
    space->hdeg.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        if (n >= 1)
            for (int i = 0; i <= n; ++i) {
                SimplicialMap f(space->levels[static_cast<std::size_t>(n)], space->levels[static_cast<std::size_t>(n) - 1]);
                for (std::size_t g = 0; g < out.keys[static_cast<std::size_t>(n)].size(); ++g)
                    f.set_image({0, static_cast<int>(g)}, SimplexRef{{0, out.find(n - 1, face_fn(n, out.keys[static_cast<std::size_t>(n)][g], i))}});
                space->hface[static_cast<std::size_t>(n)].push_back(std::move(f));
            }
        if (n + 1 <= N)
            for (int i = 0; i <= n; ++i) {
                SimplicialMap f(space->levels[static_cast<std::size_t>(n)], space->levels[static_cast<std::size_t>(n) + 1]);
                for (std::size_t g = 0; g < out.keys[static_cast<std::size_t>(n)].size(); ++g)
                    f.set_image({0, static_cast<int>(g)}, SimplexRef{{0, out.find(n + 1, degeneracy_fn(n, out.keys[static_cast<std::size_t>(n)][g], i))}});
                space->hdeg[static_cast<std::size_t>(n)].push_back(std::move(f));
            }
    }
    out.space = std::move(space);
    return out;
}

/// Level-wise map between keyed discrete spaces induced by a function on keys.
template <class KeyA, class KeyB, class Fn>
SpaceMorphism keyed_morphism(const KeyedDiscreteSpace<KeyA>& src, const KeyedDiscreteSpace<KeyB>& dst, Fn&& fn) {
    SpaceMorphism m;
    const int N = std::min(src.space->horizontal_truncation(), dst.space->horizontal_truncation());
    for (int n = 0; n <= N; ++n) {
        SimplicialMap f(src.space->levels[static_cast<std::size_t>(n)], dst.space->levels[static_cast<std::size_t>(n)]);
        for (std::size_t g = 0; g < src.keys[static_cast<std::size_t>(n)].size(); ++g)
            f.set_image({0, static_cast<int>(g)}, SimplexRef{{0, dst.find(n, fn(n, src.keys[static_cast<std::size_t>(n)][g]))}});
        m.level_maps.push_back(std::move(f));
    }
    return m;
}

using Tuple = std::vector<int>;

/// Pairwise-commuting n-tuples, lexicographic.
inline std::vector<Tuple> commuting_tuples(const FiniteGroup& G, int n) {
    std::vector<Tuple> out{Tuple{}};
    for (int k = 0; k < n; ++k) {
        std::vector<Tuple> next;
        for (const auto& t : out)
            for (int g = 0; g < G.order(); ++g) {
                bool ok = true;
                for (int h : t) ok = ok && G.commute(g, h);
                if (!ok) continue;
                Tuple u = t;
                u.push_back(g);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

/// Bar-style operators: d_0 drops the first entry, d_n the last, and d_i
/// multiplies entries i and i+1; s_i inserts the identity at position i.
inline Tuple bar_face(const FiniteGroup& G, int n, const Tuple& t, int i) {
    Tuple u;
    if (i == 0) u.assign(t.begin() + 1, t.end());
    else if (i == n) u.assign(t.begin(), t.end() - 1);
    else {
        u.assign(t.begin(), t.begin() + (i - 1));
        u.push_back(G.mul(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]));
        u.insert(u.end(), t.begin() + (i + 1), t.end());
    }
    return u;
}

inline Tuple bar_degeneracy(const Tuple& t, int i) {
    Tuple u = t;
    u.insert(u.begin() + i, 0);
    return u;
}

inline KeyedDiscreteSpace<Tuple> commuting_nerve_keyed(const FiniteGroup& G, int max_level, int vertical_truncation = 1) {
    std::vector<std::vector<Tuple>> levels;
    for (int n = 0; n <= max_level; ++n) levels.push_back(commuting_tuples(G, n));
    auto Gp = std::make_shared<FiniteGroup>(G);
    return build_discrete_space<Tuple>(
        "Hom(Z^*," + G.name() + ")", std::move(levels), vertical_truncation,
        [Gp](int n, const Tuple& t, int i) { return bar_face(*Gp, n, t, i); },
        [](int, const Tuple& t, int i) { return bar_degeneracy(t, i); }, tuple_label);
}

inline std::shared_ptr<const SimplicialSpace> commuting_nerve(const FiniteGroup& G, int max_level, int vertical_truncation = 1) {
    return commuting_nerve_keyed(G, max_level, vertical_truncation).space;
}

/// Lexicographically least tuple in the simultaneous-conjugation orbit.
inline Tuple orbit_representative(const FiniteGroup& G, const Tuple& t) {
    Tuple best = t;
    for (int g = 0; g < G.order(); ++g) {
        Tuple u;
        for (int x : t) u.push_back(G.conjugate(g, x));
        best = std::min(best, u);
    }
    return best;
}

struct RepNerve {
    KeyedDiscreteSpace<Tuple> keyed;
    bool well_defined = true;   // horizontal operators constant on orbits
    std::vector<std::string> defects;
};

inline RepNerve rep_nerve_keyed(const FiniteGroup& G, int max_level, int vertical_truncation = 1) {
    RepNerve out;
    std::vector<std::vector<Tuple>> levels;
    for (int n = 0; n <= max_level; ++n) {
        std::set<Tuple> reps;
        for (const auto& t : commuting_tuples(G, n)) reps.insert(orbit_representative(G, t));
        levels.emplace_back(reps.begin(), reps.end());
    }
    // Each operator must send a whole orbit into a single orbit.
    for (int n = 0; n <= max_level; ++n)
        for (const auto& t : commuting_tuples(G, n)) {
            Tuple rep = orbit_representative(G, t);
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    if (orbit_representative(G, bar_face(G, n, t, i)) != orbit_representative(G, bar_face(G, n, rep, i))) {
                        out.well_defined = false;
                        out.defects.push_back("d" + std::to_string(i) + " on " + tuple_label(t));
                    }
            if (n + 1 <= max_level)
                for (int i = 0; i <= n; ++i)
                    if (orbit_representative(G, bar_degeneracy(t, i)) != orbit_representative(G, bar_degeneracy(rep, i))) {
                        out.well_defined = false;
                        out.defects.push_back("s" + std::to_string(i) + " on " + tuple_label(t));
                    }
        }
    auto Gp = std::make_shared<FiniteGroup>(G);
    out.keyed = build_discrete_space<Tuple>(
        "Rep(Z^*," + G.name() + ")", std::move(levels), vertical_truncation,
        [Gp](int n, const Tuple& t, int i) { return orbit_representative(*Gp, bar_face(*Gp, n, t, i)); },
        [Gp](int, const Tuple& t, int i) { return orbit_representative(*Gp, bar_degeneracy(t, i)); }, tuple_label);
    return out;
}

inline std::shared_ptr<const SimplicialSpace> rep_nerve(const FiniteGroup& G, int max_level, int vertical_truncation = 1) {
    auto r = rep_nerve_keyed(G, max_level, vertical_truncation);
    if (!r.well_defined) throw Error("conjugation quotient is not a simplicial space");
    return r.keyed.space;
}

/// Hom(Z^*, G) -> Hom(Z^*, H) induced by a homomorphism.
inline SpaceMorphism commuting_nerve_map(const KeyedDiscreteSpace<Tuple>& src, const KeyedDiscreteSpace<Tuple>& dst, const GroupHom& f) {
    validate_hom(f);
    return keyed_morphism(src, dst, [&](int, const Tuple& t) {
        Tuple u;
        for (int x : t) u.push_back(f.images[static_cast<std::size_t>(x)]);
        return u;
    });
}

/// Hom(Z^*, G) -> Rep(Z^*, G), the orbit projection.
inline SpaceMorphism orbit_projection(const FiniteGroup& G, const KeyedDiscreteSpace<Tuple>& hom, const RepNerve& rep) {
    return keyed_morphism(hom, rep.keyed, [&](int, const Tuple& t) { return orbit_representative(G, t); });
}

/// A simplicial set viewed as a simplicial space with discrete levels X_0, ..., X_N.
inline std::shared_ptr<const SimplicialSpace> discrete_space(const SimplicialSetPtr& X, int max_level, int vertical_truncation = 1, std::string name = {}) {
    if (max_level > X->truncation()) throw Error("levels exceed the truncation of the simplicial set");
    std::vector<std::vector<SimplexRef>> levels;
    for (int n = 0; n <= max_level; ++n) levels.push_back(simplices(*X, n));
    return build_discrete_space<SimplexRef>(
               name.empty() ? "discrete" : std::move(name), std::move(levels), vertical_truncation,
               [X](int, const SimplexRef& x, int i) { return face(*X, x, i); },
               [X](int, const SimplexRef& x, int i) { return degeneracy(*X, x, i); },
               [X](const SimplexRef& x) { return X->label(x); })
        .space;
}

/// Level n is Z^{n+1}; d_i deletes coordinate i and s_i repeats it.
inline std::shared_ptr<const SimplicialSpace> cech_nerve(const SimplicialSetPtr& Z, int max_level, std::string name = {}) {
    if (Z->count(0) == 0) throw Error("Cech nerve of an empty simplicial set");
    auto space = std::make_shared<SimplicialSpace>();
    space->name = name.empty() ? "Cech" : std::move(name);
    std::vector<std::shared_ptr<ModelledSet<ProductKey>>> models;
    for (int n = 0; n <= max_level; ++n) {
        models.push_back(product_model(std::vector<SimplicialSetPtr>(static_cast<std::size_t>(n) + 1, Z)));
        space->levels.push_back(models.back()->set());
    }
    space->hface.resize(static_cast<std::size_t>(max_level) + 1);
    space->hdeg.resize(static_cast<std::size_t>(max_level) + 1);
    for (int n = 0; n <= max_level; ++n) {
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                space->hface[static_cast<std::size_t>(n)].push_back(modelled_map(*models[static_cast<std::size_t>(n)], *models[static_cast<std::size_t>(n) - 1], [i](ProductKey k) {
                    k.erase(k.begin() + i);
                    return k;
                }));
        if (n + 1 <= max_level)
            for (int i = 0; i <= n; ++i)
                space->hdeg[static_cast<std::size_t>(n)].push_back(modelled_map(*models[static_cast<std::size_t>(n)], *models[static_cast<std::size_t>(n) + 1], [i](ProductKey k) {
                    k.insert(k.begin() + i, k[static_cast<std::size_t>(i)]);
                    return k;
                }));
    }
    return space;
}

/// A space concentrated in level 0.
inline std::shared_ptr<const SimplicialSpace> single_level_space(const SimplicialSetPtr& X, std::string name = "single level") {
    auto space = std::make_shared<SimplicialSpace>();
    space->name = std::move(name);
    space->levels.push_back(X);
    space->hface.resize(1);
    space->hdeg.resize(1);
    return space;
}

// ---------------------------------------------------------------------------
// Built-in catalogue

struct NamedSpace {
    std::string name;
    std::shared_ptr<const SimplicialSpace> space;
};

inline int transposition_in_s3(const FiniteGroup& S3) {
    for (int g = 1; g < S3.order(); ++g)
        if (S3.element_order(g) == 2) return g;
    throw Error("no element of order 2");
}

/// Every built-in construction, levels 0..max_level.
inline std::vector<NamedSpace> builtin_spaces(int max_level, int vertical_truncation) {
    std::vector<NamedSpace> out;
    const auto z2 = cyclic_group(2);
    const auto s3 = symmetric_group_3();
    out.push_back({"hom-Z2", commuting_nerve(z2, max_level)});
    out.push_back({"hom-Z3", commuting_nerve(cyclic_group(3), max_level)});
    out.push_back({"hom-S3", commuting_nerve(s3, max_level)});
    out.push_back({"hom-Q8", commuting_nerve(quaternion_group(), max_level)});
    out.push_back({"hom-Z2xZ2", commuting_nerve(direct_product(z2, z2), max_level)});
    out.push_back({"rep-S3", rep_nerve(s3, max_level)});
    out.push_back({"levels-of-order-complex-boundary-2-simplex",
                   discrete_space(order_complex(boundary_of_simplex(2), std::max(max_level, 1)), max_level, 1, "levels of order complex of boundary of 2-simplex")});
    out.push_back({"cech-circle", cech_nerve(simplicial_circle(vertical_truncation), max_level, "Cech nerve of the simplicial circle")});
    return out;
}

} // namespace suspsplit
