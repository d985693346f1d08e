#pragma once

// Finite truncated simplicial sets in Eilenberg-Zilber normal form.
//
// Every simplex is stored as an admissible degeneracy word applied to a
// nondegenerate generator. Only generators and their face tables are kept;
// faces and degeneracies of arbitrary simplices are evaluated by rewriting
// with the simplicial identities.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "suspsplit/error.hpp"

namespace suspsplit {

/// Degeneracy operator subscripts, outermost first: (i_r, ..., i_1) stands
/// for s_{i_r} ... s_{i_1}. The empty word is the identity.
using DegeneracyWord = std::vector<int>;

/// Strictly decreasing left to right.
inline bool is_admissible(const DegeneracyWord& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] <= w[k]) return false;
    for (int i : w)
        if (i < 0) return false;
    return true;
}

/// Applies s_i on the left of an admissible word, keeping it admissible.
/// Uses s_i s_j = s_{j+1} s_i for i <= j.
inline void prepend_degeneracy(DegeneracyWord& admissible, int i) {
    std::size_t pos = 0;
    while (pos < admissible.size() && admissible[pos] >= i) {
        ++admissible[pos];
        ++pos;
    }
    admissible.insert(admissible.begin() + static_cast<std::ptrdiff_t>(pos), i);
}

/// The unique admissible word representing the same composite as w.
inline DegeneracyWord normal_form(const DegeneracyWord& w) {
    DegeneracyWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it < 0) throw Error("negative degeneracy index");
        prepend_degeneracy(out, *it);
    }
    return out;
}

struct GenId {
    int dim = 0;
    int index = 0;
    friend auto operator<=>(const GenId&, const GenId&) = default;
};

/// A simplex: admissible word applied to a nondegenerate generator.
struct SimplexRef {
    GenId gen;
    DegeneracyWord word;

    SimplexRef() = default;
    SimplexRef(GenId g, DegeneracyWord w = {}) : gen(g), word(std::move(w)) {} // NOLINT

    int dim() const { return gen.dim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }

    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

inline std::string to_string(const SimplexRef& x) {
    std::ostringstream os;
    for (int i : x.word) os << "s" << i << " ";
    os << "g" << x.gen.dim << ":" << x.gen.index;
    return os.str();
}

class FiniteSimplicialSet {
public:
    explicit FiniteSimplicialSet(int truncation) : truncation_(truncation) {
        if (truncation < 0) throw Error("truncation must be non-negative");
        faces_.resize(static_cast<std::size_t>(truncation) + 1);
        labels_.resize(static_cast<std::size_t>(truncation) + 1);
    }

    int truncation() const { return truncation_; }

    int count(int dim) const {
        if (dim < 0 || dim > truncation_) return 0;
        return static_cast<int>(faces_[static_cast<std::size_t>(dim)].size());
    }

    int total_generators() const {
        int n = 0;
        for (int d = 0; d <= truncation_; ++d) n += count(d);
        return n;
    }

    /// Highest dimension that carries a generator, or -1 when empty.
    int top_dimension() const {
        for (int d = truncation_; d >= 0; --d)
            if (count(d) > 0) return d;
        return -1;
    }

    /// Adds a nondegenerate generator. Faces must reference existing
    /// generators of dimension dim - 1 (possibly through degeneracies).
    GenId add_generator(int dim, std::vector<SimplexRef> faces, std::string label = {}) {
        if (dim < 0 || dim > truncation_) throw Error("generator dimension exceeds truncation");
        if (dim == 0 && !faces.empty()) throw Error("a vertex has no faces");
        if (dim > 0 && static_cast<int>(faces.size()) != dim + 1) throw Error("wrong number of faces");
        for (const auto& f : faces) {
            if (f.dim() != dim - 1) throw Error("face has wrong dimension");
            if (!is_admissible(f.word)) throw Error("face word is not admissible");
            if (f.gen.index < 0 || f.gen.index >= count(f.gen.dim)) throw Error("face references unknown generator");
            if (!f.word.empty() && f.word.front() > dim - 2) throw Error("face word index out of range");
        }
        auto& bucket = faces_[static_cast<std::size_t>(dim)];
        bucket.push_back(std::move(faces));
        labels_[static_cast<std::size_t>(dim)].push_back(std::move(label));
        return {dim, static_cast<int>(bucket.size()) - 1};
    }

    const std::vector<SimplexRef>& faces(GenId g) const { return faces_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)); }

    /// Overwrites one face table entry. Intended for fault injection in tests.
    void set_face(GenId g, int i, SimplexRef f) { faces_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)).at(static_cast<std::size_t>(i)) = std::move(f); }

    const std::string& label(GenId g) const { return labels_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)); }

    std::string label(const SimplexRef& x) const {
        std::string base = label(x.gen);
        if (base.empty()) base = "g" + std::to_string(x.gen.dim) + ":" + std::to_string(x.gen.index);
        if (x.word.empty()) return base;
        std::string out;
        for (int i : x.word) out += "s" + std::to_string(i);
        return out + "(" + base + ")";
    }

    void set_basepoint(SimplexRef b) {
        if (b.dim() != 0) throw Error("basepoint must be a vertex");
        basepoint_ = std::move(b);
    }
    const std::optional<SimplexRef>& basepoint() const { return basepoint_; }

private:
    int truncation_;
    std::vector<std::vector<std::vector<SimplexRef>>> faces_;
    std::vector<std::vector<std::string>> labels_;
    std::optional<SimplexRef> basepoint_;
};

using SimplicialSetPtr = std::shared_ptr<const FiniteSimplicialSet>;

inline void check_simplex(const FiniteSimplicialSet& X, const SimplexRef& x) {
    if (x.gen.dim < 0 || x.gen.index < 0 || x.gen.index >= X.count(x.gen.dim)) throw Error("unknown generator");
    if (!is_admissible(x.word)) throw Error("simplex word is not admissible");
    if (x.dim() > X.truncation()) throw Error("simplex dimension exceeds truncation");
    if (!x.word.empty() && x.word.front() > x.dim() - 1) throw Error("degeneracy index out of range");
}

/// d_i(x), pushing d_i through the degeneracy word and finishing on the face table.
inline SimplexRef face(const FiniteSimplicialSet& X, const SimplexRef& x, int i) {
    const int n = x.dim();
    if (n < 1 || i < 0 || i > n) throw Error("invalid face index");
    DegeneracyWord outer;
    int idx = i;
    for (std::size_t k = 0; k < x.word.size(); ++k) {
        const int j = x.word[k];
        if (idx < j) {
            outer.push_back(j - 1);
        } else if (idx == j || idx == j + 1) {
            outer.insert(outer.end(), x.word.begin() + static_cast<std::ptrdiff_t>(k) + 1, x.word.end());
            return {x.gen, normal_form(outer)};
        } else {
            outer.push_back(j);
            --idx;
        }
    }
    const SimplexRef& z = X.faces(x.gen).at(static_cast<std::size_t>(idx));
    outer.insert(outer.end(), z.word.begin(), z.word.end());
    return {z.gen, normal_form(outer)};
}

/// s_i(x). Leaving the truncation is an error.
inline SimplexRef degeneracy(const FiniteSimplicialSet& X, const SimplexRef& x, int i) {
    if (i < 0 || i > x.dim()) throw Error("invalid degeneracy index");
    if (x.dim() + 1 > X.truncation()) throw Error("degeneracy exceeds truncation");
    SimplexRef out = x;
    prepend_degeneracy(out.word, i);
    return out;
}

/// Applies an arbitrary (not necessarily admissible) word, innermost letter first.
inline SimplexRef apply_word(const FiniteSimplicialSet& X, const SimplexRef& x, const DegeneracyWord& w) {
    SimplexRef out = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = degeneracy(X, out, *it);
    return out;
}

/// Admissible words of length r whose composite lands in dimension n, i.e.
/// strictly decreasing sequences with entries in {0, ..., n-1}; lexicographic order.
inline std::vector<DegeneracyWord> admissible_words_into(int n, int r) {
    std::vector<DegeneracyWord> out;
    if (r < 0 || r > n) return out;
    DegeneracyWord cur;
    auto rec = [&](auto&& self, int max_entry, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = remaining - 1; v <= max_entry; ++v) {
            cur.push_back(v);
            self(self, v - 1, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, n - 1, r);
    std::sort(out.begin(), out.end());
    return out;
}

/// All n-simplices, degenerate or not, ordered by generator then word.
inline std::vector<SimplexRef> simplices(const FiniteSimplicialSet& X, int n) {
    if (n < 0 || n > X.truncation()) throw Error("dimension exceeds truncation");
    std::vector<SimplexRef> out;
    for (int m = 0; m <= n; ++m) {
        auto words = admissible_words_into(n, n - m);
        for (int g = 0; g < X.count(m); ++g)
            for (const auto& w : words) out.push_back({{m, g}, w});
    }
    return out;
}

struct IdentityViolation {
    SimplexRef simplex;
    std::string identity; // e.g. "d1 d3 = d2 d1"
    SimplexRef lhs, rhs;
};

struct ValidationReport {
    std::vector<IdentityViolation> violations;
    std::size_t checked = 0;
    bool ok() const { return violations.empty(); }
};

/// Checks d_i d_j = d_{j-1} d_i (i < j) on every generator, and the mixed
/// face/degeneracy identities on every simplex below the truncation.
inline ValidationReport validate_identities(const FiniteSimplicialSet& X) {
    ValidationReport rep;
    auto note = [&](const SimplexRef& x, std::string what, const SimplexRef& a, const SimplexRef& b) {
        if (a != b) rep.violations.push_back({x, std::move(what), a, b});
    };
    for (int d = 2; d <= X.truncation(); ++d)
        for (int g = 0; g < X.count(d); ++g) {
            SimplexRef x{{d, g}};
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i) {
                    ++rep.checked;
                    note(x, "d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d" + std::to_string(i),
                         face(X, face(X, x, j), i), face(X, face(X, x, i), j - 1));
                }
        }
    for (int n = 0; n < X.truncation(); ++n)
        for (const auto& x : simplices(X, n))
            for (int j = 0; j <= n; ++j) {
                SimplexRef sx = degeneracy(X, x, j);
                for (int i = 0; i <= n + 1; ++i) {
                    ++rep.checked;
                    SimplexRef expected;
                    if (i == j || i == j + 1) expected = x;
                    else if (i < j) expected = degeneracy(X, face(X, x, i), j - 1);
                    else expected = degeneracy(X, face(X, x, i - 1), j);
                    note(x, "d" + std::to_string(i) + " s" + std::to_string(j), face(X, sx, i), expected);
                }
            }
    return rep;
}

/// Dimension-preserving assignment of generators to target simplices.
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target) : source_(std::move(source)), target_(std::move(target)) {
        if (source_->truncation() > target_->truncation()) throw Error("map target truncation too small");
        images_.resize(static_cast<std::size_t>(source_->truncation()) + 1);
        for (int d = 0; d <= source_->truncation(); ++d) images_[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(source_->count(d)));
    }

    const SimplicialSetPtr& source() const { return source_; }
    const SimplicialSetPtr& target() const { return target_; }

    void set_image(GenId g, SimplexRef y) {
        if (y.dim() != g.dim) throw Error("map must preserve dimension");
        check_simplex(*target_, y);
        images_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)) = std::move(y);
    }

    const SimplexRef& image(GenId g) const { return images_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)); }

    /// f(s_W g) = s_W f(g).
    SimplexRef operator()(const SimplexRef& x) const {
        SimplexRef y = image(x.gen);
        for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) prepend_degeneracy(y.word, *it);
        return y;
    }

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) { return a.images_ == b.images_; }

private:
    SimplicialSetPtr source_, target_;
    std::vector<std::vector<SimplexRef>> images_;
};

/// g after f.
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap out(f.source(), g.target());
    for (int d = 0; d <= f.source()->truncation(); ++d)
        for (int i = 0; i < f.source()->count(d); ++i) out.set_image({d, i}, g(f.image({d, i})));
    return out;
}

inline SimplicialMap identity_map(const SimplicialSetPtr& X) {
    SimplicialMap out(X, X);
    for (int d = 0; d <= X->truncation(); ++d)
        for (int i = 0; i < X->count(d); ++i) out.set_image({d, i}, SimplexRef{{d, i}});
    return out;
}

/// Generators g and faces i with f(d_i g) != d_i f(g). Empty means f is simplicial.
inline std::vector<std::pair<GenId, int>> check_simplicial(const SimplicialMap& f) {
    std::vector<std::pair<GenId, int>> bad;
    const auto& X = *f.source();
    const auto& Y = *f.target();
    for (int d = 1; d <= X.truncation(); ++d)
        for (int g = 0; g < X.count(d); ++g)
            for (int i = 0; i <= d; ++i)
                if (f(X.faces({d, g})[static_cast<std::size_t>(i)]) != face(Y, f.image({d, g}), i)) bad.push_back({{d, g}, i});
    return bad;
}

/// Simplices of X that are identified by f (witness of non-injectivity), if any.
inline std::optional<std::pair<SimplexRef, SimplexRef>> injectivity_witness(const SimplicialMap& f) {
    // An injective simplicial map sends generators to distinct nondegenerate simplices.
    std::map<SimplexRef, SimplexRef> seen;
    for (int d = 0; d <= f.source()->truncation(); ++d)
        for (int g = 0; g < f.source()->count(d); ++g) {
            SimplexRef x{{d, g}};
            const SimplexRef& y = f.image(x.gen);
            if (y.degenerate()) return std::make_pair(x, x);
            auto [it, fresh] = seen.emplace(y, x);
            if (!fresh) return std::make_pair(it->second, x);
        }
    return std::nullopt;
}

} // namespace suspsplit
