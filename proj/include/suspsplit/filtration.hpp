#pragma once

// The decreasing degeneracy filtration S^t(X_n) of the levels of a
// simplicial space, its stage quotients, and the decomposition of each stage
// quotient into the summands s_J(X_{n-r}) / s_J S(X_{n-r}).
//
// Levels may be genuine simplicial sets. A "horizontal simplex" of level n is
// any vertical simplex of X_n; since horizontal operators commute with
// vertical ones, membership in S^t is decided on generators and every
// sub-object below is a sub-simplicial set given by its generators.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "suspsplit/admissible.hpp"
#include "suspsplit/simplicial_space.hpp"

namespace suspsplit {

/// Membership of generators, per dimension.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(const FiniteSimplicialSet& X, bool value = false) {
        bits_.resize(static_cast<std::size_t>(X.truncation()) + 1);
        for (int d = 0; d <= X.truncation(); ++d) bits_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(X.count(d)), value);
    }

    bool contains(GenId g) const {
        if (g.dim < 0 || g.dim >= static_cast<int>(bits_.size())) return false;
        const auto& b = bits_[static_cast<std::size_t>(g.dim)];
        return g.index >= 0 && g.index < static_cast<int>(b.size()) && b[static_cast<std::size_t>(g.index)];
    }
    void set(GenId g, bool v = true) { bits_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)) = v; }

    int count(int dim) const {
        if (dim < 0 || dim >= static_cast<int>(bits_.size())) return 0;
        int n = 0;
        for (bool b : bits_[static_cast<std::size_t>(dim)]) n += b;
        return n;
    }
    int size() const {
        int n = 0;
        for (int d = 0; d < static_cast<int>(bits_.size()); ++d) n += count(d);
        return n;
    }
    bool empty() const { return size() == 0; }

    std::vector<GenId> members() const {
        std::vector<GenId> out;
        for (int d = 0; d < static_cast<int>(bits_.size()); ++d)
            for (int i = 0; i < static_cast<int>(bits_[static_cast<std::size_t>(d)].size()); ++i)
                if (bits_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]) out.push_back({d, i});
        return out;
    }

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<std::vector<bool>> bits_;
};

/// Generators of a sub-object whose vertical faces leave it (empty when closed).
inline std::vector<GenId> closure_defects(const FiniteSimplicialSet& X, const GeneratorSet& A) {
    std::vector<GenId> out;
    for (GenId g : A.members()) {
        if (g.dim == 0) continue;
        for (const auto& f : X.faces(g))
            if (!A.contains(f.gen)) {
                out.push_back(g);
                break;
            }
    }
    return out;
}

/// x lies in the image of the horizontal composite s_J : X_{n-r} -> X_n.
inline bool in_horizontal_image(const SimplicialSpace& X, int n, const SimplexRef& x, const AdmissibleSeq& J) {
    const int r = J.length();
    if (r > n) return false;
    SimplexRef y = horizontal_face(X, n, x, chi(J));
    return horizontal_degeneracy(X, n - r, y, J.indices()) == x;
}

/// Largest t such that x = s_J(y) for some admissible J of length t with
/// entries in {0, ..., n-1}. Computed directly, without caching.
inline int degeneracy_degree(const SimplicialSpace& X, int n, const SimplexRef& x) {
    for (int t = n; t >= 1; --t)
        for (const auto& J : enumerate_admissible(n - 1, t))
            if (in_horizontal_image(X, n, x, J)) return t;
    return 0;
}

/// Cached degeneracy degrees of the generators of every level.
class Filtration {
public:
    explicit Filtration(std::shared_ptr<const SimplicialSpace> space) : space_(std::move(space)) {
        if (!space_) throw Error("null simplicial space");
        cache_.resize(static_cast<std::size_t>(space_->horizontal_truncation()) + 1);
    }

    const SimplicialSpace& space() const { return *space_; }
    const std::shared_ptr<const SimplicialSpace>& space_ptr() const { return space_; }
    int top_level() const { return space_->horizontal_truncation(); }

    /// Degree of generator g in level n.
    int degree(int n, GenId g) const { return table(n).at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)); }
    int degree(int n, const SimplexRef& x) const { return degree(n, x.gen); }

    /// Generators of level n with degree >= t.
    GeneratorSet stage(int n, int t) const {
        const auto& L = space_->level(n);
        GeneratorSet out(L);
        for (int d = 0; d <= L.truncation(); ++d)
            for (int g = 0; g < L.count(d); ++g)
                if (degree(n, GenId{d, g}) >= t) out.set({d, g});
        return out;
    }

private:
    using Table = std::vector<std::vector<int>>;

    const Table& table(int n) const {
        if (n < 0 || n > top_level()) throw Error("level out of range");
        std::lock_guard lock(mutex_);
        auto& slot = cache_[static_cast<std::size_t>(n)];
        if (!slot) {
            const auto& L = space_->level(n);
            auto t = std::make_shared<Table>(static_cast<std::size_t>(L.truncation()) + 1);
            for (int d = 0; d <= L.truncation(); ++d)
                for (int g = 0; g < L.count(d); ++g) (*t)[static_cast<std::size_t>(d)].push_back(degeneracy_degree(*space_, n, SimplexRef{{d, g}}));
            slot = std::move(t);
        }
        return *slot;
    }

    std::shared_ptr<const SimplicialSpace> space_;
    mutable std::mutex mutex_;
    mutable std::vector<std::shared_ptr<const Table>> cache_;
};

struct FiltrationStage {
    int level = 0;
    int stage = 0;
    GeneratorSet members;
    std::vector<GenId> closure_defects; // expected empty
};

/// S^t(X_n) for 0 <= t <= n + 1.
inline FiltrationStage filtration_stage(const Filtration& F, int n, int t) {
    if (n < 0 || n > F.top_level()) throw Error("level out of range");
    if (t < 0 || t > n + 1) throw Error("filtration stage out of range");
    FiltrationStage s{n, t, F.stage(n, t), {}};
    s.closure_defects = closure_defects(F.space().level(n), s.members);
    return s;
}

/// numerator / denominator inside one level. An empty denominator means the
/// numerator itself, unpointed; reduced homology then uses the augmentation.
struct PointedQuotient {
    SimplicialSetPtr level;
    GeneratorSet numerator;
    GeneratorSet denominator;

    bool pointed() const { return !denominator.empty(); }

    /// Generators surviving in the quotient.
    std::vector<GenId> cells() const {
        std::vector<GenId> out;
        for (GenId g : numerator.members())
            if (!denominator.contains(g)) out.push_back(g);
        return out;
    }
    int cell_count(int dim) const {
        int n = 0;
        for (GenId g : cells()) n += (g.dim == dim);
        return n;
    }
};

inline PointedQuotient whole_level(const SimplicialSetPtr& L) {
    return {L, GeneratorSet(*L, true), GeneratorSet(*L, false)};
}

/// S^t(X_n) / S^{t+1}(X_n), 0 <= t <= n.
inline PointedQuotient stage_quotient(const Filtration& F, int n, int t) {
    if (n < 0 || n > F.top_level() || t < 0 || t > n) throw Error("stage quotient out of range");
    return {F.space().levels[static_cast<std::size_t>(n)], F.stage(n, t), F.stage(n, t + 1)};
}

/// Sub-object S^t(X_n) itself (unpointed).
inline PointedQuotient stage_subobject(const Filtration& F, int n, int t) {
    const auto& L = F.space().levels[static_cast<std::size_t>(n)];
    return {L, F.stage(n, t), GeneratorSet(*L, false)};
}

/// Generators of level n lying in s_J(X_{n-r}).
inline GeneratorSet horizontal_image(const Filtration& F, int n, const AdmissibleSeq& J) {
    const auto& L = F.space().level(n);
    GeneratorSet out(L);
    for (int d = 0; d <= L.truncation(); ++d)
        for (int g = 0; g < L.count(d); ++g)
            if (in_horizontal_image(F.space(), n, SimplexRef{{d, g}}, J)) out.set({d, g});
    return out;
}

/// s_J(X_{n-r}) / s_J S(X_{n-r}) realised inside level n. For |J| = n the
/// denominator is empty (the summand s_0^n(X_0), unpointed).
inline PointedQuotient summand_quotient(const Filtration& F, int n, const AdmissibleSeq& J) {
    const int r = J.length();
    GeneratorSet num = horizontal_image(F, n, J);
    GeneratorSet den(F.space().level(n));
    for (GenId g : num.members())
        if (F.degree(n, g) >= r + 1) den.set(g);
    return {F.space().levels[static_cast<std::size_t>(n)], std::move(num), std::move(den)};
}

/// X_m / S(X_m); X_0 itself (unpointed) for m = 0.
inline PointedQuotient level_mod_degenerate(const Filtration& F, int m) {
    return {F.space().levels[static_cast<std::size_t>(m)], F.stage(m, 0), F.stage(m, 1)};
}

/// Admissible sequences indexing the summands of S^r(X_n) / S^{r+1}(X_n).
inline std::vector<AdmissibleSeq> summand_indices(int n, int r) { return enumerate_admissible(n - 1, r); }

struct WedgeSummand {
    AdmissibleSeq J;
    std::vector<GenId> classes; // non-basepoint cells of the summand, as generators of level n
    bool injective = true;      // s_J is injective on X_{n-r} \ S(X_{n-r})
};

struct WedgeWitness {
    int level = 0;
    int r = 0;
    std::vector<WedgeSummand> summands;
    int stage_classes = 0; // non-basepoint cells of S^r / S^{r+1}
    bool covers = false;
    bool disjoint = false;
    std::optional<GenId> counterexample;
    long long expected_multiplicity = 0; // C(n, r)
    bool ok() const { return covers && disjoint && static_cast<long long>(summands.size()) == expected_multiplicity &&
                             std::all_of(summands.begin(), summands.end(), [](const WedgeSummand& s) { return s.injective; }); }
};

/// Checks that the summands s_J(X_{n-r})/s_J S(X_{n-r}) map bijectively onto
/// the cells of S^r(X_n)/S^{r+1}(X_n): they cover and meet only in the basepoint.
inline WedgeWitness wedge_decomposition(const Filtration& F, int n, int r) {
    if (n < 0 || n > F.top_level() || r < 0 || r > n) throw Error("wedge decomposition out of range");
    WedgeWitness w;
    w.level = n;
    w.r = r;
    w.expected_multiplicity = binomial(n, r);
    const auto& L = F.space().level(n);
    std::map<GenId, int> hits;
    for (const auto& J : summand_indices(n, r)) {
        WedgeSummand s{J, {}, true};
        for (GenId g : horizontal_image(F, n, J).members())
            if (F.degree(n, g) == r) {
                s.classes.push_back(g);
                ++hits[g];
            }
        // injectivity of s_J on the cells of X_{n-r} / S(X_{n-r})
        const auto& src = F.space().level(n - r);
        std::map<SimplexRef, int> images;
        for (int d = 0; d <= src.truncation(); ++d)
            for (int g = 0; g < src.count(d); ++g) {
                if (n - r > 0 && F.degree(n - r, GenId{d, g}) > 0) continue;
                SimplexRef y = horizontal_degeneracy(F.space(), n - r, SimplexRef{{d, g}}, J.indices());
                if (!images.emplace(y, g).second) s.injective = false;
            }
        w.summands.push_back(std::move(s));
    }
    w.covers = true;
    w.disjoint = true;
    for (int d = 0; d <= L.truncation(); ++d)
        for (int g = 0; g < L.count(d); ++g) {
            GenId id{d, g};
            if (F.degree(n, id) != r) continue;
            ++w.stage_classes;
            auto it = hits.find(id);
            if (it == hits.end()) {
                w.covers = false;
                if (!w.counterexample) w.counterexample = id;
            } else if (it->second > 1) {
                w.disjoint = false;
                if (!w.counterexample) w.counterexample = id;
            }
        }
    return w;
}

struct IntersectionViolation {
    AdmissibleSeq I, J;
    GenId generator;
    int degree;
};

struct IntersectionReport {
    int level = 0;
    int r = 0;
    std::size_t pairs_checked = 0;
    std::vector<IntersectionViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// s_I(X_{n-r}) and s_J(X_{n-r}) meet only inside S^{r+1}(X_n), for I != J.
inline IntersectionReport intersection_check(const Filtration& F, int n, int r) {
    if (n < 0 || n > F.top_level() || r < 0 || r > n) throw Error("intersection check out of range");
    IntersectionReport rep{n, r, 0, {}};
    const auto seqs = summand_indices(n, r);
    std::vector<GeneratorSet> images;
    for (const auto& J : seqs) images.push_back(horizontal_image(F, n, J));
    for (std::size_t a = 0; a < seqs.size(); ++a)
        for (std::size_t b = a + 1; b < seqs.size(); ++b) {
            ++rep.pairs_checked;
            for (GenId g : images[a].members())
                if (images[b].contains(g) && F.degree(n, g) < r + 1) rep.violations.push_back({seqs[a], seqs[b], g, F.degree(n, g)});
        }
    return rep;
}

} // namespace suspsplit
