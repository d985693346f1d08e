#pragma once

// Builds a FiniteSimplicialSet from a concrete model: an explicit listing of
// all simplices together with face and degeneracy functions on them. The
// nondegenerate simplices become generators and every simplex is mapped to
// its Eilenberg-Zilber normal form.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "suspsplit/simplicial_set.hpp"

namespace suspsplit {

template <class Key>
struct ModelOps {
    std::function<std::vector<Key>(int)> all_simplices; // every n-simplex
    std::function<int(const Key&)> dim;
    std::function<Key(const Key&, int)> face;
    std::function<Key(const Key&, int)> degeneracy;
    std::function<std::string(const Key&)> label;
};

template <class Key>
class ModelledSet {
public:
    ModelledSet(int truncation, ModelOps<Key> ops) : ops_(std::move(ops)) {
        auto set = std::make_shared<FiniteSimplicialSet>(truncation);
        keys_.resize(static_cast<std::size_t>(truncation) + 1);
        for (int n = 0; n <= truncation; ++n) {
            for (const Key& x : ops_.all_simplices(n)) {
                if (ops_.dim(x) != n) throw Error("model simplex has wrong dimension");
                if (!degeneracy_set(x, n).empty()) continue;
                std::vector<SimplexRef> faces;
                if (n > 0)
                    for (int i = 0; i <= n; ++i) faces.push_back(decompose(ops_.face(x, i)));
                GenId g = set->add_generator(n, std::move(faces), ops_.label ? ops_.label(x) : std::string{});
                if (!index_.emplace(x, g).second) throw Error("model lists a simplex twice");
                keys_[static_cast<std::size_t>(n)].push_back(x);
            }
        }
        set_ = std::move(set);
    }

    const SimplicialSetPtr& set() const { return set_; }
    const Key& key(GenId g) const { return keys_.at(static_cast<std::size_t>(g.dim)).at(static_cast<std::size_t>(g.index)); }

    /// Indices i with x = s_i d_i x, in decreasing order. This is exactly the
    /// admissible word of the Eilenberg-Zilber decomposition of x.
    DegeneracyWord degeneracy_set(const Key& x, int n) const {
        DegeneracyWord out;
        for (int i = n - 1; i >= 0; --i)
            if (ops_.degeneracy(ops_.face(x, i), i) == x) out.push_back(i);
        return out;
    }

    SimplexRef decompose(const Key& x) const {
        const int n = ops_.dim(x);
        DegeneracyWord word = degeneracy_set(x, n);
        Key y = x;
        for (int i : word) y = ops_.face(y, i); // d_{a_1} ... d_{a_r}, largest index first
        auto it = index_.find(y);
        if (it == index_.end()) throw Error("model simplex outside the enumerated set");
        return {it->second, std::move(word)};
    }

    Key realize(const SimplexRef& x) const {
        Key y = key(x.gen);
        for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) y = ops_.degeneracy(y, *it);
        return y;
    }

private:
    ModelOps<Key> ops_;
    std::map<Key, GenId> index_;
    std::vector<std::vector<Key>> keys_;
    SimplicialSetPtr set_;
};

/// The simplicial map between modelled sets induced by a function on keys.
template <class KeyA, class KeyB, class Fn>
SimplicialMap modelled_map(const ModelledSet<KeyA>& src, const ModelledSet<KeyB>& dst, Fn&& fn) {
    SimplicialMap f(src.set(), dst.set());
    for (int d = 0; d <= src.set()->truncation(); ++d)
        for (int g = 0; g < src.set()->count(d); ++g) f.set_image({d, g}, dst.decompose(fn(src.key({d, g}))));
    return f;
}

} // namespace suspsplit
