#pragma once

#include <string>
#include <vector>

#include "suspsplit/simplicial_set.hpp"

namespace suspsplit {

/// Strictly decreasing index sequence (i_r, ..., i_1), i_1 >= 0.
class AdmissibleSeq {
public:
    AdmissibleSeq() = default;
    explicit AdmissibleSeq(std::vector<int> indices) : indices_(std::move(indices)) {
        if (!is_admissible(indices_)) throw Error("sequence is not admissible");
    }

    const std::vector<int>& indices() const { return indices_; }
    int length() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }

    friend bool operator==(const AdmissibleSeq&, const AdmissibleSeq&) = default;

private:
    std::vector<int> indices_;
};

inline std::string to_string(const AdmissibleSeq& J) {
    std::string s = "(";
    for (std::size_t k = 0; k < J.indices().size(); ++k) {
        if (k) s += ",";
        s += std::to_string(J.indices()[k]);
    }
    return s + ")";
}

enum class SeqOrder { less, equal, greater };

/// Ordering of equal-length sequences: I < J when they agree on the entries
/// of index above some p and i_p < j_p. Entries are stored outermost first,
/// so this is lexicographic comparison of the stored vectors.
inline SeqOrder compare(const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) throw Error("ordering is defined on sequences of equal length");
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < J[k]) return SeqOrder::less;
        if (I[k] > J[k]) return SeqOrder::greater;
    }
    return SeqOrder::equal;
}

inline SeqOrder compare(const AdmissibleSeq& I, const AdmissibleSeq& J) { return compare(I.indices(), J.indices()); }
inline bool operator<(const AdmissibleSeq& I, const AdmissibleSeq& J) { return compare(I, J) == SeqOrder::less; }

/// Admissible sequences of length r with entries in {0, ..., max_index},
/// ascending. There are C(max_index + 1, r) of them.
inline std::vector<AdmissibleSeq> enumerate_admissible(int max_index, int r) {
    std::vector<AdmissibleSeq> out;
    if (r < 0 || max_index < -1) return out;
    for (auto& w : admissible_words_into(max_index + 1, r)) out.emplace_back(std::move(w));
    return out;
}

/// The reversed sequence (i_1, ..., i_r).
inline std::vector<int> chi(const AdmissibleSeq& I) {
    return {I.indices().rbegin(), I.indices().rend()};
}

/// s_{j_r} ... s_{j_1}(x) in normal form.
inline SimplexRef composite_degeneracy(const FiniteSimplicialSet& X, const SimplexRef& x, const AdmissibleSeq& J) {
    return apply_word(X, x, J.indices());
}

/// d_{a_1} ... d_{a_k}(x); the last entry acts first.
inline SimplexRef composite_face(const FiniteSimplicialSet& X, const SimplexRef& x, const std::vector<int>& seq) {
    SimplexRef y = x;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) y = face(X, y, *it);
    return y;
}

inline long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

} // namespace suspsplit
