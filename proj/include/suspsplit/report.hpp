#pragma once

// JSON views of the reports. Key order is fixed (ordered_json) so that equal
// inputs give byte-identical output.

#include <string>
#include <vector>

#include "json.hpp"
#include "suspsplit/splitting.hpp"

namespace suspsplit {

using Json = nlohmann::ordered_json;

inline Json to_json(const HomologyGroup& h) {
    return Json{{"group", to_string(h)}, {"betti", h.betti}, {"torsion", h.torsion}};
}

inline Json to_json(const std::vector<HomologyGroup>& gs) {
    Json a = Json::array();
    for (const auto& g : gs) a.push_back(to_json(g));
    return a;
}

inline Json to_json(const HomologyGroups& h) {
    Json degrees = Json::array();
    for (int k = 0; k < static_cast<int>(h.degrees.size()); ++k) {
        Json d = to_json(h.degrees[static_cast<std::size_t>(k)]);
        d["degree"] = k;
        d["reliable"] = k <= h.reliable_top;
        degrees.push_back(std::move(d));
    }
    return Json{{"reliable_top", h.reliable_top}, {"degrees", std::move(degrees)}};
}

inline Json to_json(const AdmissibleSeq& J) { return J.indices(); }

inline Json to_json(const HomologyMatrix& m) {
    return Json{{"degree", m.degree}, {"source", to_string(m.source)}, {"target", to_string(m.target)}, {"rows", m.rows}};
}

inline Json to_json(const IsoCertificate& c) {
    return Json{{"groups_match", c.groups_match}, {"free_unimodular", c.free_unimodular}, {"surjective", c.surjective}, {"iso", c.iso()}};
}

inline Json to_json(const FiniteSimplicialSet& X) {
    Json counts = Json::array();
    for (int d = 0; d <= X.truncation(); ++d) counts.push_back(X.count(d));
    return Json{{"truncation", X.truncation()}, {"generators", std::move(counts)}};
}

inline Json to_json(const FiniteSimplicialSet& X, const ValidationReport& r) {
    Json v = Json::array();
    for (const auto& e : r.violations) v.push_back(Json{{"simplex", X.label(e.simplex)}, {"identity", e.identity}, {"lhs", X.label(e.lhs)}, {"rhs", X.label(e.rhs)}});
    return Json{{"checked", r.checked}, {"ok", r.ok()}, {"violations", std::move(v)}};
}

inline Json to_json(const std::vector<HorizontalViolation>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(Json{{"level", v.level}, {"identity", v.identity}, {"generator", {v.generator.dim, v.generator.index}}});
    return a;
}

inline Json to_json(const SimplicialSpace& X) {
    Json levels = Json::array();
    for (int n = 0; n <= X.horizontal_truncation(); ++n) levels.push_back(to_json(X.level(n)));
    return Json{{"name", X.name}, {"horizontal_truncation", X.horizontal_truncation()}, {"discrete", X.discrete()}, {"levels", std::move(levels)}};
}

inline Json to_json(const Filtration& F, const WedgeWitness& w) {
    const auto& L = F.space().level(w.level);
    Json summands = Json::array();
    for (const auto& s : w.summands) summands.push_back(Json{{"J", to_json(s.J)}, {"classes", s.classes.size()}, {"injective", s.injective}});
    Json j{{"level", w.level},
           {"r", w.r},
           {"stage_classes", w.stage_classes},
           {"multiplicity", w.summands.size()},
           {"expected_multiplicity", w.expected_multiplicity},
           {"covers", w.covers},
           {"disjoint", w.disjoint},
           {"ok", w.ok()},
           {"summands", std::move(summands)}};
    if (w.counterexample) j["counterexample"] = L.label(*w.counterexample);
    return j;
}

inline Json to_json(const IntersectionReport& r) {
    return Json{{"level", r.level}, {"r", r.r}, {"pairs_checked", r.pairs_checked}, {"violations", r.violations.size()}, {"ok", r.ok()}};
}

inline Json to_json(const SimplicialSpace& X, const TriangularityReport& r) {
    Json v = Json::array();
    for (const auto& e : r.violations)
        v.push_back(Json{{"I", to_json(e.I)}, {"J", to_json(e.J)}, {"x", X.level(r.level - r.r).label(e.x)}, {"result", X.level(r.level).label(e.result)}});
    return Json{{"level", r.level}, {"r", r.r}, {"checks", r.checks}, {"ok", r.ok()}, {"violations", std::move(v)}};
}

inline Json to_json(const SimplicialSpace& X, const DeltaReport& r) {
    Json v = Json::array();
    for (const auto& e : r.violations)
        v.push_back(Json{{"J", to_json(e.J)}, {"generator", X.level(r.level).label(e.generator)}, {"degree", e.source_degree}, {"image", X.level(r.level - r.r).label(e.image)}});
    return Json{{"level", r.level}, {"r", r.r}, {"checks", r.checks}, {"ok", r.ok()}, {"violations", std::move(v)}};
}

inline Json to_json(const SimplicialSpace& X, const HopfComponent& h) {
    const auto& L = X.level(h.level);
    Json values = Json::array();
    for (const auto& [g, y] : h.values) values.push_back(Json{{"source", L.label(g)}, {"image", y ? L.label(*y) : std::string("*")}});
    return Json{{"level", h.level}, {"J", to_json(h.J)}, {"pointed", h.target.pointed()}, {"values", std::move(values)}};
}

inline Json to_json(const BlockMap& H) {
    Json summands = Json::array();
    for (const auto& J : H.summands) summands.push_back(to_json(J));
    Json degrees = Json::array();
    for (std::size_t k = 0; k < H.stacked.size(); ++k)
        degrees.push_back(Json{{"degree", k}, {"source", to_json(H.source_groups[k])}, {"matrix", to_json(H.stacked[k])}, {"certificate", to_json(H.certificates[k])}});
    return Json{{"level", H.level}, {"summands", std::move(summands)}, {"iso", H.iso()}, {"degrees", std::move(degrees)}};
}

inline Json to_json(const SplitReport& r) {
    Json stages = Json::array();
    for (const auto& s : r.stages)
        stages.push_back(Json{{"r", s.r},
                              {"multiplicity", s.multiplicity},
                              {"wide_multiplicity", s.wide_multiplicity},
                              {"homology", to_json(s.groups)},
                              {"summand_sum", to_json(s.summand_sum)},
                              {"wedge_identity", s.wedge_identity}});
    Json summands = Json::array();
    for (const auto& [J, g] : r.summands) summands.push_back(Json{{"J", to_json(J)}, {"homology", to_json(g)}});
    Json blocks = Json::array();
    for (const auto& b : r.blocks)
        blocks.push_back(Json{{"row", to_json(b.row)}, {"col", to_json(b.col)}, {"degree", b.degree}, {"expect", b.expect_identity ? "identity" : "zero"}, {"holds", b.holds}});
    Json j{{"level", r.level},
           {"max_degree", r.max_degree},
           {"ok", r.ok()},
           {"level_homology", to_json(r.level_groups)},
           {"stages", std::move(stages)},
           {"summands", std::move(summands)},
           {"H", to_json(r.H)},
           {"diagonal_identity", r.diagonal_identity},
           {"block_triangular", r.block_triangular},
           {"blocks", std::move(blocks)},
           {"chain_checks", r.chain_checks},
           {"chain_violations", r.chain_violations},
           {"coarse_identity", r.coarse_identity},
           {"errors", r.errors}};
    if (r.counting) {
        Json terms = Json::array();
        std::string text = std::to_string(r.counting->lhs) + " =";
        bool first = true;
        for (const auto& t : r.counting->terms) {
            terms.push_back(Json{{"r", t.r}, {"multiplicity", t.multiplicity}, {"rank", t.rank}});
            text += std::string(first ? " " : " + ") + (t.multiplicity == 1 ? "" : std::to_string(t.multiplicity) + "*") + std::to_string(t.rank);
            first = false;
        }
        j["counting"] = Json{{"lhs", r.counting->lhs}, {"rhs", r.counting->rhs}, {"holds", r.counting->holds()}, {"identity", text}, {"terms", std::move(terms)}};
    }
    return j;
}

inline Json to_json(const RestrictionReport& r) {
    return Json{{"level", r.level}, {"t", r.stage}, {"ok", r.ok()}, {"kill_checks", r.kill_checks}, {"kill_violations", r.kill_violations}, {"H", to_json(r.H)}};
}

inline Json to_json(const RealizationReport& r) {
    return Json{{"column", r.column}, {"max_degree", r.max_degree}, {"ok", r.ok()}, {"filtration_quotient", to_json(r.filtration_quotient)}, {"shifted_level", to_json(r.shifted_level)}};
}

inline Json to_json(const CorollaryReport& r) {
    return Json{{"level", r.level},
                {"t", r.stage},
                {"multiplicity", r.multiplicity},
                {"shift", r.shift},
                {"ok", r.ok()},
                {"stage_quotient", to_json(r.stage_quotient)},
                {"column", to_json(r.column)},
                {"column_sum", to_json(r.column_sum)}};
}

inline Json to_json(const E1Page& p) {
    Json columns = Json::array();
    for (int j = 0; j < p.columns; ++j) {
        Json d1 = Json::array();
        if (j >= 1)
            for (const auto& m : p.d1[static_cast<std::size_t>(j)]) d1.push_back(to_json(m));
        columns.push_back(Json{{"column", j}, {"entries", to_json(p.entries[static_cast<std::size_t>(j)])}, {"d1", std::move(d1)}});
    }
    Json j{{"columns", std::move(columns)}, {"d1_squared_zero", p.d1_squared_zero}, {"ok", p.ok()}};
    if (p.e2) {
        j["reliable_top"] = p.reliable_top;
        j["e2"] = to_json(*p.e2);
        j["total"] = to_json(*p.total);
        j["matches_total"] = p.matches_total;
    }
    return j;
}

inline Json to_json(const NaturalityReport& r) {
    Json squares = Json::array();
    for (const auto& s : r.squares) squares.push_back(Json{{"J", to_json(s.J)}, {"degree", s.degree}, {"commutes", s.commutes}});
    return Json{{"level", r.level}, {"ok", r.ok()}, {"squares", std::move(squares)}, {"errors", r.errors}};
}

} // namespace suspsplit
