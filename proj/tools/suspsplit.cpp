// suspsplit: build simplicial sets and spaces from input files and run the
// filtration / splitting verifiers on them, emitting a JSON report.
//
// Exit status: 0 all checks pass, 1 bad input or usage, 2 a check failed.

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "suspsplit/suspsplit.hpp"

namespace ss = suspsplit;
using ss::Json;

namespace {

struct RunConfig {
    std::string command;
    std::string group_path;
    std::string complex_path;
    std::string builtin;
    bool cech_circle = false;
    bool rep = false;
    int max_level = 4;
    int max_dim = 4;
    std::string json_path;
    std::uint64_t seed = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    Json description;
    ss::SimplicialSetPtr set;                            // --complex only
    std::shared_ptr<const ss::SimplicialSpace> space;
    std::optional<ss::RepNerve> rep;
};

Input load_input(const RunConfig& cfg, bool need_space) {
    const int chosen = !cfg.group_path.empty() + !cfg.complex_path.empty() + cfg.cech_circle + !cfg.builtin.empty();
    if (chosen != 1) throw UsageError("choose exactly one of --group, --complex, --cech-circle, --builtin");
    if (cfg.rep && cfg.group_path.empty()) throw UsageError("--rep requires --group");
    Input in;
    if (!cfg.group_path.empty()) {
        auto G = ss::load_group_csv(cfg.group_path);
        in.description = Json{{"kind", cfg.rep ? "rep" : "hom"}, {"group", cfg.group_path}, {"order", G.order()}, {"abelian", G.abelian()}};
        if (cfg.rep) {
            in.rep = ss::rep_nerve_keyed(G, cfg.max_level, cfg.max_dim);
            in.space = in.rep->keyed.space;
        } else {
            in.space = ss::commuting_nerve(G, cfg.max_level, cfg.max_dim);
        }
    } else if (!cfg.complex_path.empty()) {
        auto K = ss::load_complex(cfg.complex_path);
        in.description = Json{{"kind", "complex"}, {"complex", cfg.complex_path}, {"vertices", K.vertices().size()}, {"facets", K.facets.size()}};
        in.set = ss::order_complex(K, std::max(cfg.max_dim, need_space ? cfg.max_level : 0));
        if (need_space) in.space = ss::discrete_space(in.set, cfg.max_level, cfg.max_dim, "levels of the order complex");
    } else if (cfg.cech_circle) {
        in.description = Json{{"kind", "cech-circle"}};
        in.space = ss::cech_nerve(ss::simplicial_circle(cfg.max_dim), cfg.max_level, "Cech nerve of the simplicial circle");
    } else {
        for (auto& b : ss::builtin_spaces(cfg.max_level, cfg.max_dim))
            if (b.name == cfg.builtin) in.space = b.space;
        if (!in.space) throw UsageError("unknown builtin '" + cfg.builtin + "'");
        in.description = Json{{"kind", "builtin"}, {"name", cfg.builtin}};
    }
    return in;
}

struct Outcome {
    Json results = Json::array();
    bool ok = true;
    void add(Json j, bool pass) {
        results.push_back(std::move(j));
        ok = ok && pass;
    }
};

/// Homology must not depend on the order of the cells.
bool permutation_invariant(const ss::ChainComplex& C, std::mt19937_64& rng) {
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(C.top) + 1);
    for (int d = 0; d <= C.top; ++d) {
        perm[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(C.size(d)));
        std::iota(perm[static_cast<std::size_t>(d)].begin(), perm[static_cast<std::size_t>(d)].end(), 0);
        std::shuffle(perm[static_cast<std::size_t>(d)].begin(), perm[static_cast<std::size_t>(d)].end(), rng);
    }
    ss::ChainComplex P = C;
    for (int d = 0; d <= C.top; ++d) {
        std::vector<int> rows = d == 0 ? std::vector<int>(static_cast<std::size_t>(C.d(0).rows())) : perm[static_cast<std::size_t>(d) - 1];
        if (d == 0) std::iota(rows.begin(), rows.end(), 0);
        P.boundary[static_cast<std::size_t>(d)] = C.d(d).permuted(rows, perm[static_cast<std::size_t>(d)]);
    }
    return ss::homology(P).degrees == ss::homology(C).degrees;
}

void run_validate(const Input& in, Outcome& out) {
    if (in.set) {
        auto r = ss::validate_identities(*in.set);
        out.add(Json{{"check", "simplicial identities"}, {"set", ss::to_json(*in.set)}, {"report", ss::to_json(*in.set, r)}}, r.ok());
        return;
    }
    const auto& X = *in.space;
    for (int n = 0; n <= X.horizontal_truncation(); ++n) {
        auto r = ss::validate_identities(X.level(n));
        out.add(Json{{"check", "vertical identities"}, {"level", n}, {"report", ss::to_json(X.level(n), r)}}, r.ok());
    }
    auto h = ss::validate_horizontal(X);
    out.add(Json{{"check", "horizontal identities"}, {"violations", ss::to_json(h)}, {"ok", h.empty()}}, h.empty());
    if (in.rep) out.add(Json{{"check", "conjugation quotient well defined"}, {"ok", in.rep->well_defined}, {"defects", in.rep->defects}}, in.rep->well_defined);
}

void run_homology(const Input& in, const RunConfig& cfg, Outcome& out) {
    std::mt19937_64 rng(cfg.seed);
    auto one = [&](const ss::SimplicialSetPtr& X, Json where) {
        auto C = ss::normalized_chains(X, true);
        auto U = ss::normalized_chains(X, false);
        const bool invariant = permutation_invariant(C, rng);
        where["set"] = ss::to_json(*X);
        where["reduced"] = ss::to_json(ss::homology(C));
        where["unreduced"] = ss::to_json(ss::homology(U));
        where["permutation_invariant"] = invariant;
        out.add(std::move(where), invariant);
    };
    if (in.set) {
        one(in.set, Json{{"object", "order complex"}});
        return;
    }
    for (int n = 0; n <= in.space->horizontal_truncation(); ++n) one(in.space->levels[static_cast<std::size_t>(n)], Json{{"object", "level"}, {"level", n}});
}

void run_filtration(const ss::Filtration& F, Outcome& out) {
    const auto& X = F.space();
    for (int n = 0; n <= F.top_level(); ++n) {
        Json stages = Json::array();
        bool ok = true;
        for (int t = 0; t <= n + 1; ++t) {
            auto s = ss::filtration_stage(F, n, t);
            Json counts = Json::array();
            for (int d = 0; d <= X.level(n).truncation(); ++d) counts.push_back(s.members.count(d));
            stages.push_back(Json{{"t", t}, {"generators", std::move(counts)}, {"closed", s.closure_defects.empty()}});
            ok = ok && s.closure_defects.empty();
        }
        const bool empty_top = ss::filtration_stage(F, n, n + 1).members.empty();
        ok = ok && empty_top;
        Json wedges = Json::array(), inter = Json::array();
        for (int r = 0; r <= n; ++r) {
            auto w = ss::wedge_decomposition(F, n, r);
            auto i = ss::intersection_check(F, n, r);
            ok = ok && w.ok() && i.ok();
            wedges.push_back(ss::to_json(F, w));
            inter.push_back(ss::to_json(i));
        }
        out.add(Json{{"level", n}, {"ok", ok}, {"stages", std::move(stages)}, {"top_stage_empty", empty_top}, {"wedge", std::move(wedges)}, {"intersections", std::move(inter)}}, ok);
    }
}

void run_splitting(const ss::Filtration& F, Outcome& out) {
    auto reports = ss::parallel_map(static_cast<std::size_t>(F.top_level()) + 1, [&](std::size_t n) {
        const int lvl = static_cast<int>(n);
        auto split = ss::verify_theorem_splitting(F, lvl);
        Json restrictions = Json::array();
        bool ok = split.ok();
        for (int t = 0; t <= lvl; ++t) {
            auto r = ss::verify_restriction(F, lvl, t);
            ok = ok && r.ok();
            restrictions.push_back(ss::to_json(r));
        }
        Json j = ss::to_json(split);
        j["restrictions"] = std::move(restrictions);
        j["ok"] = ok;
        return std::make_pair(std::move(j), ok);
    });
    for (auto& [j, ok] : reports) out.add(std::move(j), ok);
}

void run_realization(const ss::Filtration& F, Outcome& out) {
    auto T = ss::total_complex(F, true);
    for (int j = 0; j <= F.top_level(); ++j) {
        auto r = ss::verify_realization_quotients(F, T, j);
        out.add(ss::to_json(r), r.ok());
    }
}

void run_corollary(const ss::Filtration& F, Outcome& out) {
    auto T = ss::total_complex(F, true);
    for (int n = 0; n <= F.top_level(); ++n)
        for (int t = 0; t <= n; ++t) {
            auto r = ss::verify_corollary_shift(F, T, n, t);
            out.add(ss::to_json(r), r.ok());
        }
}

void run_e1(const ss::Filtration& F, Outcome& out) {
    auto p = ss::segal_E1(F);
    out.add(ss::to_json(p), p.ok());
}

void run_triangularity(const ss::Filtration& F, Outcome& out) {
    for (int n = 0; n <= F.top_level(); ++n)
        for (int r = 0; r <= n; ++r) {
            auto t = ss::triangularity_check(F, n, r);
            auto d = ss::delta_filtration_check(F, n, r);
            Json comps = Json::array();
            for (const auto& c : ss::delta_components(F, n, r)) comps.push_back(ss::to_json(c.J));
            out.add(Json{{"level", n}, {"r", r}, {"triangularity", ss::to_json(F.space(), t)}, {"delta_components", std::move(comps)}, {"delta", ss::to_json(F.space(), d)}}, t.ok() && d.ok());
        }
}

int run(const RunConfig& cfg) {
    if (cfg.max_level < 0 || cfg.max_dim < 0) throw UsageError("truncations must be non-negative");
    const bool need_space = cfg.command != "validate" && cfg.command != "homology";
    Input in = load_input(cfg, need_space);
    Outcome out;
    if (cfg.command == "validate") run_validate(in, out);
    else if (cfg.command == "homology") run_homology(in, cfg, out);
    else {
        ss::Filtration F(in.space);
        if (cfg.command == "filtration") run_filtration(F, out);
        else if (cfg.command == "verify-splitting") run_splitting(F, out);
        else if (cfg.command == "verify-realization") run_realization(F, out);
        else if (cfg.command == "verify-corollary") run_corollary(F, out);
        else if (cfg.command == "segal-e1") run_e1(F, out);
        else if (cfg.command == "triangularity") run_triangularity(F, out);
    }
    Json report{{"command", cfg.command},
                {"input", in.description},
                {"config", {{"max_level", cfg.max_level}, {"max_dim", cfg.max_dim}, {"seed", cfg.seed}}},
                {"ok", out.ok}};
    if (in.space) report["space"] = ss::to_json(*in.space);
    report["results"] = std::move(out.results);
    const std::string text = report.dump(2) + "\n";
    if (cfg.json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.json_path);
        if (!f) throw ss::InputError(cfg.json_path, 0, "cannot write report");
        f << text;
        std::cout << cfg.command << ": " << (out.ok ? "pass" : "FAIL") << " (" << report["results"].size() << " results)\n";
    }
    return out.ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degeneracy filtrations and suspension splittings of simplicial spaces"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check simplicial identities"},
        {"homology", "reduced and unreduced homology"},
        {"filtration", "degeneracy filtration, wedge decomposition, intersections"},
        {"verify-splitting", "H(n) isomorphism and its restrictions"},
        {"verify-realization", "realization filtration quotients"},
        {"verify-corollary", "shifted stage quotient identity"},
        {"segal-e1", "E1 page and d1"},
        {"triangularity", "triangularity and product-of-faces checks"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--group", cfg.group_path, "Cayley table CSV");
        sub->add_option("--complex", cfg.complex_path, "simplicial complex facet file");
        sub->add_flag("--cech-circle", cfg.cech_circle, "Cech nerve of the simplicial circle");
        sub->add_option("--builtin", cfg.builtin, "built-in construction by name");
        sub->add_flag("--rep", cfg.rep, "conjugation quotient of the commuting nerve");
        sub->add_option("--max-level", cfg.max_level, "horizontal truncation")->capture_default_str();
        sub->add_option("--max-dim", cfg.max_dim, "vertical truncation")->capture_default_str();
        sub->add_option("--json", cfg.json_path, "write the report here instead of stdout");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        sub->callback([&cfg, n = name] { cfg.command = n; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ss::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
