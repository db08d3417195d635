#include "layoutkit/verify.hpp"

#include "layoutkit/corpus.hpp"
#include "layoutkit/width.hpp"

#include <algorithm>
#include <cmath>

namespace layoutkit {

namespace {

SolveOptions widen(SolveOptions opt, int n) {
    opt.dp_limit = std::max(opt.dp_limit, n);
    return opt;
}

std::string dag_label(const Dag& d) {
    return "n=" + std::to_string(d.num_vertices()) + " a=" + std::to_string(d.num_arcs());
}

} // namespace

VerifyReport check_pebbling_ordering_ledger(const Dag& d, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "pebbling-ordering-ledger";
    rep.instance = dag_label(d);
    auto o = widen(opt, d.num_vertices());
    auto layout = solve_subset_dp(d, named_problem("register_sufficiency"), o);
    auto peak = solve_peak_pebbles_dp(d, o);
    rep.add_check("layout(D;V,max) <= peak", layout.value, "<=", peak.value);
    rep.add_check("peak <= layout(D;V,max)+1", peak.value, "<=", layout.value + 1);
    for (const Ordering& pi : {Ordering::from_sequence(d.topological_witness()), layout.witness,
                               peak.witness}) {
        auto strat = ordering_to_black_strategy(d, pi);
        auto srep = validate_strategy(d, strat, PebbleMode::black);
        rep.add_bool("induced strategy valid", srep.valid);
        rep.add_bool("induced strategy one-shot", srep.valid && srep.one_shot);
        if (srep.valid) rep.add_check("induced cost >= layout", srep.cost, ">=", layout.value);
    }
    rep.extras.emplace_back("layout_vmax", layout.value);
    rep.extras.emplace_back("peak", peak.value);
    return rep;
}

VerifyReport check_indegree2_bounds(const Dag& d, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "indegree2-transform";
    rep.instance = dag_label(d);
    Dag t = indegree2_transform(d);
    int deg = d.max_in_degree();
    rep.add_check("transformed max indegree <= 2", t.max_in_degree(), "<=", 2);
    auto small = widen(opt, d.num_vertices());
    auto big = widen(opt, t.num_vertices());
    ProblemSpec vmax = named_problem("register_sufficiency");
    long long post0 = solve_subset_dp(d, vmax, small).value;
    long long post1 = solve_subset_dp(t, vmax, big).value;
    long long peak0 = solve_peak_pebbles_dp(d, small).value;
    long long peak1 = solve_peak_pebbles_dp(t, big).value;
    rep.add_check("post-cleanup lower", post0, "<=", post1);
    rep.add_check("post-cleanup upper", post1, "<=", post0 + deg);
    rep.add_check("peak lower", peak0, "<=", peak1);
    rep.add_check("peak upper", peak1, "<=", peak0 + deg);
    rep.extras.emplace_back("added_nodes", t.num_vertices() - d.num_vertices());
    rep.extras.emplace_back("max_indegree", deg);
    return rep;
}

VerifyReport check_single_sink_bounds(const Dag& d, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "single-sink-transform";
    rep.instance = dag_label(d);
    Dag t = single_sink_transform(d);
    long long s = static_cast<long long>(d.sinks().size());
    rep.add_check("transformed sink count", static_cast<long long>(t.sinks().size()), "<=", 1);
    if (d.max_in_degree() <= 2)
        rep.add_check("indegree bound preserved", t.max_in_degree(), "<=", 2);
    auto small = widen(opt, d.num_vertices());
    auto big = widen(opt, t.num_vertices());
    ProblemSpec vmax = named_problem("register_sufficiency");
    long long post0 = solve_subset_dp(d, vmax, small).value;
    long long post1 = solve_subset_dp(t, vmax, big).value;
    long long peak0 = solve_peak_pebbles_dp(d, small).value;
    long long peak1 = solve_peak_pebbles_dp(t, big).value;
    rep.add_check("post-cleanup lower", post0, "<=", post1);
    rep.add_check("post-cleanup upper", post1, "<=", post0 + s + 1);
    rep.add_check("peak lower", peak0, "<=", peak1);
    rep.add_check("peak upper", peak1, "<=", peak0 + s + 1);
    rep.extras.emplace_back("sinks", s);
    return rep;
}

VerifyReport check_lengauer_dag_to_graph(const Dag& d, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "lengauer-dag-to-graph";
    rep.instance = dag_label(d);
    UGraph gd = lengauer_to_undirected(d);
    auto o = widen(opt, gd.num_vertices());
    long long layout = solve_subset_dp(gd, named_problem("vertex_separation"), o).value;
    PebbleSearchOptions pso;
    pso.max_n = std::max(8, d.num_vertices());
    long long est = one_shot_cost_exhaustive(d, PebbleMode::black_white, pso);
    long long residual = layout - 1 - est;
    rep.add_check("|layout(G_D;V,max)-1-BW(D)| <= 2", std::llabs(residual), "<=", 2);
    rep.extras.emplace_back("layout_gd", layout);
    rep.extras.emplace_back("bw_est", est);
    rep.extras.emplace_back("residual", residual);
    return rep;
}

VerifyReport check_lengauer_graph_to_dag(const UGraph& g, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "lengauer-graph-to-dag";
    rep.instance = "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges());
    Dag dg = lengauer_to_dag(g);
    auto o = widen(opt, g.num_vertices());
    long long layout = solve_subset_dp(g, named_problem("vertex_separation"), o).value;
    PebbleSearchOptions pso;
    pso.max_n = std::max(8, dg.num_vertices());
    pso.state_budget = std::uint64_t(1) << 26;
    long long est = one_shot_cost_exhaustive(dg, PebbleMode::black_white, pso);
    long long residual = est + 2 - layout;
    rep.add_check("|BW(D_G)+2-layout(G;V,max)| <= 2", std::llabs(residual), "<=", 2);
    rep.extras.emplace_back("layout_g", layout);
    rep.extras.emplace_back("bw_est", est);
    rep.extras.emplace_back("residual", residual);
    return rep;
}

VerifyReport check_pyramid_frugal(int d) {
    VerifyReport rep;
    rep.lemma = "pyramid-frugal";
    rep.instance = "pyramid d=" + std::to_string(d);
    Dag pyr = build_pyramid(d);
    long long count = 0, frugal = 0;
    enumerate_one_shot_black_strategies(pyr, [&](const PebbleStrategy& s) {
        ++count;
        if (frugal_pyramid_check(d, s)) ++frugal;
    });
    rep.add_check("all enumerated strategies frugal", frugal, ">=", count);
    long long exhaustive = one_shot_cost_exhaustive(pyr, PebbleMode::black);
    SolveOptions o;
    o.dp_limit = std::max(o.dp_limit, pyr.num_vertices());
    long long peak = solve_peak_pebbles_dp(pyr, o).value;
    rep.add_check("search optimum matches ordering DP", exhaustive, "<=", peak);
    rep.add_check("ordering DP matches search optimum", peak, "<=", exhaustive);
    rep.extras.emplace_back("strategies", count);
    rep.extras.emplace_back("bp_one_shot", exhaustive);
    return rep;
}

VerifyReport check_gamma_numerics() {
    VerifyReport rep;
    rep.lemma = "noise-stability-numerics";
    rep.instance = "grid";
    double worst_indep = 0, worst_corr = 0, worst_arcsin = 0;
    for (double mu : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.9}) {
        worst_indep = std::max(worst_indep, std::fabs(gamma_rho(0.0, mu) - mu * mu));
        worst_corr = std::max(worst_corr, std::fabs(gamma_rho(1.0, mu) - mu));
    }
    for (double rho : {-0.9, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        double expect = 0.25 + std::asin(rho) / (2 * M_PI);
        worst_arcsin = std::max(worst_arcsin, std::fabs(gamma_rho(rho, 0.5) - expect));
    }
    rep.add_bool("independence case within 1e-8", worst_indep <= 1e-8);
    rep.add_bool("perfect correlation within 1e-8", worst_corr <= 1e-8);
    rep.add_bool("arcsine identity at mu=1/2 within 1e-6", worst_arcsin <= 1e-6);

    bool monotone = true, bounded = true;
    std::vector<double> rhos = {-1.0, -0.5, 0.0, 0.3, 0.6, 0.9, 1.0};
    std::vector<double> mus = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8};
    for (size_t i = 0; i < rhos.size(); ++i) {
        for (size_t j = 0; j < mus.size(); ++j) {
            double g = gamma_rho(rhos[i], mus[j]);
            if (i > 0 && g + 1e-10 < gamma_rho(rhos[i - 1], mus[j])) monotone = false;
            if (j > 0 && g + 1e-10 < gamma_rho(rhos[i], mus[j - 1])) monotone = false;
            if (rhos[i] >= 0.0 && (g < mus[j] * mus[j] - 1e-9 || g > mus[j] + 1e-9))
                bounded = false;
        }
    }
    rep.add_bool("monotone in rho and mu", monotone);
    rep.add_bool("mu^2 <= Gamma <= mu for rho in [0,1]", bounded);

    std::vector<double> eps_grid, mu_grid;
    for (double e = 1e-4; e <= 1e-1 * 1.0000001; e *= std::pow(10.0, 0.25)) eps_grid.push_back(e);
    for (double mu = 0.1; mu <= 0.5 + 1e-9; mu += 0.05) mu_grid.push_back(mu);
    auto fact = check_gamma_fact(eps_grid, mu_grid);
    rep.add_bool("witness c > 0 across grid", fact.positive);
    rep.extras.emplace_back("c_witness_x1e6", static_cast<long long>(fact.c_witness * 1e6));
    return rep;
}

VerifyReport check_planted_instance(int q, int block_size, int deg, long long cross,
                                    std::uint64_t seed) {
    VerifyReport rep;
    rep.lemma = "planted-instance";
    rep.instance = "q=" + std::to_string(q) + " b=" + std::to_string(block_size) +
                   " d=" + std::to_string(deg) + " cross=" + std::to_string(cross) +
                   " seed=" + std::to_string(seed);
    auto inst = gen_planted(q, block_size, deg, cross, seed);
    int fullDeg = 0;
    rep.add_bool("graph is regular", inst.graph.is_regular(&fullDeg));
    rep.add_check("regular degree", fullDeg, ">=", deg);
    rep.add_check("regular degree ub", fullDeg, "<=", deg);
    rep.add_check("cross edges as requested", inst.cross_edges, "<=", cross);
    rep.add_check("cross edges as requested lb", inst.cross_edges, ">=", cross);

    // Reported block cuts must agree with independent re-measurement.
    bool phis_match = true;
    for (int b = 0; b < q; ++b) {
        Rational measured = expansion(inst.graph, inst.blocks[b]);
        Rational reported(inst.block_cuts[b],
                          static_cast<long long>(deg) * block_size);
        if (!(measured == reported)) phis_match = false;
    }
    rep.add_bool("block expansions re-measure identically", phis_match);

    long long max_intra = 0;
    for (int b = 0; b < q; ++b) {
        long long intra = (static_cast<long long>(deg) * block_size - inst.block_cuts[b]) / 2;
        max_intra = std::max(max_intra, intra);
    }
    long long cost = evaluate(inst.graph, named_problem("mcla"), block_ordering(inst));
    rep.add_check("block ordering max cut <= intra + cross", cost, "<=",
                  max_intra + inst.cross_edges);
    rep.extras.emplace_back("block_ordering_cost", cost);
    rep.extras.emplace_back("max_intra", max_intra);
    return rep;
}

// ── Suites ──────────────────────────────────────────────────────────

namespace {

struct CorpusScale {
    int connected_n;
    int atlas_n;
    int random_count;
};

CorpusScale scale_of(const std::string& corpus) {
    if (corpus == "tiny") return {4, 6, 10};
    if (corpus == "small") return {5, 8, 50};
    if (corpus == "full") return {5, 8, 100};
    throw validation_error("unknown corpus '" + corpus + "'");
}

} // namespace

std::vector<std::string> suite_names() {
    return {"dag-completeness", "dag-soundness",   "undir-completeness", "undir-soundness",
            "treewidth-chain",  "lengauer",        "pebbling-lemma",     "pyramid-frugal",
            "separator-bound",  "gamma"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = name;
    CorpusScale sc = scale_of(opt.corpus);
    auto push = [&](VerifyReport rep) { out.reports.push_back(std::move(rep)); };

    if (name == "dag-completeness" || name == "dag-soundness") {
        for (const auto& g : all_graphs_upto(sc.connected_n, true))
            push(name == "dag-completeness" ? verify_dag_completeness(g)
                                            : verify_dag_soundness_bound(g));
    } else if (name == "undir-completeness") {
        int cap = std::min(sc.connected_n, 4);
        for (const auto& g : all_graphs_upto(cap, true))
            for (int r : {1, 2, 3}) push(verify_undir_completeness(g, r));
    } else if (name == "undir-soundness" || name == "treewidth-chain") {
        for (const auto& g : all_graphs_upto(3, true)) {
            int r = std::max(1, g.num_vertices() * g.num_edges());
            push(name == "undir-soundness" ? verify_undir_soundness_bound(g, r)
                                           : verify_treewidth_bound(g, r));
        }
    } else if (name == "lengauer") {
        int cap = std::min(sc.connected_n, 5);
        for (const auto& d : all_dags_upto(cap, false)) push(check_lengauer_dag_to_graph(d));
        for (const auto& g : all_graphs_upto(cap, false)) push(check_lengauer_graph_to_dag(g));
    } else if (name == "pebbling-lemma") {
        for (int s = 0; s < sc.random_count; ++s) {
            int n = 2 + static_cast<int>((opt.seed + s) % 6);
            push(check_pebbling_ordering_ledger(random_dag(n, opt.seed + s)));
        }
    } else if (name == "pyramid-frugal") {
        for (int d = 1; d <= 3; ++d) push(check_pyramid_frugal(d));
    } else if (name == "separator-bound") {
        for (const auto& g : all_graphs_upto(std::min(sc.atlas_n, 8), false))
            if (g.num_vertices() <= 8) {
                SeparatorBoundReport sb = check_separator_bound(g);
                VerifyReport rep;
                rep.lemma = "separator-bound";
                rep.instance = "n=" + std::to_string(g.num_vertices()) +
                               " m=" + std::to_string(g.num_edges());
                rep.add_check("tw >= K_half - 1", sb.treewidth, ">=", sb.k_half - 1);
                push(std::move(rep));
            }
        for (int s = 0; s < sc.random_count; ++s) {
            int n = 4 + static_cast<int>((opt.seed + s) % 7);
            UGraph g = random_graph(n, opt.seed + 1000 + s);
            SeparatorBoundReport sb = check_separator_bound(g);
            VerifyReport rep;
            rep.lemma = "separator-bound";
            rep.instance = "random n=" + std::to_string(n) + " seed=" + std::to_string(opt.seed + 1000 + s);
            rep.add_check("tw >= K_half - 1", sb.treewidth, ">=", sb.k_half - 1);
            push(std::move(rep));
        }
    } else if (name == "gamma") {
        push(check_gamma_numerics());
    } else {
        throw validation_error("unknown suite '" + name + "'");
    }

    out.total = static_cast<int>(out.reports.size());
    for (const auto& r : out.reports)
        if (!r.holds) ++out.failed;
    return out;
}

} // namespace layoutkit
