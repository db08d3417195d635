#include "layoutkit/corpus.hpp"
#include "layoutkit/verify.hpp"
#include "layoutkit/width.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace layoutkit;
using nlohmann::json;

namespace {

// 0 = success, 1 = domain failure (invalid input / violated check / size
// limit), 2 = usage or parse error.
constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "' for writing");
    f << text;
}

const UGraph& as_ugraph(const AnyGraph& h) {
    if (!std::holds_alternative<UGraph>(h))
        throw validation_error("this command needs an undirected graph");
    return std::get<UGraph>(h);
}

const Dag& as_dag(const AnyGraph& h) {
    if (!std::holds_alternative<Dag>(h)) throw validation_error("this command needs a DAG");
    return std::get<Dag>(h);
}

json ordering_to_json(const Ordering& pi) {
    json ranks = json::array();
    for (int v = 0; v < pi.n(); ++v) ranks.push_back(pi.position(v));
    return ranks;
}

json result_to_json(const std::string& problem, const LayoutResult& res) {
    return json{{"problem", problem},
                {"value", res.value},
                {"ordering", ordering_to_json(res.witness)},
                {"method", method_name(res.method)}};
}

json report_to_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
    json extras = json::object();
    for (const auto& [k, v] : rep.extras) extras[k] = v;
    return json{{"lemma", rep.lemma},         {"instance", rep.instance},
                {"checks", checks},           {"holds", rep.holds},
                {"hypothesis_met", rep.hypothesis_met}, {"extras", extras}};
}

struct CommonOpts {
    std::uint64_t seed = 1;
    int dp_limit = 24;
    int bf_limit = 9;
    std::uint64_t state_budget = std::uint64_t(1) << 23;
    bool human = false;

    SolveOptions solve() const {
        SolveOptions o;
        o.seed = seed;
        o.dp_limit = dp_limit;
        o.bruteforce_limit = bf_limit;
        o.state_budget = state_budget;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--dp-limit", c.dp_limit, "subset DP vertex limit");
    cmd->add_option("--bf-limit", c.bf_limit, "brute force vertex limit");
    cmd->add_option("--state-budget", c.state_budget, "solver state budget");
    cmd->add_flag("--human", c.human, "human-readable output");
}

int cmd_solve(const std::string& path, const std::string& problem, const std::string& method,
              const CommonOpts& c) {
    AnyGraph h = load_graph_file(path);
    ProblemSpec spec = named_problem(problem);
    LayoutResult res;
    auto opt = c.solve();
    if (method == "bruteforce") {
        res = solve_bruteforce(h, spec, opt);
    } else if (method == "dp") {
        res = solve_subset_dp(h, spec, opt);
    } else if (method == "greedy") {
        res = heuristic_greedy(h, spec, opt);
    } else { // auto: exact when within limits, greedy beyond them
        int n = std::visit([](const auto& g) { return g.num_vertices(); }, h);
        res = n <= opt.dp_limit ? solve_subset_dp(h, spec, opt) : heuristic_greedy(h, spec, opt);
    }
    if (c.human) {
        std::cout << problem << " value " << res.value << " (" << method_name(res.method) << ")\n";
        std::cout << "ordering:";
        for (int v : res.witness.sequence()) std::cout << " " << v + 1;
        std::cout << "\n";
    } else {
        std::cout << result_to_json(problem, res).dump() << "\n";
    }
    return kOk;
}

struct WidthLimits {
    int tw = 18;
    int sep_full = 18;
    int sep_max = 14;
};

int cmd_width(const std::string& path, const std::string& param, const std::string& td_path,
              bool require_path, bool check_bound, const WidthLimits& lim, const CommonOpts& c) {
    auto g = as_ugraph(load_graph_file(path));
    TwOptions two;
    two.limit = lim.tw;
    HalfSepOptions hso;
    hso.full_limit = lim.sep_full;
    hso.max_limit = lim.sep_max;
    json out;
    if (!td_path.empty()) {
        auto td = load_decomposition(read_file(td_path));
        auto rep = validate_decomposition(g, td, require_path);
        out = json{{"param", require_path ? "path-decomposition" : "tree-decomposition"},
                   {"valid", rep.valid},
                   {"width", rep.width},
                   {"violation", rep.violation}};
        std::cout << out.dump() << "\n";
        return rep.valid ? kOk : kDomain;
    }
    if (check_bound) {
        auto rep = check_separator_bound(g, two, hso);
        out = json{{"param", "separator-bound"},
                   {"treewidth", rep.treewidth},
                   {"k_half", rep.k_half},
                   {"holds", rep.holds}};
        std::cout << out.dump() << "\n";
        return rep.holds ? kOk : kDomain;
    }
    if (param == "tw") {
        auto res = treewidth_exact(g, two);
        json order = json::array();
        for (int v : res.order) order.push_back(v + 1);
        out = json{{"param", "tw"}, {"value", res.width}, {"elimination_order", order}};
    } else if (param == "pw") {
        auto res = pathwidth_exact(g, c.solve());
        out = json{{"param", "pw"}, {"value", res.width}, {"ordering", ordering_to_json(res.witness)}};
    } else if (param == "khalf-full") {
        out = json{{"param", "khalf-full"},
                   {"value", half_separator_number(g, HalfSepMode::full_vertex_set, hso)}};
    } else { // khalf-max
        out = json{{"param", "khalf-max"},
                   {"value", half_separator_number(g, HalfSepMode::maximize_over_W, hso)}};
    }
    std::cout << out.dump() << "\n";
    return kOk;
}

int cmd_pebble(const std::string& path, const std::string& strategy_path, bool solve,
               const std::string& mode, const std::string& accounting, const CommonOpts& c) {
    auto d = as_dag(load_graph_file(path));
    PebbleMode pm = mode == "bw" ? PebbleMode::black_white : PebbleMode::black;
    if (!strategy_path.empty()) {
        auto moves = parse_moves(read_file(strategy_path));
        auto strat = PebbleStrategy::from_moves(d.num_vertices(), moves);
        auto rep = validate_strategy(d, strat, pm);
        json out{{"valid", rep.valid},
                 {"cost", rep.cost},
                 {"one_shot", rep.one_shot},
                 {"violation_step", rep.violation_step},
                 {"violation", rep.violation}};
        std::cout << out.dump() << "\n";
        return rep.valid ? kOk : kDomain;
    }
    if (!solve) throw CLI::ValidationError("pebble", "need --strategy or --solve");
    json out;
    if (pm == PebbleMode::black) {
        CostAccounting acc =
            accounting == "peak" ? CostAccounting::peak : CostAccounting::post_cleanup;
        long long value = one_shot_black_cost(d, acc, c.solve());
        out = json{{"mode", "black"}, {"accounting", accounting}, {"value", value}};
    } else {
        PebbleSearchOptions pso;
        pso.max_n = 20; // beyond the library default; the state budget still guards
        long long value = one_shot_cost_exhaustive(d, PebbleMode::black_white, pso);
        out = json{{"mode", "bw"}, {"accounting", "peak"}, {"value", value}};
    }
    std::cout << out.dump() << "\n";
    return kOk;
}

int cmd_reduce(const std::string& path, const std::string& kind, const std::string& out_path,
               int node_budget) {
    AnyGraph h = load_graph_file(path);
    std::string text;
    if (kind == "incidence-dag") {
        text = serialize(to_incidence_dag(as_ugraph(h)).dag);
    } else if (kind.rfind("replicated:", 0) == 0) {
        int r = std::stoi(kind.substr(11));
        text = serialize(to_replicated_bipartite(as_ugraph(h), r, node_budget).graph);
    } else if (kind == "lengauer-gd") {
        text = serialize(lengauer_to_undirected(as_dag(h)));
    } else if (kind == "lengauer-dg") {
        text = serialize(lengauer_to_dag(as_ugraph(h)));
    } else if (kind == "indeg2") {
        text = serialize(indegree2_transform(as_dag(h)));
    } else if (kind == "single-sink") {
        text = serialize(single_sink_transform(as_dag(h)));
    } else {
        throw CLI::ValidationError("reduce", "unknown kind '" + kind + "'");
    }
    write_output(out_path, text);
    return kOk;
}

int cmd_gen(CLI::App* regular, CLI::App* planted, CLI::App* pyramid, int n, int d, int q, int block,
            long long cross, int size, std::uint64_t seed, const std::string& out_path,
            std::string sidecar) {
    if (regular->parsed()) {
        write_output(out_path, serialize(gen_random_regular(n, d, seed)));
        return kOk;
    }
    if (planted->parsed()) {
        auto inst = gen_planted(q, block, d, cross, seed);
        write_output(out_path, serialize(inst.graph));
        json blocks = json::array();
        for (const auto& b : inst.blocks) {
            json ids = json::array();
            for (int v : b.members()) ids.push_back(v + 1);
            blocks.push_back(ids);
        }
        json side{{"q", inst.q},
                  {"block_size", inst.block_size},
                  {"degree", inst.degree},
                  {"seed", inst.seed},
                  {"cross_edges", inst.cross_edges},
                  {"block_cuts", inst.block_cuts},
                  {"max_block_expansion", inst.max_block_expansion().str()},
                  {"partition", blocks}};
        if (sidecar.empty() && !out_path.empty()) sidecar = out_path + ".partition.json";
        if (sidecar.empty())
            std::cout << side.dump() << "\n";
        else
            write_output(sidecar, side.dump(2) + "\n");
        return kOk;
    }
    if (pyramid->parsed()) {
        write_output(out_path, serialize(build_pyramid(size)));
        return kOk;
    }
    throw CLI::ValidationError("gen", "need a generator subcommand");
}

int cmd_verify(const std::string& suite, const std::string& corpus, std::uint64_t seed,
               bool human) {
    SuiteOptions opt;
    opt.corpus = corpus;
    opt.seed = seed;
    auto res = run_suite(suite, opt);
    if (human) {
        for (const auto& rep : res.reports) {
            std::cout << (rep.holds ? "pass " : "FAIL ") << rep.lemma << " [" << rep.instance
                      << "]\n";
            if (!rep.holds)
                for (const auto& c : rep.checks)
                    if (!c.holds) std::cout << "      " << c.name << "\n";
        }
    } else {
        for (const auto& rep : res.reports) std::cout << report_to_json(rep).dump() << "\n";
    }
    std::cerr << "suite " << res.suite << ": " << res.total - res.failed << "/" << res.total
              << " passed\n";
    return res.failed == 0 ? kOk : kDomain;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& out_path) {
    AnyGraph h = load_graph_file(path);
    std::string text;
    if (to == "dot")
        text = std::visit([](const auto& g) { return export_dot(g); }, h);
    else
        text = std::visit([](const auto& g) { return serialize(g); }, h);
    write_output(out_path, text);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial toolkit for graph layout, pebbling, and width problems"};
    app.require_subcommand(1);

    CommonOpts common;

    // solve
    auto* solve = app.add_subcommand("solve", "solve a layout problem");
    std::string solve_path, problem, method = "auto";
    solve->add_option("graph", solve_path, "edge-list file")->required();
    solve->add_option("--problem", problem, "problem name")
        ->required()
        ->check(CLI::IsMember(problem_names()));
    solve->add_option("--method", method)->check(CLI::IsMember({"auto", "bruteforce", "dp", "greedy"}));
    add_common(solve, common);

    // width
    auto* width = app.add_subcommand("width", "width parameters and decompositions");
    std::string width_path, width_param = "tw", td_path;
    bool want_path = false, check_bound = false;
    int tw_limit = 18, sep_full_limit = 18, sep_max_limit = 14;
    width->add_option("graph", width_path)->required();
    width->add_option("--tw-limit", tw_limit, "treewidth solver vertex limit");
    width->add_option("--sep-full-limit", sep_full_limit);
    width->add_option("--sep-max-limit", sep_max_limit);
    width->add_option("--param", width_param)
        ->check(CLI::IsMember({"tw", "pw", "khalf-full", "khalf-max"}));
    width->add_option("--validate-td", td_path, "validate a decomposition file");
    width->add_flag("--path", want_path, "require a path decomposition");
    width->add_flag("--check-bound", check_bound, "check tw >= K_half - 1");
    add_common(width, common);

    // pebble
    auto* pebble = app.add_subcommand("pebble", "validate or solve one-shot pebbling");
    std::string pebble_path, strategy_path, mode = "black", accounting = "post_cleanup";
    bool pebble_solve = false;
    pebble->add_option("dag", pebble_path)->required();
    pebble->add_option("--strategy", strategy_path, "move-list file to validate");
    pebble->add_flag("--solve", pebble_solve, "compute the optimal one-shot cost");
    pebble->add_option("--mode", mode)->check(CLI::IsMember({"black", "bw"}));
    pebble->add_option("--accounting", accounting)->check(CLI::IsMember({"peak", "post_cleanup"}));
    add_common(pebble, common);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "instance transforms");
    std::string reduce_path, kind, reduce_out;
    int node_budget = 4096;
    reduce->add_option("graph", reduce_path)->required();
    reduce->add_option("--kind", kind,
                       "incidence-dag | replicated:<r> | lengauer-gd | lengauer-dg | indeg2 | "
                       "single-sink")
        ->required();
    reduce->add_option("-o,--out", reduce_out);
    reduce->add_option("--node-budget", node_budget);

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* gen_regular = gen->add_subcommand("regular", "pairing-model regular graph");
    auto* gen_planted = gen->add_subcommand("planted", "partitioned low-expansion instance");
    auto* gen_pyramid = gen->add_subcommand("pyramid", "pyramid DAG");
    int gen_n = 8, gen_d = 3, gen_q = 2, gen_block = 4, gen_size = 4;
    long long gen_cross = 2;
    std::uint64_t gen_seed = 1;
    std::string gen_out, gen_sidecar;
    gen_regular->add_option("--n", gen_n)->required();
    gen_regular->add_option("--d", gen_d)->required();
    gen_planted->add_option("--q", gen_q)->required();
    gen_planted->add_option("--block", gen_block)->required();
    gen_planted->add_option("--d", gen_d)->required();
    gen_planted->add_option("--cross", gen_cross)->required();
    gen_pyramid->add_option("--size", gen_size)->required();
    for (auto* sub : {gen_regular, gen_planted, gen_pyramid}) {
        sub->add_option("--seed", gen_seed);
        sub->add_option("-o,--out", gen_out);
    }
    gen_planted->add_option("--sidecar", gen_sidecar, "partition record path");

    // verify
    auto* verify = app.add_subcommand("verify", "run a lemma verification suite");
    std::string suite, corpus = "small";
    std::uint64_t verify_seed = 1;
    bool verify_human = false;
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--corpus", corpus)->check(CLI::IsMember({"tiny", "small", "full"}));
    verify->add_option("--seed", verify_seed);
    verify->add_flag("--human", verify_human);

    // convert
    auto* convert = app.add_subcommand("convert", "convert graph files");
    std::string convert_path, convert_to = "dot", convert_out;
    convert->add_option("graph", convert_path)->required();
    convert->add_option("--to", convert_to)->check(CLI::IsMember({"dot", "edgelist"}));
    convert->add_option("-o,--out", convert_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_path, problem, method, common);
        if (width->parsed())
            return cmd_width(width_path, width_param, td_path, want_path, check_bound,
                             {tw_limit, sep_full_limit, sep_max_limit}, common);
        if (pebble->parsed())
            return cmd_pebble(pebble_path, strategy_path, pebble_solve, mode, accounting, common);
        if (reduce->parsed()) return cmd_reduce(reduce_path, kind, reduce_out, node_budget);
        if (gen->parsed())
            return cmd_gen(gen_regular, gen_planted, gen_pyramid, gen_n, gen_d, gen_q, gen_block,
                           gen_cross, gen_size, gen_seed, gen_out, gen_sidecar);
        if (verify->parsed()) return cmd_verify(suite, corpus, verify_seed, verify_human);
        if (convert->parsed()) return cmd_convert(convert_path, convert_to, convert_out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const size_limit_error& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kDomain;
    } catch (const validation_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}
