#include "ndsolve/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "ndsolve/bench.hpp"
#include "ndsolve/generators.hpp"
#include "ndsolve/instance_io.hpp"
#include "ndsolve/motif.hpp"
#include "ndsolve/nd.hpp"
#include "ndsolve/oracles.hpp"
#include "ndsolve/paths.hpp"
#include "ndsolve/precolor.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace ndsolve::cli {

namespace {

using nlohmann::json;

/// Usage or validation failure; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    bool json = false;
    bool witness = false;
    bool check = false;
    bool dump_ilp = false;
    std::uint64_t seed = 1;
};

json witness_json(const MotifWitness& w)
{
    json vertices = json::array();
    for (Vertex v : w.vertices)
        vertices.push_back(v + 1);
    return vertices;
}

json witness_json(const PathsWitness& w)
{
    json paths = json::array();
    for (const auto& path : w.paths) {
        json p = json::array();
        for (Vertex v : path)
            p.push_back(v + 1);
        paths.push_back(p);
    }
    return paths;
}

json witness_json(const ColoringWitness& w)
{
    json colors = json::object();
    for (std::size_t v = 0; v < w.color_of.size(); ++v)
        colors[std::to_string(v + 1)] = w.color_of[v];
    return colors;
}

std::string witness_text(const MotifWitness& w)
{
    std::ostringstream out;
    out << "witness:";
    for (Vertex v : w.vertices)
        out << ' ' << v + 1;
    out << '\n';
    return out.str();
}

std::string witness_text(const PathsWitness& w)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
        out << "path " << i + 1 << ':';
        for (Vertex v : w.paths[i])
            out << ' ' << v + 1;
        out << '\n';
    }
    return out.str();
}

std::string witness_text(const ColoringWitness& w)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < w.color_of.size(); ++v)
        out << "color " << v + 1 << ' ' << w.color_of[v] << '\n';
    return out.str();
}

std::string read_input(const Options& options, std::istream& in)
{
    std::ostringstream buffer;
    if (options.input.empty() || options.input == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(options.input, std::ios::binary);
        if (!file)
            throw UsageError("cannot open input file '" + options.input + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

template <typename T>
T load(const Options& options, std::istream& in, const char* what)
{
    auto instance = parse_instance(read_input(options, in));
    if (auto* typed = std::get_if<T>(&instance))
        return std::move(*typed);
    throw UsageError(std::string("input is not a ") + what + " instance");
}

struct Emitted {
    bool answer = false;
    json witness;
    std::string witness_text;
    SolveStats stats;
    bool has_stats = true;
};

template <typename Witness>
Emitted from_report(const SolveReport<Witness>& report)
{
    Emitted e{report.answer, nullptr, {}, report.stats, true};
    if (report.witness) {
        e.witness = witness_json(*report.witness);
        e.witness_text = witness_text(*report.witness);
    }
    return e;
}

template <typename Witness>
Emitted from_oracle(const OracleResult<Witness>& result, double elapsed_ms)
{
    Emitted e{result.answer, nullptr, {}, {}, false};
    e.stats.elapsed_ms = elapsed_ms;
    if (result.witness) {
        e.witness = witness_json(*result.witness);
        e.witness_text = witness_text(*result.witness);
    }
    return e;
}

void emit(std::ostream& out, const std::string& problem, const Emitted& e, const Options& options,
          const std::optional<bool>& oracle_answer)
{
    if (options.json) {
        json report;
        report["problem"] = problem;
        report["answer"] = e.answer ? "yes" : "no";
        if (options.witness && !e.witness.is_null())
            report["witness"] = e.witness;
        json stats;
        if (e.has_stats)
            stats["nd"] = e.stats.nd;
        if (e.stats.ilp_vars)
            stats["ilp_vars"] = *e.stats.ilp_vars;
        stats["elapsed_ms"] = std::round(e.stats.elapsed_ms * 1000.0) / 1000.0;
        report["stats"] = stats;
        if (oracle_answer)
            report["check"] = {{"oracle_answer", *oracle_answer ? "yes" : "no"},
                               {"agree", *oracle_answer == e.answer}};
        out << report.dump() << '\n';
        return;
    }
    out << "problem: " << problem << '\n' << "answer: " << (e.answer ? "yes" : "no") << '\n';
    if (e.has_stats)
        out << "nd: " << e.stats.nd << '\n';
    if (e.stats.ilp_vars)
        out << "ilp_vars: " << *e.stats.ilp_vars << '\n';
    out << "elapsed_ms: " << std::fixed << std::setprecision(3) << e.stats.elapsed_ms << '\n';
    if (oracle_answer)
        out << "oracle: " << (*oracle_answer ? "yes" : "no") << " (" << (*oracle_answer == e.answer ? "agree" : "DISAGREE")
            << ")\n";
    if (options.witness)
        out << e.witness_text;
}

template <typename Instance, typename Oracle>
std::optional<bool> maybe_check(const Options& options, const Instance& instance, Oracle oracle)
{
    if (!options.check)
        return std::nullopt;
    return oracle(instance).answer;
}

int cmd_nd(const Options& options, std::istream& in, std::ostream& out)
{
    auto instance = parse_instance(read_input(options, in));
    const Graph& g = std::visit(
        [](const auto& x) -> const Graph& {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Graph>)
                return x;
            else
                return x.graph;
        },
        instance);
    const auto start = std::chrono::steady_clock::now();
    const auto partition = compute_type_partition(g);
    const auto h = build_type_graph(g, partition);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (options.json) {
        json classes = json::array();
        for (TypeId t = 0; t < partition.k(); ++t) {
            json members = json::array();
            for (Vertex v : partition.classes[t])
                members.push_back(v + 1);
            classes.push_back({{"type", t}, {"size", partition.size(t)}, {"clique", static_cast<bool>(partition.clique_flag[t])},
                               {"members", members}});
        }
        json edges = json::array();
        for (auto [a, b] : h.edges())
            edges.push_back({a, b});
        json report{{"k", partition.k()}, {"classes", classes}, {"h_edges", edges},
                    {"elapsed_ms", std::round(ms * 1000.0) / 1000.0}};
        out << report.dump() << '\n';
        return exit_ok;
    }
    out << "k=" << partition.k() << '\n';
    for (TypeId t = 0; t < partition.k(); ++t) {
        out << "type " << t << " size=" << partition.size(t) << ' '
            << (partition.clique_flag[t] ? "clique" : "independent");
        if (options.witness) {
            out << " members:";
            for (Vertex v : partition.classes[t])
                out << ' ' << v + 1;
        }
        out << '\n';
    }
    for (auto [a, b] : h.edges())
        out << "h " << a << ' ' << b << '\n';
    return exit_ok;
}

int cmd_solve(const std::string& problem, const Options& options, std::istream& in, std::ostream& out,
              std::ostream& err)
{
    if (problem == "motif") {
        const auto instance = load<MotifInstance>(options, in, "motif");
        const auto report = solve_motif(instance);
        emit(out, problem, from_report(report), options, maybe_check(options, instance, oracle_motif));
    } else if (problem == "paths") {
        const auto instance = load<PathsInstance>(options, in, "paths");
        if (options.dump_ilp) {
            const auto partition = compute_type_partition(instance.graph);
            write_ilp(err, build_paths_ilp(instance, partition, build_type_graph(instance.graph, partition)).problem);
        }
        const auto report = solve_paths(instance);
        emit(out, problem, from_report(report), options, maybe_check(options, instance, oracle_paths));
    } else {
        const auto instance = load<PrecolorInstance>(options, in, "precolor");
        if (options.dump_ilp) {
            const auto partition = compute_type_partition(instance.graph);
            const auto reduced = reduce_independent_types(instance, partition);
            const auto categories = compute_color_categories(reduced, partition);
            write_ilp(err, build_precolor_ilp(reduced, categories, build_type_graph(instance.graph, partition)).problem);
        }
        const auto report = solve_precolor(instance);
        emit(out, problem, from_report(report), options, maybe_check(options, instance, oracle_precolor));
    }
    return exit_ok;
}

template <typename Instance, typename Oracle>
Emitted timed_oracle(const Instance& instance, Oracle oracle)
{
    const auto start = std::chrono::steady_clock::now();
    const auto result = oracle(instance);
    return from_oracle(result, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
}

int cmd_oracle(const std::string& problem, const Options& options, std::istream& in, std::ostream& out)
{
    Emitted e;
    if (problem == "motif")
        e = timed_oracle(load<MotifInstance>(options, in, "motif"), oracle_motif);
    else if (problem == "paths")
        e = timed_oracle(load<PathsInstance>(options, in, "paths"), oracle_paths);
    else
        e = timed_oracle(load<PrecolorInstance>(options, in, "precolor"), oracle_precolor);
    emit(out, problem, e, options, std::nullopt);
    return exit_ok;
}

struct GenOptions {
    std::string kind = "graph";
    int k = 4;
    int n = 12;
    double edge_probability = 0.5;
    double clique_probability = 0.5;
    AnnotationParams params;
};

int cmd_gen(const GenOptions& gen, const Options& options, std::ostream& out)
{
    std::mt19937_64 rng(options.seed);
    const auto blueprint = random_template_with_total(gen.k, gen.n, rng, gen.edge_probability, gen.clique_probability);
    if (gen.kind == "graph")
        out << serialize_instance(generate_from_template(blueprint, options.seed));
    else if (gen.kind == "motif")
        out << serialize_instance(random_motif_instance(blueprint, gen.params, options.seed));
    else if (gen.kind == "paths")
        out << serialize_instance(random_paths_instance(blueprint, gen.params, options.seed));
    else
        out << serialize_instance(random_precolor_instance(blueprint, gen.params, options.seed));
    return exit_ok;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty())
            values.push_back(std::stoi(item));
    return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solvers for graphs of bounded neighborhood diversity", "ndsolve"};
    app.require_subcommand(1);
    Options options;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", options.input, "Instance file (default: standard input)");
        sub->add_flag("--json", options.json, "Emit a JSON report");
        sub->add_flag("--witness", options.witness, "Include the witness");
        sub->add_option("--seed", options.seed, "Seed for generators");
    };

    auto* nd = app.add_subcommand("nd", "Neighborhood diversity decomposition");
    add_common(nd);

    std::map<std::string, CLI::App*> solvers;
    for (const char* name : {"motif", "paths", "precolor"}) {
        auto* sub = app.add_subcommand(name, std::string("Solve ") + name);
        add_common(sub);
        sub->add_flag("--check", options.check, "Cross-check with the brute-force oracle");
        if (std::string(name) != "motif")
            sub->add_flag("--dump-ilp", options.dump_ilp, "Print the integer program to stderr");
        solvers[name] = sub;
    }

    std::string oracle_problem;
    auto* oracle = app.add_subcommand("oracle", "Brute-force decision");
    oracle->add_option("problem", oracle_problem, "motif | paths | precolor")
        ->required()
        ->check(CLI::IsMember({"motif", "paths", "precolor"}));
    add_common(oracle);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance with prescribed type structure");
    gen_cmd->add_option("kind", gen.kind, "graph | motif | paths | precolor")
        ->check(CLI::IsMember({"graph", "motif", "paths", "precolor"}));
    gen_cmd->add_option("--k", gen.k, "Number of types")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--n", gen.n, "Number of vertices")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--edge-prob", gen.edge_probability, "Type-graph edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--clique-prob", gen.clique_probability, "Clique type probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--colors", gen.params.colors, "Motif palette size")->check(CLI::Range(1, 16));
    gen_cmd->add_option("--motif-size", gen.params.motif_size, "Motif size")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--pairs", gen.params.pairs, "Terminal pairs")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--r", gen.params.num_colors, "Precoloring budget")->check(CLI::Range(1, 16));
    gen_cmd->add_option("--precolor-prob", gen.params.precolor_probability, "Chance a vertex is precolored")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", options.seed, "Seed");

    BenchCell bench_cell;
    std::string bench_ks = "2,4,6,8";
    std::string bench_ns;
    auto* bench = app.add_subcommand("bench", "Timing table over generated instances");
    bench->add_option("--problem", bench_cell.problem, "nd | motif | paths | precolor")
        ->required()
        ->check(CLI::IsMember({"nd", "motif", "paths", "precolor"}));
    bench->add_option("--k", bench_ks, "Comma-separated type counts (empty for no cells)");
    bench->add_option("--n", bench_ns, "Comma-separated vertex counts")->default_str("1000");
    bench->add_option("--seeds", bench_cell.seeds, "Seeds per cell")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cell.first_seed, "First seed");
    bench->add_option("--pairs", bench_cell.pairs, "Terminal pairs (paths)")->check(CLI::NonNegativeNumber);
    bench->add_option("--colors", bench_cell.colors, "Palette / budget")->check(CLI::Range(1, 16));
    bench->add_option("--motif-size", bench_cell.motif_size, "Motif size")->check(CLI::PositiveNumber);
    bench->add_flag("--json", options.json, "Emit JSON rows");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_invalid;
    }

    try {
        if (nd->parsed())
            return cmd_nd(options, in, out);
        for (const auto& [name, sub] : solvers)
            if (sub->parsed())
                return cmd_solve(name, options, in, out, err);
        if (oracle->parsed())
            return cmd_oracle(oracle_problem, options, in, out);
        if (gen_cmd->parsed())
            return cmd_gen(gen, options, out);
        if (bench->parsed()) {
            std::vector<BenchCell> cells;
            const auto ns = bench_ns.empty() ? std::vector<int>{1000} : parse_int_list(bench_ns);
            for (int k : parse_int_list(bench_ks))
                for (int n : ns) {
                    auto cell = bench_cell;
                    cell.k = k;
                    cell.n = n;
                    cells.push_back(cell);
                }
            const auto rows = run_bench(cells, bench_threads_from_env());
            if (options.json) {
                json table = json::array();
                for (const auto& row : rows) {
                    json r{{"problem", row.cell.problem}, {"k", row.cell.k},          {"n", row.cell.n},
                           {"seeds", row.cell.seeds},     {"median_ms", row.median_ms}, {"max_ms", row.max_ms},
                           {"nd", row.max_nd},            {"yes", row.yes}};
                    if (row.max_ilp_vars)
                        r["q"] = *row.max_ilp_vars;
                    table.push_back(r);
                }
                out << table.dump() << '\n';
            } else {
                write_bench_table(out, rows);
            }
            return exit_ok;
        }
    } catch (const OracleSizeGuard& e) {
        err << "error: " << e.what() << '\n';
        return exit_oracle_guard;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const InvalidInstance& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}

}  // namespace ndsolve::cli
