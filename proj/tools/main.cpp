// trendreason: qualitative trend modelling from the command line.
//
// Exit codes: 0 success (non-empty result), 1 empty query result,
// 2 user error (syntax, validation, usage), 3 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trendreason/analysis.hpp"
#include "trendreason/correlation.hpp"
#include "trendreason/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitUserError = 2;
constexpr int kExitIoError = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buf.str();
}

trendreason::TrendModel load_model(const std::string& path) {
    const std::string text = read_file(path);
    return trendreason::parse_model(text, std::filesystem::path(path).stem().string());
}

struct SolveArgs {
    std::string model_path;
    std::string format = "table";
    bool dp_weak = false;
};

struct GraphArgs {
    std::string model_path;
    std::string format = "dot";
    bool positive_only = true;
    bool dp_weak = false;
};

struct QueryArgs {
    std::string model_path;
    std::string where;
    std::string where_json;
    std::string path_from;
    std::string path_to;
    std::string format = "table";
    bool dp_weak = false;
};

struct ReconcileArgs {
    std::vector<std::string> model_paths;
    bool core = false;
    bool envelope = false;
    std::string format = "table";
};

struct FromCorrArgs {
    std::string csv_path;
    double threshold = 0.0;
    bool repair = false;
    std::string trace_out;
};

int cmd_solve(const SolveArgs& args) {
    const auto model = load_model(args.model_path);
    const auto set = trendreason::solve(model, {.dp_weak = args.dp_weak});
    if (args.format == "table")
        std::cout << trendreason::render_table(set);
    else if (args.format == "csv")
        std::cout << trendreason::render_csv(set);
    else
        std::cout << trendreason::render_json(set);
    return kExitOk;
}

int cmd_graph(const GraphArgs& args) {
    const auto model = load_model(args.model_path);
    const auto set = trendreason::solve(model, {.dp_weak = args.dp_weak});
    const auto graph = trendreason::build_graph(set, trendreason::TransitionTable{args.positive_only});
    if (args.format == "dot")
        std::cout << trendreason::render_graph_dot(graph);
    else
        std::cout << trendreason::render_graph_json(graph);
    return kExitOk;
}

int cmd_query(const QueryArgs& args) {
    const auto model = load_model(args.model_path);
    const auto set = trendreason::solve(model, {.dp_weak = args.dp_weak});

    if (!args.path_from.empty() || !args.path_to.empty()) {
        const auto graph = trendreason::build_graph(set);
        const auto from = trendreason::parse_filter(set.variables, args.path_from);
        const auto to = trendreason::parse_filter(set.variables, args.path_to);
        trendreason::PathResult path;
        try {
            path = trendreason::path_query(graph, from, to);
        } catch (const trendreason::FilterMatchesNothing& e) {
            std::cerr << e.what() << '\n';
            return kExitEmpty;
        }
        if (args.format == "json")
            std::cout << trendreason::render_path_json(graph, path);
        else
            std::cout << trendreason::render_path_table(graph, path);
        return path.empty() ? kExitEmpty : kExitOk;
    }

    const auto filter = !args.where_json.empty()
                            ? trendreason::parse_filter_json(set.variables, args.where_json)
                            : trendreason::parse_filter(set.variables, args.where);
    const auto matches = trendreason::query(set, filter);
    if (args.format == "table")
        std::cout << trendreason::render_selection_table(set, matches);
    else if (args.format == "csv")
        std::cout << trendreason::render_selection_csv(set, matches);
    else
        std::cout << trendreason::render_selection_json(set, matches);
    return matches.empty() ? kExitEmpty : kExitOk;
}

int cmd_reconcile(const ReconcileArgs& args) {
    std::vector<trendreason::ScenarioSet> sets;
    sets.reserve(args.model_paths.size());
    for (const auto& path : args.model_paths) sets.push_back(trendreason::solve(load_model(path)));

    const auto result = args.core ? trendreason::core(sets) : trendreason::envelope(sets);
    if (args.format == "table")
        std::cout << trendreason::render_table(result);
    else if (args.format == "csv")
        std::cout << trendreason::render_csv(result);
    else
        std::cout << trendreason::render_json(result);
    return kExitOk;
}

int cmd_from_corr(const FromCorrArgs& args) {
    const auto matrix = trendreason::parse_correlation_csv(read_file(args.csv_path));
    if (!args.repair) {
        auto model = trendreason::matrix_to_model(matrix, args.threshold);
        model.name = std::filesystem::path(args.csv_path).stem().string();
        std::cout << trendreason::serialize_model(model);
        return kExitOk;
    }

    const auto trace = trendreason::removal_heuristic(matrix, args.threshold);
    const std::string trace_json = trendreason::render_trace_json(trace);
    if (args.trace_out.empty()) {
        std::cerr << trace_json;
    } else {
        std::ofstream out(args.trace_out, std::ios::binary);
        if (!out) throw IoError("cannot write " + args.trace_out);
        out << trace_json;
    }
    std::cout << trendreason::serialize_model(trace.final_model);
    if (trace.exhausted) {
        std::cerr << "removal heuristic exhausted all coefficients without escaping degeneracy\n";
        return kExitUserError;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qualitative trend reasoning: solve sign-based trend models, build scenario "
                 "transition graphs, answer trend queries."};
    app.set_version_flag("--version", "trendreason 0.1.0");
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Enumerate all consistent scenarios of a model");
    solve_cmd->add_option("model", solve_args.model_path, "Model file (.qtm)")->required();
    solve_cmd->add_option("--format", solve_args.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    solve_cmd->add_flag("--dp-weak", solve_args.dp_weak,
                        "Relax DP/IP to first-derivative-only coupling");

    GraphArgs graph_args;
    auto* graph_cmd = app.add_subcommand("graph", "Build the scenario transition graph of a model");
    graph_cmd->add_option("model", graph_args.model_path, "Model file (.qtm)")->required();
    graph_cmd->add_option("--format", graph_args.format, "Output format")
        ->check(CLI::IsMember({"dot", "json"}));
    graph_cmd->add_option("--positive-only", graph_args.positive_only,
                          "Restrict the 1-D transition table to positive values (default true)");
    graph_cmd->add_flag("--dp-weak", graph_args.dp_weak,
                        "Relax DP/IP to first-derivative-only coupling");

    QueryArgs query_args;
    auto* query_cmd = app.add_subcommand("query", "Filter scenarios or find transition paths");
    query_cmd->add_option("model", query_args.model_path, "Model file (.qtm)")->required();
    auto* where_opt =
        query_cmd->add_option("--where", query_args.where,
                              "Filter, e.g. \"EXP.dx=+,GEN.dx=0\" or the keyword steady");
    auto* where_json_opt = query_cmd->add_option("--where-json", query_args.where_json,
                                                 "Filter as JSON [{var,field,signs[]},...]");
    auto* from_opt = query_cmd->add_option("--path-from", query_args.path_from,
                                           "Path start filter (same syntax as --where)");
    auto* to_opt = query_cmd->add_option("--path-to", query_args.path_to, "Path goal filter");
    query_cmd->add_option("--format", query_args.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    query_cmd->add_flag("--dp-weak", query_args.dp_weak,
                        "Relax DP/IP to first-derivative-only coupling");
    where_opt->excludes(from_opt)->excludes(to_opt)->excludes(where_json_opt);
    where_json_opt->excludes(from_opt)->excludes(to_opt);
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);

    ReconcileArgs reconcile_args;
    auto* reconcile_cmd =
        app.add_subcommand("reconcile", "Core or envelope of several forecasters' models");
    reconcile_cmd->add_option("models", reconcile_args.model_paths, "Model files (.qtm)")
        ->required()
        ->expected(2, -1);
    auto* core_flag = reconcile_cmd->add_flag("--core", reconcile_args.core,
                                              "Scenarios present in every model's solution");
    auto* env_flag = reconcile_cmd->add_flag("--envelope", reconcile_args.envelope,
                                             "Scenarios present in any model's solution");
    core_flag->excludes(env_flag);
    reconcile_cmd->add_option("--format", reconcile_args.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    FromCorrArgs corr_args;
    auto* corr_cmd =
        app.add_subcommand("from-corr", "Generate a trend model from a correlation matrix CSV");
    corr_cmd->add_option("csv", corr_args.csv_path, "Correlation matrix CSV")->required();
    corr_cmd->add_option("--threshold", corr_args.threshold,
                         "Minimum |coefficient| producing a relation (default 0)");
    corr_cmd->add_flag("--repair", corr_args.repair,
                       "Apply the removal heuristic until the model admits trends");
    corr_cmd->add_option("--trace-out", corr_args.trace_out,
                         "Write the removal trace JSON here (default: stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUserError;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (graph_cmd->parsed()) return cmd_graph(graph_args);
        if (query_cmd->parsed()) {
            if (query_args.where.empty() && query_args.where_json.empty() &&
                query_args.path_from.empty()) {
                std::cerr << "query needs --where, --where-json, or --path-from/--path-to\n";
                return kExitUserError;
            }
            return cmd_query(query_args);
        }
        if (reconcile_cmd->parsed()) {
            if (reconcile_args.core == reconcile_args.envelope) {
                std::cerr << "reconcile needs exactly one of --core or --envelope\n";
                return kExitUserError;
            }
            return cmd_reconcile(reconcile_args);
        }
        if (corr_cmd->parsed()) return cmd_from_corr(corr_args);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const trendreason::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
        std::cerr << '\n';
        return kExitUserError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUserError;
    }
    return kExitUserError;
}
