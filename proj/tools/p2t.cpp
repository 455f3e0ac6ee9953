#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "p2t/formula.hpp"
#include "p2t/graph.hpp"
#include "p2t/io.hpp"
#include "p2t/reduction.hpp"
#include "p2t/solver.hpp"

namespace {

// Exit codes: 0 yes/accept, 1 no/reject, 2 usage or format error, 3 timeout.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitTimeout = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw p2t::FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw p2t::FormatError("cannot write " + path);
    out << content;
}

p2t::Formula load_formula(const std::string& path) {
    std::istringstream in(read_file(path));
    return p2t::parse_dimacs(in);
}

struct SolveFlags {
    double budget_seconds = 60.0;
    std::uint64_t node_cap = std::numeric_limits<std::uint64_t>::max();
    p2t::SolveBudget budget() const { return {budget_seconds, node_cap}; }
};

void add_solve_flags(CLI::App* cmd, SolveFlags& flags) {
    cmd->add_option("--budget", flags.budget_seconds, "wall-clock budget in seconds");
    cmd->add_option("--node-cap", flags.node_cap, "search node cap");
}

void print_stats_line(const p2t::SolveStats& stats) {
    std::cout << "nodes=" << stats.nodes << " propagations=" << stats.propagations
              << " elapsed=" << stats.elapsed_seconds << "s\n";
}

int cmd_reduce(const std::string& cnf_path, const std::string& graph_out,
               const std::string& manifest_out) {
    const p2t::Formula f = load_formula(cnf_path);
    if (f.has_unit_clause()) {
        std::cout << "trivially NAE-unsatisfiable (unit clause)\n";
        return kExitNo;
    }
    const p2t::Reduction red = p2t::reduce(f);
    write_file(graph_out, p2t::serialize_graph(red.graph));
    write_file(manifest_out, p2t::serialize_manifest(red.manifest));
    std::cout << "reduced: " << red.graph.vertex_count() << " vertices, "
              << red.graph.edge_count() << " edges\n";
    return kExitYes;
}

int cmd_pipeline(const std::string& cnf_path, const SolveFlags& flags, int nae_var_cap) {
    const p2t::Formula f = load_formula(cnf_path);
    if (f.has_unit_clause()) {
        std::cout << "NO: trivially NAE-unsatisfiable (unit clause)\n";
        return kExitNo;
    }
    const auto assignment = p2t::solve_nae_bruteforce(f, nae_var_cap);
    if (assignment) {
        const p2t::Reduction red = p2t::reduce(f);
        const p2t::EdgePartition partition =
            p2t::witness_partition(f, *assignment, red.graph, red.manifest);
        const p2t::Verdict verdict = p2t::verify_two_tree_partition(red.graph, partition);
        if (!verdict.accepted) {
            std::cerr << "internal error: witness partition rejected: "
                      << verdict.message(red.graph) << '\n';
            return kExitError;
        }
        const p2t::Assignment extracted =
            p2t::extract_assignment(red.graph, red.manifest, partition);
        if (!(extracted == *assignment)) {
            std::cerr << "internal error: extracted assignment does not roundtrip\n";
            return kExitError;
        }
        std::cout << "YES: good evaluation " << p2t::serialize_assignment(*assignment)
                  << "certificates verified: partition accepted, extraction roundtrips\n";
        return kExitYes;
    }
    const p2t::Reduction red = p2t::reduce(f);
    const p2t::SolveOutcome outcome = p2t::solve_p2t(red.graph, flags.budget());
    print_stats_line(outcome.stats);
    switch (outcome.status) {
        case p2t::SolveStatus::NoPartition:
            std::cout << "NO: NAE-unsatisfiable; reduced graph has no two-tree partition\n";
            return kExitNo;
        case p2t::SolveStatus::Timeout:
            std::cout << "TIMEOUT: search budget exhausted, instance undetermined\n";
            return kExitTimeout;
        case p2t::SolveStatus::Partition:
            std::cerr << "internal error: solver found a partition for an NAE-unsatisfiable "
                         "formula\n";
            return kExitError;
    }
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for the NAE-SAT to two-tree edge partition reduction"};
    app.require_subcommand(1);

    std::string cnf_path, graph_path, manifest_path, partition_path, assignment_path, out_path;
    SolveFlags solve_flags;
    int nae_var_cap = 24;

    auto* reduce_cmd = app.add_subcommand("reduce", "build the gadget graph from a DIMACS CNF");
    reduce_cmd->add_option("cnf", cnf_path)->required();
    reduce_cmd->add_option("--graph-out", graph_path)->required();
    reduce_cmd->add_option("--manifest-out", manifest_path)->required();

    auto* pipeline_cmd =
        app.add_subcommand("pipeline", "decide NAE-SAT and cross-check both certificate maps");
    pipeline_cmd->add_option("cnf", cnf_path)->required();
    add_solve_flags(pipeline_cmd, solve_flags);
    pipeline_cmd->add_option("--nae-var-cap", nae_var_cap, "brute-force variable cap");

    auto* solve_nae_cmd = app.add_subcommand("solve-nae", "brute-force a NAE-CNF instance");
    solve_nae_cmd->add_option("cnf", cnf_path)->required();
    solve_nae_cmd->add_option("--nae-var-cap", nae_var_cap, "brute-force variable cap");

    auto* bound_cmd =
        app.add_subcommand("bound", "rewrite so every literal occurs in at most two clauses");
    bound_cmd->add_option("cnf", cnf_path)->required();
    bound_cmd->add_option("--out", out_path, "output DIMACS path (default stdout)");

    auto* witness_cmd =
        app.add_subcommand("witness", "map a good evaluation to a two-tree partition");
    witness_cmd->add_option("cnf", cnf_path)->required();
    witness_cmd->add_option("assignment", assignment_path)->required();
    witness_cmd->add_option("--partition-out", partition_path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a two-tree partition certificate");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("partition", partition_path)->required();

    auto* extract_cmd =
        app.add_subcommand("extract", "recover the assignment from an accepted partition");
    extract_cmd->add_option("graph", graph_path)->required();
    extract_cmd->add_option("manifest", manifest_path)->required();
    extract_cmd->add_option("partition", partition_path)->required();

    auto* solve_cmd = app.add_subcommand("solve", "decide P2T on a graph file");
    solve_cmd->add_option("graph", graph_path)->required();
    solve_cmd->add_option("--partition-out", partition_path, "write the found partition here");
    add_solve_flags(solve_cmd, solve_flags);

    auto* stats_cmd = app.add_subcommand("stats", "degree report for a graph file");
    stats_cmd->add_option("graph", graph_path)->required();

    auto* dot_cmd = app.add_subcommand("export-dot", "emit DOT (purple-gadget edges dashed)");
    dot_cmd->add_option("graph", graph_path)->required();
    dot_cmd->add_option("--partition", partition_path, "color edges by class");
    dot_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce_cmd->parsed()) return cmd_reduce(cnf_path, graph_path, manifest_path);
        if (pipeline_cmd->parsed()) return cmd_pipeline(cnf_path, solve_flags, nae_var_cap);
        if (solve_nae_cmd->parsed()) {
            const p2t::Formula f = load_formula(cnf_path);
            const auto assignment = p2t::solve_nae_bruteforce(f, nae_var_cap);
            if (!assignment) {
                std::cout << "no good evaluation\n";
                return kExitNo;
            }
            std::cout << p2t::serialize_assignment(*assignment);
            return kExitYes;
        }
        if (bound_cmd->parsed()) {
            const p2t::BoundResult bound = p2t::bound_occurrences(load_formula(cnf_path));
            const std::string dimacs = p2t::to_dimacs(bound.formula);
            if (out_path.empty())
                std::cout << dimacs;
            else
                write_file(out_path, dimacs);
            return kExitYes;
        }
        if (witness_cmd->parsed()) {
            const p2t::Formula f = load_formula(cnf_path);
            if (f.has_unit_clause()) {
                std::cout << "trivially NAE-unsatisfiable (unit clause)\n";
                return kExitNo;
            }
            std::istringstream ain(read_file(assignment_path));
            const p2t::Assignment a = p2t::parse_assignment(ain, f.num_vars);
            const p2t::Reduction red = p2t::reduce(f);
            const p2t::EdgePartition partition = p2t::witness_partition(f, a, red.graph, red.manifest);
            write_file(partition_path, p2t::serialize_partition(red.graph, partition));
            return kExitYes;
        }
        if (verify_cmd->parsed()) {
            const p2t::Graph g = p2t::parse_graph(read_file(graph_path));
            const p2t::EdgePartition p = p2t::parse_partition(read_file(partition_path), g);
            const p2t::Verdict verdict = p2t::verify_two_tree_partition(g, p);
            std::cout << verdict.message(g) << '\n';
            return verdict.accepted ? kExitYes : kExitNo;
        }
        if (extract_cmd->parsed()) {
            const p2t::Graph g = p2t::parse_graph(read_file(graph_path));
            const p2t::ReductionManifest m = p2t::parse_manifest(read_file(manifest_path));
            const p2t::EdgePartition p = p2t::parse_partition(read_file(partition_path), g);
            std::cout << p2t::serialize_assignment(p2t::extract_assignment(g, m, p));
            return kExitYes;
        }
        if (solve_cmd->parsed()) {
            const p2t::Graph g = p2t::parse_graph(read_file(graph_path));
            const p2t::SolveOutcome outcome = p2t::solve_p2t(g, solve_flags.budget());
            print_stats_line(outcome.stats);
            if (outcome.status == p2t::SolveStatus::Partition) {
                std::cout << "partition\n";
                if (!partition_path.empty())
                    write_file(partition_path, p2t::serialize_partition(g, *outcome.partition));
                else
                    std::cout << p2t::serialize_partition(g, *outcome.partition);
                return kExitYes;
            }
            if (outcome.status == p2t::SolveStatus::Timeout) {
                std::cout << "timeout\n";
                return kExitTimeout;
            }
            std::cout << "no-partition\n";
            return kExitNo;
        }
        if (stats_cmd->parsed()) {
            const p2t::Graph g = p2t::parse_graph(read_file(graph_path));
            const p2t::DegreeReport report = p2t::degree_report(g);
            for (const auto& [label, deg] : report.degree)
                std::cout << label.str() << ' ' << deg << '\n';
            std::cout << "max degree " << report.max_degree << '\n';
            bool law_holds = true;
            for (const auto& [label, deg] : report.degree) {
                if (label.kind != p2t::VertexKind::V && label.kind != p2t::VertexKind::NV &&
                    deg > 4) {
                    std::cout << "degree law violated at " << label.str() << " (degree " << deg
                              << ")\n";
                    law_holds = false;
                }
            }
            if (law_holds) std::cout << "non-literal degrees are all <= 4\n";
            return law_holds ? kExitYes : kExitNo;
        }
        if (dot_cmd->parsed()) {
            const p2t::Graph g = p2t::parse_graph(read_file(graph_path));
            std::optional<p2t::EdgePartition> p;
            if (!partition_path.empty()) p = p2t::parse_partition(read_file(partition_path), g);
            const std::string dot = p2t::export_dot(g, p ? &*p : nullptr);
            if (out_path.empty())
                std::cout << dot;
            else
                write_file(out_path, dot);
            return kExitYes;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
