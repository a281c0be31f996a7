// bergecycle: command-line front end.
//
// Exit codes: 0 found / verified, 1 not found / invalid, 2 undecided / infeasible.

#include <berge/construct.hh>
#include <berge/hamilton.hh>
#include <berge/harness.hh>
#include <berge/io.hh>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace berge;

namespace {
constexpr int exit_found = 0, exit_not_found = 1, exit_undecided = 2;

auto load_coloring(const std::string & path) -> Coloring
{
    return parse_coloring(read_file(path));
}

auto verdict_code(SearchVerdict v) -> int
{
    switch (v) {
        case SearchVerdict::found: return exit_found;
        case SearchVerdict::not_found: return exit_not_found;
        case SearchVerdict::undecided: return exit_undecided;
    }
    return exit_undecided;
}

auto parse_color_list(const std::string & text) -> std::vector<Color>
{
    std::vector<Color> out;
    for (char ch : text) {
        if (ch == ',' || ch == ' ')
            continue;
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("color lists take digits 1-9, optionally comma separated");
        out.push_back(static_cast<Color>(ch - '0'));
    }
    // comma-separated lists may hold multi-digit ids
    if (text.find(',') != std::string::npos) {
        out.clear();
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            out.push_back(static_cast<Color>(std::stoul(item)));
    }
    return out;
}
}

int main(int argc, char ** argv)
{
    CLI::App app{"Monochromatic Hamiltonian Berge-cycles in edge-colored complete uniform hypergraphs"};
    app.require_subcommand(1);

    // verify
    std::string coloring_path, cycle_path;
    auto * verify = app.add_subcommand("verify", "check a Berge-cycle certificate against a coloring");
    verify->add_option("coloring", coloring_path)->required();
    verify->add_option("cycle", cycle_path)->required();

    // search
    std::uint64_t budget = unlimited;
    std::string cycle_out, json_out;
    auto * search = app.add_subcommand("search", "look for a monochromatic Hamiltonian Berge-cycle");
    search->add_option("coloring", coloring_path)->required();
    search->add_option("--budget", budget, "work units: node expansions plus augmentations");
    search->add_option("--cycle-out", cycle_out, "write the cycle here");
    search->add_option("--json", json_out, "write the search report here");

    // exhaust
    unsigned n = 0, r = 0, k = 0, shards = 1, threads = 0;
    std::string report_out;
    std::uint64_t max_colorings = ExhaustOptions{}.max_colorings;
    auto * exhaust = app.add_subcommand("exhaust", "classify every k-coloring of K_n^r");
    exhaust->add_option("--n", n)->required();
    exhaust->add_option("--r", r)->required();
    exhaust->add_option("--k", k)->required();
    exhaust->add_option("--shards", shards)->check(CLI::PositiveNumber);
    exhaust->add_option("--threads", threads, "0: one per shard");
    exhaust->add_option("--max-colorings", max_colorings, "refuse larger spaces");
    exhaust->add_option("--out", report_out, "write the JSON report here");

    // construct
    std::string bundle_out;
    std::optional<std::uint64_t> d_bound, threshold;
    auto * construct = app.add_subcommand("construct", "run the constructive route (k = r - 1)");
    construct->add_option("coloring", coloring_path)->required();
    construct->add_option("--bundle", bundle_out, "write the auxiliary graph and its bookkeeping as JSON");
    construct->add_option("--cycle-out", cycle_out);
    construct->add_option("--d-bound", d_bound, "color-degree bound for avoidance (default C(4r, r-1))");
    construct->add_option("--good-threshold", threshold, "edges needed for a good color (default r-1)");

    // closure
    std::string graph_path, graph_out;
    auto * closure_cmd = app.add_subcommand("closure", "closure of a graph and a Hamiltonian cycle if one exists");
    closure_cmd->add_option("graph", graph_path)->required();
    closure_cmd->add_option("--out", graph_out, "write the closure here instead of stdout");

    // gen
    std::string scheme = "uniform", gen_out, classes, digits;
    Color color = 1;
    std::uint64_t seed = 0;
    auto * gen = app.add_subcommand("gen", "write a generated coloring");
    gen->add_option("--scheme", scheme)->check(CLI::IsMember({"uniform", "random", "vertex-partition", "digits"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--r", r)->required();
    gen->add_option("--k", k)->required();
    gen->add_option("--color", color, "uniform scheme");
    gen->add_option("--seed", seed, "random scheme");
    gen->add_option("--classes", classes, "vertex-partition scheme: class of each vertex, e.g. 1,1,2,2");
    gen->add_option("--digits", digits, "digits scheme: pattern repeated along colex order, e.g. 12");
    gen->add_option("--out", gen_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            auto coloring = load_coloring(coloring_path);
            auto cycle = parse_cycle(read_file(cycle_path));
            if (cycle.core.size() != coloring.params().n()) {
                std::cout << "invalid: cycle has " << cycle.core.size() << " vertices, coloring has " << coloring.params().n() << "\n";
                return exit_not_found;
            }
            auto verdict = verify_berge_cycle(cycle, coloring);
            if (verdict.valid()) {
                std::cout << "valid\n";
                return exit_found;
            }
            std::cout << "invalid: " << verdict.message << "\n";
            return exit_not_found;
        }

        if (*search) {
            auto coloring = load_coloring(coloring_path);
            auto report = find_mono_berge(coloring, budget);
            std::cout << to_string(report.verdict);
            if (report.color)
                std::cout << " color " << *report.color;
            std::cout << " (work " << report.work() << ")\n";
            if (report.cycle) {
                if (cycle_out.empty())
                    std::cout << format_cycle(*report.cycle);
                else
                    write_file(cycle_out, format_cycle(*report.cycle));
            }
            if (! json_out.empty())
                write_file(json_out, to_json(report).dump(2) + "\n");
            return verdict_code(report.verdict);
        }

        if (*exhaust) {
            ExhaustOptions options;
            options.shards = shards;
            options.threads = threads;
            options.max_colorings = max_colorings;
            ExhaustReport report;
            try {
                report = exhaustive_verify(HyperParams(n, r, k), options);
            }
            catch (const InfeasibleError & e) {
                std::cout << "infeasible: " << e.what() << "\n";
                if (! report_out.empty())
                    write_file(report_out, nlohmann::json{{"params", {{"n", n}, {"r", r}, {"k", k}}},
                        {"infeasible", e.what()}, {"estimate", e.estimate()}}.dump(2) + "\n");
                return exit_undecided;
            }
            std::cout << "total " << report.total << " success " << report.success << " failure " << report.failure << "\n";
            if (! report_out.empty())
                write_file(report_out, to_json(report).dump(2) + "\n");
            return report.failure == 0 ? exit_found : exit_not_found;
        }

        if (*construct) {
            auto coloring = load_coloring(coloring_path);
            ConstructOptions options;
            options.d_bound = d_bound;
            options.good_threshold = threshold;
            auto result = constructive_find(coloring, options);
            if (result.witness)
                std::cout << "witness: " << to_json(*result.witness).dump() << "\n";
            if (result.bundle && ! bundle_out.empty())
                write_file(bundle_out, to_json(*result.bundle).dump(2) + "\n");
            if (result.cycle) {
                std::cout << "found color " << *result.color << (result.greedy_succeeded ? " (ordered assignment)\n" : " (matching)\n");
                if (cycle_out.empty())
                    std::cout << format_cycle(*result.cycle);
                else
                    write_file(cycle_out, format_cycle(*result.cycle));
                return exit_found;
            }
            std::cout << "stopped at " << to_string(result.stage) << ": " << result.diagnostic << "\n";
            bool budget_hit = result.diagnostic.find(to_string(HamiltonStatus::budget_exhausted)) != std::string::npos;
            return budget_hit ? exit_undecided : exit_not_found;
        }

        if (*closure_cmd) {
            auto g = parse_graph(read_file(graph_path));
            auto trace = closure_trace(g);
            if (graph_out.empty())
                std::cout << format_graph(trace.closure);
            else
                write_file(graph_out, format_graph(trace.closure));
            std::cerr << "added " << trace.added.size() << " edges\n";
            if (g.size() < 3) {
                std::cerr << "not hamiltonian: fewer than 3 vertices\n";
                return exit_not_found;
            }
            auto ham = find_hamiltonian_cycle(g);
            if (! ham.cycle) {
                std::cerr << to_string(ham.status) << "\n";
                return ham.status == HamiltonStatus::budget_exhausted ? exit_undecided : exit_not_found;
            }
            std::cerr << "hamiltonian:";
            for (auto v : ham.cycle->order)
                std::cerr << ' ' << v;
            std::cerr << "\n";
            return exit_found;
        }

        if (*gen) {
            HyperParams params(n, r, k);
            GenScheme s;
            if (scheme == "uniform") {
                s.kind = GenScheme::Kind::uniform;
                s.color = color;
            }
            else if (scheme == "random") {
                s.kind = GenScheme::Kind::random;
                s.seed = seed;
            }
            else if (scheme == "vertex-partition") {
                s.kind = GenScheme::Kind::vertex_partition;
                s.classes = parse_color_list(classes);
            }
            else {
                s.kind = GenScheme::Kind::digits;
                s.digits = parse_color_list(digits);
            }
            write_file(gen_out, format_coloring(gen_coloring(params, s)));
            return exit_found;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_found;
    }
    return exit_not_found;
}
