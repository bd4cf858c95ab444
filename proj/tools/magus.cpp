// magus: construct generalised Mycielskians, verify and search for distance magic labellings.
//
// Exit codes: 0 magic / success, 1 not magic, 2 usage or parse error, 3 unknown (budget hit).

#include <magus/census.hpp>
#include <magus/decide.hpp>
#include <magus/graph6.hpp>
#include <magus/labeling.hpp>
#include <magus/linear_prover.hpp>
#include <magus/mycielskian.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using std::size_t;
using std::string;

namespace
{
    constexpr int exit_usage = 2;

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_all(const string & path) -> string
    {
        if (path == "-") {
            std::ostringstream out;
            out << std::cin.rdbuf();
            return out.str();
        }
        std::ifstream in{path};
        if (! in)
            throw UsageError("cannot read '" + path + "'");
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    }

    auto first_line(const string & text) -> string
    {
        std::istringstream in{text};
        string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != string::npos) {
                auto last = line.find_last_not_of(" \t\r");
                return line.substr(line.find_first_not_of(" \t\r"), last + 1 - line.find_first_not_of(" \t\r"));
            }
        throw UsageError("no graph6 line in input");
    }

    struct GraphSource
    {
        string family;
        string graph6;
        string graph_file;

        void add_to(CLI::App * app)
        {
            app->add_option("--family", family, "Graph family: p5, c4, k4, w4, k33, k2,5, complete:12, ...");
            app->add_option("--graph6", graph6, "Base graph as a graph6 string");
            app->add_option("--graph-file", graph_file, "File holding one graph6 string ('-' for stdin)");
        }

        auto load() const -> magus::Graph
        {
            int given = ! family.empty() + ! graph6.empty() + ! graph_file.empty();
            if (given != 1)
                throw UsageError("give exactly one of --family, --graph6, --graph-file");
            if (! family.empty())
                return magus::generate(magus::parse_family(family));
            if (! graph6.empty())
                return magus::parse_graph6(graph6);
            return magus::parse_graph6(first_line(read_all(graph_file)));
        }
    };

    auto require_t(size_t t) -> void
    {
        if (t < 2)
            throw UsageError("--t must be at least 2");
    }

    auto budget_from(std::optional<std::uint64_t> max_nodes, std::optional<double> timeout) -> magus::SearchBudget
    {
        magus::SearchBudget budget;
        if (max_nodes)
            budget.max_nodes = *max_nodes;
        budget.wall_clock_limit = timeout;
        return budget;
    }

    auto parse_t_list(const string & text) -> std::vector<size_t>
    {
        std::vector<size_t> result;
        std::istringstream in{text};
        string item;
        while (std::getline(in, item, ',')) {
            try {
                size_t pos = 0;
                auto value = std::stoul(item, &pos);
                if (pos != item.size())
                    throw std::invalid_argument(item);
                require_t(value);
                result.push_back(value);
            }
            catch (const std::logic_error &) {
                throw UsageError("bad --t list '" + text + "'");
            }
        }
        if (result.empty())
            throw UsageError("empty --t list");
        return result;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Distance magic labellings of generalised Mycielskian graphs"};
    app.require_subcommand(1);

    // construct
    auto construct = app.add_subcommand("construct", "Print graph6 of M_t^s(G) and its vertex naming");
    GraphSource construct_source;
    construct_source.add_to(construct);
    size_t construct_t = 0, construct_s = 1;
    construct->add_option("--t", construct_t, "Number of levels (>= 2)")->required();
    construct->add_option("--s", construct_s, "Number of iterations (>= 1)");

    // verify
    auto verify_cmd = app.add_subcommand("verify", "Check a labelling JSON against a graph");
    GraphSource verify_source;
    verify_source.add_to(verify_cmd);
    size_t verify_t = 0;
    string labeling_path;
    verify_cmd->add_option("--t", verify_t, "Verify on M_t of the given graph instead of the graph itself");
    verify_cmd->add_option("--labeling", labeling_path, "Labelling JSON file ('-' for stdin)")->required();

    // decide
    auto decide_cmd = app.add_subcommand("decide", "Decide whether M_t(G) is distance magic");
    GraphSource decide_source;
    decide_source.add_to(decide_cmd);
    size_t decide_t = 0;
    std::optional<std::uint64_t> decide_max_nodes;
    std::optional<double> decide_timeout;
    unsigned decide_threads = 0;
    string dump_system;
    decide_cmd->add_option("--t", decide_t, "Number of levels (>= 2)")->required();
    decide_cmd->add_option("--max-nodes", decide_max_nodes, "Search node budget (default 1e8)");
    decide_cmd->add_option("--timeout-secs", decide_timeout, "Search wall-clock budget");
    decide_cmd->add_option("--threads", decide_threads, "Search threads (default MAGUS_THREADS or all cores)");
    decide_cmd->add_option("--dump-system", dump_system, "Write the reduced linear system of M_t(G) as JSON");

    // census
    auto census_cmd = app.add_subcommand("census", "Decide every graph in a graph6 file for several t");
    string census_path;
    string census_ts = "2,3";
    std::optional<std::uint64_t> census_max_nodes;
    std::optional<double> census_timeout;
    bool census_recheck = false, census_timings = false;
    census_cmd->add_option("file", census_path, "graph6 file, one graph per line ('-' for stdin)")->required();
    census_cmd->add_option("--t", census_ts, "Comma-separated list of t values");
    census_cmd->add_option("--max-nodes", census_max_nodes, "Search node budget per instance");
    census_cmd->add_option("--timeout-secs", census_timeout, "Search wall-clock budget per instance");
    census_cmd->add_flag("--recheck", census_recheck, "Treat the file as a census report and re-check every record");
    census_cmd->add_flag("--timings", census_timings, "Include wall time per record (output is then not reproducible)");

    // label-c4
    auto c4_cmd = app.add_subcommand("label-c4", "Closed-form distance magic labelling of M_t(C_4)");
    size_t c4_t = 0;
    c4_cmd->add_option("--t", c4_t, "Number of levels (>= 2)")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (construct->parsed()) {
            require_t(construct_t);
            auto myc = magus::iterate_mycielskian(construct_source.load(), construct_t, construct_s);
            std::cout << magus::write_graph6(myc.graph()) << "\n" << myc.naming_json().dump() << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto g = verify_source.load();
            if (verify_t != 0) {
                require_t(verify_t);
                g = magus::build_mycielskian(g, verify_t).graph();
            }
            json labels_json;
            try {
                labels_json = json::parse(read_all(labeling_path));
            }
            catch (const json::parse_error & e) {
                throw UsageError(string("labeling JSON: ") + e.what());
            }
            auto f = magus::labeling_from_json(labels_json);
            if (f.size() != g.order())
                throw UsageError("labeling has " + std::to_string(f.size()) + " labels, graph has "
                        + std::to_string(g.order()) + " vertices");
            auto result = magus::verify(g, f);
            json out;
            if (auto magic = std::get_if<magus::Magic>(&result)) {
                out["verdict"] = "Magic";
                out["magic_constant"] = magic->k;
                std::cout << out.dump() << "\n";
                return 0;
            }
            auto & bad = std::get<magus::NotMagic>(result);
            out["verdict"] = "NotMagic";
            out["magic_constant"] = nullptr;
            out["witness"] = {{"a", bad.a}, {"b", bad.b}, {"weight_a", bad.weight_a}, {"weight_b", bad.weight_b}};
            std::cout << out.dump() << "\n";
            return 1;
        }

        if (decide_cmd->parsed()) {
            require_t(decide_t);
            auto base = decide_source.load();
            magus::SearchOptions options;
            options.threads = decide_threads;
            auto inst = magus::Instance::mycielskian(base, decide_t);
            if (! dump_system.empty()) {
                std::ofstream out{dump_system};
                out << magus::to_json(magus::eliminate(magus::build_system(inst.target))).dump(1) << "\n";
            }
            auto decision = magus::decide(base, decide_t, budget_from(decide_max_nodes, decide_timeout), options);
            auto out = magus::to_json(decision.verdict, &inst);
            out["stage"] = magus::stage_name(decision.stage);
            out["nodes"] = decision.nodes;
            out["t"] = decide_t;
            out["graph6"] = magus::write_graph6(base);
            std::cout << out.dump() << "\n";
            if (std::holds_alternative<magus::DistanceMagic>(decision.verdict))
                return 0;
            if (std::holds_alternative<magus::NotDistanceMagic>(decision.verdict))
                return 1;
            return 3;
        }

        if (census_cmd->parsed()) {
            auto text = read_all(census_path);
            if (census_recheck) {
                std::istringstream in{text};
                auto report = magus::recheck_census(in);
                for (auto & m : report.messages)
                    std::cerr << m << "\n";
                std::cout << json{{"checked", report.checked}, {"failures", report.failures}}.dump() << "\n";
                return report.failures == 0 ? 0 : 1;
            }

            magus::CensusOptions options;
            options.ts = parse_t_list(census_ts);
            options.budget = budget_from(census_max_nodes, census_timeout);
            options.timings = census_timings;
            std::vector<string> lines;
            std::istringstream in{text};
            for (string line; std::getline(in, line); )
                lines.push_back(line);
            auto records = magus::run_census(lines, options);
            for (auto & r : records)
                std::cout << magus::to_json(r, census_timings).dump() << "\n";
            std::cerr << magus::summary_table(records);
            return 0;
        }

        if (c4_cmd->parsed()) {
            require_t(c4_t);
            auto f = magus::c4_labeling(c4_t);
            auto g = magus::build_mycielskian(magus::generate(magus::FamilySpec::cycle(4)), c4_t).graph();
            auto result = magus::verify(g, f);
            auto magic = std::get_if<magus::Magic>(&result);
            std::cout << magus::labeling_json(f, magic ? std::optional<magus::Weight>{magic->k} : std::nullopt).dump() << "\n";
            return magic ? 0 : 1;
        }
    }
    catch (const UsageError & e) {
        std::cerr << "magus: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const magus::Graph6Error & e) {
        std::cerr << "magus: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "magus: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "magus: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
