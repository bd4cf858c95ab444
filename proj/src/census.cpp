#include <magus/census.hpp>
#include <magus/graph6.hpp>

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include <omp.h>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

namespace magus
{
    namespace
    {
        auto trim(const string & s) -> string
        {
            auto first = s.find_first_not_of(" \t\r\n");
            if (first == string::npos)
                return {};
            auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        auto decision_json(const Decision & d, const Instance * naming) -> json
        {
            auto j = to_json(d.verdict, naming);
            j["stage"] = stage_name(d.stage);
            j["nodes"] = d.nodes;
            return j;
        }

        struct Parsed
        {
            size_t line;
            string text;
            std::optional<Graph> graph;
            string error;
        };
    }

    auto run_census(const vector<string> & lines, const CensusOptions & options) -> vector<CensusRecord>
    {
        for (auto t : options.ts)
            if (t < 2)
                throw std::invalid_argument("census needs every t >= 2");

        vector<Parsed> inputs;
        for (size_t i = 0; i < lines.size(); ++i) {
            auto text = trim(lines[i]);
            if (text.empty())
                continue;
            Parsed p{i + 1, text, std::nullopt, {}};
            try {
                p.graph = parse_graph6(text);
            }
            catch (const Graph6Error & e) {
                p.error = e.what();
            }
            inputs.push_back(std::move(p));
        }

        SearchOptions search;
        search.threads = 1;
        auto workers = static_cast<int>(options.workers == 0 ? default_thread_count() : options.workers);

        vector<std::optional<Decision>> base(inputs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (size_t i = 0; i < inputs.size(); ++i)
            if (inputs[i].graph)
                base[i] = decide_graph(*inputs[i].graph, options.budget, search);

        struct Task
        {
            size_t input;
            size_t record;
        };
        vector<Task> tasks;
        vector<CensusRecord> records;
        for (size_t i = 0; i < inputs.size(); ++i) {
            if (! inputs[i].graph) {
                CensusRecord r;
                r.line = inputs[i].line;
                r.graph6 = inputs[i].text;
                r.error = inputs[i].error;
                records.push_back(std::move(r));
                continue;
            }
            for (auto t : options.ts) {
                CensusRecord r;
                r.line = inputs[i].line;
                r.graph6 = inputs[i].text;
                r.n = inputs[i].graph->order();
                r.m = inputs[i].graph->size();
                r.t = t;
                r.base = base[i];
                records.push_back(std::move(r));
                tasks.push_back({i, records.size() - 1});
            }
        }

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (size_t k = 0; k < tasks.size(); ++k) {
            auto & record = records[tasks[k].record];
            auto start = std::chrono::steady_clock::now();
            record.mycielskian = decide(*inputs[tasks[k].input].graph, record.t, options.budget, search);
            record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        return records;
    }

    auto to_json(const CensusRecord & record, bool timings) -> json
    {
        json j;
        j["line"] = record.line;
        j["graph6"] = record.graph6;
        if (record.error) {
            j["error"] = *record.error;
            return j;
        }
        j["n"] = record.n;
        j["m"] = record.m;
        j["t"] = record.t;
        auto base = Instance::plain(parse_graph6(record.graph6));
        j["base"] = decision_json(*record.base, nullptr);
        auto inst = Instance::mycielskian(base.base, record.t);
        j["mycielskian"] = decision_json(*record.mycielskian, &inst);
        if (timings)
            j["seconds"] = record.seconds;
        return j;
    }

    auto summary_table(const vector<CensusRecord> & records) -> string
    {
        struct Row
        {
            size_t magic = 0, criteria = 0, prover = 0, search = 0, unknown = 0;
            size_t both = 0, base_only = 0, myc_only = 0, neither = 0;
        };
        std::map<size_t, Row> rows;
        size_t errors = 0;

        for (auto & r : records) {
            if (r.error) {
                ++errors;
                continue;
            }
            auto & row = rows[r.t];
            auto & d = *r.mycielskian;
            if (std::holds_alternative<DistanceMagic>(d.verdict))
                ++row.magic;
            else if (std::holds_alternative<Unknown>(d.verdict))
                ++row.unknown;
            else if (d.stage == Stage::Criteria)
                ++row.criteria;
            else if (d.stage == Stage::Prover)
                ++row.prover;
            else
                ++row.search;

            bool g_magic = std::holds_alternative<DistanceMagic>(r.base->verdict);
            bool m_magic = std::holds_alternative<DistanceMagic>(d.verdict);
            if (g_magic && m_magic) ++row.both;
            else if (g_magic) ++row.base_only;
            else if (m_magic) ++row.myc_only;
            else ++row.neither;
        }

        std::ostringstream out;
        out << "  t   magic  not(criteria)  not(prover)  not(search)  unknown | G&M  G-only  M-only  neither\n";
        for (auto & [t, row] : rows) {
            char buffer[160];
            std::snprintf(buffer, sizeof(buffer), "%3zu  %6zu  %13zu  %11zu  %11zu  %7zu | %3zu  %6zu  %6zu  %7zu\n",
                    t, row.magic, row.criteria, row.prover, row.search, row.unknown,
                    row.both, row.base_only, row.myc_only, row.neither);
            out << buffer;
        }
        out << "parse errors: " << errors << "\n";
        out << "t-independent certificates (min degree, lifted symmetric difference) cover every t >= 2;"
            << " other rows hold for the sampled t only.\n";
        return out.str();
    }

    auto recheck_census(std::istream & report) -> RecheckReport
    {
        RecheckReport result;
        string line;
        size_t number = 0;
        while (std::getline(report, line)) {
            ++number;
            if (trim(line).empty())
                continue;
            auto fail = [&] (const string & why) {
                ++result.failures;
                result.messages.push_back("report line " + std::to_string(number) + ": " + why);
            };
            try {
                auto j = json::parse(line);
                if (j.contains("error"))
                    continue;
                ++result.checked;
                auto base = parse_graph6(j.at("graph6").get<string>());
                auto t = j.at("t").get<size_t>();
                if (base.order() != j.at("n").get<size_t>() || base.size() != j.at("m").get<size_t>())
                    fail("n or m does not match graph6");
                if (! recheck(verdict_from_json(j.at("base")), Instance::plain(base)))
                    fail("base verdict does not re-check");
                if (! recheck(verdict_from_json(j.at("mycielskian")), Instance::mycielskian(base, t)))
                    fail("Mycielskian verdict does not re-check");
            }
            catch (const std::exception & e) {
                fail(e.what());
            }
        }
        return result;
    }
}
