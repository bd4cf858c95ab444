#include "support/reference.hpp"

#include <magus/census.hpp>
#include <magus/graph6.hpp>

#include <doctest.h>

#include <sstream>

using namespace magus;

namespace
{
    auto lines_of(const std::vector<Graph> & graphs) -> std::vector<std::string>
    {
        std::vector<std::string> lines;
        for (auto & g : graphs)
            lines.push_back(write_graph6(g));
        return lines;
    }

    auto report(const std::vector<CensusRecord> & records) -> std::string
    {
        std::string out;
        for (auto & r : records)
            out += to_json(r).dump() + "\n";
        return out;
    }

    auto options_for(std::vector<std::size_t> ts, unsigned workers = 1) -> CensusOptions
    {
        CensusOptions options;
        options.ts = std::move(ts);
        options.workers = workers;
        return options;
    }
}

TEST_CASE("connected graphs on four vertices at t = 3")
{
    auto graphs = reference::nonisomorphic(4, true);
    REQUIRE(graphs.size() == 6);
    auto records = run_census(lines_of(graphs), options_for({3}));
    REQUIRE(records.size() == 6);
    int magic = 0;
    for (auto & r : records) {
        CHECK(r.t == 3);
        if (std::holds_alternative<DistanceMagic>(r.mycielskian->verdict)) {
            ++magic;
            CHECK(reference::isomorphic(parse_graph6(r.graph6), generate(FamilySpec::cycle(4))));
        }
    }
    CHECK(magic == 1);
}

TEST_CASE("a distance magic base need not give a distance magic Mycielskian")
{
    auto records = run_census(lines_of({generate(FamilySpec::path(3)), generate(FamilySpec::cycle(4))}), options_for({3}));
    REQUIRE(records.size() == 2);
    CHECK(std::holds_alternative<DistanceMagic>(records[0].base->verdict));
    CHECK(std::holds_alternative<NotDistanceMagic>(records[0].mycielskian->verdict));
    CHECK(std::holds_alternative<DistanceMagic>(records[1].base->verdict));
    CHECK(std::holds_alternative<DistanceMagic>(records[1].mycielskian->verdict));
    auto table = summary_table(records);
    CHECK(table.find("t-independent") != std::string::npos);
}

TEST_CASE("empty input, blank lines and parse errors")
{
    CHECK(run_census({}, options_for({2})).empty());
    auto records = run_census({"", "Cl", "   ", "C", "Bw"}, options_for({2, 3}));
    REQUIRE(records.size() == 5);
    CHECK(records[0].line == 2);
    CHECK(records[1].t == 3);
    CHECK(records[2].line == 4);
    CHECK(records[2].error);
    CHECK(to_json(records[2]).contains("error"));
    CHECK(records[3].graph6 == "Bw");
    CHECK_THROWS_AS(run_census({"Cl"}, options_for({1})), std::invalid_argument);
}

TEST_CASE("worker count does not change the report")
{
    auto lines = lines_of(reference::connected_catalog(4));
    auto serial = report(run_census(lines, options_for({2, 3}, 1)));
    auto pooled = report(run_census(lines, options_for({2, 3}, 4)));
    CHECK(serial == pooled);
}

TEST_CASE("reports recheck")
{
    auto lines = lines_of(reference::connected_catalog(4));
    auto text = report(run_census(lines, options_for({2, 3})));
    std::istringstream in{text};
    auto ok = recheck_census(in);
    CHECK(ok.checked == 2 * lines.size());
    CHECK(ok.failures == 0);

    // claim a magic labelling for M_2(P_3) that is not one
    auto wrong = nlohmann::json::parse(report(run_census({"Cl"}, options_for({2}))));
    wrong["graph6"] = "Bo";
    std::istringstream bad{wrong.dump() + "\nnot json\n"};
    auto failed = recheck_census(bad);
    CHECK(failed.failures >= 2);
    CHECK_FALSE(failed.messages.empty());
}

TEST_CASE("timings are opt in")
{
    auto records = run_census({"Cl"}, options_for({2}));
    CHECK_FALSE(to_json(records[0]).contains("seconds"));
    CHECK(to_json(records[0], true).contains("seconds"));
}
