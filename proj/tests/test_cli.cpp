#include <magus/graph6.hpp>

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace
{
    struct Run
    {
        int code;
        std::string out;
    };

    auto run(const std::string & args) -> Run
    {
        std::string command = std::string{MAGUS_CLI} + " " + args + " 2>/dev/null";
        auto pipe = ::popen(command.c_str(), "r");
        REQUIRE(pipe);
        std::string out;
        std::array<char, 4096> buffer;
        while (auto n = std::fread(buffer.data(), 1, buffer.size(), pipe))
            out.append(buffer.data(), n);
        int status = ::pclose(pipe);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    auto temp_file(const std::string & name, const std::string & content) -> std::string
    {
        auto path = std::filesystem::temp_directory_path() / ("magus_cli_" + name);
        std::ofstream{path} << content;
        return path.string();
    }

    auto first_json(const std::string & out) -> nlohmann::json
    {
        return nlohmann::json::parse(out.substr(0, out.find('\n')));
    }
}

TEST_CASE("construct")
{
    auto c4 = run("construct --family c4 --t 3");
    CHECK(c4.code == 0);
    CHECK(c4.out.substr(0, 1) == "L");    // 13 vertices
    auto k2 = run("construct --family k2 --t 4");
    CHECK(k2.code == 0);
    auto c9 = magus::parse_graph6(k2.out.substr(0, k2.out.find('\n')));
    CHECK(c9.order() == 9);
    CHECK(magus::is_regular(c9) == std::optional<std::size_t>{2});
    CHECK(magus::is_connected(c9));
    auto p3 = run("construct --family p3 --t 3");
    CHECK(p3.out.substr(0, 1) == "I");    // 10 vertices
    auto naming = nlohmann::json::parse(p3.out.substr(p3.out.find('\n') + 1));
    CHECK(naming["9"] == "u");
    CHECK(run("construct --family c4 --t 1").code == 2);
    CHECK(run("construct --family c4").code == 2);
    CHECK(run("construct --family c4 --graph6 Cl --t 2").code == 2);
    CHECK(run("construct --graph6 C --t 2").code == 2);
}

TEST_CASE("verify")
{
    auto good = temp_file("c4_t3.json", "[1,2,12,11,3,4,10,9,5,6,8,7,13]");
    auto ok = run("verify --family c4 --t 3 --labeling " + good);
    CHECK(ok.code == 0);
    CHECK(first_json(ok.out)["magic_constant"] == 26);

    auto swapped = temp_file("swapped.json", "[2,1,12,11,3,4,10,9,5,6,8,7,13]");
    auto bad = run("verify --family c4 --t 3 --labeling " + swapped);
    CHECK(bad.code == 1);
    auto witness = first_json(bad.out)["witness"];
    CHECK(witness["a"] == 0);
    CHECK(witness["b"] == 1);
    CHECK(witness["weight_a"] == 25);       // 1 + 11 + 4 + 9
    CHECK(witness["weight_b"] == 27);       // 2 + 12 + 3 + 10

    auto short_file = temp_file("short.json", "[1,2,3]");
    CHECK(run("verify --family c4 --t 3 --labeling " + short_file).code == 2);
    auto broken = temp_file("broken.json", "[1,2,");
    CHECK(run("verify --family c4 --labeling " + broken).code == 2);
    CHECK(run("verify --family c4 --labeling /nonexistent/file").code == 2);
}

TEST_CASE("decide")
{
    auto c4 = run("decide --family c4 --t 5");
    CHECK(c4.code == 0);
    CHECK(first_json(c4.out)["magic_constant"] == 42);

    auto w4 = run("decide --family w4 --t 3");
    CHECK(w4.code == 1);
    CHECK(first_json(w4.out)["certificate"]["type"] == "ForcedEquality");

    auto k33 = run("decide --family k33 --t 3");
    CHECK(k33.code == 1);
    CHECK(first_json(k33.out)["verdict"] == "NotDistanceMagic");

    auto budget = run("decide --family c4 --t 3 --max-nodes 3");
    CHECK(budget.code == 3);
    CHECK(first_json(budget.out)["verdict"] == "Unknown");

    auto dump = std::filesystem::temp_directory_path() / "magus_cli_system.json";
    CHECK(run("decide --family w4 --t 3 --dump-system " + dump.string()).code == 1);
    std::ifstream in{dump};
    CHECK(nlohmann::json::parse(in).contains("rows"));

    CHECK(run("decide --family c4 --t 0").code == 2);
    CHECK(run("decide --family zz --t 2").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("census and label-c4")
{
    auto input = temp_file("census.g6", "Bo\nCl\n");
    auto census = run("census " + input + " --t 2,3");
    CHECK(census.code == 0);
    CHECK(std::count(census.out.begin(), census.out.end(), '\n') == 4);
    auto report = temp_file("census.jsonl", census.out);
    auto again = run("census --recheck " + report);
    CHECK(again.code == 0);
    CHECK(first_json(again.out)["failures"] == 0);

    auto empty = temp_file("empty.g6", "");
    auto none = run("census " + empty);
    CHECK(none.code == 0);
    CHECK(none.out.empty());
    CHECK(run("census " + input + " --t 1").code == 2);

    auto c4 = run("label-c4 --t 3");
    CHECK(c4.code == 0);
    auto j = first_json(c4.out);
    CHECK(j["labels"] == nlohmann::json::parse("[1,2,12,11,3,4,10,9,5,6,8,7,13]"));
    CHECK(j["magic_constant"] == 26);
}
