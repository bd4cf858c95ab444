#include "support/reference.hpp"

#include <magus/graph.hpp>
#include <magus/graph6.hpp>

#include <doctest.h>

#include <fstream>
#include <random>
#include <string>

using namespace magus;

namespace
{
    // Hand encoder: upper-triangle bits column by column, six per byte, plus 63.
    auto encode_by_hand(std::size_t n, const std::vector<Edge> & edges) -> std::string
    {
        auto adjacent = [&] (Vertex i, Vertex j) {
            for (auto [a, b] : edges)
                if ((a == i && b == j) || (a == j && b == i))
                    return true;
            return false;
        };
        std::string bits;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                bits += adjacent(i, j) ? '1' : '0';
        while (bits.size() % 6 != 0)
            bits += '0';
        std::string out(1, static_cast<char>(63 + n));
        for (std::size_t i = 0; i < bits.size(); i += 6)
            out += static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2));
        return out;
    }

    auto all_family_graphs(std::size_t max_n) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (std::size_t n = 1; n <= max_n; ++n) {
            result.push_back(generate(FamilySpec::path(n)));
            result.push_back(generate(FamilySpec::complete(n)));
            result.push_back(generate(FamilySpec::empty(n)));
            if (n >= 3)
                result.push_back(generate(FamilySpec::cycle(n)));
            if (n >= 4)
                result.push_back(generate(FamilySpec::wheel(n - 1)));
            for (std::size_t m = 1; m < n; ++m)
                result.push_back(generate(FamilySpec::complete_bipartite(m, n - m)));
        }
        return result;
    }
}

TEST_CASE("graph construction rejects loops and bad endpoints")
{
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
    std::vector<Edge> twice{{0, 1}, {1, 0}, {0, 1}};
    Graph g{2, twice};
    CHECK(g.size() == 1);
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("bitsets across word boundaries")
{
    std::vector<Edge> edges{{0, 64}, {63, 64}, {64, 129}};
    Graph g{130, edges};
    CHECK(g.has_edge(64, 0));
    CHECK(g.degree(64) == 3);
    CHECK(g.neighbours(64) == std::vector<Vertex>{0, 63, 129});
    CHECK(sym_diff_size(g, 0, 63) == 0);
    CHECK(sym_diff_size(g, 0, 129) == 0);
    CHECK(sym_diff_size(g, 0, 64) == 4);
}

TEST_CASE("graph6 decoding")
{
    auto k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    auto k4 = parse_graph6("C~");
    CHECK(k4 == generate(FamilySpec::complete(4)));
    CHECK(encode_by_hand(4, k4.edges()) == "C~");

    auto c4 = parse_graph6("Cl");
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(encode_by_hand(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}) == "Cl");

    CHECK(parse_graph6(">>graph6<<Cl") == c4);
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 encoding matches the hand encoder")
{
    CHECK(write_graph6(Graph{1, {}}) == "@");
    CHECK(write_graph6(generate(FamilySpec::cycle(4))) == "Cl");
    for (auto & g : all_family_graphs(8))
        CHECK(write_graph6(g) == encode_by_hand(g.order(), g.edges()));
}

TEST_CASE("graph6 round trip over families up to 8 vertices")
{
    for (auto & g : all_family_graphs(8))
        CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("graph6 round trip on random graphs including long headers")
{
    std::mt19937 rng{12345};
    for (std::size_t n : {0u, 1u, 2u, 17u, 62u, 63u, 64u, 65u, 200u, 300u}) {
        std::vector<Edge> edges;
        std::bernoulli_distribution coin{0.3};
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (coin(rng))
                    edges.emplace_back(i, j);
        Graph g{n, edges};
        auto text = write_graph6(g);
        if (n >= 63)
            CHECK(text[0] == '~');
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 errors name the byte offset")
{
    auto offset_of = [] (const std::string & text) -> long {
        try {
            parse_graph6(text);
        }
        catch (const Graph6Error & e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(" Cl") == 0);
    CHECK(offset_of("C") == 1);           // body missing
    CHECK(offset_of("Cl~") == 2);         // trailing byte
    CHECK(offset_of("C\x7f") == 1);       // byte out of range
    CHECK(offset_of("Bx") == 1);          // n = 3 uses 3 bits, so the low padding bit must be 0
    CHECK(offset_of("~?") >= 1);          // truncated long header
}

TEST_CASE("families")
{
    CHECK(degree_sequence(generate(FamilySpec::cycle(4))) == std::vector<std::size_t>{2, 2, 2, 2});
    auto w4 = generate(FamilySpec::wheel(4));
    CHECK(w4.order() == 5);
    CHECK(degree_sequence(w4) == std::vector<std::size_t>{3, 3, 3, 3, 4});
    CHECK(degree_sequence(generate(FamilySpec::wheel(3))) == degree_sequence(generate(FamilySpec::complete(4))));
    CHECK(reference::isomorphic(generate(FamilySpec::wheel(3)), generate(FamilySpec::complete(4))));
    CHECK(reference::isomorphic(generate(FamilySpec::complete_bipartite(2, 2)), generate(FamilySpec::cycle(4))));

    auto k23 = generate(FamilySpec::complete_bipartite(2, 3));
    CHECK(k23.size() == 6);
    CHECK(k23.has_edge(0, 2));
    CHECK_FALSE(k23.has_edge(0, 1));

    CHECK_THROWS_AS(generate(FamilySpec::wheel(2)), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec::path(0)), std::invalid_argument);
}

TEST_CASE("family names parse")
{
    CHECK(generate(parse_family("p5")) == generate(FamilySpec::path(5)));
    CHECK(generate(parse_family("c4")) == generate(FamilySpec::cycle(4)));
    CHECK(generate(parse_family("k4")) == generate(FamilySpec::complete(4)));
    CHECK(generate(parse_family("w4")) == generate(FamilySpec::wheel(4)));
    CHECK(generate(parse_family("k33")) == generate(FamilySpec::complete_bipartite(3, 3)));
    CHECK(generate(parse_family("k2,5")) == generate(FamilySpec::complete_bipartite(2, 5)));
    CHECK(generate(parse_family("k3x4")) == generate(FamilySpec::complete_bipartite(3, 4)));
    CHECK(generate(parse_family("complete:12")) == generate(FamilySpec::complete(12)));
    CHECK(generate(parse_family("k2")) == generate(FamilySpec::complete(2)));
    CHECK_THROWS(parse_family("q7"));
    CHECK_THROWS(parse_family("c"));
    for (auto spec : {FamilySpec::path(3), FamilySpec::wheel(5), FamilySpec::complete_bipartite(2, 3)})
        CHECK(generate(parse_family(family_name(spec))) == generate(spec));
}

TEST_CASE("neighbourhood measures")
{
    auto c5 = generate(FamilySpec::cycle(5));
    CHECK(sym_diff_size(c5, 0, 3) == 2);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(sym_diff_size(c5, v, v) == 0);
    for (std::size_t n = 2; n <= 9; ++n) {
        auto k = generate(FamilySpec::complete(n));
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                CHECK(sym_diff_size(k, a, b) == 2);
    }
    CHECK(min_degree(generate(FamilySpec::path(3))) == 1);
    for (std::size_t n = 3; n <= 10; ++n)
        CHECK(is_regular(generate(FamilySpec::cycle(n))) == std::optional<std::size_t>{2});
    CHECK_FALSE(is_regular(generate(FamilySpec::wheel(4))));
    CHECK(max_degree(generate(FamilySpec::wheel(6))) == 6);
}

TEST_CASE("sym_diff_size agrees with a set computation on random graphs")
{
    std::mt19937 rng{7};
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 70;
        std::vector<Edge> edges;
        std::bernoulli_distribution coin{0.2};
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (coin(rng))
                    edges.emplace_back(i, j);
        Graph g{n, edges};
        Vertex a = rng() % n, b = rng() % n;
        std::size_t expected = 0;
        for (Vertex x = 0; x < n; ++x)
            expected += g.has_edge(a, x) != g.has_edge(b, x);
        CHECK(sym_diff_size(g, a, b) == expected);
    }
}

TEST_CASE("connectivity and the shipped catalog")
{
    CHECK(is_connected(generate(FamilySpec::path(6))));
    CHECK_FALSE(is_connected(generate(FamilySpec::empty(2))));
    CHECK(is_connected(Graph{1, {}}));

    std::vector<std::size_t> counts{1, 1, 2, 6, 21};
    for (int n = 1; n <= 5; ++n)
        CHECK(reference::nonisomorphic(n, true).size() == counts[n - 1]);

    std::ifstream in{MAGUS_DATA_DIR "/connected_upto5.g6"};
    REQUIRE(in);
    std::vector<Graph> shipped;
    for (std::string line; std::getline(in, line); )
        shipped.push_back(parse_graph6(line));
    CHECK(shipped == reference::connected_catalog(5));
}
