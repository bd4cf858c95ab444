#pragma once

#include <magus/graph.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace magus
{
    struct Level
    {
        Vertex base_vertex;
        std::size_t level;

        auto operator== (const Level &) const -> bool = default;
    };

    struct Apex
    {
        auto operator== (const Apex &) const -> bool = default;
    };

    /// A vertex of M_t(G): either (x, i) or the apex u.
    using MycVertex = std::variant<Level, Apex>;

    /// M_t(G) together with its naming. Layout: (x, i) sits at i * n + x, the apex at t * n.
    class MycGraph
    {
        public:
            MycGraph(Graph graph, std::size_t base_n, std::size_t t) :
                _graph(std::move(graph)), _base_n(base_n), _t(t)
            {
            }

            auto graph() const -> const Graph & { return _graph; }
            auto base_order() const -> std::size_t { return _base_n; }
            auto levels() const -> std::size_t { return _t; }

            auto index(Vertex base_vertex, std::size_t level) const -> Vertex
            {
                return static_cast<Vertex>(level * _base_n + base_vertex);
            }

            auto index(const MycVertex & v) const -> Vertex;
            auto apex() const -> Vertex { return static_cast<Vertex>(_t * _base_n); }
            auto name(Vertex index) const -> MycVertex;

            /// "x3@2" for (3, 2), "u" for the apex.
            auto label(Vertex index) const -> std::string;

            /// {"0": "x0@0", ..., "<apex>": "u"}
            auto naming_json() const -> nlohmann::json;

        private:
            Graph _graph;
            std::size_t _base_n;
            std::size_t _t;
    };

    /// Throws std::invalid_argument when t == 0.
    ///
    /// t == 1 still attaches the apex to level 0, so M_1(G) is G plus a dominating vertex.
    auto build_mycielskian(const Graph & base, std::size_t t) -> MycGraph;

    inline constexpr std::size_t default_max_iterate_order = std::size_t{1} << 20;

    /// M_t applied s times. Throws std::overflow_error if any intermediate order would exceed max_order.
    auto iterate_mycielskian(const Graph & base, std::size_t t, std::size_t s,
            std::size_t max_order = default_max_iterate_order) -> MycGraph;

    /// Degree of every vertex of M_t(G) predicted from the base degrees, indexed like MycGraph.
    /// Requires t >= 2.
    auto expected_degrees(const Graph & base, std::size_t t) -> std::vector<std::size_t>;
}
