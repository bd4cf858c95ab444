#include <magus/mycielskian.hpp>

#include <stdexcept>

using std::size_t;
using std::vector;

namespace magus
{
    auto MycGraph::index(const MycVertex & v) const -> Vertex
    {
        if (auto l = std::get_if<Level>(&v))
            return index(l->base_vertex, l->level);
        return apex();
    }

    auto MycGraph::name(Vertex index) const -> MycVertex
    {
        if (index == apex())
            return Apex{};
        return Level{static_cast<Vertex>(index % _base_n), index / _base_n};
    }

    auto MycGraph::label(Vertex index) const -> std::string
    {
        auto v = name(index);
        if (auto l = std::get_if<Level>(&v))
            return "x" + std::to_string(l->base_vertex) + "@" + std::to_string(l->level);
        return "u";
    }

    auto MycGraph::naming_json() const -> nlohmann::json
    {
        auto result = nlohmann::json::object();
        for (Vertex v = 0; v < _graph.order(); ++v)
            result[std::to_string(v)] = label(v);
        return result;
    }

    auto build_mycielskian(const Graph & base, size_t t) -> MycGraph
    {
        if (t == 0)
            throw std::invalid_argument("Mycielskian needs t >= 1");

        auto n = base.order();
        auto at = [n] (Vertex x, size_t level) { return static_cast<Vertex>(level * n + x); };
        auto apex = static_cast<Vertex>(t * n);

        vector<Edge> edges;
        auto base_edges = base.edges();
        edges.reserve((2 * t - 1) * base_edges.size() + n);
        for (auto [x, y] : base_edges) {
            edges.emplace_back(at(x, 0), at(y, 0));
            for (size_t i = 0; i + 1 < t; ++i) {
                edges.emplace_back(at(x, i), at(y, i + 1));
                edges.emplace_back(at(y, i), at(x, i + 1));
            }
        }
        for (Vertex x = 0; x < n; ++x)
            edges.emplace_back(at(x, t - 1), apex);

        return MycGraph{Graph{t * n + 1, edges}, n, t};
    }

    auto iterate_mycielskian(const Graph & base, size_t t, size_t s, size_t max_order) -> MycGraph
    {
        if (s == 0)
            throw std::invalid_argument("iteration count must be >= 1");

        size_t order = base.order();
        for (size_t step = 0; step < s; ++step) {
            if (t != 0 && order > (max_order - 1) / t)
                throw std::overflow_error("iterated Mycielskian exceeds " + std::to_string(max_order) + " vertices");
            order = t * order + 1;
        }

        Graph current = base;
        for (size_t step = 1; step < s; ++step)
            current = build_mycielskian(current, t).graph();
        return build_mycielskian(current, t);
    }

    auto expected_degrees(const Graph & base, size_t t) -> vector<size_t>
    {
        if (t < 2)
            throw std::invalid_argument("degree table needs t >= 2");

        auto n = base.order();
        vector<size_t> result(t * n + 1);
        for (Vertex x = 0; x < n; ++x) {
            for (size_t i = 0; i + 1 < t; ++i)
                result[i * n + x] = 2 * base.degree(x);
            result[(t - 1) * n + x] = base.degree(x) + 1;
        }
        result[t * n] = n;
        return result;
    }
}
