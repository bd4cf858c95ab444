#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magus
{
    using Vertex = std::uint32_t;
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per vertex.
    ///
    /// Values are immutable once built. Connectivity is not required.
    class Graph
    {
        public:
            Graph() = default;

            /// Throws std::invalid_argument on loops or out-of-range endpoints. Duplicate edges collapse.
            Graph(std::size_t n, std::span<const Edge> edges);

            auto order() const -> std::size_t { return _n; }
            auto size() const -> std::size_t { return _edge_count; }

            auto has_edge(Vertex a, Vertex b) const -> bool
            {
                return (_bits[a * _words + b / 64] >> (b % 64)) & 1u;
            }

            auto degree(Vertex v) const -> std::size_t { return _degree[v]; }

            /// Raw bitset words of N(v).
            auto neighbour_bits(Vertex v) const -> std::span<const std::uint64_t>
            {
                return {_bits.data() + v * _words, _words};
            }

            auto neighbours(Vertex v) const -> std::vector<Vertex>;

            auto edges() const -> std::vector<Edge>;

            auto operator== (const Graph &) const -> bool = default;

        private:
            std::size_t _n = 0;
            std::size_t _words = 0;
            std::size_t _edge_count = 0;
            std::vector<std::uint64_t> _bits;
            std::vector<std::size_t> _degree;
    };

    /// |N(a) xor N(b)| over open neighbourhoods.
    auto sym_diff_size(const Graph & g, Vertex a, Vertex b) -> std::size_t;

    auto min_degree(const Graph & g) -> std::size_t;
    auto max_degree(const Graph & g) -> std::size_t;

    /// r when every vertex has degree r; none otherwise (and for the empty graph).
    auto is_regular(const Graph & g) -> std::optional<std::size_t>;

    /// Degrees sorted ascending.
    auto degree_sequence(const Graph & g) -> std::vector<std::size_t>;

    auto is_connected(const Graph & g) -> bool;

    enum class Family
    {
        Path,
        Cycle,
        Complete,
        CompleteBipartite,
        Wheel,
        Empty
    };

    struct FamilySpec
    {
        Family family;
        std::size_t n = 0;
        std::size_t m = 0;     // first part of K_{m,n}; unused otherwise

        static auto path(std::size_t n) -> FamilySpec { return {Family::Path, n, 0}; }
        static auto cycle(std::size_t n) -> FamilySpec { return {Family::Cycle, n, 0}; }
        static auto complete(std::size_t n) -> FamilySpec { return {Family::Complete, n, 0}; }
        static auto complete_bipartite(std::size_t m, std::size_t n) -> FamilySpec { return {Family::CompleteBipartite, n, m}; }
        static auto wheel(std::size_t rim) -> FamilySpec { return {Family::Wheel, rim, 0}; }
        static auto empty(std::size_t n) -> FamilySpec { return {Family::Empty, n, 0}; }
    };

    /// Canonical orders: paths and cycles along the walk, K_{m,n} first part first,
    /// wheels rim 0..n-1 then centre n.
    ///
    /// Throws std::invalid_argument for non-positive parameters, cycles shorter than 3
    /// and wheels with rim shorter than 3.
    auto generate(const FamilySpec & spec) -> Graph;

    /// Parses short names: p5, c4, k4, w4, e3, k3,3 / k3x3, the two-digit shorthand k33,
    /// and long forms path:5, cycle:4, complete:12, bipartite:3,3, wheel:4, empty:3.
    auto parse_family(const std::string & text) -> FamilySpec;

    auto family_name(const FamilySpec & spec) -> std::string;
}
