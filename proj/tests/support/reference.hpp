#pragma once

// Test-only oracles, deliberately independent of the library's search and prover.

#include <magus/graph.hpp>
#include <magus/graph6.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <omp.h>

namespace reference
{
    using magus::Edge;
    using magus::Graph;
    using magus::Vertex;

    /// Weight of every vertex recomputed from an edge list, no bitsets involved.
    inline auto all_magic(const std::vector<std::vector<Vertex>> & adj, const std::vector<int> & labels, long & k) -> bool
    {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            long w = 0;
            for (auto u : adj[v])
                w += labels[u];
            if (v == 0)
                k = w;
            else if (w != k)
                return false;
        }
        return true;
    }

    inline auto adjacency(const Graph & g) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> adj(g.order());
        for (auto [a, b] : g.edges()) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    /// Every magic constant reachable by some bijection, by walking all N! permutations.
    /// The first label is split across OpenMP threads; threads == 1 is the plain serial loop.
    inline auto magic_constants(const Graph & g, int threads = 1) -> std::set<long>
    {
        auto adj = adjacency(g);
        int n = static_cast<int>(g.order());
        std::set<long> result;
        if (n == 0)
            return {0};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int first = 1; first <= n; ++first) {
            std::vector<int> labels(n);
            labels[0] = first;
            int next = 1;
            for (int l = 1; l <= n; ++l)
                if (l != first)
                    labels[next++] = l;
            std::set<long> local;
            do {
                long k = 0;
                if (all_magic(adj, labels, k))
                    local.insert(k);
            } while (std::next_permutation(labels.begin() + 1, labels.end()));
#pragma omp critical
            result.insert(local.begin(), local.end());
        }
        return result;
    }

    inline auto is_distance_magic(const Graph & g, int threads = 1) -> bool
    {
        return ! magic_constants(g, threads).empty();
    }

    /// Upper-triangle adjacency bits in graph6 column order, packed into an integer.
    inline auto code(const Graph & g, const std::vector<int> & perm) -> std::uint64_t
    {
        std::uint64_t c = 0;
        int n = static_cast<int>(g.order());
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                c = (c << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
        return c;
    }

    inline auto from_code(int n, std::uint64_t c) -> Graph
    {
        std::vector<Edge> edges;
        int bits = n * (n - 1) / 2, bit = bits - 1;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, --bit)
                if ((c >> bit) & 1u)
                    edges.emplace_back(i, j);
        return Graph{static_cast<std::size_t>(n), edges};
    }

    inline auto canonical_code(const Graph & g) -> std::uint64_t
    {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        auto best = code(g, perm);
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::max(best, code(g, perm));
        return best;
    }

    /// One representative per isomorphism class, by brute-force canonical form. n <= 6.
    inline auto nonisomorphic(int n, bool connected_only) -> std::vector<Graph>
    {
        std::set<std::uint64_t> seen;
        std::vector<Graph> result;
        std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t c = 0; c < limit; ++c) {
            auto g = from_code(n, c);
            if (connected_only && ! magus::is_connected(g))
                continue;
            auto canon = canonical_code(g);
            if (seen.insert(canon).second)
                result.push_back(from_code(n, canon));
        }
        return result;
    }

    /// Connected graphs on 1..max_n vertices, ordered by n then canonical code.
    inline auto connected_catalog(int max_n) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (int n = 1; n <= max_n; ++n)
            for (auto & g : nonisomorphic(n, true))
                result.push_back(g);
        return result;
    }

    inline auto is_single_cycle(const Graph & g) -> bool
    {
        auto r = magus::is_regular(g);
        return r && *r == 2 && magus::is_connected(g);
    }

    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
    }
}
