#pragma once

#include <magus/certificate.hpp>
#include <magus/graph.hpp>
#include <magus/mycielskian.hpp>

#include <cstddef>
#include <optional>

namespace magus
{
    /// First pair (a < b, lexicographic) with |N(a) xor N(b)| in {1, 2}.
    auto find_sd_certificate(const Graph & g) -> std::optional<Certificate>;

    /// First base pair with |N(a) xor N(b)| == 2; rules out M_t(base) for every t >= 2.
    auto lifted_sd_certificate(const Graph & base) -> std::optional<Certificate>;

    /// Lowest-index base vertex of degree 1.
    auto min_degree_certificate(const Graph & base) -> std::optional<Certificate>;

    auto odd_regular_certificate(const Graph & g) -> std::optional<Certificate>;

    auto myc_regularity_certificate(const MycGraph & myc) -> std::optional<Certificate>;

    /// Fires when r (n + 1) > 2 t n + 2: then n f(u) = r * sum f(x, t-1) has no solution
    /// with f(u) <= t n + 1 and the level t-1 labels at least 1..n.
    auto regular_bound_check(std::size_t r, std::size_t n, std::size_t t) -> std::optional<Certificate>;

    /// Order: min degree, lifted symmetric difference, regular M_t, odd-regular M_t,
    /// regular-base bound, symmetric difference in M_t itself.
    auto decide_by_criteria(const Graph & base, std::size_t t) -> std::optional<Verdict>;

    /// The same idea for a graph on its own: odd regularity, then symmetric difference.
    auto decide_graph_by_criteria(const Graph & g) -> std::optional<Verdict>;
}
