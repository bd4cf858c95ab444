#pragma once

#include <magus/certificate.hpp>
#include <magus/graph.hpp>
#include <magus/labeling.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace magus
{
    inline constexpr std::uint64_t default_max_nodes = 100'000'000;

    struct SearchBudget
    {
        std::optional<std::uint64_t> max_nodes = default_max_nodes;
        std::optional<double> wall_clock_limit;
    };

    struct SearchOptions
    {
        /// Labels increase along each false-twin class.
        bool symmetry_breaking = true;
        /// Weight intervals, the degree-weighted sum bound, forced labels and domain filtering.
        /// With this off only completed neighbourhoods are compared.
        bool pruning = true;
        /// 1 is the serial reference; 0 means default_thread_count().
        unsigned threads = 1;
    };

    struct Found
    {
        Labeling labeling;
        Weight k;
        std::uint64_t nodes;
    };

    struct ProvedNone
    {
        std::uint64_t nodes;
    };

    struct BudgetExceeded
    {
        std::uint64_t nodes;
        BudgetLimit limit;
    };

    using SearchOutcome = std::variant<Found, ProvedNone, BudgetExceeded>;

    /// Classes of vertices with identical open neighbourhoods, each sorted, ordered by first member.
    auto twin_classes(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// Depth-first search over labellings. Nodes count branching decisions; forced labels are free.
    ///
    /// The parallel mode splits the tree at a shallow frontier and merges subtree results in
    /// depth-first order, so the outcome (including node counts) equals the serial one except
    /// when a wall-clock limit fires.
    auto search_labeling(const Graph & g, const SearchBudget & budget = {}, const SearchOptions & options = {}) -> SearchOutcome;

    /// MAGUS_THREADS when set and positive, otherwise the OpenMP default.
    auto default_thread_count() -> unsigned;
}
