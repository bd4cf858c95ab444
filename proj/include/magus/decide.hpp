#pragma once

#include <magus/certificate.hpp>
#include <magus/graph.hpp>
#include <magus/search.hpp>

#include <cstddef>
#include <string>

namespace magus
{
    enum class Stage
    {
        Criteria,
        Prover,
        Search
    };

    auto stage_name(Stage) -> std::string;

    struct Decision
    {
        Verdict verdict;
        Stage stage;
        std::uint64_t nodes = 0;
    };

    /// Is M_t(base) distance magic? Criteria first, then the linear prover, then search.
    /// Throws std::invalid_argument for t < 2.
    auto decide(const Graph & base, std::size_t t, const SearchBudget & budget = {}, const SearchOptions & options = {}) -> Decision;

    /// The same pipeline for g itself.
    auto decide_graph(const Graph & g, const SearchBudget & budget = {}, const SearchOptions & options = {}) -> Decision;
}
