#include <magus/criteria.hpp>
#include <magus/decide.hpp>
#include <magus/linear_prover.hpp>
#include <magus/mycielskian.hpp>

#include <stdexcept>

namespace magus
{
    auto stage_name(Stage s) -> std::string
    {
        switch (s) {
            case Stage::Criteria: return "criteria";
            case Stage::Prover: return "prover";
            case Stage::Search: return "search";
        }
        return "?";
    }

    namespace
    {
        auto by_search_and_prover(const Graph & g, const SearchBudget & budget, const SearchOptions & options) -> Decision
        {
            if (auto cert = prove_not_magic(g))
                return {NotDistanceMagic{*cert}, Stage::Prover, 0};

            auto outcome = search_labeling(g, budget, options);
            if (auto found = std::get_if<Found>(&outcome))
                return {DistanceMagic{found->labeling, found->k}, Stage::Search, found->nodes};
            if (auto none = std::get_if<ProvedNone>(&outcome))
                return {NotDistanceMagic{Exhausted{none->nodes}}, Stage::Search, none->nodes};
            auto & exceeded = std::get<BudgetExceeded>(outcome);
            return {Unknown{exceeded.nodes, exceeded.limit, budget.max_nodes, budget.wall_clock_limit}, Stage::Search, exceeded.nodes};
        }
    }

    auto decide(const Graph & base, std::size_t t, const SearchBudget & budget, const SearchOptions & options) -> Decision
    {
        if (t < 2)
            throw std::invalid_argument("decide needs t >= 2");
        if (auto verdict = decide_by_criteria(base, t))
            return {*verdict, Stage::Criteria, 0};
        return by_search_and_prover(build_mycielskian(base, t).graph(), budget, options);
    }

    auto decide_graph(const Graph & g, const SearchBudget & budget, const SearchOptions & options) -> Decision
    {
        if (auto verdict = decide_graph_by_criteria(g))
            return {*verdict, Stage::Criteria, 0};
        return by_search_and_prover(g, budget, options);
    }
}
