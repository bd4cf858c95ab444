#pragma once

#include <magus/decide.hpp>

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace magus
{
    struct CensusOptions
    {
        std::vector<std::size_t> ts{2, 3};
        SearchBudget budget;
        /// Worker pool size; 0 means default_thread_count().
        unsigned workers = 0;
        bool timings = false;
    };

    /// One (graph, t) row, or a parse failure for an input line.
    struct CensusRecord
    {
        std::size_t line = 0;
        std::string graph6;
        std::optional<std::string> error;
        std::size_t n = 0, m = 0, t = 0;
        std::optional<Decision> base;
        std::optional<Decision> mycielskian;
        double seconds = 0;
    };

    /// Blank lines are skipped; every other line yields one record per t (or one error record).
    /// Records come back in input order whatever the worker count.
    auto run_census(const std::vector<std::string> & lines, const CensusOptions & options) -> std::vector<CensusRecord>;

    auto to_json(const CensusRecord & record, bool timings = false) -> nlohmann::json;

    /// Human-readable counts per t and verdict, plus the base-versus-M_t cross table.
    auto summary_table(const std::vector<CensusRecord> & records) -> std::string;

    struct RecheckReport
    {
        std::size_t checked = 0;
        std::size_t failures = 0;
        std::vector<std::string> messages;
    };

    /// Re-verifies every stored labelling and re-checks every stored certificate of a JSON-lines report.
    auto recheck_census(std::istream & report) -> RecheckReport;
}
