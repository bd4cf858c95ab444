#pragma once

#include <magus/graph.hpp>
#include <magus/labeling.hpp>
#include <magus/mycielskian.hpp>
#include <magus/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace magus
{
    /// The graph a verdict speaks about: M_t(base) for t >= 1, or base itself when t == 0.
    struct Instance
    {
        Graph base;
        std::size_t t = 0;
        Graph target;
        std::optional<MycGraph> myc;

        static auto mycielskian(Graph base, std::size_t t) -> Instance;
        static auto plain(Graph g) -> Instance;
    };

    // Witnesses. Indices refer to the target graph unless the field is named base_*.

    /// |N(a) xor N(b)| in {1, 2} in the target.
    struct SymDiff
    {
        Vertex a, b;
        std::size_t size;
    };

    /// |N(a) xor N(b)| == 2 in the base; lifts to level t-1 of M_t(base) for every t >= 2.
    struct LiftedSymDiff
    {
        Vertex base_a, base_b;
    };

    /// deg(x) == 1 in the base, so (x,0) and (x,1) of M_t(base) differ in exactly two neighbours.
    struct MinDegreeOne
    {
        Vertex base_vertex;
    };

    struct OddRegular
    {
        std::size_t r;
    };

    /// M_t(base) is r-regular; only M_t(K_2), an odd cycle, is.
    struct RegularMycielskian
    {
        std::size_t r;
    };

    /// Base is r-regular on n vertices and r (n + 1) > 2 t n + 2.
    struct RegularBoundViolated
    {
        std::size_t r, n, t;
    };

    /// The vertex equations combined with these row multipliers give f(a) - f(b) = 0.
    /// Rows are ordered as build_system emits them: one per vertex, then the total-sum row.
    struct ForcedEquality
    {
        Vertex a, b;
        std::vector<Rational> multipliers;
    };

    enum class ForcedValueReason
    {
        NonInteger,
        OutOfRange,
        MagicConstantRange
    };

    /// The combination gives variable = value. Variable N is the magic constant.
    struct ForcedValue
    {
        std::size_t variable;
        Rational value;
        ForcedValueReason reason;
        std::vector<Rational> multipliers;
    };

    /// The combination gives a sum of distinct labels over `vertices` equal to a value no set
    /// of that many distinct labels in 1..N can reach. An empty set means 0 = total != 0.
    struct DistinctSumBound
    {
        std::vector<Vertex> vertices;
        Rational total;
        std::vector<Rational> multipliers;
    };

    /// Complete search found nothing.
    struct Exhausted
    {
        std::uint64_t nodes;
    };

    using Certificate = std::variant<SymDiff, LiftedSymDiff, MinDegreeOne, OddRegular, RegularMycielskian,
          RegularBoundViolated, ForcedEquality, ForcedValue, DistinctSumBound, Exhausted>;

    auto certificate_name(const Certificate &) -> std::string;

    /// True for certificates that hold for M_t(base) at every t >= 2 at once.
    auto is_t_independent(const Certificate &) -> bool;

    /// Re-derives the witness from the instance alone. Exhausted certificates re-run the
    /// reference-order search, so they are only cheap on small instances.
    auto recheck(const Certificate &, const Instance &) -> bool;

    auto to_json(const Certificate &, const Instance * naming = nullptr) -> nlohmann::json;
    auto certificate_from_json(const nlohmann::json &) -> Certificate;

    struct DistanceMagic
    {
        Labeling labeling;
        Weight k;
    };

    struct NotDistanceMagic
    {
        Certificate certificate;
    };

    enum class BudgetLimit
    {
        Nodes,
        WallClock
    };

    struct Unknown
    {
        std::uint64_t nodes;
        BudgetLimit limit;
        std::optional<std::uint64_t> max_nodes;
        std::optional<double> wall_clock_limit;
    };

    using Verdict = std::variant<DistanceMagic, NotDistanceMagic, Unknown>;

    auto verdict_tag(const Verdict &) -> std::string;
    auto to_json(const Verdict &, const Instance * naming = nullptr) -> nlohmann::json;
    auto verdict_from_json(const nlohmann::json &) -> Verdict;

    /// DistanceMagic re-verifies, NotDistanceMagic re-checks, Unknown is always accepted.
    auto recheck(const Verdict &, const Instance &) -> bool;
}
