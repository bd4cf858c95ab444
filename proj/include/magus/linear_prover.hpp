#pragma once

#include <magus/certificate.hpp>
#include <magus/graph.hpp>
#include <magus/rational.hpp>

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

namespace magus
{
    /// Variables f_0..f_{N-1} (labels) and k at index N. Each row holds N + 1 coefficients
    /// followed by the constant term.
    ///
    /// Rows 0..N-1 are the weight equations sum_{u in N(v)} f_u - k = 0; row N is
    /// sum_v f_v = N (N + 1) / 2, which every bijection onto 1..N satisfies.
    struct LinearSystem
    {
        std::size_t labels = 0;
        std::size_t min_degree = 0;
        std::size_t max_degree = 0;
        std::vector<std::vector<Rational>> rows;

        auto variables() const -> std::size_t { return labels + 1; }
        auto magic_constant() const -> std::size_t { return labels; }
    };

    auto build_system(const Graph & g) -> LinearSystem;

    /// sum_r multipliers[r] * rows[r], coefficients then constant.
    auto combine(const LinearSystem & sys, const std::vector<Rational> & multipliers) -> std::vector<Rational>;

    struct Free
    {
    };

    struct Pinned
    {
        Rational value;
    };

    /// variable = other + offset
    struct EqualTo
    {
        std::size_t other;
        Rational offset;
    };

    using Resolution = std::variant<Free, Pinned, EqualTo>;

    /// Reduced row echelon form of a LinearSystem. transforms[r] expresses echelon row r as a
    /// combination of the original rows, which is what certificates carry.
    struct ReducedSystem
    {
        LinearSystem original;
        std::vector<std::vector<Rational>> rows;
        std::vector<std::size_t> pivots;
        std::vector<std::vector<Rational>> transforms;
        std::optional<std::size_t> inconsistent_row;
        std::vector<Resolution> resolution;

        auto pivot_row(std::size_t variable) const -> std::optional<std::size_t>;
    };

    /// Gauss-Jordan elimination in exact arithmetic. Solution sets are preserved; every
    /// variable whose value or difference to another variable is determined by the system
    /// shows up as Pinned or EqualTo.
    auto eliminate(const LinearSystem & sys) -> ReducedSystem;

    /// Rules, first hit wins:
    ///   - inconsistent system (empty DistinctSumBound);
    ///   - two labels forced equal, scanning pairs from the highest index down;
    ///   - a label pinned to a non-integer or outside 1..N, then k pinned to a non-integer or
    ///     outside [1 + .. + delta, (N - Delta + 1) + .. + N];
    ///   - a derived 0/1-coefficient equation over labels whose constant no set of distinct
    ///     labels can reach, including the vertex equations once k is pinned.
    auto find_contradiction(const ReducedSystem & red) -> std::optional<Certificate>;

    auto prove_not_magic(const Graph & g) -> std::optional<Certificate>;

    /// Rows as "p/q" strings, with pivots and per-variable resolution.
    auto to_json(const ReducedSystem & red) -> nlohmann::json;
}
