#pragma once

#include <magus/graph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include <json.hpp>

namespace magus
{
    using Label = std::int64_t;
    using Weight = std::int64_t;

    /// Bijection from vertex indices onto {1..N}. Construction checks bijectivity.
    class Labeling
    {
        public:
            explicit Labeling(std::vector<Label> values);

            auto size() const -> std::size_t { return _values.size(); }
            auto operator[] (Vertex v) const -> Label { return _values[v]; }
            auto values() const -> const std::vector<Label> & { return _values; }

            auto operator== (const Labeling &) const -> bool = default;

        private:
            std::vector<Label> _values;
    };

    class LabelingError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    struct Magic
    {
        Weight k;
    };

    struct NotMagic
    {
        Vertex a, b;
        Weight weight_a, weight_b;
    };

    using VerifyResult = std::variant<Magic, NotMagic>;

    auto weight(const Graph & g, const Labeling & f, Vertex v) -> Weight;

    /// Magic(k) iff every weight equals k; otherwise the lexicographically first unequal pair,
    /// which always has a == 0. Throws LabelingError when sizes differ.
    auto verify(const Graph & g, const Labeling & f) -> VerifyResult;

    /// Sum of deg(v) f(v) over all v equals k N.
    auto weight_sum_identity(const Graph & g, const Labeling & f, Weight k) -> bool;

    /// Closed-form labelling of M_t(C_4) under the MycGraph layout, base cycle 0-1-2-3.
    /// Magic constant 8t + 2.
    auto c4_labeling(std::size_t t) -> Labeling;

    /// {"n": N, "labels": [...], "magic_constant": k | null}
    auto labeling_json(const Labeling & f, std::optional<Weight> k) -> nlohmann::json;

    /// Accepts the object form above or a bare array of labels. Throws LabelingError.
    auto labeling_from_json(const nlohmann::json & j) -> Labeling;
}
