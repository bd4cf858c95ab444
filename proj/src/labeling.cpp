#include <magus/labeling.hpp>

#include <bit>
#include <string>

using std::size_t;
using std::vector;

namespace magus
{
    Labeling::Labeling(vector<Label> values) :
        _values(std::move(values))
    {
        vector<char> seen(_values.size() + 1, 0);
        for (size_t v = 0; v < _values.size(); ++v) {
            auto l = _values[v];
            if (l < 1 || static_cast<size_t>(l) > _values.size())
                throw LabelingError("label " + std::to_string(l) + " at vertex " + std::to_string(v)
                        + " outside 1.." + std::to_string(_values.size()));
            if (seen[l])
                throw LabelingError("label " + std::to_string(l) + " used twice");
            seen[l] = 1;
        }
    }

    auto weight(const Graph & g, const Labeling & f, Vertex v) -> Weight
    {
        Weight sum = 0;
        auto row = g.neighbour_bits(v);
        for (size_t w = 0; w < row.size(); ++w)
            for (auto word = row[w]; word; word &= word - 1)
                sum += f[static_cast<Vertex>(w * 64 + std::countr_zero(word))];
        return sum;
    }

    auto verify(const Graph & g, const Labeling & f) -> VerifyResult
    {
        if (f.size() != g.order())
            throw LabelingError("labeling has " + std::to_string(f.size()) + " labels for "
                    + std::to_string(g.order()) + " vertices");
        if (g.order() == 0)
            return Magic{0};

        auto k = weight(g, f, 0);
        for (Vertex v = 1; v < g.order(); ++v)
            if (auto w = weight(g, f, v); w != k)
                return NotMagic{0, v, k, w};
        return Magic{k};
    }

    auto weight_sum_identity(const Graph & g, const Labeling & f, Weight k) -> bool
    {
        Weight sum = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            sum += static_cast<Weight>(g.degree(v)) * f[v];
        return sum == k * static_cast<Weight>(g.order());
    }

    auto c4_labeling(size_t t) -> Labeling
    {
        if (t == 0)
            throw std::invalid_argument("c4 labelling needs t >= 1");

        auto T = static_cast<Label>(t);
        vector<Label> values(4 * t + 1);
        for (size_t level = 0; level < t; ++level) {
            auto j = static_cast<Label>(level);
            values[4 * level + 0] = 2 * j + 1;
            values[4 * level + 1] = 2 * j + 2;
            values[4 * level + 2] = 4 * T - 2 * j;
            values[4 * level + 3] = 4 * T - 2 * j - 1;
        }
        values[4 * t] = 4 * T + 1;
        return Labeling{std::move(values)};
    }

    auto labeling_json(const Labeling & f, std::optional<Weight> k) -> nlohmann::json
    {
        nlohmann::json j;
        j["n"] = f.size();
        j["labels"] = f.values();
        j["magic_constant"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
        return j;
    }

    auto labeling_from_json(const nlohmann::json & j) -> Labeling
    {
        const nlohmann::json * labels = &j;
        if (j.is_object()) {
            if (! j.contains("labels"))
                throw LabelingError("labeling JSON has no \"labels\" field");
            labels = &j.at("labels");
        }
        if (! labels->is_array())
            throw LabelingError("labels must be an array");

        vector<Label> values;
        for (auto & item : *labels) {
            if (! item.is_number_integer())
                throw LabelingError("labels must be integers");
            values.push_back(item.get<Label>());
        }
        if (j.is_object() && j.contains("n") && j.at("n").get<size_t>() != values.size())
            throw LabelingError("\"n\" does not match the number of labels");
        return Labeling{std::move(values)};
    }
}
