#include <magus/certificate.hpp>
#include <magus/criteria.hpp>
#include <magus/linear_prover.hpp>
#include <magus/search.hpp>

#include <set>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

namespace magus
{
    auto Instance::mycielskian(Graph base, size_t t) -> Instance
    {
        auto myc = build_mycielskian(base, t);
        Instance result{std::move(base), t, myc.graph(), std::nullopt};
        result.myc.emplace(std::move(myc));
        return result;
    }

    auto Instance::plain(Graph g) -> Instance
    {
        Instance result{g, 0, g, std::nullopt};
        return result;
    }

    namespace
    {
        template <typename... Fs>
        struct Overloaded : Fs...
        {
            using Fs::operator()...;
        };

        template <typename... Fs>
        Overloaded(Fs...) -> Overloaded<Fs...>;

        auto reason_name(ForcedValueReason r) -> string
        {
            switch (r) {
                case ForcedValueReason::NonInteger: return "non-integer";
                case ForcedValueReason::OutOfRange: return "out-of-range";
                case ForcedValueReason::MagicConstantRange: return "magic-constant-range";
            }
            return "?";
        }

        auto reason_from_name(const string & s) -> ForcedValueReason
        {
            if (s == "non-integer") return ForcedValueReason::NonInteger;
            if (s == "out-of-range") return ForcedValueReason::OutOfRange;
            if (s == "magic-constant-range") return ForcedValueReason::MagicConstantRange;
            throw std::invalid_argument("unknown forced-value reason '" + s + "'");
        }

        auto rationals_json(const vector<Rational> & v) -> json
        {
            auto j = json::array();
            for (auto & q : v)
                j.push_back(to_string(q));
            return j;
        }

        auto rationals_from_json(const json & j) -> vector<Rational>
        {
            vector<Rational> result;
            for (auto & item : j)
                result.push_back(parse_rational(item.get<string>()));
            return result;
        }

        auto triangular_low(size_t s) -> Rational
        {
            return Rational{BigInt{s} * (s + 1) / 2};
        }

        auto triangular_high(size_t s, size_t labels) -> Rational
        {
            BigInt total = 0;
            for (size_t j = 0; j < s; ++j)
                total += labels - j;
            return Rational{total};
        }

        /// The derived equation with the expected left-hand side, or nothing.
        auto derive(const Instance & inst, const vector<Rational> & multipliers, const vector<Rational> & lhs)
            -> std::optional<Rational>
        {
            auto sys = build_system(inst.target);
            if (multipliers.size() != sys.rows.size())
                return std::nullopt;
            auto row = combine(sys, multipliers);
            for (size_t c = 0; c < lhs.size(); ++c)
                if (row[c] != lhs[c])
                    return std::nullopt;
            return row.back();
        }

        auto needs_myc(const Instance & inst) -> bool
        {
            return inst.t >= 2;
        }
    }

    auto certificate_name(const Certificate & c) -> string
    {
        return std::visit(Overloaded{
            [] (const SymDiff &) -> string { return "SymDiff"; },
            [] (const LiftedSymDiff &) -> string { return "LiftedSymDiff"; },
            [] (const MinDegreeOne &) -> string { return "MinDegreeOne"; },
            [] (const OddRegular &) -> string { return "OddRegular"; },
            [] (const RegularMycielskian &) -> string { return "RegularMycielskian"; },
            [] (const RegularBoundViolated &) -> string { return "RegularBoundViolated"; },
            [] (const ForcedEquality &) -> string { return "ForcedEquality"; },
            [] (const ForcedValue &) -> string { return "ForcedValue"; },
            [] (const DistinctSumBound &) -> string { return "DistinctSumBound"; },
            [] (const Exhausted &) -> string { return "Exhausted"; }
        }, c);
    }

    auto is_t_independent(const Certificate & c) -> bool
    {
        return std::holds_alternative<LiftedSymDiff>(c) || std::holds_alternative<MinDegreeOne>(c);
    }

    auto recheck(const Certificate & cert, const Instance & inst) -> bool
    {
        auto & g = inst.target;
        auto & base = inst.base;
        auto labels = g.order();

        return std::visit(Overloaded{
            [&] (const SymDiff & c) {
                if (c.a >= g.order() || c.b >= g.order() || c.a == c.b)
                    return false;
                auto s = sym_diff_size(g, c.a, c.b);
                return s == c.size && (s == 1 || s == 2);
            },
            [&] (const LiftedSymDiff & c) {
                return needs_myc(inst) && c.base_a < base.order() && c.base_b < base.order()
                    && sym_diff_size(base, c.base_a, c.base_b) == 2;
            },
            [&] (const MinDegreeOne & c) {
                return needs_myc(inst) && c.base_vertex < base.order() && base.degree(c.base_vertex) == 1;
            },
            [&] (const OddRegular & c) {
                auto r = is_regular(g);
                return r && *r == c.r && c.r % 2 == 1;
            },
            [&] (const RegularMycielskian & c) {
                auto r = is_regular(g);
                return needs_myc(inst) && r && *r == c.r;
            },
            [&] (const RegularBoundViolated & c) {
                auto r = is_regular(base);
                return needs_myc(inst) && r && *r == c.r && c.n == base.order() && c.t == inst.t
                    && c.r * (c.n + 1) > 2 * c.t * c.n + 2;
            },
            [&] (const ForcedEquality & c) {
                if (c.a >= labels || c.b >= labels || c.a == c.b)
                    return false;
                vector<Rational> lhs(labels + 1, Rational{0});
                lhs[c.a] = 1;
                lhs[c.b] = -1;
                auto constant = derive(inst, c.multipliers, lhs);
                return constant && *constant == 0;
            },
            [&] (const ForcedValue & c) {
                if (c.variable > labels)
                    return false;
                vector<Rational> lhs(labels + 1, Rational{0});
                lhs[c.variable] = 1;
                auto constant = derive(inst, c.multipliers, lhs);
                if (! constant || *constant != c.value)
                    return false;
                switch (c.reason) {
                    case ForcedValueReason::NonInteger:
                        return ! is_integer(c.value);
                    case ForcedValueReason::OutOfRange:
                        return c.variable < labels && (c.value < 1 || c.value > Rational{BigInt{labels}});
                    case ForcedValueReason::MagicConstantRange:
                        return c.variable == labels && (c.value < triangular_low(min_degree(g))
                                || c.value > triangular_high(max_degree(g), labels));
                }
                return false;
            },
            [&] (const DistinctSumBound & c) {
                std::set<Vertex> members(c.vertices.begin(), c.vertices.end());
                if (members.size() != c.vertices.size())
                    return false;
                vector<Rational> lhs(labels + 1, Rational{0});
                for (auto v : c.vertices) {
                    if (v >= labels)
                        return false;
                    lhs[v] = 1;
                }
                auto constant = derive(inst, c.multipliers, lhs);
                if (! constant || *constant != c.total)
                    return false;
                auto s = c.vertices.size();
                return c.total < triangular_low(s) || c.total > triangular_high(s, labels);
            },
            [&] (const Exhausted & c) {
                auto outcome = search_labeling(g, SearchBudget{c.nodes, std::nullopt});
                auto none = std::get_if<ProvedNone>(&outcome);
                return none && none->nodes == c.nodes;
            }
        }, cert);
    }

    auto to_json(const Certificate & cert, const Instance * naming) -> json
    {
        auto name = [&] (Vertex v) -> json {
            if (naming && naming->myc)
                return naming->myc->label(v);
            return v;
        };

        json j;
        j["type"] = certificate_name(cert);
        std::visit(Overloaded{
            [&] (const SymDiff & c) {
                j["a"] = c.a;
                j["b"] = c.b;
                j["size"] = c.size;
                if (naming && naming->myc) {
                    j["a_name"] = name(c.a);
                    j["b_name"] = name(c.b);
                }
            },
            [&] (const LiftedSymDiff & c) { j["base_a"] = c.base_a; j["base_b"] = c.base_b; },
            [&] (const MinDegreeOne & c) { j["base_vertex"] = c.base_vertex; },
            [&] (const OddRegular & c) { j["r"] = c.r; },
            [&] (const RegularMycielskian & c) { j["r"] = c.r; },
            [&] (const RegularBoundViolated & c) { j["r"] = c.r; j["n"] = c.n; j["t"] = c.t; },
            [&] (const ForcedEquality & c) {
                j["a"] = c.a;
                j["b"] = c.b;
                if (naming && naming->myc) {
                    j["a_name"] = name(c.a);
                    j["b_name"] = name(c.b);
                }
                j["multipliers"] = rationals_json(c.multipliers);
            },
            [&] (const ForcedValue & c) {
                j["variable"] = c.variable;
                if (naming && c.variable == naming->target.order())
                    j["variable_name"] = "k";
                else if (naming && naming->myc)
                    j["variable_name"] = name(static_cast<Vertex>(c.variable));
                j["value"] = to_string(c.value);
                j["reason"] = reason_name(c.reason);
                j["multipliers"] = rationals_json(c.multipliers);
            },
            [&] (const DistinctSumBound & c) {
                j["vertices"] = c.vertices;
                j["total"] = to_string(c.total);
                j["multipliers"] = rationals_json(c.multipliers);
            },
            [&] (const Exhausted & c) { j["nodes"] = c.nodes; }
        }, cert);
        j["t_independent"] = is_t_independent(cert);
        return j;
    }

    auto certificate_from_json(const json & j) -> Certificate
    {
        auto type = j.at("type").get<string>();
        if (type == "SymDiff")
            return SymDiff{j.at("a").get<Vertex>(), j.at("b").get<Vertex>(), j.at("size").get<size_t>()};
        if (type == "LiftedSymDiff")
            return LiftedSymDiff{j.at("base_a").get<Vertex>(), j.at("base_b").get<Vertex>()};
        if (type == "MinDegreeOne")
            return MinDegreeOne{j.at("base_vertex").get<Vertex>()};
        if (type == "OddRegular")
            return OddRegular{j.at("r").get<size_t>()};
        if (type == "RegularMycielskian")
            return RegularMycielskian{j.at("r").get<size_t>()};
        if (type == "RegularBoundViolated")
            return RegularBoundViolated{j.at("r").get<size_t>(), j.at("n").get<size_t>(), j.at("t").get<size_t>()};
        if (type == "ForcedEquality")
            return ForcedEquality{j.at("a").get<Vertex>(), j.at("b").get<Vertex>(), rationals_from_json(j.at("multipliers"))};
        if (type == "ForcedValue")
            return ForcedValue{j.at("variable").get<size_t>(), parse_rational(j.at("value").get<string>()),
                reason_from_name(j.at("reason").get<string>()), rationals_from_json(j.at("multipliers"))};
        if (type == "DistinctSumBound")
            return DistinctSumBound{j.at("vertices").get<vector<Vertex>>(), parse_rational(j.at("total").get<string>()),
                rationals_from_json(j.at("multipliers"))};
        if (type == "Exhausted")
            return Exhausted{j.at("nodes").get<std::uint64_t>()};
        throw std::invalid_argument("unknown certificate type '" + type + "'");
    }

    auto verdict_tag(const Verdict & v) -> string
    {
        return std::visit(Overloaded{
            [] (const DistanceMagic &) -> string { return "DistanceMagic"; },
            [] (const NotDistanceMagic &) -> string { return "NotDistanceMagic"; },
            [] (const Unknown &) -> string { return "Unknown"; }
        }, v);
    }

    auto to_json(const Verdict & v, const Instance * naming) -> json
    {
        json j;
        j["verdict"] = verdict_tag(v);
        std::visit(Overloaded{
            [&] (const DistanceMagic & d) {
                j["magic_constant"] = d.k;
                j["labels"] = d.labeling.values();
            },
            [&] (const NotDistanceMagic & n) {
                j["certificate"] = to_json(n.certificate, naming);
            },
            [&] (const Unknown & u) {
                json budget;
                budget["nodes"] = u.nodes;
                budget["limit"] = u.limit == BudgetLimit::Nodes ? "nodes" : "wall_clock";
                budget["max_nodes"] = u.max_nodes ? json(*u.max_nodes) : json(nullptr);
                budget["timeout_secs"] = u.wall_clock_limit ? json(*u.wall_clock_limit) : json(nullptr);
                j["budget"] = budget;
            }
        }, v);
        return j;
    }

    auto verdict_from_json(const json & j) -> Verdict
    {
        auto tag = j.at("verdict").get<string>();
        if (tag == "DistanceMagic")
            return DistanceMagic{Labeling{j.at("labels").get<vector<Label>>()}, j.at("magic_constant").get<Weight>()};
        if (tag == "NotDistanceMagic")
            return NotDistanceMagic{certificate_from_json(j.at("certificate"))};
        if (tag == "Unknown") {
            auto & b = j.at("budget");
            Unknown u{b.at("nodes").get<std::uint64_t>(),
                b.at("limit").get<string>() == "nodes" ? BudgetLimit::Nodes : BudgetLimit::WallClock,
                std::nullopt, std::nullopt};
            if (! b.at("max_nodes").is_null())
                u.max_nodes = b.at("max_nodes").get<std::uint64_t>();
            if (! b.at("timeout_secs").is_null())
                u.wall_clock_limit = b.at("timeout_secs").get<double>();
            return u;
        }
        throw std::invalid_argument("unknown verdict '" + tag + "'");
    }

    auto recheck(const Verdict & v, const Instance & inst) -> bool
    {
        return std::visit(Overloaded{
            [&] (const DistanceMagic & d) {
                if (d.labeling.size() != inst.target.order())
                    return false;
                auto result = verify(inst.target, d.labeling);
                auto magic = std::get_if<Magic>(&result);
                return magic && magic->k == d.k;
            },
            [&] (const NotDistanceMagic & n) { return recheck(n.certificate, inst); },
            [&] (const Unknown &) { return true; }
        }, v);
    }
}
