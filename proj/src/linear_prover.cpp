#include <magus/linear_prover.hpp>

#include <algorithm>
#include <map>

using std::optional;
using std::size_t;
using std::vector;

namespace magus
{
    namespace
    {
        using Row = vector<Rational>;

        auto sum_smallest(size_t s) -> Rational
        {
            return Rational{BigInt{s} * (s + 1) / 2};
        }

        auto sum_largest(size_t s, size_t labels) -> Rational
        {
            BigInt total = 0;
            for (size_t j = 0; j < s; ++j)
                total += labels - j;
            return Rational{total};
        }

        auto sub_rows(const Row & a, const Row & b) -> Row
        {
            Row result(a.size());
            for (size_t i = 0; i < a.size(); ++i)
                result[i] = a[i] - b[i];
            return result;
        }

        /// The variable's value as constant - sum(coefficient * free variable); free variables map to themselves.
        struct Expression
        {
            vector<Rational> free_part;
            Rational constant;

            auto operator== (const Expression &) const -> bool = default;
        };

        auto expressions(const ReducedSystem & red) -> vector<Expression>
        {
            auto vars = red.original.variables();
            vector<size_t> free_vars;
            for (size_t v = 0; v < vars; ++v)
                if (! red.pivot_row(v))
                    free_vars.push_back(v);

            vector<Expression> result(vars);
            for (size_t v = 0; v < vars; ++v) {
                auto & e = result[v];
                e.free_part.assign(free_vars.size(), Rational{0});
                if (auto r = red.pivot_row(v)) {
                    for (size_t i = 0; i < free_vars.size(); ++i)
                        e.free_part[i] = -red.rows[*r][free_vars[i]];
                    e.constant = red.rows[*r][vars];
                }
                else {
                    auto pos = std::find(free_vars.begin(), free_vars.end(), v) - free_vars.begin();
                    e.free_part[pos] = 1;
                    e.constant = 0;
                }
            }
            return result;
        }

        auto is_zero(const vector<Rational> & v) -> bool
        {
            return std::all_of(v.begin(), v.end(), [] (const Rational & q) { return q == 0; });
        }

        /// Multipliers giving f_a - f_b = const, for a pair with equal free parts.
        auto difference_multipliers(const ReducedSystem & red, size_t a, size_t b) -> Row
        {
            Row zero(red.original.rows.size(), Rational{0});
            auto ra = red.pivot_row(a), rb = red.pivot_row(b);
            const Row & ta = ra ? red.transforms[*ra] : zero;
            const Row & tb = rb ? red.transforms[*rb] : zero;
            return sub_rows(ta, tb);
        }

        auto unit_support(const Row & coefficients, size_t labels, Rational & constant, vector<Vertex> & support) -> bool
        {
            if (coefficients[labels] != 0)
                return false;
            int sign = 0;
            support.clear();
            for (size_t v = 0; v < labels; ++v) {
                auto & c = coefficients[v];
                if (c == 0)
                    continue;
                int s = c == 1 ? 1 : c == -1 ? -1 : 0;
                if (s == 0 || (sign != 0 && s != sign))
                    return false;
                sign = s;
                support.push_back(static_cast<Vertex>(v));
            }
            constant = sign < 0 ? Rational{-coefficients[labels + 1]} : coefficients[labels + 1];
            return true;
        }

        auto reachable(size_t s, const Rational & total, size_t labels) -> bool
        {
            return s <= labels && total >= sum_smallest(s) && total <= sum_largest(s, labels);
        }
    }

    auto build_system(const Graph & g) -> LinearSystem
    {
        LinearSystem sys;
        auto n = g.order();
        sys.labels = n;
        sys.min_degree = min_degree(g);
        sys.max_degree = max_degree(g);
        sys.rows.assign(n + 1, Row(n + 2, Rational{0}));
        for (Vertex v = 0; v < n; ++v) {
            for (auto u : g.neighbours(v))
                sys.rows[v][u] = 1;
            sys.rows[v][n] = -1;
        }
        for (size_t v = 0; v < n; ++v)
            sys.rows[n][v] = 1;
        sys.rows[n][n + 1] = sum_smallest(n);
        return sys;
    }

    auto combine(const LinearSystem & sys, const vector<Rational> & multipliers) -> vector<Rational>
    {
        Row result(sys.variables() + 1, Rational{0});
        for (size_t r = 0; r < sys.rows.size() && r < multipliers.size(); ++r) {
            if (multipliers[r] == 0)
                continue;
            for (size_t c = 0; c < result.size(); ++c)
                if (sys.rows[r][c] != 0)
                    result[c] += multipliers[r] * sys.rows[r][c];
        }
        return result;
    }

    auto ReducedSystem::pivot_row(size_t variable) const -> optional<size_t>
    {
        for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] == variable)
                return r;
        return std::nullopt;
    }

    auto eliminate(const LinearSystem & sys) -> ReducedSystem
    {
        ReducedSystem red;
        red.original = sys;
        auto vars = sys.variables();
        auto m = sys.rows.size();

        vector<Row> rows = sys.rows;
        vector<Row> transforms(m, Row(m, Rational{0}));
        for (size_t r = 0; r < m; ++r)
            transforms[r][r] = 1;

        size_t rank = 0;
        for (size_t col = 0; col < vars && rank < m; ++col) {
            size_t pivot = rank;
            while (pivot < m && rows[pivot][col] == 0)
                ++pivot;
            if (pivot == m)
                continue;
            std::swap(rows[rank], rows[pivot]);
            std::swap(transforms[rank], transforms[pivot]);

            Rational scale = 1 / rows[rank][col];
            for (auto & x : rows[rank]) x *= scale;
            for (auto & x : transforms[rank]) x *= scale;

            for (size_t r = 0; r < m; ++r) {
                if (r == rank || rows[r][col] == 0)
                    continue;
                Rational factor = rows[r][col];
                for (size_t c = col; c <= vars; ++c)
                    if (rows[rank][c] != 0)
                        rows[r][c] -= factor * rows[rank][c];
                for (size_t c = 0; c < m; ++c)
                    if (transforms[rank][c] != 0)
                        transforms[r][c] -= factor * transforms[rank][c];
            }
            red.pivots.push_back(col);
            ++rank;
        }

        for (size_t r = rank; r < m; ++r)
            if (rows[r][vars] != 0) {
                red.inconsistent_row = r;
                break;
            }

        // Keep the zero rows only when one of them witnesses inconsistency.
        if (red.inconsistent_row) {
            std::swap(rows[rank], rows[*red.inconsistent_row]);
            std::swap(transforms[rank], transforms[*red.inconsistent_row]);
            red.inconsistent_row = rank;
            rows.resize(rank + 1);
            transforms.resize(rank + 1);
        }
        else {
            rows.resize(rank);
            transforms.resize(rank);
        }
        red.rows = std::move(rows);
        red.transforms = std::move(transforms);

        auto exprs = expressions(red);
        red.resolution.assign(vars, Free{});
        std::map<vector<Rational>, size_t> representative;
        for (size_t v = 0; v < vars; ++v) {
            if (is_zero(exprs[v].free_part)) {
                red.resolution[v] = Pinned{exprs[v].constant};
                continue;
            }
            auto [it, inserted] = representative.emplace(exprs[v].free_part, v);
            if (! inserted)
                red.resolution[v] = EqualTo{it->second, exprs[v].constant - exprs[it->second].constant};
        }
        return red;
    }

    auto find_contradiction(const ReducedSystem & red) -> optional<Certificate>
    {
        auto labels = red.original.labels;
        auto vars = red.original.variables();

        if (red.inconsistent_row) {
            auto & row = red.rows[*red.inconsistent_row];
            return DistinctSumBound{{}, row[vars], red.transforms[*red.inconsistent_row]};
        }

        auto exprs = expressions(red);

        for (size_t a = labels; a-- > 1; )
            for (size_t b = a; b-- > 0; )
                if (exprs[a] == exprs[b])
                    return ForcedEquality{static_cast<Vertex>(a), static_cast<Vertex>(b), difference_multipliers(red, a, b)};

        auto pinned = [&] (size_t v) -> optional<Rational> {
            if (auto p = std::get_if<Pinned>(&red.resolution[v]))
                return p->value;
            return std::nullopt;
        };

        for (size_t v = 0; v < labels; ++v)
            if (auto value = pinned(v)) {
                auto & multipliers = red.transforms[*red.pivot_row(v)];
                if (! is_integer(*value))
                    return ForcedValue{v, *value, ForcedValueReason::NonInteger, multipliers};
                if (*value < 1 || *value > Rational{BigInt{labels}})
                    return ForcedValue{v, *value, ForcedValueReason::OutOfRange, multipliers};
            }

        auto k = red.original.magic_constant();
        auto k_value = pinned(k);
        if (k_value) {
            auto & multipliers = red.transforms[*red.pivot_row(k)];
            if (! is_integer(*k_value))
                return ForcedValue{k, *k_value, ForcedValueReason::NonInteger, multipliers};
            if (*k_value < sum_smallest(red.original.min_degree)
                    || *k_value > sum_largest(red.original.max_degree, labels))
                return ForcedValue{k, *k_value, ForcedValueReason::MagicConstantRange, multipliers};
        }

        Rational constant;
        vector<Vertex> support;
        for (size_t r = 0; r < red.rows.size(); ++r)
            if (unit_support(red.rows[r], labels, constant, support) && ! reachable(support.size(), constant, labels))
                return DistinctSumBound{support, constant, red.transforms[r]};

        if (k_value) {
            auto & k_transform = red.transforms[*red.pivot_row(k)];
            for (size_t v = 0; v < labels; ++v) {
                auto multipliers = k_transform;
                multipliers[v] += 1;
                auto derived = combine(red.original, multipliers);
                if (unit_support(derived, labels, constant, support) && ! reachable(support.size(), constant, labels))
                    return DistinctSumBound{support, constant, std::move(multipliers)};
            }
        }

        return std::nullopt;
    }

    auto prove_not_magic(const Graph & g) -> optional<Certificate>
    {
        return find_contradiction(eliminate(build_system(g)));
    }

    auto to_json(const ReducedSystem & red) -> nlohmann::json
    {
        auto row_json = [] (const Row & row) {
            auto j = nlohmann::json::array();
            for (auto & q : row)
                j.push_back(to_string(q));
            return j;
        };

        nlohmann::json j;
        j["labels"] = red.original.labels;
        j["variables"] = red.original.variables();
        j["original_rows"] = nlohmann::json::array();
        for (auto & row : red.original.rows)
            j["original_rows"].push_back(row_json(row));
        j["rows"] = nlohmann::json::array();
        for (auto & row : red.rows)
            j["rows"].push_back(row_json(row));
        j["pivots"] = red.pivots;
        j["inconsistent"] = red.inconsistent_row.has_value();

        j["resolution"] = nlohmann::json::array();
        for (size_t v = 0; v < red.resolution.size(); ++v) {
            nlohmann::json item;
            item["variable"] = v == red.original.magic_constant() ? std::string("k") : "f" + std::to_string(v);
            std::visit([&] (const auto & r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, Free>)
                    item["kind"] = "free";
                else if constexpr (std::is_same_v<T, Pinned>) {
                    item["kind"] = "pinned";
                    item["value"] = to_string(r.value);
                }
                else {
                    item["kind"] = "equal_to";
                    item["other"] = r.other;
                    item["offset"] = to_string(r.offset);
                }
            }, red.resolution[v]);
            j["resolution"].push_back(item);
        }
        return j;
    }
}
