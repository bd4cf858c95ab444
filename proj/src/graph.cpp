#include <magus/graph.hpp>

#include <algorithm>
#include <bit>
#include <charconv>

using std::size_t;
using std::string;
using std::vector;

namespace magus
{
    Graph::Graph(size_t n, std::span<const Edge> edges) :
        _n(n),
        _words((n + 63) / 64),
        _bits(n * ((n + 63) / 64), 0),
        _degree(n, 0)
    {
        for (auto [a, b] : edges) {
            if (a >= n || b >= n)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + "-" + std::to_string(b));
            if (a == b)
                throw std::invalid_argument("loop at vertex " + std::to_string(a));
            if (has_edge(a, b))
                continue;
            _bits[a * _words + b / 64] |= std::uint64_t{1} << (b % 64);
            _bits[b * _words + a / 64] |= std::uint64_t{1} << (a % 64);
            ++_degree[a];
            ++_degree[b];
            ++_edge_count;
        }
    }

    auto Graph::neighbours(Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> result;
        result.reserve(_degree[v]);
        auto row = neighbour_bits(v);
        for (size_t w = 0; w < row.size(); ++w)
            for (auto word = row[w]; word; word &= word - 1)
                result.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
        return result;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex a = 0; a < _n; ++a)
            for (auto b : neighbours(a))
                if (a < b)
                    result.emplace_back(a, b);
        return result;
    }

    auto sym_diff_size(const Graph & g, Vertex a, Vertex b) -> size_t
    {
        auto ra = g.neighbour_bits(a), rb = g.neighbour_bits(b);
        size_t count = 0;
        for (size_t w = 0; w < ra.size(); ++w)
            count += std::popcount(ra[w] ^ rb[w]);
        return count;
    }

    auto min_degree(const Graph & g) -> size_t
    {
        size_t result = g.order() == 0 ? 0 : g.degree(0);
        for (Vertex v = 1; v < g.order(); ++v)
            result = std::min(result, g.degree(v));
        return result;
    }

    auto max_degree(const Graph & g) -> size_t
    {
        size_t result = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            result = std::max(result, g.degree(v));
        return result;
    }

    auto is_regular(const Graph & g) -> std::optional<size_t>
    {
        if (g.order() == 0)
            return std::nullopt;
        auto r = g.degree(0);
        for (Vertex v = 1; v < g.order(); ++v)
            if (g.degree(v) != r)
                return std::nullopt;
        return r;
    }

    auto degree_sequence(const Graph & g) -> vector<size_t>
    {
        vector<size_t> result;
        for (Vertex v = 0; v < g.order(); ++v)
            result.push_back(g.degree(v));
        std::sort(result.begin(), result.end());
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.order() == 0)
            return true;
        vector<char> seen(g.order(), 0);
        vector<Vertex> stack{0};
        seen[0] = 1;
        size_t reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbours(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == g.order();
    }

    auto generate(const FamilySpec & spec) -> Graph
    {
        vector<Edge> edges;
        auto n = spec.n;
        auto require = [] (bool ok, const char * what) {
            if (! ok)
                throw std::invalid_argument(what);
        };

        switch (spec.family) {
            case Family::Path:
                require(n >= 1, "path needs at least 1 vertex");
                for (Vertex i = 0; i + 1 < n; ++i)
                    edges.emplace_back(i, i + 1);
                return Graph{n, edges};

            case Family::Cycle:
                require(n >= 3, "cycle needs at least 3 vertices");
                for (Vertex i = 0; i < n; ++i)
                    edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
                return Graph{n, edges};

            case Family::Complete:
                require(n >= 1, "complete graph needs at least 1 vertex");
                for (Vertex i = 0; i < n; ++i)
                    for (Vertex j = i + 1; j < n; ++j)
                        edges.emplace_back(i, j);
                return Graph{n, edges};

            case Family::CompleteBipartite:
                require(spec.m >= 1 && n >= 1, "complete bipartite graph needs two non-empty parts");
                for (Vertex i = 0; i < spec.m; ++i)
                    for (Vertex j = 0; j < n; ++j)
                        edges.emplace_back(i, static_cast<Vertex>(spec.m + j));
                return Graph{spec.m + n, edges};

            case Family::Wheel:
                require(n >= 3, "wheel needs a rim of at least 3 vertices");
                for (Vertex i = 0; i < n; ++i) {
                    edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
                    edges.emplace_back(i, static_cast<Vertex>(n));
                }
                return Graph{n + 1, edges};

            case Family::Empty:
                require(n >= 1, "empty graph needs at least 1 vertex");
                return Graph{n, edges};
        }
        throw std::invalid_argument("unknown family");
    }

    namespace
    {
        auto parse_count(std::string_view text, const string & whole) -> size_t
        {
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
                throw std::invalid_argument("bad family name '" + whole + "'");
            return value;
        }

        auto parse_pair(std::string_view text, const string & whole) -> std::pair<size_t, size_t>
        {
            auto sep = text.find_first_of(",x_");
            if (sep == std::string_view::npos)
                throw std::invalid_argument("bad family name '" + whole + "'");
            return {parse_count(text.substr(0, sep), whole), parse_count(text.substr(sep + 1), whole)};
        }
    }

    auto parse_family(const string & text) -> FamilySpec
    {
        std::string_view s{text};
        if (auto colon = s.find(':'); colon != std::string_view::npos) {
            auto name = s.substr(0, colon), arg = s.substr(colon + 1);
            if (name == "path") return FamilySpec::path(parse_count(arg, text));
            if (name == "cycle") return FamilySpec::cycle(parse_count(arg, text));
            if (name == "complete") return FamilySpec::complete(parse_count(arg, text));
            if (name == "wheel") return FamilySpec::wheel(parse_count(arg, text));
            if (name == "empty") return FamilySpec::empty(parse_count(arg, text));
            if (name == "bipartite") {
                auto [m, n] = parse_pair(arg, text);
                return FamilySpec::complete_bipartite(m, n);
            }
            throw std::invalid_argument("unknown family '" + text + "'");
        }

        if (s.size() < 2)
            throw std::invalid_argument("bad family name '" + text + "'");
        auto rest = s.substr(1);
        switch (s[0]) {
            case 'p': return FamilySpec::path(parse_count(rest, text));
            case 'c': return FamilySpec::cycle(parse_count(rest, text));
            case 'w': return FamilySpec::wheel(parse_count(rest, text));
            case 'e': return FamilySpec::empty(parse_count(rest, text));
            case 'k':
                if (rest.find_first_of(",x_") != std::string_view::npos) {
                    auto [m, n] = parse_pair(rest, text);
                    return FamilySpec::complete_bipartite(m, n);
                }
                if (rest.size() == 2)
                    return FamilySpec::complete_bipartite(parse_count(rest.substr(0, 1), text), parse_count(rest.substr(1), text));
                return FamilySpec::complete(parse_count(rest, text));
        }
        throw std::invalid_argument("unknown family '" + text + "'");
    }

    auto family_name(const FamilySpec & spec) -> string
    {
        auto n = std::to_string(spec.n);
        switch (spec.family) {
            case Family::Path: return "path:" + n;
            case Family::Cycle: return "cycle:" + n;
            case Family::Complete: return "complete:" + n;
            case Family::CompleteBipartite: return "bipartite:" + std::to_string(spec.m) + "," + n;
            case Family::Wheel: return "wheel:" + n;
            case Family::Empty: return "empty:" + n;
        }
        return "?";
    }
}
