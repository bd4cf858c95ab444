#include <magus/graph6.hpp>

#include <vector>

using std::size_t;
using std::string;
using std::string_view;

namespace magus
{
    namespace
    {
        constexpr unsigned char bias = 63;
        constexpr size_t max_order = size_t{1} << 18;

        auto sextet(string_view text, size_t pos) -> unsigned
        {
            if (pos >= text.size())
                throw Graph6Error(pos, "unexpected end of input");
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw Graph6Error(pos, "byte " + std::to_string(c) + " outside 63..126");
            return c - bias;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        constexpr string_view header = ">>graph6<<";
        size_t pos = 0;
        if (text.starts_with(header))
            pos = header.size();

        if (pos >= text.size())
            throw Graph6Error(pos, "missing order byte");

        size_t n = 0;
        if (text[pos] != '~') {
            n = sextet(text, pos++);
        }
        else if (pos + 1 < text.size() && text[pos + 1] == '~') {
            pos += 2;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | sextet(text, pos++);
        }
        else {
            ++pos;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | sextet(text, pos++);
        }
        if (n > max_order)
            throw Graph6Error(pos - 1, "order " + std::to_string(n) + " exceeds 2^18");

        size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
        size_t body = (bits + 5) / 6;
        if (text.size() - pos < body)
            throw Graph6Error(text.size(), "truncated body: expected " + std::to_string(body) + " bytes");
        if (text.size() - pos > body)
            throw Graph6Error(pos + body, "trailing bytes after body");

        std::vector<Edge> edges;
        size_t bit = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++bit) {
                auto value = sextet(text, pos + bit / 6);
                if ((value >> (5 - bit % 6)) & 1u)
                    edges.emplace_back(i, j);
            }

        if (bits % 6 != 0) {
            auto last = pos + body - 1;
            auto value = sextet(text, last);
            unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
            if (value & pad_mask)
                throw Graph6Error(last, "non-zero padding bits");
        }
        else {
            for (size_t b = pos; b < pos + body; ++b)
                sextet(text, b);
        }

        return Graph{n, edges};
    }

    auto write_graph6(const Graph & g) -> string
    {
        string out;
        auto n = g.order();
        if (n < 63)
            out.push_back(static_cast<char>(n + bias));
        else if (n <= 258047) {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 0x3f) + bias));
        }
        else {
            out += "~~";
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 0x3f) + bias));
        }

        unsigned current = 0;
        int filled = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) {
                current = (current << 1) | (g.has_edge(i, j) ? 1u : 0u);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(current + bias));
                    current = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((current << (6 - filled)) + bias));
        return out;
    }
}
