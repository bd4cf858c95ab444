#pragma once

#include <magus/graph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace magus
{
    class Graph6Error : public std::runtime_error
    {
        public:
            Graph6Error(std::size_t offset, const std::string & what) :
                std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    /// Decodes one graph6 string (no trailing newline; an optional ">>graph6<<" prefix is skipped).
    /// Rejects bytes outside 63..126, short bodies, trailing bytes and non-zero padding bits.
    auto parse_graph6(std::string_view text) -> Graph;

    auto write_graph6(const Graph & g) -> std::string;
}
