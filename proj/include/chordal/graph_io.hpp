/**
 * Graph text format: '#' starts a comment; the first data line is "n m",
 * followed by m lines "u v" with distinct endpoints in 0..n-1. Either
 * orientation is accepted; duplicates, loops and a wrong edge count are
 * rejected.
 */

#ifndef CHORDAL_GRAPH_IO_HPP
#define CHORDAL_GRAPH_IO_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace chordal {

inline Graph parse_graph(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<Graph> g;
    std::size_t expected = 0;
    auto fail = [&](const std::string& what) {
        throw InputError("graph line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line))
    {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream row(line);
        std::vector<long long> values;
        long long x;
        while (row >> x)
            values.push_back(x);
        if (!row.eof())
            fail("expected integers");
        if (values.empty())
            continue;
        if (values.size() != 2)
            fail("expected two integers");
        if (!g)
        {
            if (values[0] < 0 || values[1] < 0)
                fail("negative count");
            if (values[0] > 100000)
                fail("vertex count too large");
            g.emplace(static_cast<std::size_t>(values[0]));
            expected = static_cast<std::size_t>(values[1]);
            continue;
        }
        const long long u = values[0], v = values[1];
        if (u < 0 || v < 0 || u >= static_cast<long long>(g->order()) || v >= static_cast<long long>(g->order()))
            fail("vertex out of range");
        if (u == v)
            fail("self-loop");
        if (!g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            fail("duplicate edge");
    }
    if (!g)
        throw InputError("graph: missing \"n m\" header");
    if (g->size() != expected)
        throw InputError("graph: header announces " + std::to_string(expected) + " edges, found "
                         + std::to_string(g->size()));
    return *g;
}

inline Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}   // namespace chordal

#endif
