/**
 * Named graphs shared by the test suites.
 */

#ifndef CHORDAL_TESTS_FIXTURES_HPP
#define CHORDAL_TESTS_FIXTURES_HPP

#include <algorithm>
#include <vector>

#include <chordal.hpp>

namespace fixture {

using chordal::Edge;
using chordal::Graph;

// bestpossible(1,2): x1..x4 = 0..3, u1 = 4, u2 = 5, v = 6.
inline constexpr chordal::Vertex x1 = 0, x2 = 1, x3 = 2, x4 = 3, u1 = 4, u2 = 5, v = 6;

inline Graph bestpossible12() { return chordal::bestpossible(1, 2); }

inline Graph path(std::size_t n) { return chordal::path_graph(n); }

inline Graph complete(std::size_t n) { return chordal::complete_graph(n); }

inline Graph cycle(std::size_t n) { return chordal::cycle_graph(n); }

/// Triangle 0,1,2 with an ear on each side: 3~{0,1}, 4~{0,2}, 5~{1,2}.
inline Graph sun3()
{
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}});
}

/// random_chordal(8, 3, 42), frozen.
inline Graph seed42()
{
    return Graph(8, {{0, 2}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 7}, {2, 5}, {3, 4}, {4, 7}});
}

/// Star with center 0 and leaves 1, 2, 3.
inline Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// Seeded arbitrary graph (not necessarily chordal) with edge probability 1/2.
inline Graph random_graph(std::size_t n, std::uint64_t seed)
{
    chordal::Rng rng(seed);
    Graph g(n);
    for (chordal::Vertex a = 0; a < static_cast<chordal::Vertex>(n); ++a)
        for (chordal::Vertex b = a + 1; b < static_cast<chordal::Vertex>(n); ++b)
            if (rng.coin())
                g.add_edge(a, b);
    return g;
}

/// Seeded chordal graph; the attachment width is capped at n.
inline Graph sample_chordal(std::size_t n, std::size_t width, std::uint64_t seed)
{
    return chordal::random_chordal(n, std::min(width, n), seed);
}

inline std::vector<chordal::BigInt> big(std::initializer_list<long long> xs)
{
    return {xs.begin(), xs.end()};
}

}   // namespace fixture

#endif
