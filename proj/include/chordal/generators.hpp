/**
 * Named graph families and the seeded random corpus used by the harness.
 */

#ifndef CHORDAL_GENERATORS_HPP
#define CHORDAL_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace chordal {

inline Graph complete_graph(std::size_t n)
{
    Graph g(n);
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph path_graph(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v)
        g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw PreconditionError("cycle_graph: n must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

/// Vertex ids of the family below.
struct BestPossibleLayout {
    std::vector<Vertex> x;   // x_1..x_{2 kt}
    Vertex u_kappa = 0, u_kappa_tilde = 0, v = 0;
};

inline BestPossibleLayout bestpossible_layout(std::size_t kappa, std::size_t kappa_tilde)
{
    BestPossibleLayout l;
    for (std::size_t i = 0; i < 2 * kappa_tilde; ++i)
        l.x.push_back(static_cast<Vertex>(i));
    l.u_kappa = static_cast<Vertex>(2 * kappa_tilde);
    l.u_kappa_tilde = l.u_kappa + 1;
    l.v = l.u_kappa + 2;
    return l;
}

/**
 * A clique on x_1..x_{2 kt} (ids 0..2kt-1) plus u_k ~ x_1..x_k (id 2kt),
 * u_kt ~ x_1..x_kt (id 2kt+1) and v ~ x_{kt+1}..x_{2kt} (id 2kt+2).
 * Requires 1 <= kappa <= kappa_tilde.
 */
inline Graph bestpossible(std::size_t kappa, std::size_t kappa_tilde)
{
    if (kappa < 1 || kappa > kappa_tilde)
        throw PreconditionError("bestpossible: need 1 <= kappa <= kappa_tilde");
    const auto l = bestpossible_layout(kappa, kappa_tilde);
    Graph g(2 * kappa_tilde + 3);
    for (std::size_t a = 0; a < l.x.size(); ++a)
        for (std::size_t b = a + 1; b < l.x.size(); ++b)
            g.add_edge(l.x[a], l.x[b]);
    for (std::size_t i = 0; i < kappa; ++i)
        g.add_edge(l.u_kappa, l.x[i]);
    for (std::size_t i = 0; i < kappa_tilde; ++i)
        g.add_edge(l.u_kappa_tilde, l.x[i]);
    for (std::size_t i = kappa_tilde; i < 2 * kappa_tilde; ++i)
        g.add_edge(l.v, l.x[i]);
    return g;
}

/**
 * `count` non-complete random chordal graphs with 2 <= n <= max_n. Member k
 * draws (n, width, graph seed) from derive_seed(seed, k), retrying while
 * the draw is complete.
 */
inline std::vector<Graph> chordal_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed)
{
    if (max_n < 3)
        throw PreconditionError("chordal_corpus: max_n must be at least 3");
    std::vector<Graph> out;
    for (std::size_t k = 0; k < count; ++k)
    {
        Rng rng(derive_seed(seed, k));
        for (;;)
        {
            const std::size_t n = 3 + rng.below(max_n - 2);
            const std::size_t width = 1 + rng.below(n - 1);
            Graph g = random_chordal(n, width, rng.next());
            if (!g.is_complete())
            {
                out.push_back(std::move(g));
                break;
            }
        }
    }
    return out;
}

}   // namespace chordal

#endif
