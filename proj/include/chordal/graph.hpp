/**
 * Simple undirected graphs on vertices 0..n-1 and the structural primitives
 * the rest of the library consumes: components, induced subgraphs,
 * chordality with an elimination-ordering witness, vertex connectivity,
 * cut-component sums and simplicial vertices.
 */

#ifndef CHORDAL_GRAPH_HPP
#define CHORDAL_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "core.hpp"

namespace chordal {

using Edge = std::pair<Vertex, Vertex>;

class Graph {
  public:
    Graph() = default;

    explicit Graph(std::size_t n) : adj_(n) {}

    Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n)
    {
        for (const auto& [u, v] : edges)
            add_edge(u, v);
    }

    /// Number of vertices.
    std::size_t order() const { return adj_.size(); }

    /// Number of edges.
    std::size_t size() const { return m_; }

    bool valid_vertex(Vertex v) const
    {
        return v >= 0 && static_cast<std::size_t>(v) < adj_.size();
    }

    /**
     * Insert the edge uv. Returns false (and changes nothing) if the edge is
     * already present; throws InputError on self-loops or out-of-range ids.
     */
    bool add_edge(Vertex u, Vertex v)
    {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v)
                             + ") has an endpoint outside 0.." + std::to_string(adj_.size()) + "-1");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        auto& nu = adj_[u];
        auto pos = std::lower_bound(nu.begin(), nu.end(), v);
        if (pos != nu.end() && *pos == v)
            return false;
        nu.insert(pos, v);
        auto& nv = adj_[v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++m_;
        return true;
    }

    bool has_edge(Vertex u, Vertex v) const
    {
        return valid_vertex(u) && valid_vertex(v) && contains(adj_[u], v);
    }

    const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    /// Edge list with u < v, sorted lexicographically.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < static_cast<Vertex>(adj_.size()); ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    bool is_complete() const
    {
        const std::size_t n = order();
        return m_ == n * (n - (n > 0 ? 1 : 0)) / 2;
    }

    bool is_clique(const VertexSet& set) const
    {
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b)
                if (!has_edge(set[a], set[b]))
                    return false;
        return true;
    }

    bool operator==(const Graph&) const = default;

  private:
    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

/// Adjacency rows as bitmasks; the exponential routines work on these.
inline std::vector<Mask> adjacency_masks(const Graph& g)
{
    if (g.order() > kMaskBits)
        throw CapExceeded("bitmask routines support at most 64 vertices, got "
                          + std::to_string(g.order()));
    std::vector<Mask> rows(g.order(), 0);
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        rows[v] = to_mask(g.neighbors(v));
    return rows;
}

/// Number of connected components of the subgraph induced by `alive`.
inline int count_components(std::span<const Mask> adj, Mask alive)
{
    int count = 0;
    while (alive)
    {
        Mask seen = alive & (~alive + 1);
        Mask frontier = seen;
        while (frontier)
        {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj[std::countr_zero(f)];
            next &= alive & ~seen;
            seen |= next;
            frontier = next;
        }
        alive &= ~seen;
        ++count;
    }
    return count;
}

struct Components {
    int count = 0;
    std::vector<int> label;   // vertex -> component id
};

/**
 * Connected components. Component ids are assigned in increasing order of
 * the smallest vertex they contain.
 */
inline Components components(const Graph& g)
{
    Components out;
    out.label.assign(g.order(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s)
    {
        if (out.label[s] != -1)
            continue;
        out.label[s] = out.count;
        stack.push_back(s);
        while (!stack.empty())
        {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (out.label[w] == -1)
                {
                    out.label[w] = out.count;
                    stack.push_back(w);
                }
        }
        ++out.count;
    }
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;   // new id -> original id (increasing)
};

/// Subgraph induced by `keep`; new ids follow the increasing order of the kept ids.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    const VertexSet kept = normalized(keep);
    std::vector<Vertex> relabel(g.order(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
    {
        if (!g.valid_vertex(kept[i]))
            throw InputError("induced_subgraph: vertex " + std::to_string(kept[i]) + " out of range");
        relabel[kept[i]] = static_cast<Vertex>(i);
    }
    InducedSubgraph out{Graph(kept.size()), kept};
    for (Vertex u : kept)
        for (Vertex v : g.neighbors(u))
            if (u < v && relabel[v] != -1)
                out.graph.add_edge(relabel[u], relabel[v]);
    return out;
}

inline Graph remove_vertices(const Graph& g, const VertexSet& removed)
{
    VertexSet keep;
    const VertexSet gone = normalized(removed);
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        if (!contains(gone, v))
            keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

/**
 * Elimination ordering: order[p] is the vertex at position p (0-based),
 * position[v] its inverse.
 */
class Peo {
  public:
    Peo() = default;

    explicit Peo(std::vector<Vertex> order) : order_(std::move(order)), position_(order_.size(), -1)
    {
        for (std::size_t p = 0; p < order_.size(); ++p)
        {
            const Vertex v = order_[p];
            if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || position_[v] != -1)
                throw InputError("elimination ordering is not a permutation of 0..n-1");
            position_[v] = static_cast<int>(p);
        }
    }

    std::size_t size() const { return order_.size(); }
    Vertex at(std::size_t p) const { return order_.at(p); }
    int position(Vertex v) const { return position_.at(v); }
    const std::vector<Vertex>& order() const { return order_; }

    bool operator==(const Peo&) const = default;

  private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

/// Neighbors of v that come after v in the ordering, sorted by position.
inline std::vector<Vertex> later_neighbors(const Graph& g, const Peo& order, Vertex v)
{
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (order.position(w) > order.position(v))
            out.push_back(w);
    std::sort(out.begin(), out.end(),
              [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
    return out;
}

/**
 * First vertex (in elimination order) whose later neighbors do not form a
 * clique, or nullopt if the ordering is perfect. Direct check, no shortcuts.
 */
inline std::optional<Vertex> first_peo_violation(const Graph& g, const Peo& order)
{
    for (Vertex v : order.order())
    {
        const auto later = later_neighbors(g, order, v);
        VertexSet sorted(later.begin(), later.end());
        std::sort(sorted.begin(), sorted.end());
        if (!g.is_clique(sorted))
            return v;
    }
    return std::nullopt;
}

namespace detail {

/**
 * Maximum cardinality search; returns the visit order (ties broken by the
 * smallest vertex id). Reversed, it is a PEO iff the graph is chordal.
 */
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step)
    {
        Vertex best = -1;
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best]))
                best = v;
        visited[best] = 1;
        visit.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!visited[w])
                ++weight[w];
    }
    return visit;
}

/**
 * Tarjan-Yannakakis test: for every v, its earliest later neighbor p must be
 * adjacent to all other later neighbors of v.
 */
inline bool is_perfect_elimination(const Graph& g, const Peo& order)
{
    for (Vertex v : order.order())
    {
        const auto later = later_neighbors(g, order, v);
        if (later.empty())
            continue;
        const Vertex parent = later.front();
        for (std::size_t i = 1; i < later.size(); ++i)
            if (!g.has_edge(parent, later[i]))
                return false;
    }
    return true;
}

}   // namespace detail

struct ChordalityResult {
    bool chordal = false;
    std::optional<Peo> witness;
};

/// Chordality test with a perfect elimination ordering as witness.
inline ChordalityResult is_chordal(const Graph& g)
{
    auto visit = detail::maximum_cardinality_search(g);
    std::reverse(visit.begin(), visit.end());
    Peo candidate(std::move(visit));
    if (detail::is_perfect_elimination(g, candidate))
        return {true, std::move(candidate)};
    return {false, std::nullopt};
}

/**
 * Vertex connectivity by exhaustive search over vertex subsets of
 * increasing size. Complete graphs get n-1; disconnected graphs 0.
 */
inline int vertex_connectivity(const Graph& g)
{
    const std::size_t n = g.order();
    if (n == 0)
        throw PreconditionError("vertex_connectivity needs at least one vertex");
    if (g.is_complete())
        return static_cast<int>(n) - 1;
    const auto adj = adjacency_masks(g);
    const Mask all = low_bits(n);
    for (std::size_t k = 0; k + 2 <= n; ++k)
    {
        if (k == 0)
        {
            if (count_components(adj, all) > 1)
                return 0;
            continue;
        }
        const Mask last = low_bits(k) << (n - k);
        for (Mask y = low_bits(k);; y = next_combination(y))
        {
            if (count_components(adj, all & ~y) > 1)
                return static_cast<int>(k);
            if (y == last)
                break;
        }
    }
    // A non-complete graph always has a cut of size n-2.
    throw VerificationError("vertex_connectivity: no vertex cut found in a non-complete graph");
}

namespace detail {

/// k-subset of {0..n-1} with colex rank `rank`.
inline Mask unrank_colex(std::size_t n, std::size_t k, BigInt rank)
{
    Mask out = 0;
    long long top = static_cast<long long>(n) - 1;
    for (std::size_t r = k; r >= 1; --r)
    {
        while (top >= 0 && binomial(top, static_cast<long long>(r)) > rank)
            --top;
        out |= Mask{1} << top;
        rank -= binomial(top, static_cast<long long>(r));
        --top;
    }
    return out;
}

}   // namespace detail

/**
 * Sum over all k-subsets Y of (W(G - Y) - 1), where W counts connected
 * components. Subsets leaving no vertex contribute nothing. Subsets are
 * visited in colexicographic order; with jobs > 1 the colex range is split
 * into contiguous chunks whose partial sums are added in chunk order, so the
 * result is identical to the sequential run.
 */
inline BigInt cut_component_sum(const Graph& g, std::size_t k, unsigned jobs = 1)
{
    const std::size_t n = g.order();
    if (k > n)
        throw PreconditionError("cut_component_sum: k exceeds the vertex count");
    if (n == k)
        return 0;
    const auto adj = adjacency_masks(g);
    const Mask all = low_bits(n);
    if (k == 0)
        return count_components(adj, all) - 1;

    const BigInt total = binomial(static_cast<long long>(n), static_cast<long long>(k));
    const std::size_t workers = std::max<std::size_t>(
        1, std::min<std::size_t>(jobs, total < 4096 ? 1 : jobs));

    // Per-chunk sums fit in 64 bits: a chunk is bounded by the number of
    // subsets one thread can enumerate times n.
    auto run_chunk = [&](BigInt begin, BigInt count) -> std::uint64_t {
        std::uint64_t sum = 0;
        Mask y = detail::unrank_colex(n, k, begin);
        const auto steps = static_cast<std::uint64_t>(count);
        for (std::uint64_t i = 0; i < steps; ++i)
        {
            sum += static_cast<std::uint64_t>(count_components(adj, all & ~y) - 1);
            y = next_combination(y);
        }
        return sum;
    };

    if (workers == 1)
    {
        std::uint64_t sum = 0;
        const Mask last = low_bits(k) << (n - k);
        for (Mask y = low_bits(k);; y = next_combination(y))
        {
            sum += static_cast<std::uint64_t>(count_components(adj, all & ~y) - 1);
            if (y == last)
                break;
        }
        return sum;
    }

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    const BigInt chunk = total / workers;
    for (std::size_t w = 0; w < workers; ++w)
    {
        const BigInt begin = chunk * w;
        const BigInt count = (w + 1 == workers) ? total - begin : chunk;
        threads.emplace_back([&, w, begin, count] { partial[w] = run_chunk(begin, count); });
    }
    for (auto& t : threads)
        t.join();
    BigInt sum = 0;
    for (auto p : partial)
        sum += p;
    return sum;
}

/// Vertices whose neighborhoods are cliques.
inline VertexSet simplicial_vertices(const Graph& g)
{
    VertexSet out;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        if (g.is_clique(g.neighbors(v)))
            out.push_back(v);
    return out;
}

/**
 * Random chordal graph on n vertices. Vertices are added one at a time;
 * vertex t becomes adjacent to a clique (size <= attach_width, possibly
 * empty) drawn uniformly from all such cliques of the graph on 0..t-1.
 * Reversed insertion order is therefore a PEO.
 */
inline Graph random_chordal(std::size_t n, std::size_t attach_width, std::uint64_t seed)
{
    if (n == 0 || attach_width == 0)
        throw PreconditionError("random_chordal: n and attach_width must be positive");
    if (attach_width > n)
        throw PreconditionError("random_chordal: attach_width exceeds n");
    Rng rng(seed);
    Graph g(n);
    // All cliques of size <= attach_width of the current graph, empty one included.
    std::vector<VertexSet> cliques{VertexSet{}};
    for (Vertex t = 0; t < static_cast<Vertex>(n); ++t)
    {
        const VertexSet target = cliques[rng.below(cliques.size())];
        for (Vertex u : target)
            g.add_edge(u, t);
        // New cliques: {t} plus any subset of target, within the width bound.
        const std::size_t k = target.size();
        for (Mask sub = 0; sub < (Mask{1} << k); ++sub)
        {
            if (static_cast<std::size_t>(popcount(sub)) + 1 > attach_width)
                continue;
            VertexSet c;
            for (std::size_t b = 0; b < k; ++b)
                if (sub >> b & 1)
                    c.push_back(target[b]);
            c.push_back(t);
            cliques.push_back(std::move(c));
        }
    }
    return g;
}

}   // namespace chordal

#endif
