/**
 * Clique enumeration and clique-derived invariants: clique vector, maximal
 * and maximum cliques, kappa-tilde (largest intersection of two maximal
 * cliques) and exact dominating-clique numbers d_i.
 */

#ifndef CHORDAL_CLIQUES_HPP
#define CHORDAL_CLIQUES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "graph.hpp"
#include "vectors.hpp"

namespace chordal {

/// All nonempty cliques of order <= max_size, each sorted, in lexicographic order.
inline std::vector<VertexSet> enumerate_cliques(const Graph& g,
                                                std::size_t max_size = std::numeric_limits<std::size_t>::max())
{
    std::vector<VertexSet> out;
    VertexSet current;
    std::function<void(const std::vector<Vertex>&)> extend = [&](const std::vector<Vertex>& candidates) {
        for (std::size_t a = 0; a < candidates.size(); ++a)
        {
            const Vertex v = candidates[a];
            current.push_back(v);
            out.push_back(current);
            if (current.size() < max_size)
            {
                std::vector<Vertex> next;
                for (std::size_t b = a + 1; b < candidates.size(); ++b)
                    if (g.has_edge(v, candidates[b]))
                        next.push_back(candidates[b]);
                extend(next);
            }
            current.pop_back();
        }
    };
    std::vector<Vertex> all(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        all[v] = static_cast<Vertex>(v);
    if (max_size > 0)
        extend(all);
    return out;
}

/// Clique vector by explicit enumeration; works for any graph.
inline CVector clique_vector_by_enumeration(const Graph& g)
{
    std::vector<BigInt> counts;
    for (const auto& c : enumerate_cliques(g))
    {
        if (counts.size() < c.size())
            counts.resize(c.size(), 0);
        counts[c.size() - 1] += 1;
    }
    return CVector(std::move(counts));
}

/**
 * Clique vector from a perfect elimination ordering:
 * c_i = sum_v C(n_sigma(v), i-1), n_sigma(v) = number of later neighbors.
 */
inline CVector clique_vector_from_peo(const Graph& g, const Peo& peo)
{
    std::vector<std::size_t> later(g.order(), 0);
    std::size_t top = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    {
        for (Vertex w : g.neighbors(v))
            if (peo.position(w) > peo.position(v))
                ++later[v];
        top = std::max(top, later[v]);
    }
    const std::size_t d = g.order() == 0 ? 0 : top + 1;
    std::vector<BigInt> counts(d, 0);
    for (std::size_t v = 0; v < g.order(); ++v)
        for (std::size_t i = 1; i <= later[v] + 1; ++i)
            counts[i - 1] += binomial(static_cast<long long>(later[v]), static_cast<long long>(i - 1));
    return CVector(std::move(counts));
}

/// Clique vector c(G); PEO route for chordal inputs, enumeration otherwise.
inline CVector clique_vector(const Graph& g)
{
    const auto chordality = is_chordal(g);
    if (chordality.chordal)
        return clique_vector_from_peo(g, *chordality.witness);
    return clique_vector_by_enumeration(g);
}

inline std::size_t clique_number(const Graph& g) { return clique_vector(g).size(); }

namespace detail {

inline void sort_clique_list(std::vector<VertexSet>& cliques)
{
    for (auto& c : cliques)
        std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
}

/// Drop every set that is contained in another one.
inline std::vector<VertexSet> inclusion_maximal(std::vector<VertexSet> sets)
{
    sort_clique_list(sets);
    std::sort(sets.begin(), sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> kept;
    for (auto& s : sets)
    {
        bool dominated = false;
        for (const auto& k : kept)
            if (k.size() > s.size() && is_subset(s, k))
            {
                dominated = true;
                break;
            }
        if (!dominated)
            kept.push_back(std::move(s));
    }
    sort_clique_list(kept);
    return kept;
}

}   // namespace detail

/// Maximal cliques by Bron-Kerbosch with pivoting; any graph with n <= 64.
inline std::vector<VertexSet> maximal_cliques_bron_kerbosch(const Graph& g)
{
    const auto adj = adjacency_masks(g);
    std::vector<VertexSet> out;
    std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
        if (!p && !x)
        {
            out.push_back(from_mask(r));
            return;
        }
        // Pivot: vertex of P u X with most neighbors in P.
        Mask px = p | x;
        int pivot = std::countr_zero(px);
        int best = -1;
        for (Mask s = px; s; s &= s - 1)
        {
            const int u = std::countr_zero(s);
            const int score = popcount(p & adj[u]);
            if (score > best)
            {
                best = score;
                pivot = u;
            }
        }
        for (Mask s = p & ~adj[pivot]; s; s &= s - 1)
        {
            const int v = std::countr_zero(s);
            const Mask bit = Mask{1} << v;
            expand(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (g.order() > 0)
        expand(0, low_bits(g.order()), 0);
    detail::sort_clique_list(out);
    return out;
}

/// Maximal cliques of a chordal graph: the maximal members of {v} u N_sigma(v).
inline std::vector<VertexSet> maximal_cliques_from_peo(const Graph& g, const Peo& peo)
{
    std::vector<VertexSet> candidates;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    {
        auto c = later_neighbors(g, peo, v);
        c.push_back(v);
        candidates.push_back(normalized(std::move(c)));
    }
    return detail::inclusion_maximal(std::move(candidates));
}

/// Inclusion-maximal cliques, sorted lexicographically.
inline std::vector<VertexSet> maximal_cliques(const Graph& g)
{
    const auto chordality = is_chordal(g);
    if (chordality.chordal)
        return maximal_cliques_from_peo(g, *chordality.witness);
    return maximal_cliques_bron_kerbosch(g);
}

/// Cliques of maximum order, sorted lexicographically.
inline std::vector<VertexSet> maximum_cliques(const Graph& g)
{
    auto all = maximal_cliques(g);
    std::size_t best = 0;
    for (const auto& c : all)
        best = std::max(best, c.size());
    std::vector<VertexSet> out;
    for (auto& c : all)
        if (c.size() == best)
            out.push_back(std::move(c));
    return out;
}

inline bool is_maximal_clique(const Graph& g, const VertexSet& c)
{
    if (c.empty() || !g.is_clique(c))
        return false;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    {
        if (contains(c, v))
            continue;
        bool extends = true;
        for (Vertex u : c)
            if (!g.has_edge(u, v))
            {
                extends = false;
                break;
            }
        if (extends)
            return false;
    }
    return true;
}

/**
 * Largest |C n C'| over pairs of distinct maximal cliques; 0 when there is
 * only one maximal clique.
 */
inline std::size_t kappa_tilde(const Graph& g)
{
    const auto cliques = maximal_cliques(g);
    std::size_t best = 0;
    for (std::size_t a = 0; a < cliques.size(); ++a)
        for (std::size_t b = a + 1; b < cliques.size(); ++b)
            best = std::max(best, set_intersection(cliques[a], cliques[b]).size());
    return best;
}

namespace detail {

/**
 * Minimum set cover of a universe of at most 64 elements. Branch and bound:
 * greedy initial solution, branching on the uncovered element with fewest
 * covering candidates, lower bound from a greedy family of pairwise
 * incompatible uncovered elements (no candidate covers two of them).
 * Returns candidate indices, or nullopt if some element cannot be covered.
 */
inline std::optional<std::vector<std::size_t>> exact_set_cover(std::size_t universe,
                                                               const std::vector<Mask>& candidates)
{
    const Mask all = low_bits(universe);
    Mask coverable = 0;
    for (Mask c : candidates)
        coverable |= c;
    if ((coverable & all) != all)
        return std::nullopt;

    // Distinct, non-dominated candidates only.
    std::vector<std::size_t> useful;
    for (std::size_t a = 0; a < candidates.size(); ++a)
    {
        bool dominated = false;
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b)
        {
            if (a == b)
                continue;
            const Mask ca = candidates[a], cb = candidates[b];
            if ((ca & ~cb) == 0 && (ca != cb || b < a))
                dominated = true;
        }
        if (!dominated && candidates[a] != 0)
            useful.push_back(a);
    }

    std::vector<std::vector<std::size_t>> covering(universe);
    std::vector<Mask> partners(universe, 0);
    for (std::size_t idx : useful)
        for (Mask s = candidates[idx]; s; s &= s - 1)
        {
            const int e = std::countr_zero(s);
            covering[e].push_back(idx);
            partners[e] |= candidates[idx];
        }
    for (auto& list : covering)
        std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            return popcount(candidates[a]) > popcount(candidates[b]);
        });

    std::vector<std::size_t> best;
    {
        Mask covered = 0;
        while (covered != all)
        {
            std::size_t pick = useful.front();
            int gain = -1;
            for (std::size_t idx : useful)
            {
                const int g = popcount(candidates[idx] & ~covered);
                if (g > gain)
                {
                    gain = g;
                    pick = idx;
                }
            }
            best.push_back(pick);
            covered |= candidates[pick];
        }
    }

    auto lower_bound = [&](Mask uncovered) {
        std::size_t count = 0;
        Mask chosen = 0;
        for (Mask s = uncovered; s; s &= s - 1)
        {
            const int e = std::countr_zero(s);
            if ((partners[e] & chosen) == 0)
            {
                chosen |= Mask{1} << e;
                ++count;
            }
        }
        return count;
    };

    std::vector<std::size_t> current;
    std::function<void(Mask)> search = [&](Mask covered) {
        if (covered == all)
        {
            if (current.size() < best.size())
                best = current;
            return;
        }
        const Mask uncovered = all & ~covered;
        if (current.size() + lower_bound(uncovered) >= best.size())
            return;
        int branch = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (Mask s = uncovered; s; s &= s - 1)
        {
            const int e = std::countr_zero(s);
            if (covering[e].size() < fewest)
            {
                fewest = covering[e].size();
                branch = e;
            }
        }
        for (std::size_t idx : covering[branch])
        {
            current.push_back(idx);
            search(covered | candidates[idx]);
            current.pop_back();
        }
    };
    search(0);
    std::sort(best.begin(), best.end());
    return best;
}

}   // namespace detail

/// How a clique C dominates a maximal clique C'.
enum class Containment { Subset, ProperSubset };

struct Domination {
    std::size_t size = 0;
    std::vector<VertexSet> witness;   // i-cliques attaining the minimum
};

/**
 * Minimum number of i-cliques such that every maximal clique of order >= i
 * contains one of them. With Containment::ProperSubset a maximal i-clique
 * can never be dominated, and the result is nullopt whenever one exists.
 */
inline std::optional<Domination> dominating_number(const Graph& g, std::size_t i, Containment mode)
{
    const auto maximal = maximal_cliques(g);
    std::size_t d = 0;
    for (const auto& c : maximal)
        d = std::max(d, c.size());
    if (i < 1 || i > d)
        throw PreconditionError("dominating_number: i = " + std::to_string(i)
                                + " outside 1.." + std::to_string(d));
    std::vector<VertexSet> universe;
    for (const auto& c : maximal)
        if (c.size() >= i)
            universe.push_back(c);
    if (universe.size() > kMaskBits)
        throw CapExceeded("dominating_number: more than 64 maximal cliques of order >= i");

    // i-cliques are exactly the i-subsets of maximal cliques of order >= i.
    std::set<VertexSet> pool;
    for (const auto& c : universe)
    {
        const std::size_t k = c.size();
        std::vector<char> pick(k, 0);
        std::fill(pick.end() - static_cast<long>(i), pick.end(), 1);
        do
        {
            VertexSet sub;
            for (std::size_t t = 0; t < k; ++t)
                if (pick[t])
                    sub.push_back(c[t]);
            pool.insert(std::move(sub));
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    const std::vector<VertexSet> pool_list(pool.begin(), pool.end());
    std::vector<Mask> covers;
    covers.reserve(pool_list.size());
    for (const auto& s : pool_list)
    {
        Mask m = 0;
        for (std::size_t u = 0; u < universe.size(); ++u)
            if (is_subset(s, universe[u]) && (mode == Containment::Subset || s.size() < universe[u].size()))
                m |= Mask{1} << u;
        covers.push_back(m);
    }
    const auto chosen = detail::exact_set_cover(universe.size(), covers);
    if (!chosen)
        return std::nullopt;
    Domination out;
    out.size = chosen->size();
    for (std::size_t idx : *chosen)
        out.witness.push_back(pool_list[idx]);
    return out;
}

/// d_i(G) with domination read as inclusion (C contained in C', equality allowed).
inline Domination dominating_number(const Graph& g, std::size_t i)
{
    return *dominating_number(g, i, Containment::Subset);
}

/// (d_1, ..., d_d).
inline std::vector<std::size_t> dominating_numbers(const Graph& g)
{
    const std::size_t d = clique_number(g);
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= d; ++i)
        out.push_back(dominating_number(g, i).size);
    return out;
}

}   // namespace chordal

#endif
