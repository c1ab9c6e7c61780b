/**
 * Special perfect elimination orderings anchored at a maximal clique, and
 * the ordering-derived quantities used by shifting: monotone neighborhoods
 * N_sigma(v) and the escape set s(C) of a maximal clique.
 *
 * Throughout, "position" is 0-based; the clique vertex x_i (1-based i) sits
 * at position n - i.
 */

#ifndef CHORDAL_PEO_HPP
#define CHORDAL_PEO_HPP

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliques.hpp"
#include "core.hpp"
#include "graph.hpp"

namespace chordal {

/// Later neighbors of v, increasing position (well ordered).
inline std::vector<Vertex> monotone_neighbors(const Graph& g, const Peo& sigma, Vertex v)
{
    return later_neighbors(g, sigma, v);
}

namespace detail {

inline VertexSet escape_set(const Graph& g, const Peo& sigma, const VertexSet& c)
{
    VertexSet out;
    for (Vertex x : c)
        for (Vertex w : later_neighbors(g, sigma, x))
            if (!contains(c, w))
            {
                out.push_back(x);
                break;
            }
    return out;
}

inline std::string format_set(const VertexSet& s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k)
        os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

}   // namespace detail

/// s(C): members of the maximal clique C whose later neighbors leave C.
inline VertexSet s_of_clique(const Graph& g, const Peo& sigma, const VertexSet& c)
{
    const VertexSet clique = normalized(c);
    if (!is_maximal_clique(g, clique))
        throw PreconditionError("s_of_clique: " + detail::format_set(clique) + " is not a maximal clique");
    return detail::escape_set(g, sigma, clique);
}

/**
 * Default x_1..x_k ordering of an anchor clique: decreasing vertex id.
 */
inline std::vector<Vertex> default_anchor_order(const VertexSet& clique)
{
    std::vector<Vertex> out = normalized(clique);
    std::reverse(out.begin(), out.end());
    return out;
}

struct ConditionResult {
    std::string name;
    bool passed = true;
    std::string witness;   // first counterexample, empty when passed
};

struct SpecialPeoReport {
    std::vector<ConditionResult> conditions;   // peo, a, b, c, d

    bool ok() const
    {
        return std::all_of(conditions.begin(), conditions.end(),
                           [](const ConditionResult& r) { return r.passed; });
    }
};

/**
 * Exhaustive check of an ordering against the anchor-clique conditions:
 *   peo  every vertex simplicial among later vertices;
 *   (a)  x_i at position n-i (1-based i), so the anchor fills the tail;
 *   (b)  in every maximal clique C, C \ s(C) precedes s(C);
 *   (c)  for |s(C)| < i <= |C| exactly one u in C \ s(C) has n_sigma(u) = i-1;
 *   (d)  for intersecting maximal cliques C, C', either C \ C' or C' \ C
 *        entirely precedes C n C'.
 * Failures are reported, never thrown.
 */
inline SpecialPeoReport verify_special_peo(const Graph& g, const std::vector<Vertex>& anchor, const Peo& sigma)
{
    SpecialPeoReport report;
    const std::size_t n = g.order();
    ConditionResult peo{"peo", true, {}}, cond_a{"a", true, {}}, cond_b{"b", true, {}},
        cond_c{"c", true, {}}, cond_d{"d", true, {}};

    if (sigma.size() != n)
    {
        peo = {"peo", false, "ordering has " + std::to_string(sigma.size()) + " entries, graph has "
                                 + std::to_string(n) + " vertices"};
        report.conditions = {peo, cond_a, cond_b, cond_c, cond_d};
        for (std::size_t k = 1; k < report.conditions.size(); ++k)
            report.conditions[k].passed = false;
        return report;
    }

    if (auto bad = first_peo_violation(g, sigma))
        peo = {"peo", false, "later neighbors of vertex " + std::to_string(*bad) + " are not a clique"};

    for (std::size_t i = 1; i <= anchor.size(); ++i)
    {
        const Vertex x = anchor[i - 1];
        const int expected = static_cast<int>(n - i);
        if (sigma.position(x) != expected)
        {
            cond_a = {"a", false, "x_" + std::to_string(i) + " = " + std::to_string(x) + " at position "
                                      + std::to_string(sigma.position(x)) + ", expected "
                                      + std::to_string(expected)};
            break;
        }
    }

    const auto maximal = maximal_cliques(g);
    std::vector<std::size_t> later_count(n, 0);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        later_count[v] = later_neighbors(g, sigma, v).size();

    for (const auto& c : maximal)
    {
        const VertexSet s = detail::escape_set(g, sigma, c);
        const VertexSet inner = set_difference(c, s);
        if (cond_b.passed)
            for (Vertex u : inner)
                for (Vertex v : s)
                    if (cond_b.passed && sigma.position(u) > sigma.position(v))
                        cond_b = {"b", false, "in C = " + detail::format_set(c) + ", " + std::to_string(u)
                                                  + " (not in s(C)) follows " + std::to_string(v)
                                                  + " (in s(C))"};
        if (cond_c.passed)
            for (std::size_t i = s.size() + 1; i <= c.size(); ++i)
            {
                const auto hits = std::count_if(inner.begin(), inner.end(),
                                                [&](Vertex u) { return later_count[u] == i - 1; });
                if (hits != 1)
                {
                    cond_c = {"c", false, "in C = " + detail::format_set(c) + ", i = " + std::to_string(i)
                                              + ": " + std::to_string(hits)
                                              + " vertices of C \\ s(C) have n_sigma = i-1"};
                    break;
                }
            }
    }

    auto precedes_all = [&](const VertexSet& first, const VertexSet& second) {
        for (Vertex u : first)
            for (Vertex v : second)
                if (sigma.position(u) > sigma.position(v))
                    return false;
        return true;
    };
    for (std::size_t a = 0; a < maximal.size() && cond_d.passed; ++a)
        for (std::size_t b = a + 1; b < maximal.size() && cond_d.passed; ++b)
        {
            const auto meet = set_intersection(maximal[a], maximal[b]);
            if (meet.empty())
                continue;
            if (!precedes_all(set_difference(maximal[a], maximal[b]), meet)
                && !precedes_all(set_difference(maximal[b], maximal[a]), meet))
                cond_d = {"d", false, "cliques " + detail::format_set(maximal[a]) + " and "
                                          + detail::format_set(maximal[b])
                                          + ": neither private part precedes the intersection"};
        }

    report.conditions = {peo, cond_a, cond_b, cond_c, cond_d};
    return report;
}

namespace detail {

/**
 * Batch construction: repeatedly take the smallest-id vertex u outside K
 * that is simplicial in the residual graph, let C = {u} u N(u) there, and
 * remove as one batch every vertex of C simplicial in the residual graph
 * (batch ordered by id). The anchor fills the last k positions with x_i at
 * position n-i. Always a PEO satisfying condition (a).
 */
inline Peo batch_construction(const Graph& g, const std::vector<Vertex>& anchor)
{
    const std::size_t n = g.order();
    const VertexSet k_set = normalized(anchor);
    std::vector<char> alive(n, 1);
    auto residual_neighbors = [&](Vertex v) {
        VertexSet out;
        for (Vertex w : g.neighbors(v))
            if (alive[w])
                out.push_back(w);
        return out;
    };
    auto simplicial_in_residual = [&](Vertex v) { return g.is_clique(residual_neighbors(v)); };

    std::vector<Vertex> order;
    order.reserve(n);
    std::size_t remaining_outside = n - k_set.size();
    while (remaining_outside > 0)
    {
        Vertex u = -1;
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
            if (alive[v] && !contains(k_set, v) && simplicial_in_residual(v))
            {
                u = v;
                break;
            }
        if (u == -1)
            throw VerificationError("special_peo: no simplicial vertex outside the anchor clique");
        VertexSet clique = residual_neighbors(u);
        clique.push_back(u);
        clique = normalized(std::move(clique));
        VertexSet batch;
        for (Vertex v : clique)
            if (simplicial_in_residual(v))
                batch.push_back(v);
        for (Vertex v : batch)
        {
            if (contains(k_set, v))
                throw VerificationError("special_peo: batch reached the anchor clique at vertex "
                                        + std::to_string(v));
            alive[v] = 0;
            order.push_back(v);
            --remaining_outside;
        }
    }
    for (auto it = anchor.rbegin(); it != anchor.rend(); ++it)
        order.push_back(*it);
    return Peo(std::move(order));
}

inline void check_anchor(const Graph& g, const VertexSet& k_set, std::size_t given)
{
    if (!is_chordal(g).chordal)
        throw PreconditionError("special_peo: graph is not chordal");
    if (k_set.size() != given || !is_maximal_clique(g, k_set))
        throw PreconditionError("special_peo: anchor " + format_set(k_set) + " is not a maximal clique");
}

}   // namespace detail

struct AnchoredPeo {
    std::vector<Vertex> anchor;   // x_1..x_k
    Peo sigma;
};

/**
 * Exact search for an ordering satisfying the PEO property and conditions
 * (a)-(d) for the maximal clique K. With `labels` given, x_1..x_k are fixed;
 * otherwise every labeling of K is admissible and the first one found is
 * returned. Depth-first over residual-simplicial vertices in increasing id,
 * pruning as soon as a placed vertex breaks (b) or the first vertex of an
 * intersection breaks (d); (c) follows from (b) for a PEO. Failed states
 * (placed set, escape flags) are memoized. nullopt if no such ordering exists.
 */
inline std::optional<AnchoredPeo> search_special_peo(const Graph& g, const VertexSet& clique,
                                                     const std::optional<std::vector<Vertex>>& labels = std::nullopt)
{
    const VertexSet k_set = normalized(clique);
    detail::check_anchor(g, k_set, clique.size());
    if (labels && normalized(*labels) != k_set)
        throw PreconditionError("search_special_peo: labels are not an ordering of the anchor clique");

    const std::size_t n = g.order();
    const auto adj = adjacency_masks(g);
    const Mask all = low_bits(n);
    const Mask k_mask = to_mask(k_set);
    std::vector<Mask> cliques;
    for (const auto& c : maximal_cliques(g))
        cliques.push_back(to_mask(c));
    if (cliques.size() > kMaskBits)
        throw CapExceeded("search_special_peo: more than 64 maximal cliques");

    struct Meet {
        Mask inter, left, right;
    };
    std::vector<Meet> meets;
    for (std::size_t a = 0; a < cliques.size(); ++a)
        for (std::size_t b = a + 1; b < cliques.size(); ++b)
            if (cliques[a] & cliques[b])
                meets.push_back({cliques[a] & cliques[b], cliques[a] & ~cliques[b], cliques[b] & ~cliques[a]});

    auto is_clique_mask = [&](Mask m) {
        for (Mask s = m; s; s &= s - 1)
            if ((m & ~adj[std::countr_zero(s)]) != (Mask{1} << std::countr_zero(s)))
                return false;
        return true;
    };

    struct KeyHash {
        std::size_t operator()(const std::pair<Mask, Mask>& k) const
        {
            return std::hash<Mask>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
        }
    };
    std::unordered_set<std::pair<Mask, Mask>, KeyHash> dead;
    std::vector<Vertex> order;

    std::function<bool(Mask, Mask)> dfs = [&](Mask placed, Mask escaped) -> bool {
        if (placed == all)
            return true;
        if (dead.count({placed, escaped}))
            return false;
        const Mask residual = all & ~placed;
        Mask candidates = 0;
        if (residual & ~k_mask)
        {
            for (Mask s = residual & ~k_mask; s; s &= s - 1)
            {
                const int v = std::countr_zero(s);
                if (is_clique_mask(adj[v] & residual))
                    candidates |= Mask{1} << v;
            }
        }
        else if (labels)
        {
            const std::size_t remaining = static_cast<std::size_t>(popcount(residual));
            candidates = Mask{1} << (*labels)[remaining - 1];
        }
        else
            candidates = residual;

        for (Mask s = candidates; s; s &= s - 1)
        {
            const int x = std::countr_zero(s);
            const Mask bit = Mask{1} << x;
            const Mask later = adj[x] & residual & ~bit;
            Mask next_escaped = escaped;
            bool ok = true;
            for (std::size_t c = 0; c < cliques.size() && ok; ++c)
            {
                if (!(cliques[c] & bit))
                    continue;
                const bool escapes = (later & ~cliques[c]) != 0;
                if (escapes)
                    next_escaped |= Mask{1} << c;
                else if (escaped >> c & 1)
                    ok = false;
            }
            for (const auto& m : meets)
            {
                if (!ok)
                    break;
                if ((m.inter & bit) && !(m.inter & placed))
                    ok = ((m.left & ~placed) == 0) || ((m.right & ~placed) == 0);
            }
            if (!ok)
                continue;
            order.push_back(x);
            if (dfs(placed | bit, next_escaped))
                return true;
            order.pop_back();
        }
        dead.insert({placed, escaped});
        return false;
    };

    if (!dfs(0, 0))
        return std::nullopt;
    std::vector<Vertex> anchor(order.rbegin(), order.rbegin() + static_cast<long>(k_set.size()));
    return AnchoredPeo{std::move(anchor), Peo(order)};
}

/**
 * Special PEO anchored at the maximal clique K = (x_1, ..., x_k): PEO with
 * x_i at position n-i and conditions (b)-(d) on every maximal clique.
 * The batch construction is tried first; if it breaks (b)-(d) the exact
 * search with the same labels takes over. Throws PreconditionError when no
 * ordering with these labels satisfies all conditions (such graphs exist,
 * e.g. the 3-sun for every anchor and labeling).
 */
inline Peo special_peo(const Graph& g, const std::vector<Vertex>& anchor)
{
    const VertexSet k_set = normalized(anchor);
    detail::check_anchor(g, k_set, anchor.size());
    Peo sigma = detail::batch_construction(g, anchor);
    if (verify_special_peo(g, anchor, sigma).ok())
        return sigma;
    if (auto found = search_special_peo(g, k_set, anchor))
        return std::move(found->sigma);
    throw PreconditionError("special_peo: no elimination ordering satisfies conditions (a)-(d) for anchor "
                            + detail::format_set(k_set) + " with the given labels");
}

/// PEO with the anchor in the tail (condition (a) only), from the batch construction.
inline Peo anchored_peo(const Graph& g, const std::vector<Vertex>& anchor)
{
    const VertexSet k_set = normalized(anchor);
    detail::check_anchor(g, k_set, anchor.size());
    Peo sigma = detail::batch_construction(g, anchor);
    const auto report = verify_special_peo(g, anchor, sigma);
    if (!report.conditions[0].passed || !report.conditions[1].passed)
        throw VerificationError("anchored_peo: batch construction broke the PEO property or condition (a)");
    return sigma;
}

}   // namespace chordal

#endif
