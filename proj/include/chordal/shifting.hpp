/**
 * Combinatorial shifting of a chordal graph into a threshold graph with the
 * same clique vector: with sigma an elimination ordering whose tail is a
 * maximum clique (x_i at position n-i), every edge u u_j, u outside the
 * clique and u_j its j-th later neighbor, is sent to u x_j; edges inside
 * the clique stay.
 */

#ifndef CHORDAL_SHIFTING_HPP
#define CHORDAL_SHIFTING_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliques.hpp"
#include "core.hpp"
#include "graph.hpp"
#include "peo.hpp"
#include "threshold.hpp"

namespace chordal {

struct ShiftResult {
    Graph shifted_graph;
    SDWord word;                                  // creation word of shifted_graph
    std::vector<Vertex> word_labeling;            // letter k -> vertex
    std::vector<std::pair<Edge, Edge>> edge_map;  // original edge -> image, sorted by original
    Peo peo_used;
    std::vector<Vertex> k_clique;                 // x_1..x_k
    bool special_conditions_hold = false;         // sigma also satisfies conditions (b)-(d)
    SpecialPeoReport special_report;
};

namespace detail {

inline Edge ordered_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct ChosenOrdering {
    std::vector<Vertex> anchor;
    Peo sigma;
};

/**
 * Ordering for the shift: a fully conforming special PEO when one exists
 * (default labels, then any labels, then, if the clique was not imposed,
 * the other maximum cliques), else the batch construction, which always
 * has the PEO property and the anchor in the tail.
 */
inline ChosenOrdering choose_shift_ordering(const Graph& g, const std::vector<Vertex>& preferred, bool fixed_clique)
{
    std::vector<std::vector<Vertex>> candidates{preferred};
    if (!fixed_clique)
        for (const auto& c : maximum_cliques(g))
            if (c != normalized(preferred))
                candidates.push_back(default_anchor_order(c));
    for (const auto& labels : candidates)
    {
        const VertexSet k = normalized(labels);
        try
        {
            return {labels, special_peo(g, labels)};
        }
        catch (const PreconditionError&)
        {
        }
        if (auto found = search_special_peo(g, k))
            return {found->anchor, found->sigma};
    }
    return {preferred, anchored_peo(g, preferred)};
}

}   // namespace detail

/**
 * Shift g onto a threshold graph. `k_clique` must be a maximum clique, listed
 * as x_1..x_k; the default is the lexicographically smallest one, labeled
 * by default_anchor_order. The result is checked to
 * be threshold with the input's clique vector before it is returned.
 */
inline ShiftResult alpha_shift(const Graph& g, const std::optional<std::vector<Vertex>>& k_clique = std::nullopt)
{
    const std::size_t n = g.order();
    if (n < 2)
        throw PreconditionError("alpha_shift: graph needs at least two vertices");
    if (!is_chordal(g).chordal)
        throw PreconditionError("alpha_shift: graph is not chordal");
    if (g.is_complete())
        throw PreconditionError("alpha_shift: graph is complete");

    const auto maximum = maximum_cliques(g);
    std::vector<Vertex> labels = default_anchor_order(maximum.front());
    if (k_clique)
    {
        const VertexSet anchor_set = normalized(*k_clique);
        if (anchor_set.size() != k_clique->size()
            || std::find(maximum.begin(), maximum.end(), anchor_set) == maximum.end())
            throw PreconditionError("alpha_shift: " + detail::format_set(anchor_set) + " is not a maximum clique");
        labels = *k_clique;
    }

    auto chosen = detail::choose_shift_ordering(g, labels, k_clique.has_value());
    ShiftResult r;
    r.peo_used = chosen.sigma;
    r.k_clique = chosen.anchor;
    r.special_report = verify_special_peo(g, r.k_clique, r.peo_used);
    r.special_conditions_hold = r.special_report.ok();

    const std::size_t k = r.k_clique.size();
    const VertexSet k_sorted = normalized(r.k_clique);
    auto x = [&](std::size_t i) { return r.peo_used.at(n - i); };   // 1-based i

    for (const auto& [a, b] : g.edges())
    {
        if (contains(k_sorted, a) && contains(k_sorted, b))
        {
            r.edge_map.push_back({{a, b}, {a, b}});
            continue;
        }
        const Vertex u = r.peo_used.position(a) < r.peo_used.position(b) ? a : b;
        const Vertex w = u == a ? b : a;
        const auto later = monotone_neighbors(g, r.peo_used, u);
        const std::size_t j = static_cast<std::size_t>(std::find(later.begin(), later.end(), w) - later.begin()) + 1;
        if (j > k)
            throw VerificationError("alpha_shift: vertex " + std::to_string(u) + " has more later neighbors than the anchor clique");
        r.edge_map.push_back({{a, b}, detail::ordered_edge(u, x(j))});
    }

    r.shifted_graph = Graph(n);
    for (const auto& [from, to] : r.edge_map)
        if (!r.shifted_graph.add_edge(to.first, to.second))
            throw VerificationError("alpha_shift: two edges share the image (" + std::to_string(to.first) + ", "
                                    + std::to_string(to.second) + ")");

    auto recognized = recognize_threshold(r.shifted_graph);
    if (!recognized)
        throw VerificationError("alpha_shift: shifted graph is not threshold");
    r.word = recognized->word;
    r.word_labeling = recognized->labeling;
    if (clique_vector(r.shifted_graph) != clique_vector(g))
        throw VerificationError("alpha_shift: clique vector changed");
    return r;
}

struct BijectionSizeReport {
    std::size_t size = 0;
    std::size_t source_count = 0;
    std::size_t target_count = 0;
    std::size_t collisions = 0;      // distinct source cliques with the same image
    std::size_t non_cliques = 0;     // images that are not cliques of the target
    std::size_t unmatched = 0;       // target cliques hit by nothing
};

struct BijectionReport {
    std::vector<BijectionSizeReport> sizes;
    std::string first_problem;

    bool ok() const { return first_problem.empty(); }
};

/**
 * Extend the edge map to cliques: C goes to {u} together with the images'
 * far endpoints of the edges u w (w in C \ u), u the earliest member of C
 * in the ordering; then check this is a bijection between s-cliques of g
 * and of the shifted graph, for every s.
 */
inline BijectionReport clique_bijection_check(const Graph& g, const ShiftResult& r)
{
    BijectionReport report;
    std::map<Edge, Edge> image;
    for (const auto& [from, to] : r.edge_map)
        image[from] = to;

    const auto source = enumerate_cliques(g);
    const auto target = enumerate_cliques(r.shifted_graph);
    std::size_t d = 0;
    for (const auto& c : source)
        d = std::max(d, c.size());
    for (const auto& c : target)
        d = std::max(d, c.size());

    std::vector<std::map<VertexSet, std::size_t>> hits(d + 1);
    report.sizes.resize(d);
    for (std::size_t s = 1; s <= d; ++s)
        report.sizes[s - 1].size = s;
    auto note = [&](const std::string& what) {
        if (report.first_problem.empty())
            report.first_problem = what;
    };

    for (const auto& c : source)
    {
        auto& row = report.sizes[c.size() - 1];
        ++row.source_count;
        const Vertex u = *std::min_element(c.begin(), c.end(), [&](Vertex a, Vertex b) {
            return r.peo_used.position(a) < r.peo_used.position(b);
        });
        VertexSet mapped{u};
        bool defined = true;
        for (Vertex w : c)
        {
            if (w == u)
                continue;
            auto it = image.find(detail::ordered_edge(u, w));
            if (it == image.end())
            {
                defined = false;
                break;
            }
            mapped.push_back(it->second.first == u ? it->second.second : it->second.first);
        }
        mapped = normalized(mapped);
        if (!defined || mapped.size() != c.size() || !r.shifted_graph.is_clique(mapped))
        {
            ++row.non_cliques;
            note("clique " + detail::format_set(c) + " has no clique image");
            continue;
        }
        if (hits[c.size()][mapped]++ > 0)
        {
            ++row.collisions;
            note("clique " + detail::format_set(c) + " collides on " + detail::format_set(mapped));
        }
    }
    for (const auto& c : target)
    {
        auto& row = report.sizes[c.size() - 1];
        ++row.target_count;
        if (!hits[c.size()].count(c))
        {
            ++row.unmatched;
            note("target clique " + detail::format_set(c) + " is not an image");
        }
    }
    return report;
}

}   // namespace chordal

#endif
