/**
 * Simplicial complexes stored by their facets: clique complexes, faces and
 * f-vectors, skeleta, restrictions, minimal non-faces (the Stanley-Reisner
 * generators), and the shifted / pure / matroid predicates.
 *
 * An empty facet list is the complex {empty face}; vertices that lie in no
 * facet are kept in n so restrictions range over the full vertex set.
 */

#ifndef CHORDAL_COMPLEX_HPP
#define CHORDAL_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cliques.hpp"
#include "core.hpp"
#include "graph.hpp"
#include "vectors.hpp"

namespace chordal {

struct SimplicialComplex {
    std::size_t n = 0;
    std::vector<VertexSet> facets;   // sorted antichain

    bool operator==(const SimplicialComplex&) const = default;
};

/// Build a complex from arbitrary generating faces (facets are extracted).
inline SimplicialComplex make_complex(std::size_t n, std::vector<VertexSet> generators)
{
    for (auto& f : generators)
    {
        f = normalized(std::move(f));
        for (Vertex v : f)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InputError("face vertex " + std::to_string(v) + " outside 0.." + std::to_string(n) + "-1");
    }
    generators.erase(std::remove_if(generators.begin(), generators.end(),
                                    [](const VertexSet& f) { return f.empty(); }),
                     generators.end());
    return {n, detail::inclusion_maximal(std::move(generators))};
}

inline SimplicialComplex clique_complex(const Graph& g)
{
    return {g.order(), maximal_cliques(g)};
}

inline std::vector<Mask> facet_masks(const SimplicialComplex& delta)
{
    if (delta.n > kMaskBits)
        throw CapExceeded("complex on more than 64 vertices");
    std::vector<Mask> out;
    for (const auto& f : delta.facets)
        out.push_back(to_mask(f));
    return out;
}

inline bool is_face(std::span<const Mask> facets, Mask s)
{
    if (s == 0)
        return true;
    return std::any_of(facets.begin(), facets.end(), [&](Mask f) { return (s & ~f) == 0; });
}

inline bool is_face(const SimplicialComplex& delta, const VertexSet& s)
{
    const auto fm = facet_masks(delta);
    return is_face(fm, to_mask(normalized(s)));
}

inline std::size_t dimension(const SimplicialComplex& delta)
{
    std::size_t top = 0;
    for (const auto& f : delta.facets)
        top = std::max(top, f.size());
    return top;   // number of vertices of a largest face, i.e. dim + 1
}

/**
 * All faces as masks, grouped by size: slot k holds the faces with k
 * vertices (slot 0 is the empty face). Throws CapExceeded past `cap` faces.
 */
inline std::vector<std::vector<Mask>> faces_by_size(const SimplicialComplex& delta, std::size_t cap = 1u << 22)
{
    const auto fm = facet_masks(delta);
    std::set<Mask> all{0};
    for (Mask f : fm)
    {
        const int bits = popcount(f);
        if (bits >= 26)
            throw CapExceeded("faces_by_size: facet with " + std::to_string(bits) + " vertices");
        for (Mask sub = f;; sub = (sub - 1) & f)
        {
            all.insert(sub);
            if (all.size() > cap)
                throw CapExceeded("faces_by_size: more than " + std::to_string(cap) + " faces");
            if (sub == 0)
                break;
        }
    }
    std::vector<std::vector<Mask>> out(dimension(delta) + 1);
    for (Mask s : all)
        out[popcount(s)].push_back(s);
    return out;
}

/// f_{-1}, f_0, ..., f_{dim}.
inline FVector f_vector(const SimplicialComplex& delta)
{
    FVector f;
    for (const auto& layer : faces_by_size(delta))
        f.values.emplace_back(layer.size());
    return f;
}

/// Faces of dimension <= t.
inline SimplicialComplex skeleton(const SimplicialComplex& delta, std::size_t t)
{
    std::vector<VertexSet> gens;
    const std::size_t keep = t + 1;
    for (const auto& f : delta.facets)
    {
        if (f.size() <= keep)
        {
            gens.push_back(f);
            continue;
        }
        std::vector<char> pick(f.size(), 0);
        std::fill(pick.end() - static_cast<long>(keep), pick.end(), 1);
        do
        {
            VertexSet sub;
            for (std::size_t a = 0; a < f.size(); ++a)
                if (pick[a])
                    sub.push_back(f[a]);
            gens.push_back(std::move(sub));
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return make_complex(delta.n, std::move(gens));
}

/// Delta restricted to w: faces inside w. The ambient vertex set is unchanged.
inline SimplicialComplex restrict(const SimplicialComplex& delta, const VertexSet& w)
{
    const VertexSet keep = normalized(w);
    for (Vertex v : keep)
        if (v < 0 || static_cast<std::size_t>(v) >= delta.n)
            throw InputError("restrict: vertex " + std::to_string(v) + " out of range");
    std::vector<VertexSet> gens;
    for (const auto& f : delta.facets)
        gens.push_back(set_intersection(f, keep));
    return make_complex(delta.n, std::move(gens));
}

/// Inclusion-minimal non-faces, each sorted, in (size, lexicographic) order. n <= 16.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& delta)
{
    if (delta.n > 16)
        throw CapExceeded("minimal_nonfaces: n = " + std::to_string(delta.n) + " exceeds 16");
    const auto fm = facet_masks(delta);
    std::vector<VertexSet> out;
    for (Mask s = 1; s < (Mask{1} << delta.n); ++s)
    {
        if (is_face(fm, s))
            continue;
        bool minimal = true;
        for (Mask rest = s; rest && minimal; rest &= rest - 1)
            minimal = is_face(fm, s & ~(rest & (~rest + 1)));
        if (minimal)
            out.push_back(from_mask(s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/**
 * Shiftedness under a labeling: `order` lists the vertices from smallest to
 * largest label. True iff for every face F, i in F and j not in F with a
 * larger label, (F \ i) u j is a face. Checking facets suffices.
 */
inline bool is_shifted(const SimplicialComplex& delta, const std::vector<Vertex>& order)
{
    if (normalized(order).size() != delta.n || order.size() != delta.n)
        throw PreconditionError("is_shifted: order is not a permutation of the vertices");
    const auto fm = facet_masks(delta);
    std::vector<std::size_t> rank(delta.n);
    for (std::size_t p = 0; p < order.size(); ++p)
    {
        if (order[p] < 0 || static_cast<std::size_t>(order[p]) >= delta.n)
            throw PreconditionError("is_shifted: order is not a permutation of the vertices");
        rank[order[p]] = p;
    }
    for (Mask f : fm)
        for (Mask rest = f; rest; rest &= rest - 1)
        {
            const int i = std::countr_zero(rest);
            for (std::size_t p = rank[i] + 1; p < delta.n; ++p)
            {
                const Vertex j = order[p];
                const Mask bit = Mask{1} << j;
                if (!(f & bit) && !is_face(fm, (f & ~(Mask{1} << i)) | bit))
                    return false;
            }
        }
    return true;
}

/**
 * Find a labeling under which delta is shifted: increasing vertex degree
 * (number of edges through the vertex) first, then every permutation when
 * n <= 8. nullopt if none is found.
 */
inline std::optional<std::vector<Vertex>> find_shifted_order(const SimplicialComplex& delta)
{
    const auto layers = faces_by_size(delta);
    std::vector<std::size_t> degree(delta.n, 0);
    if (layers.size() > 2)
        for (Mask e : layers[2])
            for (Mask rest = e; rest; rest &= rest - 1)
                ++degree[std::countr_zero(rest)];
    std::vector<Vertex> order(delta.n);
    for (std::size_t v = 0; v < delta.n; ++v)
        order[v] = static_cast<Vertex>(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] < degree[b]; });
    if (is_shifted(delta, order))
        return order;
    if (delta.n > 8)
        return std::nullopt;
    std::sort(order.begin(), order.end());
    do
    {
        if (is_shifted(delta, order))
            return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

inline bool is_pure(const SimplicialComplex& delta)
{
    for (const auto& f : delta.facets)
        if (f.size() != delta.facets.front().size())
            return false;
    return true;
}

/// Pure after deleting any vertex subset (all 2^n restrictions). n <= 20.
inline bool is_matroid(const SimplicialComplex& delta)
{
    if (delta.n > 20)
        throw CapExceeded("is_matroid: n = " + std::to_string(delta.n) + " exceeds 20");
    const auto fm = facet_masks(delta);
    std::vector<Mask> restricted;
    for (Mask keep = 0; keep < (Mask{1} << delta.n); ++keep)
    {
        // Facets of the restriction are the maximal sets among f & keep; purity
        // fails iff some maximal one is smaller than the largest.
        restricted.clear();
        int top = 0;
        for (Mask f : fm)
        {
            restricted.push_back(f & keep);
            top = std::max(top, popcount(f & keep));
        }
        for (Mask r : restricted)
        {
            if (popcount(r) == top)
                continue;
            const bool covered = std::any_of(restricted.begin(), restricted.end(),
                                             [&](Mask o) { return o != r && (r & ~o) == 0; });
            if (!covered)
                return false;
        }
    }
    return true;
}

/// Text format: first data line "n", then one facet per line; '#' starts a comment.
inline SimplicialComplex parse_complex(std::istream& in)
{
    std::string line;
    std::optional<std::size_t> n;
    std::vector<VertexSet> gens;
    std::size_t line_no = 0;
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
            throw InputError("complex line " + std::to_string(line_no) + ": expected integers");
        if (values.empty())
            continue;
        if (!n)
        {
            if (values.size() != 1 || values[0] < 0)
                throw InputError("complex line " + std::to_string(line_no) + ": expected the vertex count");
            n = static_cast<std::size_t>(values[0]);
            continue;
        }
        VertexSet f;
        for (long long v : values)
        {
            if (v < 0 || static_cast<std::size_t>(v) >= *n)
                throw InputError("complex line " + std::to_string(line_no) + ": vertex " + std::to_string(v)
                                 + " out of range");
            f.push_back(static_cast<Vertex>(v));
        }
        if (normalized(f).size() != f.size())
            throw InputError("complex line " + std::to_string(line_no) + ": repeated vertex");
        gens.push_back(std::move(f));
    }
    if (!n)
        throw InputError("complex: missing vertex count");
    return make_complex(*n, std::move(gens));
}

inline void write_complex(std::ostream& out, const SimplicialComplex& delta)
{
    out << delta.n << '\n';
    for (const auto& f : delta.facets)
    {
        for (std::size_t k = 0; k < f.size(); ++k)
            out << (k ? " " : "") << f[k];
        out << '\n';
    }
}

}   // namespace chordal

#endif
