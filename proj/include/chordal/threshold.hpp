/**
 * Threshold graphs through their creation words over {S, D}: building the
 * graph, recognizing it by degree peeling, the subword rule between words
 * and b-vectors, and the closed-form invariants read off a word.
 *
 * Vertex k of graph_from_word(w) is the vertex added by letter k.
 */

#ifndef CHORDAL_THRESHOLD_HPP
#define CHORDAL_THRESHOLD_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliques.hpp"
#include "core.hpp"
#include "graph.hpp"
#include "vectors.hpp"

namespace chordal {

/// Creation word: 'S' adds a dominating vertex, 'D' an isolated one. Always starts with 'S'.
class SDWord {
  public:
    SDWord() = default;

    /**
     * Case-insensitive parse. A leading 'D' is canonicalized to 'S' (a
     * single vertex is both isolated and dominating).
     */
    static SDWord parse(std::string_view text)
    {
        if (text.empty())
            throw InputError("SD-word must be nonempty");
        std::string letters;
        letters.reserve(text.size());
        for (char ch : text)
        {
            const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            if (up != 'S' && up != 'D')
                throw InputError(std::string("SD-word contains invalid letter '") + ch + "'");
            letters.push_back(up);
        }
        letters[0] = 'S';
        SDWord w;
        w.letters_ = std::move(letters);
        return w;
    }

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    char operator[](std::size_t k) const { return letters_[k]; }

    /// Clique number of the threshold graph.
    std::size_t count_s() const
    {
        std::size_t d = 0;
        for (char ch : letters_)
            d += ch == 'S';
        return d;
    }

    bool is_complete() const { return count_s() == letters_.size(); }

    /// Subwords obtained by cutting before every 'S', left to right.
    std::vector<std::string> subwords() const
    {
        std::vector<std::string> out;
        for (char ch : letters_)
        {
            if (ch == 'S')
                out.emplace_back();
            out.back().push_back(ch);
        }
        return out;
    }

    bool operator==(const SDWord&) const = default;

  private:
    std::string letters_;
};

inline Graph graph_from_word(const SDWord& w)
{
    Graph g(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] == 'S')
            for (std::size_t j = 0; j < k; ++j)
                g.add_edge(static_cast<Vertex>(j), static_cast<Vertex>(k));
    return g;
}

struct ThresholdRecognition {
    SDWord word;
    std::vector<Vertex> labeling;   // labeling[k] = vertex of g added by letter k
};

/**
 * Degree peeling: repeatedly remove a dominating vertex (letter S) or an
 * isolated vertex (letter D), preferring dominating and, among equals, the
 * largest id; the reversed removal sequence is the creation word. nullopt
 * if the peeling gets stuck, i.e. g is not threshold.
 */
inline std::optional<ThresholdRecognition> recognize_threshold(const Graph& g)
{
    const std::size_t n = g.order();
    if (n == 0)
        throw PreconditionError("recognize_threshold: empty graph");
    std::vector<std::size_t> degree(n);
    std::vector<char> alive(n, 1);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = g.degree(static_cast<Vertex>(v));

    std::string removed_letters;
    std::vector<Vertex> removed;
    for (std::size_t remaining = n; remaining > 0; --remaining)
    {
        Vertex pick = -1;
        char letter = 'S';
        for (std::size_t v = n; v-- > 0;)
            if (alive[v] && degree[v] + 1 == remaining)
            {
                pick = static_cast<Vertex>(v);
                break;
            }
        if (pick == -1)
        {
            letter = 'D';
            for (std::size_t v = n; v-- > 0;)
                if (alive[v] && degree[v] == 0)
                {
                    pick = static_cast<Vertex>(v);
                    break;
                }
        }
        if (pick == -1)
            return std::nullopt;
        alive[pick] = 0;
        for (Vertex w : g.neighbors(pick))
            if (alive[w])
                --degree[w];
        removed_letters.push_back(letter);
        removed.push_back(pick);
    }
    ThresholdRecognition out;
    out.word = SDWord::parse(std::string(removed_letters.rbegin(), removed_letters.rend()));
    out.labeling.assign(removed.rbegin(), removed.rend());
    return out;
}

/// b_i = length of the (d-i+1)-th subword.
inline BVector bvector_from_word(const SDWord& w)
{
    const auto parts = w.subwords();
    BVector b;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        b.values.emplace_back(it->size());
    return b;
}

/// Concatenation over i = d..1 of "S" followed by b_i - 1 letters "D".
inline SDWord word_from_bvector(const BVector& b)
{
    if (b.size() == 0)
        throw PreconditionError("word_from_bvector: empty b-vector");
    std::string letters;
    for (std::size_t k = b.size(); k-- > 0;)
    {
        if (b[k] < 1)
            throw PreconditionError("word_from_bvector: b_" + std::to_string(k + 1) + " = " + b[k].str()
                                    + " is not positive");
        if (b[k] > 4096)
            throw CapExceeded("word_from_bvector: b_" + std::to_string(k + 1) + " exceeds 4096");
        letters.push_back('S');
        letters.append(static_cast<std::size_t>(b[k] - 1), 'D');
    }
    return SDWord::parse(letters);
}

/// Closed-form invariants of a non-complete threshold graph, read off its word.
struct ThresholdProfile {
    std::size_t kappa = 0;                     // trailing run of S
    VertexSet minimum_cut;                     // the vertices of that run
    std::size_t d = 0;                         // number of S
    std::vector<std::vector<VertexSet>> maximal_by_size;   // slot i-1: maximal i-cliques C_i(T)
    std::vector<VertexSet> s_cliques;          // slot i-1: C_i^s
    std::vector<std::size_t> domination;       // slot i-1: d_i(T) = b_i
    std::size_t components_after_cut = 0;      // W(T - minimum_cut)
    BVector b;
};

inline ThresholdProfile threshold_profile(const SDWord& w)
{
    if (w.is_complete())
        throw PreconditionError("threshold_profile: word " + w.str() + " gives a complete graph");
    ThresholdProfile p;
    const std::size_t n = w.size();
    p.d = w.count_s();
    p.b = bvector_from_word(w);

    for (std::size_t k = n; k-- > 0 && w[k] == 'S';)
        p.minimum_cut.insert(p.minimum_cut.begin(), static_cast<Vertex>(k));
    p.kappa = p.minimum_cut.size();

    // Subword boundaries: part t (0-based, left to right) is subword d-i+1 for i = d - t.
    std::vector<std::vector<Vertex>> part_vertices;
    for (std::size_t k = 0; k < n; ++k)
    {
        if (w[k] == 'S')
            part_vertices.emplace_back();
        part_vertices.back().push_back(static_cast<Vertex>(k));
    }
    auto part_of_index = [&](std::size_t i) -> const std::vector<Vertex>& { return part_vertices[p.d - i]; };

    p.maximal_by_size.assign(p.d, {});
    p.s_cliques.assign(p.d, {});
    for (std::size_t i = 1; i <= p.d; ++i)
    {
        VertexSet s_later;   // S vertices of subwords d-j+1, j < i
        for (std::size_t j = 1; j < i; ++j)
            s_later.push_back(part_of_index(j).front());
        VertexSet s_clique = s_later;
        s_clique.push_back(part_of_index(i).front());
        p.s_cliques[i - 1] = normalized(s_clique);

        const auto& part = part_of_index(i);
        if (i == p.d)
        {
            // The first letter behaves like a D: every letter of the first subword spans a maximal d-clique.
            for (Vertex v : part)
            {
                VertexSet c = s_later;
                c.push_back(v);
                p.maximal_by_size[i - 1].push_back(normalized(c));
            }
        }
        else
        {
            for (std::size_t t = 1; t < part.size(); ++t)
            {
                VertexSet c = s_later;
                c.push_back(part[t]);
                p.maximal_by_size[i - 1].push_back(normalized(c));
            }
        }
        p.domination.push_back(static_cast<std::size_t>(p.b[i - 1]));
    }
    // Without the trailing S run the word ends in D^r after a connected prefix.
    std::size_t trailing_d = 0;
    for (std::size_t k = n - p.kappa; k-- > 0 && w[k] == 'D';)
        ++trailing_d;
    p.components_after_cut = trailing_d + 1;
    return p;
}

/// Uniform word of the given length starting with S.
inline SDWord random_word(std::size_t length, std::uint64_t seed)
{
    if (length == 0)
        throw PreconditionError("random_word: length must be positive");
    Rng rng(seed);
    std::string letters = "S";
    for (std::size_t k = 1; k < length; ++k)
        letters.push_back(rng.coin() ? 'S' : 'D');
    return SDWord::parse(letters);
}

}   // namespace chordal

#endif
