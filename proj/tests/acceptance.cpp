/**
 * Acceptance suite: one line per criterion, "PASS" or "FAIL", with the
 * measured time against the pinned budget. Exit status is nonzero if any
 * criterion fails. All tolerances are exact (zero); all seeds are fixed.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <chordal.hpp>

#include "oracles.hpp"

namespace {

using namespace chordal;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kCorpusSeed = 2024;   // same default as `chordalb verify`
constexpr std::uint64_t kBettiSeed = 9;
constexpr std::uint64_t kVectorSeed = 2;
constexpr std::uint64_t kPolySeed = 3;
constexpr std::uint64_t kWordSeed = 14;
constexpr std::uint64_t kMatroidSeed = 10;

struct Outcome {
    bool ok = true;
    std::string detail;   // first failure, or a short summary

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok)
        {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;   // 0: no time budget
    std::function<Outcome()> run;
};

std::string str(const BigInt& x) { return x.str(); }

std::string vec(const std::vector<BigInt>& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + v[k].str();
    return out + ")";
}

std::vector<Graph> betti_corpus()
{
    return chordal_corpus(300, 9, kBettiSeed);
}

Outcome criterion1()
{
    Outcome o;
    const auto w = SDWord::parse("SDSDDS");
    const auto from_word = bvector_from_word(w);
    const auto from_cliques = b_from_c(clique_vector(graph_from_word(w)));
    o.require(from_word == BVector{1, 3, 2}, "subword rule gave " + vec(from_word.values));
    o.require(from_cliques == BVector{1, 3, 2}, "clique vector route gave " + vec(from_cliques.values));
    o.detail = o.ok ? "b = (1,3,2) by both routes" : o.detail;
    return o;
}

Outcome criterion2()
{
    Outcome o;
    Rng rng(kVectorSeed);
    for (int trial = 0; trial < 10000 && o.ok; ++trial)
    {
        const std::size_t length = 1 + rng.below(20);
        std::vector<BigInt> v;
        for (std::size_t k = 0; k < length; ++k)
            v.emplace_back(rng.between(-1000000, 1000000));
        const std::size_t d = length - 1;
        o.require(c_from_b(b_from_c(CVector(v))).values == v, "c -> b -> c on trial " + std::to_string(trial));
        o.require(b_from_c(c_from_b(BVector(v))).values == v, "b -> c -> b on trial " + std::to_string(trial));
        o.require(f_from_h(h_from_f(FVector(v), d), d).values == v, "f -> h -> f on trial " + std::to_string(trial));
        o.require(h_from_f(f_from_h(HVector(v), d), d).values == v, "h -> f -> h on trial " + std::to_string(trial));
    }
    if (o.ok)
        o.detail = "10000 vectors, four round trips each";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    Rng rng(kPolySeed);
    for (int trial = 0; trial < 1000 && o.ok; ++trial)
    {
        const std::size_t d = 1 + rng.below(8);
        std::vector<BigInt> c;
        for (std::size_t k = 0; k < d; ++k)
            c.emplace_back(1 + rng.below(50));
        const auto b = b_from_c(CVector(c));
        o.require(oracle::expand_b(b.values) == c, "expansion of " + vec(b.values) + " differs from " + vec(c));
    }
    if (o.ok)
        o.detail = "1000 clique vectors, coefficientwise";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    const auto corpus = chordal_corpus(500, 12, kCorpusSeed);
    std::size_t conforming = 0;
    for (std::size_t k = 0; k < corpus.size() && o.ok; ++k)
    {
        const Graph& g = corpus[k];
        const std::string id = "corpus graph " + std::to_string(k) + " [" + format_graph(g) + "]";
        try
        {
            const auto r = alpha_shift(g);
            conforming += r.special_conditions_hold;
            o.require(oracle::threshold(r.shifted_graph), id + ": output has an induced C4, P4 or 2K2");
            o.require(oracle::clique_counts(r.shifted_graph) == oracle::clique_counts(g), id + ": clique vector changed");
            o.require(oracle::connectivity(r.shifted_graph) == oracle::connectivity(g), id + ": connectivity changed");
            const auto bij = clique_bijection_check(g, r);
            o.require(bij.ok(), id + ": " + bij.first_problem);
        }
        catch (const std::exception& e)
        {
            o.require(false, id + ": " + e.what());
        }
    }
    if (o.ok)
        o.detail = "500 graphs; " + std::to_string(conforming) + " shifted along an ordering meeting every anchor condition";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    const auto corpus = chordal_corpus(500, 12, kCorpusSeed);
    std::vector<std::pair<std::string, Graph>> instances;
    for (std::size_t k = 0; k < corpus.size(); ++k)
        instances.emplace_back("corpus:" + std::to_string(k), corpus[k]);
    for (std::size_t kappa = 1; kappa <= 3; ++kappa)
        for (std::size_t kt = kappa; kt <= 3; ++kt)
            instances.emplace_back("bestpossible(" + std::to_string(kappa) + "," + std::to_string(kt) + ")",
                                   bestpossible(kappa, kt));
    std::size_t claims = 0;
    for (const auto& [id, g] : instances)
    {
        const auto r = verify_graph(g, id);
        for (const auto& c : r.claims)
        {
            claims += c.status == ClaimStatus::Pass;
            o.require(c.status != ClaimStatus::Fail, id + " " + c.id + ": " + c.witness);
        }
        if (!o.ok)
            return o;
    }
    const auto bp = verify_graph(bestpossible(1, 2), "bestpossible(1,2)");
    const auto& s = bp.stats;
    o.require(s.b == BVector{1, 2, 3, 1}, "bestpossible(1,2) b = " + vec(s.b.values));
    o.require(s.domination == std::vector<std::size_t>{2, 3, 3, 1}, "bestpossible(1,2) d_i differs");
    o.require(s.kappa == 1 && s.kappa_tilde == 2, "bestpossible(1,2) connectivity numbers differ");
    o.require(s.b[0] < s.domination[0] && s.b[1] < s.domination[1], "(c) not strict at i = 1, 2");
    o.require(s.b[2] == s.domination[2] && s.b[3] == s.domination[3], "(d) not tight at i = 3, 4");
    if (o.ok)
        o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(claims) + " claims passed, none failed";
    return o;
}

BettiTable linear_part(BettiTable t)
{
    for (auto it = t.entries.begin(); it != t.entries.end();)
        it = it->first.first >= 1 && it->first.second != it->first.first + 1 ? t.entries.erase(it) : std::next(it);
    return t;
}

Outcome criterion6()
{
    Outcome o;
    const auto corpus = betti_corpus();
    for (std::size_t k = 0; k < corpus.size() && o.ok; ++k)
    {
        const Graph& g = corpus[k];
        const std::size_t n = g.order();
        const auto full = full_betti_hochster(clique_complex(g));
        const auto c = clique_vector(g);
        const std::size_t d = c.size();
        const auto via_h = table_from_linear_values(betti_from_hvector(h_from_f(f_from_c(c), d), n, d, 2), n, 2);
        const auto via_b = table_from_linear_values(betti_from_bvector(b_from_c(c), n, d), n, 2);
        const auto strand = table_from_strand(linear_strand_hochster(g), n);
        const std::string id = "graph " + std::to_string(k) + " [" + format_graph(g) + "]";
        o.require(full == via_h, id + ": Hochster != h-vector formula");
        o.require(full == via_b, id + ": Hochster != b-vector formula");
        o.require(linear_part(full) == strand, id + ": Hochster strand != cut-component sums");
    }
    if (o.ok)
        o.detail = "300 graphs, four routes entrywise equal";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    const auto corpus = betti_corpus();
    for (std::size_t k = 0; k < corpus.size() && o.ok; ++k)
    {
        const auto p = homological_profile(full_betti_hochster(clique_complex(corpus[k])));
        const auto kappa = static_cast<std::size_t>(oracle::connectivity(corpus[k]));
        o.require(p.is_two_linear, "graph " + std::to_string(k) + " is not 2-linear");
        o.require(p.depth == kappa + 1, "graph " + std::to_string(k) + ": depth " + std::to_string(p.depth)
                                            + " != kappa + 1 = " + std::to_string(kappa + 1));
    }
    for (std::size_t len = 4; len <= 8; ++len)
        o.require(!homological_profile(full_betti_hochster(clique_complex(cycle_graph(len)))).is_two_linear,
                  "C_" + std::to_string(len) + " is 2-linear");
    if (o.ok)
        o.detail = "300 chordal graphs 2-linear with depth = kappa+1; C_4..C_8 not 2-linear";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    const auto corpus = betti_corpus();
    std::size_t equalities = 0, strict = 0;
    for (std::size_t k = 0; k < corpus.size() && o.ok; ++k)
    {
        const Graph& g = corpus[k];
        const std::size_t n = g.order();
        const auto full = full_betti_hochster(clique_complex(g));
        const auto b = b_from_c(clique_vector(g));
        const auto kappa = static_cast<std::size_t>(oracle::connectivity(g));
        for (std::size_t i = 1; i <= b.size(); ++i)
        {
            BigInt total = 0;
            for (const auto& [key, value] : full.entries)
                if (key.first == static_cast<int>(n - i))
                    total += value;
            const std::string where = "graph " + std::to_string(k) + ", i = " + std::to_string(i) + ": b_i = "
                                      + str(b[i - 1]) + ", beta_{n-i} + 1 = " + str(total + 1);
            if (i <= kappa + 1)
            {
                o.require(b[i - 1] == total + 1, where);
                ++equalities;
            }
            else
            {
                o.require(b[i - 1] < total + 1, where);
                ++strict;
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(equalities) + " equalities and " + std::to_string(strict) + " strict inequalities";
    return o;
}

Outcome criterion9()
{
    Outcome o;
    std::size_t checked = 0;
    for (std::uint64_t t = 0; t < 1000 && o.ok; ++t)
    {
        const auto w = random_word(1 + derive_seed(kWordSeed, t) % 14, derive_seed(kWordSeed, t));
        if (w.is_complete())
            continue;
        ++checked;
        const Graph g = graph_from_word(w);
        const auto p = threshold_profile(w);
        const auto b = bvector_from_word(w);
        const std::string id = "word " + w.str();
        o.require(static_cast<int>(p.kappa) == oracle::connectivity(g), id + ": kappa");
        const auto cuts = oracle::minimum_cuts(g);
        o.require(cuts.size() == 1 && oracle::members(cuts.front()) == p.minimum_cut, id + ": minimum cut");
        const auto maximal = oracle::maximal_cliques(g);
        auto count_of_size = [&](std::size_t i) {
            return static_cast<std::size_t>(std::count_if(maximal.begin(), maximal.end(), [&](oracle::Subset m) {
                return static_cast<std::size_t>(oracle::size_of(m)) == i;
            }));
        };
        const std::size_t d = p.d;
        for (std::size_t i = p.kappa + 1; i + 1 <= d; ++i)
            o.require(count_of_size(i) == b[i - 1] - 1, id + ": |C_" + std::to_string(i) + "| != b_i - 1");
        o.require(count_of_size(d) == b[d - 1], id + ": |C_d| != b_d");
        for (std::size_t i = 1; i <= d; ++i)
            o.require(oracle::domination(g, i) == b[i - 1], id + ": d_" + std::to_string(i) + " != b_i");
        if (!cuts.empty())
            o.require(oracle::components(g, oracle::everything(g) & ~cuts.front()) == b[p.kappa],
                      id + ": b_{kappa+1} != W(T - Y)");
        const auto sums = oracle::cut_sums(g);
        for (std::size_t i = p.kappa + 1; i + 1 <= d; ++i)
            o.require(b[i] < sums[i], id + ": b_{i+1} not below the cut sum at i = " + std::to_string(i));
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " non-complete words of the 1000 drawn";
    return o;
}

Outcome criterion10()
{
    Outcome o;
    std::size_t words = 0;
    for (std::size_t a = 0; a <= 8; ++a)
        for (std::size_t b = 0; b <= 8; ++b)
        {
            const auto w = SDWord::parse("S" + std::string(a, 'D') + std::string(b, 'S'));
            o.require(is_matroid(clique_complex(graph_from_word(w))), "word " + w.str() + " is not a matroid complex");
            ++words;
        }

    std::size_t matroids = 0, pure = 0, graphs = 0;
    auto check_graph = [&](const Graph& g, const std::string& id) {
        if (!is_chordal(g).chordal)
            return;
        ++graphs;
        const auto delta = clique_complex(g);
        if (is_matroid(delta))
        {
            ++matroids;
            o.require(recognize_threshold(g).has_value(), id + ": matroid clique complex but not threshold");
        }
        if (!g.is_complete() && is_pure(delta))
        {
            ++pure;
            const auto bv = b_from_c(clique_vector(g));
            const std::size_t kt = kappa_tilde(g);
            for (std::size_t i = kt + 1; i <= bv.size(); ++i)
                o.require(bv[i - 1] == bv[kt], id + ": b tail not constant");
        }
    };
    for (std::size_t n = 1; n <= 7; ++n)
    {
        std::vector<Edge> slots;
        for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
            for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
                slots.emplace_back(u, v);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()) && o.ok; ++m)
        {
            Graph g(n);
            for (std::size_t e = 0; e < slots.size(); ++e)
                if ((m >> e) & 1)
                    g.add_edge(slots[e].first, slots[e].second);
            check_graph(g, "n = " + std::to_string(n) + ", edge mask " + std::to_string(m));
        }
    }
    const auto extra = chordal_corpus(200, 12, kMatroidSeed);
    for (std::size_t k = 0; k < extra.size(); ++k)
        check_graph(extra[k], "random graph " + std::to_string(k));
    if (o.ok)
        o.detail = std::to_string(words) + " S D^a S^b words; " + std::to_string(graphs) + " chordal graphs, "
                   + std::to_string(matroids) + " matroid, " + std::to_string(pure) + " pure non-complete";
    return o;
}

}   // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "SDSDDS b-vector by subword rule and by clique vector", 0.001, criterion1},
        {2, "b<->c and f<->h round trips on 10000 random vectors", 5, criterion2},
        {3, "defining polynomial identity on 1000 clique vectors", 5, criterion3},
        {4, "shifting 500 random chordal graphs", 60, criterion4},
        {5, "main theorem claims on the corpus and the bestpossible family", 120, criterion5},
        {6, "Betti route agreement on 300 chordal graphs", 600, criterion6},
        {7, "2-linearity and depth = kappa+1; cycles not 2-linear", 120, criterion7},
        {8, "b_i against beta_{n-i} + 1 on the Betti corpus", 0, criterion8},
        {9, "threshold closed forms on 1000 random words", 300, criterion9},
        {10, "matroid clique complexes and pure tails", 0, criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria)
    {
        const auto start = Clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception& e)
        {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.budget_seconds == 0 || seconds < c.budget_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::ostringstream timing;
        timing.precision(3);
        timing << std::fixed << seconds << " s";
        if (c.budget_seconds > 0)
            timing << " / budget " << c.budget_seconds << " s";
        std::printf("[%s] criterion %2d: %s -- %s (%s)%s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    o.detail.c_str(), timing.str().c_str(), in_time ? "" : " over budget");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
