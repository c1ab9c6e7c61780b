#include <catch_amalgamated.hpp>

#include <chordal.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chordal;
using namespace fixture;

TEST_CASE("words parse case-insensitively and start with S", "[threshold]")
{
    CHECK(SDWord::parse("sdSdds").str() == "SDSDDS");
    CHECK(SDWord::parse("DDS").str() == "SDS");
    CHECK_THROWS_AS(SDWord::parse(""), InputError);
    CHECK_THROWS_AS(SDWord::parse("SDX"), InputError);
    CHECK(SDWord::parse("SDSDDS").subwords() == std::vector<std::string>{"SD", "SDD", "S"});
}

TEST_CASE("graph from word", "[threshold]")
{
    CHECK(graph_from_word(SDWord::parse("S")) == complete(1));
    CHECK(graph_from_word(SDWord::parse("SSSS")) == complete(4));
    const Graph g = graph_from_word(SDWord::parse("SDSDDS"));
    CHECK(g == Graph(6, {{2, 0}, {2, 1}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}));
    // A leading D builds the same graph as a leading S.
    CHECK(graph_from_word(SDWord::parse("DSDS")) == graph_from_word(SDWord::parse("SSDS")));
}

TEST_CASE("threshold recognition", "[threshold]")
{
    const auto r = recognize_threshold(graph_from_word(SDWord::parse("SDSDDS")));
    REQUIRE(r.has_value());
    CHECK(r->word.str() == "SDSDDS");
    CHECK_FALSE(recognize_threshold(path(4)).has_value());
    CHECK_FALSE(recognize_threshold(bestpossible12()).has_value());

    // The peeling labeling is an isomorphism onto the word's graph.
    for (std::uint64_t seed = 0; seed < 300; ++seed)
    {
        const auto w = random_word(1 + seed % 14, seed);
        const Graph built = graph_from_word(w);
        const auto rec = recognize_threshold(built);
        REQUIRE(rec.has_value());
        REQUIRE(rec->word == w);
        const Graph canonical = graph_from_word(rec->word);
        for (const auto& [a, b] : canonical.edges())
            REQUIRE(built.has_edge(rec->labeling[a], rec->labeling[b]));
        REQUIRE(canonical.size() == built.size());
    }
}

TEST_CASE("recognition agrees with forbidden induced subgraphs", "[threshold][property]")
{
    std::size_t positives = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed)
    {
        const std::size_t n = 1 + seed % 8;
        const Graph g = seed % 2 ? random_graph(n, seed) : sample_chordal(n, 1 + seed % n, seed);
        const bool expected = oracle::threshold(g);
        positives += expected;
        REQUIRE(recognize_threshold(g).has_value() == expected);
    }
    CHECK(positives > 20);
}

TEST_CASE("subword rule", "[threshold]")
{
    CHECK(bvector_from_word(SDWord::parse("SDSDDS")) == BVector{1, 3, 2});
    CHECK(bvector_from_word(SDWord::parse("SSSS")) == BVector{1, 1, 1, 1});
    CHECK(bvector_from_word(SDWord::parse("SDSDSDDSDS")) == BVector{1, 2, 3, 2, 2});
    CHECK(word_from_bvector(BVector{1, 3, 2}).str() == "SDSDDS");
    CHECK(word_from_bvector(BVector{1, 4, 3, 2}).str() == "SDSDDSDDDS");
    CHECK(word_from_bvector(BVector{1, 1, 1}).str() == "SSS");
    CHECK_THROWS_AS(word_from_bvector(BVector{1, 0, 2}), PreconditionError);
    CHECK_THROWS_AS(word_from_bvector(BVector{}), PreconditionError);
    CHECK_THROWS_AS(word_from_bvector(BVector{1, 5000}), CapExceeded);
}

TEST_CASE("subword rule agrees with the clique-vector b-vector and round-trips", "[threshold][property]")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed)
    {
        const auto w = random_word(1 + seed % 14, seed);
        const auto b = bvector_from_word(w);
        REQUIRE(b == b_from_c(clique_vector(graph_from_word(w))));
        REQUIRE(word_from_bvector(b) == w);
        REQUIRE(clique_number(graph_from_word(w)) == w.count_s());
    }
}

TEST_CASE("threshold profile examples", "[threshold]")
{
    const auto p = threshold_profile(SDWord::parse("SDSDDS"));
    CHECK(p.kappa == 1);
    CHECK(p.minimum_cut == VertexSet{5});
    CHECK(p.domination == std::vector<std::size_t>{1, 3, 2});
    CHECK(p.maximal_by_size[1].size() == 2);
    CHECK(p.maximal_by_size[2].size() == 2);
    CHECK(p.components_after_cut == 3);

    const auto q = threshold_profile(SDWord::parse("SDSDSDDSDS"));
    CHECK(q.kappa == 1);
    CHECK(q.domination[1] == 2);

    const auto r = threshold_profile(SDWord::parse("SDDSS"));
    CHECK(r.kappa == 2);
    CHECK(r.b == BVector{1, 1, 3});
    CHECK(r.domination == std::vector<std::size_t>{1, 1, 3});

    CHECK_THROWS_AS(threshold_profile(SDWord::parse("SSS")), PreconditionError);
}

TEST_CASE("threshold profile matches graph-level brute force", "[threshold][property]")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed)
    {
        const auto w = random_word(2 + seed % 11, seed);
        if (w.is_complete())
            continue;
        const Graph g = graph_from_word(w);
        const auto p = threshold_profile(w);
        INFO("word " << w.str());
        REQUIRE(static_cast<int>(p.kappa) == oracle::connectivity(g));
        const auto cuts = oracle::minimum_cuts(g);
        REQUIRE(cuts.size() == 1);
        REQUIRE(oracle::members(cuts.front()) == p.minimum_cut);
        REQUIRE(p.components_after_cut
                == static_cast<std::size_t>(oracle::components(g, oracle::everything(g) & ~cuts.front())));

        const auto maximal = oracle::maximal_cliques(g);
        for (std::size_t i = 1; i <= p.d; ++i)
        {
            std::vector<VertexSet> expected;
            for (auto m : maximal)
                if (static_cast<std::size_t>(oracle::size_of(m)) == i)
                    expected.push_back(oracle::members(m));
            std::sort(expected.begin(), expected.end());
            auto got = p.maximal_by_size[i - 1];
            std::sort(got.begin(), got.end());
            REQUIRE(got == expected);
            REQUIRE(p.domination[i - 1] == oracle::domination(g, i));
            REQUIRE(g.is_clique(p.s_cliques[i - 1]));
            REQUIRE(p.s_cliques[i - 1].size() == i);
        }

        // At most one component of T - Y has two or more vertices, for every vertex-cut Y.
        for (oracle::Subset y = 0; y <= oracle::everything(g); ++y)
        {
            const oracle::Subset rest = oracle::everything(g) & ~y;
            if (oracle::components(g, rest) < 2)
                continue;
            const auto sizes = oracle::component_sizes(g, rest);
            const auto big = std::count_if(sizes.begin(), sizes.end(), [](int k) { return k >= 2; });
            REQUIRE(big <= 1);
        }
    }
}

TEST_CASE("cut sums strictly exceed the next b entry above kappa", "[threshold][property]")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed)
    {
        const auto w = random_word(2 + seed % 13, seed);
        if (w.is_complete())
            continue;
        const Graph g = graph_from_word(w);
        const auto b = bvector_from_word(w);
        const std::size_t kappa = threshold_profile(w).kappa, d = w.count_s();
        for (std::size_t i = kappa + 1; i + 1 <= d; ++i)
            REQUIRE(b[i] < cut_component_sum(g, i));
    }
}

TEST_CASE("random words are deterministic and start with S", "[threshold]")
{
    CHECK(random_word(6, 1).str() == "SDDDDD");
    CHECK(random_word(6, 2).str() == "SSSSSD");
    CHECK(random_word(1, 5).str() == "S");
    CHECK_THROWS_AS(random_word(0, 1), PreconditionError);
}
