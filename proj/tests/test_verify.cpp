#include <catch_amalgamated.hpp>

#include <chordal.hpp>
#include <chordal/json.hpp>

#include "fixtures.hpp"

using namespace chordal;
using namespace fixture;

namespace {

ClaimStatus status(const VerifyReport& r, const std::string& id)
{
    const Claim* c = r.find(id);
    REQUIRE(c != nullptr);
    return c->status;
}

}   // namespace

TEST_CASE("every claim passes on the bestpossible graph", "[verify]")
{
    const auto r = verify_graph(bestpossible12(), "bestpossible(1,2)");
    CHECK(r.ok());
    CHECK(r.claims.size() == claim_ids().size());
    for (const auto& id : {"main.a", "main.b", "main.c", "main.d", "main.e", "betti.a", "betti.b", "depth",
                           "two_linear", "goodarzi", "shift.samecliquevector", "shift.D_i"})
        CHECK(status(r, id) == ClaimStatus::Pass);
    CHECK(status(r, "threshold.dominate") == ClaimStatus::Skip);
    CHECK(r.stats.b == BVector{1, 2, 3, 1});
    CHECK(r.stats.domination == std::vector<std::size_t>{2, 3, 3, 1});
    CHECK(r.stats.kappa == 1);
    CHECK(r.stats.kappa_tilde == 2);
    // (c) strict at i = 1, 2 and (d) tight at i = 3, 4.
    CHECK(r.stats.b[0] < r.stats.domination[0]);
    CHECK(r.stats.b[1] < r.stats.domination[1]);
    CHECK(r.stats.b[2] == r.stats.domination[2]);
    CHECK(r.stats.b[3] == r.stats.domination[3]);
}

TEST_CASE("complete and non-chordal graphs are skipped", "[verify]")
{
    for (const Graph& g : {complete(4), cycle(5)})
    {
        const auto r = verify_graph(g, "skip");
        CHECK(r.ok());
        for (const auto& c : r.claims)
            CHECK(c.status == ClaimStatus::Skip);
    }
    CHECK_THROWS_AS(verify_graph(Graph(0), "empty"), PreconditionError);
}

TEST_CASE("threshold, pure and matroid claims apply where they should", "[verify]")
{
    const auto t = verify_graph(graph_from_word(SDWord::parse("SDSDDS")), "SDSDDS");
    CHECK(t.ok());
    CHECK(status(t, "threshold.dominate") == ClaimStatus::Pass);
    CHECK(status(t, "threshold.k+2") == ClaimStatus::Pass);

    const auto m = verify_graph(graph_from_word(SDWord::parse("SDDSS")), "SDDSS");
    CHECK(status(m, "pure.equal_tail") == ClaimStatus::Pass);
    CHECK(status(m, "matroid.threshold") == ClaimStatus::Pass);
}

TEST_CASE("large instances fall back to the linear strand", "[verify]")
{
    VerifyOptions opt;
    opt.betti_cap = 5;
    const auto r = verify_graph(bestpossible12(), "capped", opt);
    CHECK(r.ok());
    CHECK(status(r, "betti.a") == ClaimStatus::Pass);
    CHECK(status(r, "depth") == ClaimStatus::Skip);
}

TEST_CASE("verification of the random corpus", "[verify][property]")
{
    const auto corpus = chordal_corpus(100, 10, 5);
    for (std::size_t k = 0; k < corpus.size(); ++k)
    {
        const auto r = verify_graph(corpus[k], std::to_string(k));
        INFO(to_json(r, true).dump());
        REQUIRE(r.ok());
    }
}

TEST_CASE("JSON encodings", "[verify][json]")
{
    const auto r = verify_graph(path(3), "p3");
    const auto j = to_json(r, false);
    CHECK(j["schema_version"] == kJsonSchemaVersion);
    CHECK(j["stats"]["b_vector"] == nlohmann::json::array({"1", "2"}));
    CHECK(j["ok"] == true);
    CHECK_FALSE(j.contains("edges"));
    CHECK(to_json(r, true)["edges"] == nlohmann::json::array({{0, 1}, {1, 2}}));

    const auto t = to_json(full_betti_hochster(clique_complex(path(3))));
    CHECK(t["n"] == 3);
    CHECK(t["entries"] == nlohmann::json::parse(R"([[0,0,"1"],[1,2,"1"]])"));

    std::vector<BigInt> huge{BigInt(1) << 100};
    CHECK(to_json(huge)[0] == "1267650600228229401496703205376");
}
