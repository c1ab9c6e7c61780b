#include <catch_amalgamated.hpp>

#include <chordal.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chordal;
using namespace fixture;

namespace {

std::vector<BigInt> random_entries(Rng& rng, std::size_t length, long long bound)
{
    std::vector<BigInt> out;
    for (std::size_t k = 0; k < length; ++k)
        out.emplace_back(rng.between(-bound, bound));
    return out;
}

}   // namespace

TEST_CASE("b-vector from clique vector examples", "[vectors]")
{
    CHECK(b_from_c(CVector{6, 7, 2}) == BVector{1, 3, 2});
    CHECK(b_from_c(CVector{3, 3, 1}) == BVector{1, 1, 1});
    CHECK(b_from_c(CVector{7, 11, 6, 1}) == BVector{1, 2, 3, 1});
    CHECK(c_from_b(BVector{1, 3, 2}) == CVector{6, 7, 2});
    CHECK(c_from_b(BVector{1, 2, 3, 1}) == CVector{7, 11, 6, 1});
    for (long long d = 1; d <= 12; ++d)
    {
        BVector ones;
        ones.values.assign(static_cast<std::size_t>(d), 1);
        const auto c = c_from_b(ones);
        for (long long i = 1; i <= d; ++i)
            CHECK(c[static_cast<std::size_t>(i - 1)] == binomial(d, i));
    }
}

TEST_CASE("b-vector satisfies the defining polynomial identity", "[vectors][property]")
{
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial)
    {
        const std::size_t d = 1 + rng.below(8);
        CVector c;
        for (std::size_t k = 0; k < d; ++k)
            c.values.emplace_back(1 + rng.below(50));
        REQUIRE(oracle::expand_b(b_from_c(c).values) == c.values);
    }
}

TEST_CASE("b and c conversions are inverse", "[vectors][property]")
{
    Rng rng(12);
    for (int trial = 0; trial < 500; ++trial)
    {
        const auto values = random_entries(rng, 1 + rng.below(20), 1000000);
        REQUIRE(c_from_b(b_from_c(CVector(values))) == CVector(values));
        REQUIRE(b_from_c(c_from_b(BVector(values))) == BVector(values));
    }
}

TEST_CASE("h-vector examples", "[vectors]")
{
    for (long long d = 1; d <= 8; ++d)
    {
        FVector simplex;
        for (long long j = 0; j <= d; ++j)
            simplex.values.push_back(binomial(d, j));
        HVector unit;
        unit.values.assign(static_cast<std::size_t>(d + 1), 0);
        unit[0] = 1;
        CHECK(h_from_f(simplex, static_cast<std::size_t>(d)) == unit);
        CHECK(f_from_h(unit, static_cast<std::size_t>(d)) == simplex);
    }
    CHECK(h_from_f(FVector{1, 3, 2}, 2) == HVector{1, 1, 0});
    CHECK(f_from_h(HVector{1, 1, 0}, 2) == FVector{1, 3, 2});
    CHECK(h_from_f(f_from_h(HVector{1, -4, 7}, 2), 2) == HVector{1, -4, 7});
    CHECK_THROWS_AS(h_from_f(FVector{1, 3}, 2), PreconditionError);
    CHECK_THROWS_AS(f_from_h(HVector{1, 3}, 2), PreconditionError);
}

TEST_CASE("h and f conversions are inverse and match the polynomial definition", "[vectors][property]")
{
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial)
    {
        const std::size_t d = rng.below(12);
        const auto values = random_entries(rng, d + 1, 1000000);
        REQUIRE(f_from_h(h_from_f(FVector(values), d), d) == FVector(values));
        REQUIRE(h_from_f(f_from_h(HVector(values), d), d) == HVector(values));
        REQUIRE(h_from_f(FVector(values), d).values == oracle::h_from_f(values, d));
    }
}

TEST_CASE("f-vector of the clique complex is the shifted clique vector", "[vectors][property]")
{
    CHECK(f_from_c(CVector{3, 2}) == FVector{1, 3, 2});
    CHECK(c_from_f(FVector{1, 3, 2}) == CVector{3, 2});
    CHECK_THROWS_AS(c_from_f(FVector{}), PreconditionError);
    for (std::uint64_t seed = 0; seed < 500; ++seed)
    {
        const Graph g = sample_chordal(1 + seed % 12, 1 + seed % 5, seed);
        REQUIRE(f_vector(clique_complex(g)) == f_from_c(clique_vector(g)));
    }
}

TEST_CASE("leading b entries of connected chordal graphs", "[vectors][property]")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed)
    {
        const std::size_t n = 2 + seed % 11;
        const Graph g = sample_chordal(n, 1 + seed % n, seed);
        if (g.is_complete() || components(g).count != 1)
            continue;
        const auto b = b_from_c(clique_vector(g));
        const auto kappa = static_cast<std::size_t>(vertex_connectivity(g));
        CHECK(b[0] == 1);
        for (std::size_t i = 1; i <= kappa; ++i)
            CHECK(b[i - 1] == 1);
        CHECK(b[kappa] != 1);
    }
}

TEST_CASE("nonpositive clique entries are diagnosed, not rejected", "[vectors]")
{
    CHECK_FALSE(nonpositive_entry(CVector{6, 7, 2}).has_value());
    const auto c = c_from_b(BVector{1, -5, 1});
    REQUIRE(nonpositive_entry(c).has_value());
    CHECK_THAT(*nonpositive_entry(c), Catch::Matchers::ContainsSubstring("c_"));
}
