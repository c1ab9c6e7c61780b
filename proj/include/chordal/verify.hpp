/**
 * Claim-by-claim verification of the b-vector theorems on one graph. Every
 * claim evaluates to pass, fail, skip (not applicable) or note (recorded
 * observation that is not a theorem); failures carry a witness with both
 * sides of the violated relation.
 */

#ifndef CHORDAL_VERIFY_HPP
#define CHORDAL_VERIFY_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "betti.hpp"
#include "cliques.hpp"
#include "complex.hpp"
#include "core.hpp"
#include "graph.hpp"
#include "shifting.hpp"
#include "threshold.hpp"
#include "vectors.hpp"

namespace chordal {

enum class ClaimStatus { Pass, Fail, Skip, Note };

inline const char* to_string(ClaimStatus s)
{
    switch (s)
    {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skip: return "skip";
    case ClaimStatus::Note: return "note";
    }
    return "?";
}

struct Claim {
    std::string id;
    ClaimStatus status = ClaimStatus::Pass;
    std::string witness;
};

struct GraphStats {
    std::size_t n = 0, m = 0;
    bool chordal = false, complete = false;
    std::size_t kappa = 0, kappa_tilde = 0, d = 0;
    CVector c;
    BVector b;
    std::vector<std::size_t> domination;
};

struct VerifyReport {
    std::string instance;
    Graph graph;
    GraphStats stats;
    std::vector<Claim> claims;

    bool ok() const
    {
        for (const auto& c : claims)
            if (c.status == ClaimStatus::Fail)
                return false;
        return true;
    }

    const Claim* find(const std::string& id) const
    {
        for (const auto& c : claims)
            if (c.id == id)
                return &c;
        return nullptr;
    }
};

struct VerifyOptions {
    std::size_t betti_cap = 10;   // full Hochster table up to this n, linear strand beyond
    unsigned jobs = 1;
};

inline const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids{
        "main.a", "main.b", "main.c", "main.d", "main.e", "betti.a", "betti.b", "depth", "two_linear",
        "goodarzi", "shift.samecliquevector", "shift.D_i", "threshold.dominate", "threshold.k+2",
        "pure.equal_tail", "matroid.threshold", "b.positive"};
    return ids;
}

namespace detail {

/// Collects the first violation of a claim.
class ClaimBuilder {
  public:
    explicit ClaimBuilder(std::string id) : claim_{std::move(id), ClaimStatus::Pass, {}} {}

    void require(bool ok, const std::string& witness)
    {
        if (!ok && claim_.status != ClaimStatus::Fail)
        {
            claim_.status = ClaimStatus::Fail;
            claim_.witness = witness;
        }
    }

    Claim skip(const std::string& why)
    {
        claim_.status = ClaimStatus::Skip;
        claim_.witness = why;
        return claim_;
    }

    Claim done() const { return claim_; }

  private:
    Claim claim_;
};

inline std::string str(const BigInt& x) { return x.str(); }

}   // namespace detail

inline VerifyReport verify_graph(const Graph& g, const std::string& instance, const VerifyOptions& opt = {})
{
    using detail::ClaimBuilder;
    using detail::str;
    VerifyReport r;
    r.instance = instance;
    r.graph = g;
    auto& s = r.stats;
    s.n = g.order();
    s.m = g.size();
    if (s.n == 0)
        throw PreconditionError("verify: empty graph");
    s.chordal = is_chordal(g).chordal;
    s.complete = g.is_complete();
    s.c = clique_vector(g);
    s.b = b_from_c(s.c);
    s.d = s.c.size();
    s.kappa = static_cast<std::size_t>(vertex_connectivity(g));
    s.kappa_tilde = kappa_tilde(g);

    if (!s.chordal || s.complete)
    {
        const std::string why = !s.chordal ? "graph is not chordal" : "graph is complete";
        for (const auto& id : claim_ids())
            r.claims.push_back({id, ClaimStatus::Skip, why});
        return r;
    }
    s.domination = dominating_numbers(g);

    const std::size_t n = s.n, d = s.d, kappa = s.kappa, kt = s.kappa_tilde;
    auto b = [&](std::size_t i) -> const BigInt& { return s.b[i - 1]; };
    std::vector<BigInt> cut_sum(d + 1);   // cut_sum[k] = sum over |Y| = k of (W - 1), k < d
    for (std::size_t k = 0; k < d; ++k)
        cut_sum[k] = cut_component_sum(g, k, opt.jobs);

    {
        ClaimBuilder a("main.a");
        for (std::size_t i = 1; i <= std::min(kappa + 1, d); ++i)
            a.require(b(i) == cut_sum[i - 1] + 1, "i=" + std::to_string(i) + ": b_i=" + str(b(i))
                                                      + " but cut sum + 1 = " + str(cut_sum[i - 1] + 1));
        r.claims.push_back(a.done());
        ClaimBuilder bb("main.b");
        for (std::size_t i = kappa + 2; i <= d; ++i)
            bb.require(b(i) < cut_sum[i - 1] + 1, "i=" + std::to_string(i) + ": b_i=" + str(b(i))
                                                      + " not below cut sum + 1 = " + str(cut_sum[i - 1] + 1));
        r.claims.push_back(bb.done());
        ClaimBuilder c("main.c");
        for (std::size_t i = 1; i <= d; ++i)
            c.require(b(i) <= s.domination[i - 1], "i=" + std::to_string(i) + ": b_i=" + str(b(i))
                                                       + " > d_i=" + std::to_string(s.domination[i - 1]));
        r.claims.push_back(c.done());
        ClaimBuilder dd("main.d");
        for (std::size_t i = kt + 1; i <= d; ++i)
            dd.require(b(i) == s.domination[i - 1], "i=" + std::to_string(i) + ": b_i=" + str(b(i))
                                                        + " != d_i=" + std::to_string(s.domination[i - 1]));
        r.claims.push_back(dd.done());
        ClaimBuilder e("main.e");
        for (std::size_t j = kt + 1; j <= d; ++j)
            for (std::size_t i = j; i <= d; ++i)
                e.require(b(i) <= b(j), "j=" + std::to_string(j) + ", i=" + std::to_string(i) + ": b_i="
                                            + str(b(i)) + " > b_j=" + str(b(j)));
        r.claims.push_back(e.done());
    }

    // Betti form: b_i against beta_{n-i}(R/I) + 1.
    const bool full = n <= opt.betti_cap;
    const SimplicialComplex delta = clique_complex(g);
    BettiTable table;
    std::vector<BigInt> strand;
    if (full)
        table = full_betti_hochster(delta, opt.betti_cap, opt.jobs);
    else
        strand = linear_strand_hochster(g, opt.jobs);
    auto total_beta = [&](std::size_t i) -> BigInt {
        if (!full)
            return i >= 1 && i <= strand.size() ? strand[i - 1] : BigInt(0);
        BigInt sum = 0;
        for (const auto& [key, value] : table.entries)
            if (key.first == static_cast<int>(i))
                sum += value;
        return sum;
    };
    {
        const std::string source = full ? " (Hochster table)" : " (linear strand)";
        ClaimBuilder a("betti.a"), bb("betti.b");
        for (std::size_t i = 1; i <= d; ++i)
        {
            const BigInt rhs = total_beta(n - i) + 1;
            if (i <= kappa + 1)
                a.require(b(i) == rhs, "i=" + std::to_string(i) + ": b_i=" + str(b(i)) + " but beta_{n-i}+1 = "
                                           + str(rhs) + source);
            else
                bb.require(b(i) < rhs, "i=" + std::to_string(i) + ": b_i=" + str(b(i))
                                           + " not below beta_{n-i}+1 = " + str(rhs) + source);
        }
        r.claims.push_back(a.done());
        r.claims.push_back(bb.done());
    }
    {
        ClaimBuilder dep("depth"), lin("two_linear");
        if (full)
        {
            const auto profile = homological_profile(table);
            dep.require(profile.depth == kappa + 1, "depth=" + std::to_string(profile.depth)
                                                        + " but kappa+1=" + std::to_string(kappa + 1));
            lin.require(profile.is_two_linear, "nonzero Betti number off the 2-linear strand");
            r.claims.push_back(dep.done());
            r.claims.push_back(lin.done());
        }
        else
        {
            r.claims.push_back(dep.skip("n exceeds the Betti cap"));
            r.claims.push_back(lin.skip("n exceeds the Betti cap"));
        }
    }
    {
        ClaimBuilder gz("goodarzi");
        for (std::size_t i = 1; i <= kappa; ++i)
            gz.require(b(i) == 1, "i=" + std::to_string(i) + ": b_i=" + str(b(i)) + " != 1");
        if (kappa + 1 <= d)
            gz.require(b(kappa + 1) != 1, "b_{kappa+1} = 1");
        r.claims.push_back(gz.done());
    }
    {
        ClaimBuilder same("shift.samecliquevector"), dom("shift.D_i");
        try
        {
            const ShiftResult shift = alpha_shift(g);
            const auto bij = clique_bijection_check(g, shift);
            same.require(bij.ok(), "clique bijection: " + bij.first_problem);
            const int kt_shift = vertex_connectivity(shift.shifted_graph);
            same.require(static_cast<std::size_t>(kt_shift) == kappa,
                         "kappa(T)=" + std::to_string(kt_shift) + " != kappa(G)=" + std::to_string(kappa));
            const auto dt = dominating_numbers(shift.shifted_graph);
            for (std::size_t i = 1; i <= d; ++i)
            {
                dom.require(dt[i - 1] <= s.domination[i - 1], "i=" + std::to_string(i) + ": d_i(T)="
                                                                 + std::to_string(dt[i - 1]) + " > d_i(G)="
                                                                 + std::to_string(s.domination[i - 1]));
                if (i > kt)
                    dom.require(dt[i - 1] == s.domination[i - 1],
                                "i=" + std::to_string(i) + ": d_i(T)=" + std::to_string(dt[i - 1])
                                    + " != d_i(G)=" + std::to_string(s.domination[i - 1]));
            }
        }
        catch (const VerificationError& e)
        {
            same.require(false, e.what());
            dom.require(false, e.what());
        }
        r.claims.push_back(same.done());
        r.claims.push_back(dom.done());
    }
    {
        ClaimBuilder dominate("threshold.dominate"), k2("threshold.k+2");
        const auto rec = recognize_threshold(g);
        if (!rec)
        {
            r.claims.push_back(dominate.skip("graph is not threshold"));
            r.claims.push_back(k2.skip("graph is not threshold"));
        }
        else
        {
            const auto p = threshold_profile(rec->word);
            auto lift = [&](const VertexSet& set) {
                VertexSet out;
                for (Vertex v : set)
                    out.push_back(rec->labeling[v]);
                return normalized(out);
            };
            dominate.require(p.kappa == kappa, "word kappa " + std::to_string(p.kappa) + " != "
                                                   + std::to_string(kappa));
            const auto adj = adjacency_masks(g);
            std::size_t cuts = 0;
            VertexSet found;
            for (Mask y = low_bits(kappa); y < (Mask{1} << n); y = next_combination(y))
            {
                if (count_components(adj, low_bits(n) & ~y) > 1)
                {
                    ++cuts;
                    found = from_mask(y);
                }
                if (kappa == 0)
                    break;
            }
            dominate.require(cuts == 1 && found == lift(p.minimum_cut),
                             std::to_string(cuts) + " minimum vertex-cuts found");
            const auto maximal = maximal_cliques(g);
            for (std::size_t i = kappa + 1; i <= d; ++i)
            {
                std::size_t count = 0;
                for (const auto& c : maximal)
                    count += c.size() == i;
                const BigInt expected = i < d ? b(i) - 1 : b(i);
                dominate.require(count == expected, "i=" + std::to_string(i) + ": |C_i(T)|="
                                                        + std::to_string(count) + " expected " + str(expected));
            }
            for (std::size_t i = 1; i <= d; ++i)
                dominate.require(b(i) == s.domination[i - 1], "i=" + std::to_string(i) + ": d_i(T)="
                                                                  + std::to_string(s.domination[i - 1])
                                                                  + " != b_i=" + str(b(i)));
            const int w = count_components(adj, low_bits(n) & ~to_mask(lift(p.minimum_cut)));
            dominate.require(b(kappa + 1) == w, "b_{kappa+1}=" + str(b(kappa + 1)) + " != W(T-Y)="
                                                    + std::to_string(w));
            for (std::size_t i = kappa + 1; i + 1 <= d; ++i)
                k2.require(b(i + 1) < cut_sum[i], "i=" + std::to_string(i) + ": b_{i+1}=" + str(b(i + 1))
                                                      + " not below cut sum " + str(cut_sum[i]));
            r.claims.push_back(dominate.done());
            r.claims.push_back(k2.done());
        }
    }
    {
        ClaimBuilder pure("pure.equal_tail");
        if (!is_pure(delta))
            r.claims.push_back(pure.skip("clique complex is not pure"));
        else
        {
            for (std::size_t i = kt + 1; i <= d; ++i)
                pure.require(b(i) == b(kt + 1), "b_" + std::to_string(i) + "=" + str(b(i)) + " != b_"
                                                    + std::to_string(kt + 1) + "=" + str(b(kt + 1)));
            r.claims.push_back(pure.done());
        }
    }
    {
        ClaimBuilder mat("matroid.threshold");
        if (n > 16)
            r.claims.push_back(mat.skip("n exceeds 16"));
        else if (!is_matroid(delta))
            r.claims.push_back(mat.skip("clique complex is not a matroid"));
        else
        {
            mat.require(recognize_threshold(g).has_value(), "matroid clique complex but graph is not threshold");
            r.claims.push_back(mat.done());
        }
    }
    {
        Claim note{"b.positive", ClaimStatus::Pass, {}};
        for (std::size_t i = 1; i <= d; ++i)
            if (b(i) <= 0)
            {
                note = {"b.positive", ClaimStatus::Note, "b_" + std::to_string(i) + " = " + str(b(i))};
                break;
            }
        r.claims.push_back(note);
    }
    return r;
}

}   // namespace chordal

#endif
