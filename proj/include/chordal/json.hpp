/**
 * JSON encodings shared by the CLI. Big integers are decimal strings.
 */

#ifndef CHORDAL_JSON_HPP
#define CHORDAL_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "graph.hpp"
#include "verify.hpp"

namespace chordal {

inline constexpr int kJsonSchemaVersion = 1;

inline nlohmann::json to_json(const std::vector<BigInt>& values)
{
    auto out = nlohmann::json::array();
    for (const auto& v : values)
        out.push_back(v.str());
    return out;
}

template <typename Tag>
nlohmann::json to_json(const CountVector<Tag>& v)
{
    return to_json(v.values);
}

inline nlohmann::json edges_json(const Graph& g)
{
    auto out = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        out.push_back({u, v});
    return out;
}

inline nlohmann::json sets_json(const std::vector<VertexSet>& sets)
{
    auto out = nlohmann::json::array();
    for (const auto& s : sets)
        out.push_back(s);
    return out;
}

inline nlohmann::json to_json(const BettiTable& table)
{
    nlohmann::json out;
    out["n"] = table.n;
    auto entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries)
        entries.push_back({key.first, key.second, value.str()});
    out["entries"] = entries;
    return out;
}

inline nlohmann::json to_json(const VerifyReport& r, bool with_graph)
{
    nlohmann::json out;
    out["schema_version"] = kJsonSchemaVersion;
    out["instance"] = r.instance;
    const auto& s = r.stats;
    out["stats"] = {{"n", s.n},
                    {"m", s.m},
                    {"chordal", s.chordal},
                    {"complete", s.complete},
                    {"kappa", s.kappa},
                    {"kappa_tilde", s.kappa_tilde},
                    {"d", s.d},
                    {"c_vector", to_json(s.c)},
                    {"b_vector", to_json(s.b)},
                    {"d_i", s.domination}};
    auto claims = nlohmann::json::array();
    for (const auto& c : r.claims)
    {
        nlohmann::json row{{"claim", c.id}, {"status", to_string(c.status)}};
        if (!c.witness.empty())
            row["witness"] = c.witness;
        claims.push_back(row);
    }
    out["claims"] = claims;
    out["ok"] = r.ok();
    if (with_graph || !r.ok())
        out["edges"] = edges_json(r.graph);
    return out;
}

}   // namespace chordal

#endif
