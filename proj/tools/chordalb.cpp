/**
 * chordalb: command-line front end for the chordal b-vector library.
 *
 * Exit codes: 0 ok, 2 input error, 3 precondition violation, 4 resource
 * cap, 5 claim failure in verify, 1 internal verification failure.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <chordal.hpp>
#include <chordal/json.hpp>

namespace {

using chordal::BigInt;
using chordal::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;
constexpr int kExitClaim = 5;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
    {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw chordal::InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path)
{
    Graph g = chordal::parse_graph(read_input(path));
    if (g.order() == 0)
        throw chordal::InputError("graph has no vertices");
    return g;
}

std::vector<long long> parse_int_list(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        std::size_t used = 0;
        long long v = 0;
        try
        {
            v = std::stoll(item, &used);
        }
        catch (const std::exception&)
        {
            throw chordal::InputError("not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw chordal::InputError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw chordal::InputError("empty integer list");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json word_json(const chordal::SDWord& w)
{
    const Graph g = chordal::graph_from_word(w);
    json out{{"schema_version", chordal::kJsonSchemaVersion},
             {"word", w.str()},
             {"n", g.order()},
             {"edges", chordal::edges_json(g)},
             {"b_vector", chordal::to_json(chordal::bvector_from_word(w))},
             {"c_vector", chordal::to_json(chordal::clique_vector(g))}};
    if (w.is_complete())
    {
        out["profile_applicable"] = false;
        out["profile"] = nullptr;
        return out;
    }
    const auto p = chordal::threshold_profile(w);
    out["profile_applicable"] = true;
    json maximal = json::array();
    for (const auto& layer : p.maximal_by_size)
        maximal.push_back(chordal::sets_json(layer));
    out["profile"] = {{"kappa", p.kappa},
                      {"minimum_cut", p.minimum_cut},
                      {"d", p.d},
                      {"maximal_cliques_by_size", maximal},
                      {"s_cliques", chordal::sets_json(p.s_cliques)},
                      {"d_i", p.domination},
                      {"components_after_cut", p.components_after_cut}};
    return out;
}

int cmd_invariants(const std::string& path)
{
    const Graph g = load_graph(path);
    const bool chordal_graph = chordal::is_chordal(g).chordal;
    const auto c = chordal::clique_vector(g);
    emit({{"schema_version", chordal::kJsonSchemaVersion},
          {"n", g.order()},
          {"m", g.size()},
          {"chordal", chordal_graph},
          {"complete", g.is_complete()},
          {"theorems_applicable", chordal_graph && !g.is_complete()},
          {"c_vector", chordal::to_json(c)},
          {"b_vector", chordal::to_json(chordal::b_from_c(c))},
          {"kappa", chordal::vertex_connectivity(g)},
          {"kappa_tilde", chordal::kappa_tilde(g)},
          {"d_i", chordal::dominating_numbers(g)},
          {"maximal_clique_count", chordal::maximal_cliques(g).size()},
          {"clique_number", c.size()}});
    return kExitOk;
}

int cmd_word(const std::string& word, const std::string& from_b)
{
    if (!from_b.empty())
    {
        chordal::BVector b;
        for (long long v : parse_int_list(from_b))
            b.values.emplace_back(v);
        emit(word_json(chordal::word_from_bvector(b)));
        return kExitOk;
    }
    if (word.empty())
        throw chordal::InputError("word: give a word or --from-b");
    emit(word_json(chordal::SDWord::parse(word)));
    return kExitOk;
}

int cmd_shift(const std::string& path, const std::string& clique)
{
    const Graph g = load_graph(path);
    std::optional<std::vector<chordal::Vertex>> k;
    if (!clique.empty())
    {
        std::vector<chordal::Vertex> set;
        for (long long v : parse_int_list(clique))
        {
            if (v < 0 || v >= static_cast<long long>(g.order()))
                throw chordal::InputError("clique vertex " + std::to_string(v) + " out of range");
            set.push_back(static_cast<chordal::Vertex>(v));
        }
        k = set;
    }
    const auto r = chordal::alpha_shift(g, k);
    const auto bijection = chordal::clique_bijection_check(g, r);
    const auto c = chordal::clique_vector(r.shifted_graph);
    json edge_map = json::array();
    for (const auto& [from, to] : r.edge_map)
        edge_map.push_back({{from.first, from.second}, {to.first, to.second}});
    json conditions = json::object();
    for (const auto& cond : r.special_report.conditions)
        conditions[cond.name] = cond.passed ? json("pass") : json(cond.witness);
    const bool same_c = c == chordal::clique_vector(g);
    const bool same_kappa = chordal::vertex_connectivity(g) == chordal::vertex_connectivity(r.shifted_graph);
    emit({{"schema_version", chordal::kJsonSchemaVersion},
          {"word", r.word.str()},
          {"word_labeling", r.word_labeling},
          {"edges", chordal::edges_json(r.shifted_graph)},
          {"clique_vector", chordal::to_json(c)},
          {"b_vector", chordal::to_json(chordal::b_from_c(c))},
          {"edge_map", edge_map},
          {"peo", r.peo_used.order()},
          {"k_clique", r.k_clique},
          {"special_conditions_hold", r.special_conditions_hold},
          {"special_conditions", conditions},
          {"checks",
           {{"threshold", true},
            {"c_vector_preserved", same_c},
            {"kappa_preserved", same_kappa},
            {"clique_bijection", bijection.ok()}}},
          {"d_i", {{"input", chordal::dominating_numbers(g)}, {"shifted", chordal::dominating_numbers(r.shifted_graph)}}}});
    return same_c && same_kappa && bijection.ok() ? kExitOk : kExitInternal;
}

struct BettiOptions {
    std::string path;
    std::string method = "hochster";
    std::size_t cap = 10;
    bool complex_input = false;
    unsigned jobs = 1;
};

int cmd_betti(const BettiOptions& opt)
{
    chordal::SimplicialComplex delta;
    std::optional<Graph> g;
    if (opt.complex_input)
    {
        std::istringstream in(read_input(opt.path));
        delta = chordal::parse_complex(in);
        if (opt.method != "hochster")
            throw chordal::PreconditionError("betti: complex input supports only --method hochster");
    }
    else
    {
        g = load_graph(opt.path);
        delta = chordal::clique_complex(*g);
    }
    const std::size_t n = delta.n;

    auto closed_form_precondition = [&] {
        if (!chordal::is_chordal(*g).chordal)
            throw chordal::PreconditionError("betti: closed formulas need a chordal graph (2-linear resolution)");
    };
    auto hvector_table = [&] {
        closed_form_precondition();
        const auto c = chordal::clique_vector(*g);
        const auto h = chordal::h_from_f(chordal::f_from_c(c), c.size());
        return chordal::table_from_linear_values(chordal::betti_from_hvector(h, n, c.size(), 2), n, 2);
    };
    auto bvector_table = [&] {
        closed_form_precondition();
        const auto c = chordal::clique_vector(*g);
        return chordal::table_from_linear_values(chordal::betti_from_bvector(chordal::b_from_c(c), n, c.size()),
                                                 n, 2);
    };
    auto strand_table = [&] {
        return chordal::table_from_strand(chordal::linear_strand_hochster(*g, opt.jobs), n);
    };
    auto profile_json = [](const chordal::BettiTable& t) {
        const auto p = chordal::homological_profile(t);
        return json{{"pd", p.pd}, {"depth", p.depth}, {"two_linear", p.is_two_linear},
                    {"kappa_from_betti", p.kappa_from_betti}};
    };

    json out{{"schema_version", chordal::kJsonSchemaVersion}, {"method", opt.method}};
    if (opt.method == "hochster")
    {
        const auto t = chordal::full_betti_hochster(delta, opt.cap, opt.jobs);
        out["table"] = chordal::to_json(t);
        out["profile"] = profile_json(t);
    }
    else if (opt.method == "hvector")
        out["table"] = chordal::to_json(hvector_table());
    else if (opt.method == "bvector")
        out["table"] = chordal::to_json(bvector_table());
    else if (opt.method == "strand")
        out["table"] = chordal::to_json(strand_table());
    else
    {
        // all: every route that applies, plus pairwise agreement with the strand.
        json tables = json::object();
        const auto strand = strand_table();
        tables["strand"] = chordal::to_json(strand);
        json agree = json::object();
        const bool is_chordal = chordal::is_chordal(*g).chordal;
        chordal::BettiTable tables_hvector;
        if (is_chordal)
        {
            const auto h = hvector_table();
            tables_hvector = h;
            const auto b = bvector_table();
            tables["hvector"] = chordal::to_json(h);
            tables["bvector"] = chordal::to_json(b);
            agree["hvector_bvector"] = h == b;
            agree["hvector_strand"] = h == strand;
        }
        if (n <= opt.cap)
        {
            const auto full = chordal::full_betti_hochster(delta, opt.cap, opt.jobs);
            tables["hochster"] = chordal::to_json(full);
            // The strand route sees only j = i+1; compare on that strand.
            chordal::BettiTable linear = full;
            for (auto it = linear.entries.begin(); it != linear.entries.end();)
                it = it->first.first >= 1 && it->first.second != it->first.first + 1 ? linear.entries.erase(it)
                                                                                      : std::next(it);
            agree["hochster_strand"] = linear == strand;
            if (is_chordal)
                agree["hochster_hvector"] = full == chordal::BettiTable(tables_hvector);
            out["profile"] = profile_json(full);
        }
        out["tables"] = tables;
        out["agreement"] = agree;
        bool all_agree = true;
        for (const auto& [key, value] : agree.items())
            all_agree = all_agree && value.get<bool>();
        out["all_agree"] = all_agree;
    }
    emit(out);
    return kExitOk;
}

struct VerifyCommand {
    std::string file;
    std::vector<std::uint64_t> random;   // n trials seed
    std::vector<std::uint64_t> corpus;   // count max_n seed
    bool corpus_flag = false;
    std::size_t cap = 10;
    unsigned jobs = 1;
    bool quiet = false;
};

int cmd_verify(const VerifyCommand& opt)
{
    chordal::VerifyOptions vopt;
    vopt.betti_cap = opt.cap;
    vopt.jobs = opt.jobs;
    std::size_t instances = 0, failed = 0, skipped = 0;
    auto run = [&](const Graph& g, const std::string& id) {
        const auto r = chordal::verify_graph(g, id, vopt);
        ++instances;
        if (!r.ok())
            ++failed;
        if (!r.stats.chordal || r.stats.complete)
            ++skipped;
        if (!opt.quiet || !r.ok())
            std::cout << chordal::to_json(r, false).dump() << '\n';
    };

    if (!opt.file.empty())
        run(load_graph(opt.file), opt.file);
    else if (!opt.random.empty())
    {
        const std::size_t n = opt.random[0];
        if (n < 2 || n > 12)
            throw chordal::PreconditionError("verify --random: n must lie in 2..12");
        for (std::uint64_t k = 0; k < opt.random[1]; ++k)
        {
            const std::uint64_t seed = chordal::derive_seed(opt.random[2], k);
            chordal::Rng rng(seed);
            Graph g;
            do
                g = chordal::random_chordal(n, 1 + rng.below(n - 1), rng.next());
            while (g.is_complete());
            run(g, "random:" + std::to_string(n) + ":" + std::to_string(opt.random[2]) + ":" + std::to_string(k));
        }
    }
    else
    {
        std::uint64_t count = 500, max_n = 12, seed = 2024;
        if (!opt.corpus.empty())
        {
            count = opt.corpus[0];
            max_n = opt.corpus[1];
            seed = opt.corpus[2];
        }
        if (max_n < 3 || max_n > 12)
            throw chordal::PreconditionError("verify --corpus: max_n must lie in 3..12");
        const auto corpus = chordal::chordal_corpus(count, max_n, seed);
        for (std::size_t k = 0; k < corpus.size(); ++k)
            run(corpus[k], "corpus:" + std::to_string(seed) + ":" + std::to_string(k));
    }
    std::cerr << "verify: " << instances << " instances, " << failed << " with failing claims, " << skipped
              << " skipped\n";
    return failed ? kExitClaim : kExitOk;
}

int cmd_gen(const std::vector<std::uint64_t>& chordal_args, const std::vector<std::uint64_t>& threshold_args)
{
    if (!chordal_args.empty())
    {
        if (chordal_args[0] < 1)
            throw chordal::PreconditionError("gen --chordal: n must be positive");
        chordal::write_graph(std::cout, chordal::random_chordal(chordal_args[0], chordal_args[1], chordal_args[2]));
        return kExitOk;
    }
    if (!threshold_args.empty())
    {
        std::cout << chordal::random_word(threshold_args[0], threshold_args[1]).str() << '\n';
        return kExitOk;
    }
    throw chordal::InputError("gen: give --chordal or --threshold");
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Clique vectors, b-vectors, shifting and Betti numbers of chordal graphs"};
    app.require_subcommand(1);

    std::string inv_path;
    auto* inv = app.add_subcommand("invariants", "Graph invariants as JSON");
    inv->add_option("path", inv_path, "graph file (default: stdin)");

    std::string word, from_b;
    auto* wd = app.add_subcommand("word", "Threshold graph of an SD-word, or the word of a b-vector");
    wd->add_option("word", word, "word over {S,D}");
    wd->add_option("--from-b", from_b, "comma-separated positive b-vector");

    std::string shift_path, shift_clique;
    auto* sh = app.add_subcommand("shift", "Shift a chordal graph onto a threshold graph");
    sh->add_option("path", shift_path, "graph file (default: stdin)");
    sh->add_option("--clique", shift_clique, "maximum clique x_1,...,x_k to shift onto");

    BettiOptions betti;
    auto* bt = app.add_subcommand("betti", "Graded Betti numbers of the Stanley-Reisner ring");
    bt->add_option("path", betti.path, "graph file, or complex file with --complex (default: stdin)");
    bt->add_option("--method", betti.method, "route")
        ->check(CLI::IsMember({"hochster", "hvector", "bvector", "strand", "all"}));
    bt->add_option("--cap", betti.cap, "largest n for the full Hochster table");
    bt->add_flag("--complex", betti.complex_input, "read a simplicial complex instead of a graph");
    bt->add_option("--jobs", betti.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    VerifyCommand verify;
    auto* vf = app.add_subcommand("verify", "Check every claim on one graph or a random stream");
    auto* vf_file = vf->add_option("--file", verify.file, "graph file");
    auto* vf_random = vf->add_option("--random", verify.random, "n trials seed")->expected(3);
    auto* vf_corpus = vf->add_option("--corpus", verify.corpus, "count max_n seed (default 500 12 2024)")->expected(3);
    vf_file->excludes(vf_random)->excludes(vf_corpus);
    vf_random->excludes(vf_corpus);
    vf->add_option("--cap", verify.cap, "largest n for full Hochster tables");
    vf->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    vf->add_flag("--quiet", verify.quiet, "print only failing instances");

    std::vector<std::uint64_t> gen_chordal, gen_threshold;
    auto* gn = app.add_subcommand("gen", "Deterministic random instances");
    auto* gn_c = gn->add_option("--chordal", gen_chordal, "n width seed")->expected(3);
    auto* gn_t = gn->add_option("--threshold", gen_threshold, "length seed")->expected(2);
    gn_c->excludes(gn_t);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitInput;
    }

    try
    {
        if (*inv)
            return cmd_invariants(inv_path);
        if (*wd)
            return cmd_word(word, from_b);
        if (*sh)
            return cmd_shift(shift_path, shift_clique);
        if (*bt)
            return cmd_betti(betti);
        if (*vf)
            return cmd_verify(verify);
        if (*gn)
            return cmd_gen(gen_chordal, gen_threshold);
    }
    catch (const chordal::InputError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const chordal::PreconditionError& e)
    {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    }
    catch (const chordal::CapExceeded& e)
    {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitCap;
    }
    catch (const chordal::VerificationError& e)
    {
        std::cerr << "internal verification failed: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}
