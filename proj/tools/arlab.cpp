// arlab: command-line front end for the AR-labeling library.
//
// Exit codes: 0 success/match, 1 verification or claim failure,
// 2 input error, 3 budget exhausted.

#include <arlab/repro.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <regex>

using namespace arlab;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2, out_of_budget = 3 };

auto parse_duration(const std::string & text) -> Budget
{
    static const std::regex re(R"(^\s*(\d+(?:\.\d+)?)\s*(ms|s|m|h)?\s*$)");
    std::smatch m;
    if (! std::regex_match(text, m, re))
        throw InvalidInput("bad duration '" + text + "' (expected e.g. 500ms, 30s, 5m, 2h)");
    const double v = std::stod(m[1]);
    const std::string unit = m[2].matched ? m[2].str() : "s";
    const double scale = unit == "ms" ? 1 : unit == "s" ? 1e3 : unit == "m" ? 60e3 : 3600e3;
    return Budget(static_cast<Budget::rep>(v * scale));
}

auto parse_int(const std::string & text, const std::string & what) -> int
{
    int v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw InvalidInput(what + ": expected an integer, got '" + text + "'");
    return v;
}

auto family(const std::vector<std::string> & spec) -> Graph
{
    if (spec.empty())
        throw InvalidInput("missing graph: give a family spec or --graph FILE");
    const auto & kind = spec[0];
    auto arg = [&](std::size_t i) {
        if (i >= spec.size())
            throw InvalidInput("family '" + kind + "' needs more arguments");
        return parse_int(spec[i], kind);
    };
    auto arity = [&](std::size_t n) {
        if (spec.size() != n + 1)
            throw InvalidInput("family '" + kind + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (kind == "star") { arity(1); return star(arg(1)); }
    if (kind == "bistar") { arity(2); return bistar(arg(1), arg(2)); }
    if (kind == "complete") { arity(1); return complete(arg(1)); }
    if (kind == "bipartite") { arity(2); return complete_bipartite(arg(1), arg(2)); }
    if (kind == "wheel") { arity(1); return wheel(arg(1)); }
    if (kind == "cycle") { arity(1); return cycle(arg(1)); }
    if (kind == "path") { arity(1); return path(arg(1)); }
    if (kind == "multipartite") {
        arity(1);
        std::vector<int> parts;
        std::stringstream ss(spec[1]);
        for (std::string tok ; std::getline(ss, tok, ',') ;)
            parts.push_back(parse_int(tok, kind));
        return complete_multipartite(parts);
    }
    throw InvalidInput("unknown family '" + kind + "'");
}

auto set_text(std::span<const Value> s) -> std::string
{
    std::string out;
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

struct Common
{
    std::string budget = "60s";
    unsigned threads = 1;
    std::string output;
    std::string format = "text";
    bool symmetry = false;

    auto config() const -> SearchConfig { return { parse_duration(budget), std::max(1u, threads), symmetry }; }
    auto machine() const -> bool { return format == "machine"; }
};

auto add_common(CLI::App * cmd, Common & c) -> void
{
    cmd->add_option("--budget", c.budget, "time budget, e.g. 500ms, 30s, 5m, 2h");
    cmd->add_option("--threads", c.threads, "worker threads");
    cmd->add_option("--output", c.output, "output path");
    cmd->add_option("--format", c.format, "text or machine")->check(CLI::IsMember({ "text", "machine" }));
    cmd->add_flag("--symmetry", c.symmetry, "fix the largest label on one edge of edge-transitive graphs");
}

auto cmd_es(int n, const Common & c) -> int
{
    if (n < 1)
        throw InvalidInput("es: n must be positive");
    EsRecord rec = n <= 24 ? es(n, c.config()) : es_table(n, c.config()).at(n);
    if (c.machine()) {
        nlohmann::json j{ { "n", rec.n }, { "status", to_string(rec.status) }, { "lower", rec.lower },
            { "upper", rec.upper }, { "nodes", rec.nodes } };
        if (rec.witness)
            j["witness"] = std::vector<Value>(rec.witness->elements().begin(), rec.witness->elements().end());
        std::cout << j.dump() << "\n";
    }
    else if (rec.exact()) {
        std::cout << "ES(" << n << ") = " << rec.value() << " (" << to_string(rec.status) << ")\n";
        std::cout << "witness: " << set_text(rec.witness->elements()) << "\n";
    }
    else {
        std::cout << "ES(" << n << ") in [" << rec.lower << ", " << rec.upper << "] (bound-only)\n";
        if (rec.witness)
            std::cout << "upper witness: " << set_text(rec.witness->elements()) << "\n";
    }
    return rec.exact() ? ok : out_of_budget;
}

auto cmd_dss_check(const std::vector<Value> & xs, const Common & c) -> int
{
    const bool good = is_dss(xs);
    std::optional<SubsetCollision> hit;
    if (! good)
        hit = find_collision(xs);
    if (c.machine()) {
        nlohmann::json j{ { "dss", good } };
        if (hit)
            j["collision"] = { hit->first, hit->second };
        std::cout << j.dump() << "\n";
    }
    else if (good)
        std::cout << "DSS\n";
    else {
        std::cout << "not DSS";
        if (hit)
            std::cout << ": {" << set_text(hit->first) << "} and {" << set_text(hit->second) << "} have equal sums";
        std::cout << "\n";
    }
    return good ? ok : failed;
}

auto cmd_dss_enum(int size, Value cap, const Common & c) -> int
{
    if (size < 1 || cap < 1)
        throw InvalidInput("dss enum: --size and --cap must be positive");
    auto sets = enumerate_dss_sets(static_cast<std::size_t>(size), cap);
    if (c.machine()) {
        nlohmann::json j = nlohmann::json::array();
        for (auto & s : sets)
            j.push_back(std::vector<Value>(s.elements().begin(), s.elements().end()));
        std::cout << j.dump() << "\n";
    }
    else {
        for (auto & s : sets)
            std::cout << set_text(s.elements()) << "\n";
        std::cout << sets.size() << " sets\n";
    }
    return ok;
}

auto cmd_verify(const std::string & gpath, const std::string & lpath, const Common & c) -> int
{
    const auto labeling = load_labeling(lpath);
    const auto v = verify_files(gpath, lpath);
    if (c.machine())
        std::cout << nlohmann::json{ { "ok", v.ok() }, { "detail", describe(v, labeling) } }.dump() << "\n";
    else
        std::cout << (v.ok() ? "OK: AR-labeling" : "FAIL: " + describe(v, labeling)) << "\n";
    return v.ok() ? ok : failed;
}

auto cmd_ari(const std::vector<std::string> & spec, const std::string & graph_file, const std::string & log_file,
        const Common & c) -> int
{
    const Graph g = graph_file.empty() ? family(spec) : load_graph(graph_file);
    if (! graph_file.empty() && ! spec.empty())
        throw InvalidInput("give either a family spec or --graph, not both");
    if (g.edge_count() == 0)
        throw InvalidInput("graph has no edges");
    const auto res = ari(g, c.config());
    const Value m = g.edge_count();

    if (! c.output.empty() && res.witness)
        save_labeling(*res.witness, c.output);
    if (! log_file.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (auto & l : res.attempts)
            j.push_back(detail::log_json(l));
        detail::write_file(log_file, j.dump(2) + "\n");
    }

    if (c.machine()) {
        nlohmann::json j{ { "edges", m }, { "status", res.exact() ? "exact" : "bounds-only-timeout" },
            { "lower", res.lower }, { "upper", res.upper } };
        if (res.witness)
            j["labels"] = res.witness->labels;
        std::cout << j.dump() << "\n";
    }
    else if (res.exact()) {
        std::cout << "ARI = " << res.value() << " (m = " << m << ")\n";
        std::cout << "AR-graph: " << (res.value() == m ? "yes" : "no") << "\n";
        if (res.value() == m + 1)
            std::cout << "almost AR\n";
        std::cout << "labels: " << set_text(res.witness->labels) << "\n";
    }
    else {
        std::cout << "ARI in [" << res.lower << ", " << res.upper << "] (m = " << m << ", budget exhausted)\n";
        std::cout << "AR-graph: " << (res.lower > m ? "no" : "unknown") << "\n";
    }
    return res.exact() ? ok : out_of_budget;
}

auto cmd_reproduce(bool heavy, const Common & c) -> int
{
    ReproOptions opts;
    opts.search = c.config();
    opts.search.symmetry_breaking = true;
    opts.include_heavy = heavy;
    const auto rep = reproduce(opts);
    if (c.machine())
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << report_text(rep);
    if (! c.output.empty())
        write_artifacts(rep, c.output);
    return rep.mismatches() ? failed : ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{ "AR-labelings, distinct subset sums and the ES-sequence" };
    app.require_subcommand(1);
    Common common;
    std::function<int ()> action;

    int es_n = 0;
    auto * es_cmd = app.add_subcommand("es", "compute ES(n)");
    es_cmd->add_option("n", es_n)->required();
    add_common(es_cmd, common);
    es_cmd->callback([&] { action = [&] { return cmd_es(es_n, common); }; });

    auto * dss_cmd = app.add_subcommand("dss", "distinct-subset-sum sets");
    dss_cmd->require_subcommand(1);
    std::vector<Value> check_xs;
    auto * check_cmd = dss_cmd->add_subcommand("check", "test a set");
    check_cmd->add_option("elements", check_xs)->required();
    add_common(check_cmd, common);
    check_cmd->callback([&] { action = [&] { return cmd_dss_check(check_xs, common); }; });
    int enum_size = 0;
    Value enum_cap = 0;
    auto * enum_cmd = dss_cmd->add_subcommand("enum", "list all sets of a size with bounded maximum");
    enum_cmd->add_option("--size", enum_size)->required();
    enum_cmd->add_option("--cap", enum_cap)->required();
    add_common(enum_cmd, common);
    enum_cmd->callback([&] { action = [&] { return cmd_dss_enum(enum_size, enum_cap, common); }; });

    std::string vgraph, vlabels;
    auto * verify_cmd = app.add_subcommand("verify", "check a labeling file against a graph file");
    verify_cmd->add_option("graph", vgraph)->required();
    verify_cmd->add_option("labeling", vlabels)->required();
    add_common(verify_cmd, common);
    verify_cmd->callback([&] { action = [&] { return cmd_verify(vgraph, vlabels, common); }; });

    std::vector<std::string> spec;
    std::string graph_file, log_file;
    auto * ari_cmd = app.add_subcommand("ari", "AR-index of a family graph or graph file");
    ari_cmd->add_option("family", spec, "star N | bistar A B | complete N | bipartite M N | multipartite A,B,C | wheel N | cycle N | path N");
    ari_cmd->add_option("--graph", graph_file, "graph JSON file");
    ari_cmd->add_option("--log", log_file, "write per-k search log");
    add_common(ari_cmd, common);
    ari_cmd->callback([&] { action = [&] { return cmd_ari(spec, graph_file, log_file, common); }; });

    bool include_heavy = false;
    auto * repro_cmd = app.add_subcommand("reproduce", "re-derive every result and report match/mismatch");
    repro_cmd->add_flag("--include-heavy", include_heavy, "also run the long searches");
    add_common(repro_cmd, common);
    repro_cmd->callback([&] { action = [&] { return cmd_reproduce(include_heavy, common); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        return action();
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
    catch (const InvalidInput & e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
    catch (const RangeError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
    catch (const UnsupportedSize & e) {
        std::cerr << "error: " << e.what() << "\n";
        return out_of_budget;
    }
}
