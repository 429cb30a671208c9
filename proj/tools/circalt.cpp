#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circalt/altitude.hpp"
#include "circalt/graph.hpp"
#include "circalt/homcore.hpp"
#include "circalt/monotonic.hpp"
#include "circalt/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUndefined = 4;

struct InputSpec {
    std::string g6;
    std::string gen;
    std::string edges_path;
    std::string dimacs_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

circalt::Graph parse_gen(const std::string& spec);

circalt::Graph parse_gen_product(const std::string& args) {
    // Accept both the UTF-8 box symbol and a plain "x" as the separator.
    static const std::string box = "\xE2\x96\xA1";
    auto split = args.find(box);
    std::size_t sep_len = box.size();
    if (split == std::string::npos) {
        split = args.find('x');
        sep_len = 1;
    }
    if (split == std::string::npos)
        throw std::runtime_error("product spec needs two factors, e.g. product:cycle:5xcomplete:2");
    return circalt::cartesian_product(parse_gen(args.substr(0, split)),
                                      parse_gen(args.substr(split + sep_len)));
}

circalt::Graph parse_gen(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::runtime_error("generator spec needs name:args");
    std::string name = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    if (name == "product") return parse_gen_product(args);
    if (name == "kab") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw std::runtime_error("kab needs a,b");
        return circalt::complete_bipartite(std::stoi(args.substr(0, comma)),
                                           std::stoi(args.substr(comma + 1)));
    }
    int n = std::stoi(args);
    if (name == "cycle") return circalt::cycle(n);
    if (name == "complete") return circalt::complete(n);
    if (name == "path") return circalt::path(n);
    throw std::runtime_error("unknown generator \"" + name + "\"");
}

circalt::Graph load_graph(const InputSpec& in) {
    int given = !in.g6.empty() + !in.gen.empty() + !in.edges_path.empty() +
                !in.dimacs_path.empty();
    if (given != 1)
        throw std::runtime_error("exactly one of --g6/--gen/--edges/--dimacs is required");
    if (!in.g6.empty()) return circalt::parse_graph6(in.g6);
    if (!in.gen.empty()) return parse_gen(in.gen);
    if (!in.edges_path.empty()) return circalt::parse_edge_list(read_file(in.edges_path));
    return circalt::parse_dimacs(read_file(in.dimacs_path));
}

void add_input_options(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("--g6", in.g6, "graph6 string");
    cmd->add_option("--gen", in.gen,
                    "generator spec: cycle:n, complete:n, path:n, kab:a,b, product:SPECxSPEC");
    cmd->add_option("--edges", in.edges_path, "edge-list file (\"n <count>\" then \"u v\" lines)");
    cmd->add_option("--dimacs", in.dimacs_path, "DIMACS .col file");
}

json result_json(const circalt::Graph& g, const circalt::AltitudeResult& r,
                 const circalt::CertificateReport& cert) {
    json j;
    j["schema_version"] = 1;
    j["graph6"] = circalt::encode_graph6(g);
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["value"] = r.value;
    j["exact"] = r.exact;
    j["lower_bound"] = r.lower_bound;
    j["method"] = circalt::method_name(r.method);
    j["witness"] = r.witness.seq;
    j["per_block"] = json::array();
    for (const auto& b : r.per_block)
        j["per_block"].push_back({{"block", b.block_id}, {"value", b.value}});
    if (r.exhausted_block) j["exhausted_block"] = *r.exhausted_block;
    j["certificate"] = {{"upper_ok", cert.upper_ok}, {"detail", cert.detail}};
    if (cert.lower_ok) j["certificate"]["lower_ok"] = *cert.lower_ok;
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"orderings", r.stats.orderings},
                  {"seconds", r.stats.seconds}};
    return j;
}

int run_altitude(const InputSpec& in, const circalt::SearchOptions& opt,
                 const std::string& format, const std::string& method) {
    auto g = load_graph(in);
    circalt::AltitudeResult r;
    if (method == "oracle")
        r = circalt::altitude_oracle(g);
    else if (method == "bb")
        r = circalt::altitude_bb(g, {}, opt);
    else
        r = circalt::altitude(g, opt);
    auto cert = circalt::certify(g, r);

    if (format == "json") {
        std::cout << result_json(g, r, cert).dump() << "\n";
    } else {
        std::cout << "graph " << circalt::encode_graph6(g) << "  n=" << g.vertex_count()
                  << " m=" << g.edge_count() << "\n";
        std::cout << "circular altitude: " << r.value << (r.exact ? "" : " (upper bound)")
                  << "  [" << circalt::method_name(r.method) << "]\n";
        if (!r.exact) std::cout << "proven lower bound: " << r.lower_bound << "\n";
        std::cout << "witness ordering:";
        for (int v : r.witness.seq) std::cout << " " << v;
        std::cout << "\n";
        for (const auto& b : r.per_block)
            std::cout << "block " << b.block_id << ": altitude " << b.value << "\n";
        std::cout << "certificate: upper " << (cert.upper_ok ? "ok" : "FAIL");
        if (cert.lower_ok) std::cout << ", lower " << (*cert.lower_ok ? "ok" : "FAIL");
        std::cout << "\n";
    }
    return r.exact ? kExitOk : kExitBudget;
}

int run_bounds(const InputSpec& in, const circalt::SearchOptions& opt,
               const std::string& format) {
    auto g = load_graph(in);
    if (!g.has_edges()) {
        std::cerr << "circular chromatic number is undefined for edgeless graphs\n";
        return kExitUndefined;
    }
    int omega = circalt::clique_number(g);
    auto gir = circalt::girth(g);
    auto chi = circalt::circular_chromatic(g);
    auto r = circalt::altitude(g, opt);
    bool sandwich = omega <= r.value && circalt::Rational(r.value, 1) <= chi.value;
    if (format == "json") {
        json j;
        j["schema_version"] = 1;
        j["graph6"] = circalt::encode_graph6(g);
        j["n"] = g.vertex_count();
        j["omega"] = omega;
        j["girth"] = gir ? json(*gir) : json();
        j["chi_c"] = {{"p", chi.p}, {"q", chi.q}};
        j["altitude"] = r.value;
        j["exact"] = r.exact;
        j["sandwich_ok"] = sandwich;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "omega:    " << omega << "\n"
                  << "girth:    " << (gir ? std::to_string(*gir) : "inf") << "\n"
                  << "chi_c:    " << chi.value.str() << "\n"
                  << "altitude: " << r.value << (r.exact ? "" : " (upper bound)") << "\n"
                  << "sandwich omega <= altitude <= chi_c: " << (sandwich ? "ok" : "FAIL")
                  << "\n";
    }
    if (!r.exact) return kExitBudget;
    return sandwich ? kExitOk : kExitPropertyFailure;
}

int run_verify(const std::string& suite, int max_n, std::uint64_t seed, int random_count,
               const std::string& pairs_mode, const std::string& format) {
    using namespace circalt;
    std::vector<PropertyReport> reports;
    int catalog_n = std::min(max_n, 7);

    if (suite == "blocks" || suite == "all") {
        std::vector<Graph> graphs;
        for (int n = 1; n <= catalog_n; ++n)
            for (const auto& g : connected_catalog(n)) graphs.push_back(g);
        for (auto& g : random_cut_vertex_graphs(8, random_count, seed)) graphs.push_back(g);
        auto rep = check_block_theorem(graphs);
        rep.seed = seed;
        reports.push_back(std::move(rep));
    }
    if (suite == "product" || suite == "all") {
        std::vector<std::pair<Graph, Graph>> pairs;
        if (pairs_mode != "random") {
            std::vector<Graph> family{complete(1), complete(2), complete(3),
                                      path(3),     path(4),     cycle(4),
                                      cycle(5)};
            for (std::size_t i = 0; i < family.size(); ++i)
                for (std::size_t j = i; j < family.size(); ++j)
                    if (family[i].vertex_count() * family[j].vertex_count() <= 10)
                        pairs.emplace_back(family[i], family[j]);
        }
        if (pairs_mode != "small") {
            std::mt19937_64 rng(seed);
            while (pairs.size() < 60) {
                int ng = 1 + static_cast<int>(rng() % 5);
                int nh = 1 + static_cast<int>(rng() % 5);
                if (ng * nh > 10) continue;
                Graph g = random_graph(ng, 0.5, rng);
                Graph h = random_graph(nh, 0.5, rng);
                pairs.emplace_back(std::move(g), std::move(h));
            }
        }
        auto rep = check_product_theorem(pairs);
        rep.seed = seed;
        reports.push_back(std::move(rep));
    }
    if (suite == "bounds" || suite == "all") {
        std::vector<Graph> graphs;
        for (int n = 1; n <= std::min(catalog_n, 6); ++n)
            for (const auto& g : graph_catalog(n)) graphs.push_back(g);
        auto rep = check_bounds(graphs);
        rep.seed = seed;
        reports.push_back(std::move(rep));
    }
    if (suite == "hom" || suite == "all") {
        auto pairs = hom_equivalent_pairs(random_count / 2 + 1, seed);
        for (auto& p : hom_pairs(random_count / 2 + 1, seed + 1)) pairs.push_back(std::move(p));
        auto rep = check_hom_invariance(pairs);
        rep.seed = seed;
        reports.push_back(std::move(rep));
    }

    bool all_passed = true;
    for (const auto& rep : reports) {
        all_passed = all_passed && rep.passed();
        std::cout << (format == "json" ? report_json(rep) : report_text(rep)) << "\n";
    }
    return all_passed ? kExitOk : kExitPropertyFailure;
}

int run_batch(const std::string& input_path, const circalt::SearchOptions& opt,
              const std::string& format) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input_path.empty()) {
        file.open(input_path);
        if (!file) {
            std::cerr << "cannot open " << input_path << "\n";
            return kExitParse;
        }
        in = &file;
    }
    bool parse_errors = false;
    bool exhausted = false;
    json rows = json::array();
    if (format == "csv")
        std::cout << "graph6,n,edges,omega,girth,altitude,method,nodes,seconds\n";
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto g = circalt::parse_graph6(line);
            auto r = circalt::altitude(g, opt);
            exhausted = exhausted || !r.exact;
            int omega = circalt::clique_number(g);
            auto gir = circalt::girth(g);
            if (format == "json") {
                rows.push_back({{"graph6", circalt::encode_graph6(g)},
                                {"n", g.vertex_count()},
                                {"edges", g.edge_count()},
                                {"omega", omega},
                                {"girth", gir ? json(*gir) : json()},
                                {"altitude", r.value},
                                {"exact", r.exact},
                                {"method", circalt::method_name(r.method)},
                                {"nodes", r.stats.nodes},
                                {"seconds", r.stats.seconds}});
            } else {
                std::cout << circalt::encode_graph6(g) << "," << g.vertex_count() << ","
                          << g.edge_count() << "," << omega << ","
                          << (gir ? std::to_string(*gir) : "inf") << "," << r.value << ","
                          << circalt::method_name(r.method) << "," << r.stats.nodes << ","
                          << r.stats.seconds << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            parse_errors = true;
        }
    }
    if (format == "json") std::cout << json({{"schema_version", 1}, {"rows", rows}}).dump() << "\n";
    if (parse_errors) return kExitPropertyFailure;
    return exhausted ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circalt: exact circular altitude of small graphs"};
    app.require_subcommand(1);

    circalt::SearchOptions opt;
    std::string format = "text";
    InputSpec input;
    std::string method = "blocks";
    std::string suite = "all";
    std::string pairs_mode = "all";
    std::string input_path;
    int max_n = 6;
    std::uint64_t seed = 1;
    int random_count = 200;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);
        cmd->add_option("--budget", opt.node_budget, "search node budget, 0 = unlimited");
        cmd->add_option("--seed", seed);
    };

    auto* alt = app.add_subcommand("altitude", "compute the circular altitude of one graph");
    add_input_options(alt, input);
    add_common(alt);
    alt->add_option("--method", method)->check(CLI::IsMember({"blocks", "bb", "oracle"}));

    auto* bounds = app.add_subcommand("bounds", "clique number, girth, chi_c and altitude");
    add_input_options(bounds, input);
    add_common(bounds);

    auto* verify = app.add_subcommand("verify", "run the theorem-check suites");
    verify->add_option("suite", suite)
        ->check(CLI::IsMember({"blocks", "product", "bounds", "hom", "all"}));
    verify->add_option("--max-n", max_n)->check(CLI::Range(1, 7));
    verify->add_option("--random", random_count, "random instances per suite");
    verify->add_option("--pairs", pairs_mode)->check(CLI::IsMember({"small", "random", "all"}));
    add_common(verify);

    auto* batch = app.add_subcommand("batch", "process graph6 lines from stdin or a file");
    batch->add_option("--input", input_path, "graph6 file (default: stdin)");
    add_common(batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (alt->parsed()) return run_altitude(input, opt, format, method);
        if (bounds->parsed()) return run_bounds(input, opt, format);
        if (verify->parsed())
            return run_verify(suite, max_n, seed, random_count, pairs_mode, format);
        if (batch->parsed())
            return run_batch(input_path, opt, format == "text" ? "csv" : format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
