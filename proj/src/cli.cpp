#include "nic/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "nic/dual.hpp"
#include "nic/error.hpp"
#include "nic/generate.hpp"
#include "nic/oracle.hpp"
#include "nic/recognize.hpp"

namespace nic {

namespace {

using nlohmann::json;

// Input error: reported on stderr with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

char first_visible(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return c;
    return '\0';
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what(), static_cast<long>(e.byte));
    }
}

// Graph from edge-list, graph6 or embedding JSON; format "" detects by content.
Graph read_graph(const std::string& text, const std::string& format) {
    std::string f = format;
    if (f.empty()) {
        char c = first_visible(text);
        f = c == '{' ? "json" : (std::isdigit(static_cast<unsigned char>(c)) || c == '#') ? "edge-list" : "graph6";
    }
    if (f == "json") return embedding_from_json(parse_json_text(text)).graph;
    if (f == "graph6") return parse_graph(text, GraphFormat::Graph6);
    if (f == "edge-list") return parse_graph(text, GraphFormat::EdgeList);
    throw InputError("unknown input format " + format);
}

NicEmbedding read_embedding(const std::string& text) { return embedding_from_json(parse_json_text(text)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json kite_set_json(const KiteSet& ks) {
    json a = json::array();
    for (const auto& k : ks) a.push_back(json::array({k[0], k[1], k[2], k[3]}));
    return a;
}

std::string rational_string(Rational r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Output sink honoring --out.
struct Sink {
    std::ostream& out;
    std::string path;
    void write(const std::string& s) const {
        if (path.empty()) {
            out << s;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InputError("cannot write " + path);
        f << s;
    }
};

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome recognize_one(const std::string& path, std::istream& in, const std::string& format, long long mult, bool multi) {
    Outcome o;
    try {
        Graph g = read_graph(read_all(path, in), format);
        RecognizeOptions opts;
        opts.step_cap_multiplier = mult;
        auto res = recognize_optimal(g, opts);
        if (res.accepted) {
            json e = embedding_to_json(*res.embedding);
            o.out = multi ? json{{"file", path}, {"embedding", e}}.dump() + "\n" : dump(e);
        } else {
            o.code = 1;
            o.err = (multi ? path + ": " : std::string()) + to_string(res.reason) + "\n";
        }
    } catch (const std::exception& e) {
        o.code = 2;
        o.err = (path.empty() ? std::string("<stdin>") : path) + ": " + e.what() + "\n";
    }
    return o;
}

json density_json(const Graph& g) {
    long long n = g.n(), m = g.m();
    long long lo = 16 * (n - 2), hi = 18 * (n - 2), fm = 5 * m;
    std::string status = fm < lo ? "below-lower-bound" : fm == lo ? "at-lower-bound" : fm < hi ? "between-bounds" : fm == hi ? "at-upper-bound" : "above-upper-bound";
    return json{{"n", n},
                {"m", m},
                {"lower_bound", rational_string(Rational(lo, 5))},
                {"upper_bound", rational_string(Rational(hi, 5))},
                {"within_bounds", fm >= lo && fm <= hi},
                {"status", status}};
}

GeneratedInstance generate_family(const std::string& family, int k, int i, std::uint64_t mask) {
    if (family == "sparsest") return gen_sparsest(k);
    if (family == "optimal") return gen_optimal(k);
    if (family == "densest-intermediate" || family == "intermediate") return gen_densest_intermediate(k, i);
    if (family == "nested-k5") {
        auto inst = gen_nested_k5(k);
        inst.witness = nested_k5_variant(k, mask);
        return inst;
    }
    if (family == "rac") return gen_rac_counterexample();
    if (family == "flip-fixture") return gen_flip_fixture();
    if (family == "k5-gadget") {
        auto k5 = k5_one_planar_embedding();
        auto gadget = np_gadget_transform(k5.graph);
        GeneratedInstance inst;
        inst.family = family;
        inst.graph = gadget.graph;
        inst.witness = gadget_embedding(gadget, k5);
        inst.expected_n = gadget.graph.n();
        inst.expected_m = gadget.graph.m();
        inst.expected_crossings = 1;
        return inst;
    }
    throw InputError("unknown family " + family);
}

}  // namespace

std::string planarization_dot(const NicEmbedding& emb) {
    Graph p = planarization(emb);
    std::string s = "graph planarization {\n";
    for (int v = 0; v < p.n(); ++v) {
        if (emb.is_dummy(v))
            s += "  x" + std::to_string(v - emb.n()) + " [shape=square, width=0.1, height=0.1, label=\"\"];\n";
        else
            s += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
    }
    auto name = [&](int v) { return emb.is_dummy(v) ? "x" + std::to_string(v - emb.n()) : "v" + std::to_string(v); };
    for (auto [u, v] : p.edges()) s += "  " + name(u) + " -- " + name(v) + ";\n";
    s += "}\n";
    return s;
}

std::string planarization_svg(const NicEmbedding& emb) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
    Graph p = planarization(emb);
    int n = p.n();
    std::vector<std::pair<double, double>> pos(n);
    if (n < 3) {
        for (int v = 0; v < n; ++v) pos[v] = {static_cast<double>(v), 0.0};
    } else {
        BGraph g(n);
        for (auto [u, v] : p.edges()) boost::add_edge(u, v, g);
        auto reindex = [&]() {
            int id = 0;
            boost::graph_traits<BGraph>::edge_iterator ei, ee;
            for (boost::tie(ei, ee) = boost::edges(g); ei != ee; ++ei) boost::put(boost::edge_index, g, *ei, id++);
        };
        std::vector<std::vector<BEdge>> storage(n);
        auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
        auto embed = [&]() {
            for (auto& s : storage) s.clear();
            reindex();
            return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                       boost::boyer_myrvold_params::embedding = embedding);
        };
        reindex();
        boost::make_connected(g);
        if (!embed()) throw Error(ErrorCode::NonPlanar, "planarization is not planar");
        boost::make_biconnected_planar(g, embedding);
        embed();
        boost::make_maximal_planar(g, embedding);
        embed();
        std::vector<int> ordering;
        boost::planar_canonical_ordering(g, embedding, std::back_inserter(ordering));
        struct Coord {
            std::size_t x, y;
        };
        std::vector<Coord> coords(n);
        auto drawing = boost::make_iterator_property_map(coords.begin(), boost::get(boost::vertex_index, g));
        boost::chrobak_payne_straight_line_drawing(g, embedding, ordering.begin(), ordering.end(), drawing);
        for (int v = 0; v < n; ++v) pos[v] = {static_cast<double>(coords[v].x), static_cast<double>(coords[v].y)};
    }
    double maxx = 1, maxy = 1;
    for (auto [x, y] : pos) maxx = std::max(maxx, x), maxy = std::max(maxy, y);
    const double scale = 40, pad = 20;
    auto X = [&](int v) { return pad + pos[v].first * scale; };
    auto Y = [&](int v) { return pad + (maxy - pos[v].second) * scale; };
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (2 * pad + maxx * scale) << "\" height=\""
      << (2 * pad + maxy * scale) << "\">\n";
    for (auto [u, v] : p.edges())
        s << "<line x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v) << "\" y2=\"" << Y(v)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int v = 0; v < n; ++v) {
        if (emb.is_dummy(v)) {
            s << "<rect x=\"" << X(v) - 3 << "\" y=\"" << Y(v) - 3 << "\" width=\"6\" height=\"6\" fill=\"red\"/>\n";
        } else {
            s << "<circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
            s << "<text x=\"" << X(v) << "\" y=\"" << Y(v) + 3 << "\" font-size=\"8\" text-anchor=\"middle\">" << v
              << "</text>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"NIC-planar graph recognition and analysis", "nicplanar"};
    app.require_subcommand(1, 1);
    std::string format, out_path;
    int jobs = 1, limit = 12, k = 2, i = 1;
    long long mult = 256;
    std::uint64_t mask = 0;
    bool maximal = false, k5 = false, optimal = false, no_prune = false, dot = false;
    std::vector<std::string> files;
    std::string file, family;

    auto* rec = app.add_subcommand("recognize", "Decide optimal NIC-planarity; prints the embedding JSON when accepted");
    rec->add_option("files", files, "Graph files (edge-list, graph6 or embedding JSON); stdin if none");
    rec->add_option("--format", format, "Input format")->check(CLI::IsMember({"edge-list", "graph6", "json"}));
    rec->add_option("--jobs", jobs, "Parallel workers over input files")->check(CLI::PositiveNumber);
    rec->add_option("--step-cap-multiplier", mult, "K4 listing budget per vertex")->check(CLI::PositiveNumber);
    rec->add_option("--out", out_path, "Write output to this path");

    auto* ver = app.add_subcommand("verify", "Verify an embedding JSON; exit 0 iff it passes");
    ver->add_option("file", file, "Embedding JSON; stdin if omitted");
    ver->add_flag("--maximal", maximal, "Also check the maximal-embedding properties");
    ver->add_flag("--k5", k5, "Also check K5 pairs sharing a crossing (small inputs)");
    ver->add_option("--out", out_path, "Write output to this path");

    auto* du = app.add_subcommand("dual", "Generalized dual with rule report, levels and sphere accounting");
    du->add_option("file", file, "Embedding JSON; stdin if omitted");
    du->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    du->add_option("--out", out_path, "Write output to this path");

    auto* den = app.add_subcommand("density", "Edge density against the maximal NIC-planar bounds");
    den->add_option("file", file, "Graph file; stdin if omitted");
    den->add_option("--format", format, "Input format")->check(CLI::IsMember({"edge-list", "graph6", "json"}));
    den->add_option("--out", out_path, "Write output to this path");

    auto* gen = app.add_subcommand("generate", "Emit a family instance as graph6 plus embedding JSON");
    gen->add_option("family", family, "sparsest | optimal | densest-intermediate | nested-k5 | rac | flip-fixture | k5-gadget")
        ->required();
    gen->add_option("--k", k, "Family parameter k");
    gen->add_option("--i", i, "Extra vertices for densest-intermediate (1..4)");
    gen->add_option("--mask", mask, "Layer selection for nested-k5");
    gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "graph6", "edge-list"}));
    gen->add_flag("--dot", dot, "Include a DOT drawing of the planarization");
    gen->add_option("--out", out_path, "Write output to this path");

    auto* ora = app.add_subcommand("oracle", "Exhaustive kite-set search on small graphs");
    ora->add_option("file", file, "Graph file; stdin if omitted");
    ora->add_option("--format", format, "Input format")->check(CLI::IsMember({"edge-list", "graph6", "json"}));
    ora->add_flag("--optimal", optimal, "Require an exact kite cover of optimal size");
    ora->add_option("--limit", limit, "Largest accepted vertex count");
    ora->add_flag("--no-prune", no_prune, "Enumerate every compatible subset");
    ora->add_option("--out", out_path, "Write output to this path");

    auto* exp = app.add_subcommand("export", "Render the planarization of an embedding");
    exp->add_option("file", file, "Embedding JSON; stdin if omitted");
    exp->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "svg"}));
    exp->add_option("--out", out_path, "Write output to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    Sink sink{out, out_path};
    try {
        if (rec->parsed()) {
            if (files.empty()) files.push_back("-");
            bool multi = files.size() > 1;
            std::vector<Outcome> results(files.size());
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (size_t idx; (idx = next++) < files.size();) results[idx] = recognize_one(files[idx], in, format, mult, multi);
            };
            int workers = std::min<int>(jobs, static_cast<int>(files.size()));
            if (workers <= 1 || std::count(files.begin(), files.end(), "-") > 0) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
                for (auto& t : pool) t.join();
            }
            std::string all;
            int code = 0;
            for (const auto& r : results) {
                all += r.out;
                err << r.err;
                code = std::max(code, r.code);
            }
            sink.write(all);
            return code;
        }
        if (ver->parsed()) {
            auto emb = read_embedding(read_all(file, in));
            MaximalCheckOptions opts;
            opts.check_k5_sharing = k5;
            auto rep = maximal || k5 ? verify_maximal_embedding(emb, opts) : verify_nic(emb);
            sink.write(dump(report_to_json(rep)));
            return rep.pass ? 0 : 1;
        }
        if (du->parsed()) {
            auto emb = read_embedding(read_all(file, in));
            auto d = build_dual(emb);
            if (format == "dot") {
                sink.write(dual_to_dot(d));
                return 0;
            }
            json j;
            j["dot"] = dual_to_dot(d);
            json nodes = json::array();
            for (const auto& node : d.nodes) nodes.push_back(json{{"label", to_string(node.label)}, {"key", node.key}});
            j["nodes"] = nodes;
            auto rules = check_adjacency_rules(d, emb.graph);
            j["rules"] = report_to_json(rules);
            j["structure"] = report_to_json(check_dual_structure(d));
            bool ok = rules.pass;
            try {
                auto lm = compute_levels(d);
                j["levels"] = lm.level;
                auto acc = quarter_sphere_accounting(d, lm);
                json spheres = json::array();
                for (size_t s = 0; s < acc.kites.size(); ++s) {
                    json quarters = json::array();
                    for (const auto& q : acc.quarters)
                        if (q.kite == acc.kites[s])
                            quarters.push_back(json{{"neighbor", d.nodes[q.neighbor].key},
                                                    {"triangle", rational_string(q.triangle)},
                                                    {"tetrahedron", rational_string(q.tetrahedron)},
                                                    {"planar_edges", rational_string(q.planar_edges())}});
                    spheres.push_back(json{{"kite", d.nodes[acc.kites[s]].key},
                                           {"planar_edges", rational_string(acc.sphere_edges[s])},
                                           {"quarters", quarters}});
                }
                j["spheres"] = spheres;
                j["total_planar_edges"] = rational_string(acc.total);
            } catch (const Error& e) {
                j["accounting_error"] = e.what();
                ok = false;
            }
            sink.write(dump(j));
            return ok ? 0 : 1;
        }
        if (den->parsed()) {
            sink.write(dump(density_json(read_graph(read_all(file, in), format))));
            return 0;
        }
        if (gen->parsed()) {
            auto inst = generate_family(family, k, i, mask);
            if (format == "graph6") {
                sink.write(serialize_graph(inst.graph, GraphFormat::Graph6) + "\n");
                return 0;
            }
            if (format == "edge-list") {
                sink.write(serialize_graph(inst.graph, GraphFormat::EdgeList));
                return 0;
            }
            json j{{"family", inst.family},
                   {"k", inst.k},
                   {"i", inst.i},
                   {"n", inst.graph.n()},
                   {"m", inst.graph.m()},
                   {"crossings", inst.expected_crossings},
                   {"graph6", serialize_graph(inst.graph, GraphFormat::Graph6)}};
            if (inst.witness) j["embedding"] = embedding_to_json(*inst.witness);
            if (dot && inst.witness) j["dot"] = planarization_dot(*inst.witness);
            sink.write(dump(j));
            return 0;
        }
        if (ora->parsed()) {
            Graph g = read_graph(read_all(file, in), format);
            OracleOptions opts;
            opts.optimal = optimal;
            opts.limit = limit;
            opts.prune = !no_prune;
            auto res = oracle_maximal_nic(g, opts);
            json sets = json::array();
            for (const auto& ks : res.kite_sets) sets.push_back(kite_set_json(ks));
            sink.write(dump(json{{"decision", res.decision}, {"kite_sets", sets}, {"candidates", res.candidates}, {"prunes", res.prunes}}));
            return res.decision ? 0 : 1;
        }
        if (exp->parsed()) {
            auto emb = read_embedding(read_all(file, in));
            auto rep = verify_nic(emb);
            if (!rep.pass) throw InputError("embedding fails verification: " + rep.violations.front().rule);
            sink.write(format == "svg" ? planarization_svg(emb) : planarization_dot(emb));
            return 0;
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace nic
