#include "nic/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nic/dual.hpp"
#include "nic/error.hpp"

namespace nic {

void VerificationReport::add(std::string rule, std::vector<int> witness, std::string detail) {
    violations.push_back({std::move(rule), std::move(witness), std::move(detail)});
    pass = false;
}

bool VerificationReport::has_rule(const std::string& rule) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

namespace {

std::string edge_str(Edge e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

// Set of crossed edges; assumes every crossing edge exists.
std::vector<char> crossed_mask(const NicEmbedding& emb) {
    std::vector<char> crossed(emb.graph.m(), 0);
    for (const auto& c : emb.crossings) {
        for (Edge e : {c.e1, c.e2}) {
            int id = emb.graph.edge_id(e.first, e.second);
            if (id >= 0) crossed[id] = 1;
        }
    }
    return crossed;
}

// Returns an error string when the registry cannot define a planarization.
std::string registry_problem(const Graph& g, const std::vector<Crossing>& crossings) {
    std::vector<int> uses(g.m(), 0);
    for (size_t i = 0; i < crossings.size(); ++i) {
        const auto& c = crossings[i];
        for (Edge e : {c.e1, c.e2}) {
            int id = g.edge_id(e.first, e.second);
            if (id < 0) return "crossing " + std::to_string(i) + " names missing edge " + edge_str(e);
            if (++uses[id] > 1) return "edge " + edge_str(e) + " appears in two crossings";
        }
        if (c.e1.first == c.e2.first || c.e1.first == c.e2.second || c.e1.second == c.e2.first ||
            c.e1.second == c.e2.second)
            return "crossing " + std::to_string(i) + " pairs adjacent edges";
    }
    return {};
}

Crossing normalized(const Crossing& c) {
    return {make_edge(c.e1.first, c.e1.second), make_edge(c.e2.first, c.e2.second)};
}

}  // namespace

Graph planarization(const NicEmbedding& emb) {
    const Graph& g = emb.graph;
    auto crossed = crossed_mask(emb);
    std::vector<Edge> edges;
    edges.reserve(g.m() + 2 * emb.crossings.size());
    for (int id = 0; id < g.m(); ++id)
        if (!crossed[id]) edges.push_back(g.edges()[id]);
    for (size_t i = 0; i < emb.crossings.size(); ++i) {
        int x = emb.dummy(static_cast<int>(i));
        const auto& c = emb.crossings[i];
        for (int v : {c.e1.first, c.e1.second, c.e2.first, c.e2.second}) edges.push_back({v, x});
    }
    return new_graph(emb.planarization_size(), edges);
}

namespace {

// Checks that rotation lists are permutations of the planarization neighborhoods.
std::string rotation_problem(const NicEmbedding& emb, const Graph& p) {
    if (static_cast<int>(emb.rotation.size()) != p.n())
        return "rotation covers " + std::to_string(emb.rotation.size()) + " vertices, planarization has " +
               std::to_string(p.n());
    for (int v = 0; v < p.n(); ++v) {
        auto r = emb.rotation[v];
        std::sort(r.begin(), r.end());
        if (r != p.neighbors(v)) return "rotation of vertex " + std::to_string(v) + " does not match its segments";
    }
    return {};
}

std::vector<Face> walk_faces(const Rotation& rot) {
    RotationIndex index(rot);
    std::vector<char> used(index.half_edge_count(), 0);
    std::vector<Face> faces;
    for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
            if (used[index.half_edge(v, i)]) continue;
            Face f;
            int a = v, ia = i;
            while (!used[index.half_edge(a, ia)]) {
                used[index.half_edge(a, ia)] = 1;
                f.corners.push_back(a);
                int b = rot[a][ia];
                int k = static_cast<int>(rot[b].size());
                int p = index.position(b, a);
                ia = (p + k - 1) % k;
                a = b;
            }
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

}  // namespace

std::vector<Face> trace_faces(const NicEmbedding& emb) {
    auto problem = registry_problem(emb.graph, emb.crossings);
    if (!problem.empty()) throw Error(ErrorCode::InvalidEmbedding, problem);
    Graph p = planarization(emb);
    problem = rotation_problem(emb, p);
    if (!problem.empty()) throw Error(ErrorCode::InvalidEmbedding, problem);
    if (p.m() == 0) {
        if (p.n() == 1) return {Face{{0}}};
        throw Error(ErrorCode::NonSphericalEmbedding, "planarization without edges on several vertices");
    }
    auto faces = walk_faces(emb.rotation);
    long euler = static_cast<long>(p.n()) - p.m() + static_cast<long>(faces.size());
    if (euler != 2)
        throw Error(ErrorCode::NonSphericalEmbedding, "n - m + f = " + std::to_string(euler) + " (n=" +
                                                          std::to_string(p.n()) + ", m=" + std::to_string(p.m()) +
                                                          ", f=" + std::to_string(faces.size()) + ")");
    return faces;
}

VerificationReport verify_nic(const NicEmbedding& emb) {
    VerificationReport rep;
    const Graph& g = emb.graph;
    bool registry_ok = true;

    std::vector<int> uses(g.m(), 0);
    for (size_t i = 0; i < emb.crossings.size(); ++i) {
        const auto& c = emb.crossings[i];
        int ci = static_cast<int>(i);
        for (Edge e : {c.e1, c.e2}) {
            int id = g.edge_id(e.first, e.second);
            if (id < 0) {
                rep.add("crossing-edge-missing", {ci, e.first, e.second}, "edge " + edge_str(e) + " not in graph");
                registry_ok = false;
            } else if (++uses[id] == 2) {
                rep.add("one-planarity", {e.first, e.second}, "edge " + edge_str(e) + " crossed more than once");
                registry_ok = false;
            }
        }
        std::set<int> ends{c.e1.first, c.e1.second, c.e2.first, c.e2.second};
        if (ends.size() != 4) {
            rep.add("crossing-adjacent-edges", {ci}, edge_str(c.e1) + " and " + edge_str(c.e2) + " share an endpoint");
            registry_ok = false;
        }
    }

    // Two crossings sharing two endpoints share some vertex pair.
    std::map<Edge, std::vector<int>> by_pair;
    for (size_t i = 0; i < emb.crossings.size(); ++i) {
        const auto& c = emb.crossings[i];
        std::array<int, 4> v{c.e1.first, c.e1.second, c.e2.first, c.e2.second};
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end()) continue;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) by_pair[{v[a], v[b]}].push_back(static_cast<int>(i));
    }
    std::set<std::pair<int, int>> reported;
    for (const auto& [pair, list] : by_pair) {
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = a + 1; b < list.size(); ++b)
                if (reported.insert({list[a], list[b]}).second)
                    rep.add("nic-sharing", {list[a], list[b]},
                            "crossings " + std::to_string(list[a]) + " and " + std::to_string(list[b]) +
                                " share vertices " + std::to_string(pair.first) + " and " + std::to_string(pair.second));
    }

    if (!registry_ok) return rep;

    Graph p = planarization(emb);
    auto problem = rotation_problem(emb, p);
    if (!problem.empty()) {
        rep.add("rotation-consistency", {}, problem);
        return rep;
    }

    for (size_t i = 0; i < emb.crossings.size(); ++i) {
        int x = emb.dummy(static_cast<int>(i));
        const auto& r = emb.rotation[x];
        const auto& c = emb.crossings[i];
        auto pos = [&](int v) { return static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin()); };
        if (r.size() != 4 || (pos(c.e1.first) + 2) % 4 != pos(c.e1.second) ||
            (pos(c.e2.first) + 2) % 4 != pos(c.e2.second))
            rep.add("dummy-alternation", {static_cast<int>(i)},
                    "rotation at crossing " + std::to_string(i) + " does not alternate the two edges");
    }

    try {
        trace_faces(emb);
    } catch (const Error& e) {
        rep.add("sphericity", {}, e.what());
    }
    return rep;
}

std::vector<std::array<int, 5>> list_k5(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> cur{};
    auto extend = [&](auto&& self, int depth, const std::vector<int>& cand) -> void {
        if (depth == 5) {
            out.push_back(cur);
            return;
        }
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            cur[depth] = v;
            std::vector<int> next;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
            if (static_cast<int>(next.size()) >= 4 - depth) self(self, depth + 1, next);
        }
    };
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    extend(extend, 0, all);
    return out;
}

VerificationReport verify_maximal_embedding(const NicEmbedding& emb, const MaximalCheckOptions& opts) {
    VerificationReport rep = verify_nic(emb);
    if (!rep.pass) return rep;
    if (emb.n() < 5) {
        rep.applicable = false;
        return rep;
    }
    auto faces = trace_faces(emb);
    for (const auto& f : faces)
        if (f.corners.size() != 3) rep.add("triangulated", f.corners, "face of length " + std::to_string(f.corners.size()));

    // Faces incident to each dummy.
    std::vector<std::vector<int>> dummy_faces(emb.crossings.size());
    for (size_t fi = 0; fi < faces.size(); ++fi)
        for (int v : faces[fi].corners)
            if (emb.is_dummy(v)) dummy_faces[v - emb.n()].push_back(static_cast<int>(fi));

    for (size_t i = 0; i < emb.crossings.size(); ++i) {
        int x = emb.dummy(static_cast<int>(i));
        const auto& r = emb.rotation[x];
        bool ok = true;
        for (int j = 0; j < 4; ++j)
            if (!emb.graph.has_edge(r[j], r[(j + 1) % 4])) {
                rep.add("kite", {static_cast<int>(i), r[j], r[(j + 1) % 4]},
                        "kite side " + edge_str(make_edge(r[j], r[(j + 1) % 4])) + " missing");
                ok = false;
            }
        if (!ok) continue;
        std::set<std::set<int>> expected, seen;
        for (int j = 0; j < 4; ++j) expected.insert({x, r[j], r[(j + 1) % 4]});
        for (int fi : dummy_faces[i]) seen.insert(std::set<int>(faces[fi].corners.begin(), faces[fi].corners.end()));
        if (dummy_faces[i].size() != 4 || seen != expected)
            rep.add("kite", {static_cast<int>(i)}, "faces around crossing " + std::to_string(i) + " are not the kite triangles");
    }

    if (rep.pass && opts.check_dual_rules) {
        try {
            auto dual = build_dual(emb);
            auto rules = check_adjacency_rules(dual, emb.graph);
            for (auto& v : rules.violations) rep.add(v.rule, v.witness, v.detail);
        } catch (const Error& e) {
            rep.add("dual-construction", {}, e.what());
        }
    }

    if (opts.check_k5_sharing) {
        auto k5s = list_k5(emb.graph);
        // Crossing -> K5s containing each of its edges.
        for (size_t i = 0; i < emb.crossings.size(); ++i) {
            const auto& c = emb.crossings[i];
            auto contains = [](const std::array<int, 5>& k, Edge e) {
                return std::find(k.begin(), k.end(), e.first) != k.end() &&
                       std::find(k.begin(), k.end(), e.second) != k.end();
            };
            std::vector<int> with1, with2;
            for (size_t a = 0; a < k5s.size(); ++a) {
                if (contains(k5s[a], c.e1)) with1.push_back(static_cast<int>(a));
                if (contains(k5s[a], c.e2)) with2.push_back(static_cast<int>(a));
            }
            for (int a : with1)
                for (int b : with2) {
                    if (a == b) continue;
                    int common = 0;
                    for (int v : k5s[a])
                        if (std::find(k5s[b].begin(), k5s[b].end(), v) != k5s[b].end()) ++common;
                    if (common < 3) {
                        std::vector<int> w(k5s[a].begin(), k5s[a].end());
                        w.insert(w.end(), k5s[b].begin(), k5s[b].end());
                        rep.add("k5-sharing", w, "two K5s share crossing " + std::to_string(i) + " but only " +
                                                     std::to_string(common) + " vertices");
                    }
                }
        }
    }
    return rep;
}

Graph planar_reduction(const NicEmbedding& emb) {
    std::set<Edge> drop;
    for (const auto& c : emb.crossings) drop.insert(std::max(c.e1, c.e2));
    std::vector<Edge> keep;
    for (Edge e : emb.graph.edges())
        if (!drop.count(e)) keep.push_back(e);
    return new_graph(emb.n(), keep);
}

Graph planar_skeleton(const NicEmbedding& emb) {
    std::set<Edge> drop;
    for (const auto& c : emb.crossings) drop.insert(c.e1), drop.insert(c.e2);
    std::vector<Edge> keep;
    for (Edge e : emb.graph.edges())
        if (!drop.count(e)) keep.push_back(e);
    return new_graph(emb.n(), keep);
}

NicEmbedding embed_with_crossings(const Graph& g, std::vector<Crossing> crossings) {
    for (auto& c : crossings) c = normalized(c);
    auto problem = registry_problem(g, crossings);
    if (!problem.empty()) throw Error(ErrorCode::InvalidEmbedding, problem);
    NicEmbedding emb{g, std::move(crossings), {}};
    Graph p = planarization(emb);

    std::vector<Edge> temp;
    std::set<Edge> temp_set;
    for (const auto& c : emb.crossings) {
        std::array<int, 4> q{c.e1.first, c.e2.first, c.e1.second, c.e2.second};
        for (int j = 0; j < 4; ++j) {
            Edge e = make_edge(q[j], q[(j + 1) % 4]);
            if (!p.has_edge(e.first, e.second) && temp_set.insert(e).second) temp.push_back(e);
        }
    }
    std::vector<Edge> aug = p.edges();
    aug.insert(aug.end(), temp.begin(), temp.end());
    Graph pa = new_graph(p.n(), aug);
    auto res = test_planarity(pa);
    if (!res.planar) throw Error(ErrorCode::NonPlanar, "no planar embedding realizes the requested crossings");
    emb.rotation = std::move(res.rotation);
    if (!temp.empty()) {
        for (int v = 0; v < p.n(); ++v) {
            auto& r = emb.rotation[v];
            r.erase(std::remove_if(r.begin(), r.end(), [&](int u) { return temp_set.count(make_edge(u, v)) > 0; }),
                    r.end());
        }
    }
    return emb;
}

nlohmann::json embedding_to_json(const NicEmbedding& emb) {
    using nlohmann::json;
    json j;
    j["n"] = emb.n();
    json edges = json::array();
    for (auto [u, v] : emb.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    json cr = json::array();
    for (const auto& c : emb.crossings) {
        json pair = json::array({json::array({c.e1.first, c.e1.second}), json::array({c.e2.first, c.e2.second})});
        cr.push_back(json{{"pair", pair}});
    }
    j["crossings"] = cr;
    auto name = [&](int v) -> json {
        if (emb.is_dummy(v)) return "x" + std::to_string(v - emb.n());
        return v;
    };
    json rot = json::object();
    for (int v = 0; v < static_cast<int>(emb.rotation.size()); ++v) {
        json list = json::array();
        for (int u : emb.rotation[v]) list.push_back(name(u));
        std::string key = emb.is_dummy(v) ? "x" + std::to_string(v - emb.n()) : std::to_string(v);
        rot[key] = list;
    }
    j["rotations"] = rot;
    return j;
}

NicEmbedding embedding_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ParseError, msg); };
    if (!j.is_object()) fail("embedding must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) fail("missing integer field n");
    int n = j["n"].get<int>();
    if (n < 0) fail("negative n");
    auto read_edge = [&](const nlohmann::json& e) -> Edge {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail("edge must be a pair of integers");
        return {e[0].get<int>(), e[1].get<int>()};
    };
    std::vector<Edge> edges;
    if (!j.contains("edges") || !j["edges"].is_array()) fail("missing edges array");
    for (const auto& e : j["edges"]) edges.push_back(read_edge(e));
    Graph g = new_graph(n, edges);

    std::vector<Crossing> crossings;
    if (j.contains("crossings")) {
        if (!j["crossings"].is_array()) fail("crossings must be an array");
        for (const auto& c : j["crossings"]) {
            if (!c.is_object() || !c.contains("pair") || !c["pair"].is_array() || c["pair"].size() != 2)
                fail("crossing entries need a pair of two edges");
            Edge a = read_edge(c["pair"][0]), b = read_edge(c["pair"][1]);
            crossings.push_back(normalized({a, b}));
        }
    }
    if (!j.contains("rotations")) return embed_with_crossings(g, std::move(crossings));

    const auto& rj = j["rotations"];
    if (!rj.is_object()) fail("rotations must be an object");
    int c = static_cast<int>(crossings.size());
    auto parse_id = [&](const std::string& s) -> int {
        if (s.empty()) fail("empty vertex name");
        try {
            size_t used = 0;
            if (s[0] == 'x') {
                int i = std::stoi(s.substr(1), &used);
                if (used + 1 != s.size() || i < 0 || i >= c) fail("bad dummy name " + s);
                return n + i;
            }
            int v = std::stoi(s, &used);
            if (used != s.size() || v < 0 || v >= n) fail("bad vertex name " + s);
            return v;
        } catch (const std::logic_error&) {
            fail("bad vertex name " + s);
        }
        return -1;
    };
    Rotation rot(n + c);
    std::vector<char> seen(n + c, 0);
    for (auto it = rj.begin(); it != rj.end(); ++it) {
        int v = parse_id(it.key());
        if (seen[v]) fail("duplicate rotation for " + it.key());
        seen[v] = 1;
        if (!it.value().is_array()) fail("rotation of " + it.key() + " must be an array");
        for (const auto& u : it.value()) {
            if (u.is_number_integer()) {
                int w = u.get<int>();
                if (w < 0 || w >= n) fail("rotation entry out of range");
                rot[v].push_back(w);
            } else if (u.is_string()) {
                rot[v].push_back(parse_id(u.get<std::string>()));
            } else {
                fail("rotation entries must be integers or dummy names");
            }
        }
    }
    // Registry consistency is left to verify_nic so that it can be reported.
    return NicEmbedding{std::move(g), std::move(crossings), std::move(rot)};
}

nlohmann::json report_to_json(const VerificationReport& report) {
    using nlohmann::json;
    json v = json::array();
    for (const auto& x : report.violations) v.push_back(json{{"rule", x.rule}, {"witness", x.witness}, {"detail", x.detail}});
    return json{{"pass", report.pass}, {"applicable", report.applicable}, {"violations", v}};
}

}  // namespace nic
