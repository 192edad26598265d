#include "nic/dual.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nic/error.hpp"

namespace nic {

const char* to_string(NodeLabel label) {
    switch (label) {
        case NodeLabel::Kite: return "Kite";
        case NodeLabel::Tetrahedron: return "Tetrahedron";
        case NodeLabel::Triangle: return "Triangle";
    }
    return "Unknown";
}

std::string key_string(const std::vector<int>& key) {
    std::string s;
    for (size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s;
}

void GeneralizedDual::rebuild_incidence() {
    incident.assign(nodes.size(), {});
    for (size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].a].push_back(static_cast<int>(e));
        incident[edges[e].b].push_back(static_cast<int>(e));
    }
}

int GeneralizedDual::find(const std::vector<int>& key) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), key,
                               [](const DualNode& n, const std::vector<int>& k) { return n.key < k; });
    if (it == nodes.end() || it->key != key) return -1;
    return static_cast<int>(it - nodes.begin());
}

std::vector<int> GeneralizedDual::neighbors(int v) const {
    std::vector<int> out;
    for (int e : incident[v]) out.push_back(other(e, v));
    return out;
}

bool GeneralizedDual::has_parallel_edges() const {
    std::set<Edge> seen;
    for (const auto& e : edges)
        if (!seen.insert(make_edge(e.a, e.b)).second) return true;
    return false;
}

Graph GeneralizedDual::simple_graph() const {
    std::vector<Edge> list;
    for (const auto& e : edges) list.push_back(make_edge(e.a, e.b));
    return graph_from_edge_set(static_cast<int>(nodes.size()), list);
}

int GeneralizedDual::count(NodeLabel label) const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [&](const DualNode& n) { return n.label == label; }));
}

GeneralizedDual build_dual(const NicEmbedding& emb) {
    auto bad = [](const std::string& msg) { throw Error(ErrorCode::NotMaximalEmbedding, msg); };
    GeneralizedDual d;
    d.faces = trace_faces(emb);
    d.host_m = emb.graph.m();
    d.host_crossings = static_cast<int>(emb.crossings.size());
    const int n = emb.n();
    const int np = emb.planarization_size();
    for (const auto& f : d.faces)
        if (f.corners.size() != 3) bad("face " + key_string(f.corners) + " is not a triangle");

    std::vector<std::vector<int>> faces_at(np);
    for (size_t fi = 0; fi < d.faces.size(); ++fi)
        for (int v : d.faces[fi].corners) faces_at[v].push_back(static_cast<int>(fi));

    std::vector<int> group(d.faces.size(), -1);
    std::vector<DualNode> nodes;
    auto originals_of = [&](const std::vector<int>& fs) {
        std::set<int> s;
        for (int fi : fs)
            for (int v : d.faces[fi].corners)
                if (v < n) s.insert(v);
        return std::vector<int>(s.begin(), s.end());
    };

    for (size_t i = 0; i < emb.crossings.size(); ++i) {
        int x = emb.dummy(static_cast<int>(i));
        if (faces_at[x].size() != 4) bad("crossing " + std::to_string(i) + " is not surrounded by four faces");
        DualNode node;
        node.label = NodeLabel::Kite;
        node.faces = faces_at[x];
        node.key = originals_of(node.faces);
        node.crossing = static_cast<int>(i);
        if (node.key.size() != 4) bad("crossing " + std::to_string(i) + " does not bound a kite");
        for (int fi : node.faces) group[fi] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(node));
    }

    std::vector<char> crossed_at(n, 0);
    for (const auto& c : emb.crossings)
        for (int v : {c.e1.first, c.e1.second, c.e2.first, c.e2.second}) crossed_at[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (emb.graph.degree(v) != 3 || crossed_at[v] || faces_at[v].size() != 3) continue;
        bool free = true;
        for (int fi : faces_at[v]) {
            if (group[fi] >= 0) free = false;
            for (int c : d.faces[fi].corners)
                if (c >= n) free = false;
        }
        if (!free) continue;
        DualNode node;
        node.label = NodeLabel::Tetrahedron;
        node.faces = faces_at[v];
        node.key = originals_of(node.faces);
        node.center = v;
        for (int fi : node.faces) group[fi] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(node));
    }

    for (size_t fi = 0; fi < d.faces.size(); ++fi) {
        if (group[fi] >= 0) continue;
        DualNode node;
        node.label = NodeLabel::Triangle;
        node.faces = {static_cast<int>(fi)};
        node.key = originals_of(node.faces);
        group[fi] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(node));
    }

    // Canonical order by key.
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return nodes[a].key < nodes[b].key; });
    std::vector<int> new_id(nodes.size());
    for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);
    for (int i : order) d.nodes.push_back(std::move(nodes[i]));
    for (size_t i = 1; i < d.nodes.size(); ++i)
        if (d.nodes[i].key == d.nodes[i - 1].key) bad("two face groups on vertex set " + key_string(d.nodes[i].key));
    d.face_node.resize(d.faces.size());
    for (size_t fi = 0; fi < d.faces.size(); ++fi) d.face_node[fi] = new_id[group[fi]];

    // Directed segment -> face.
    RotationIndex index(emb.rotation);
    std::vector<int> face_of(index.half_edge_count(), -1);
    for (size_t fi = 0; fi < d.faces.size(); ++fi) {
        const auto& c = d.faces[fi].corners;
        for (size_t j = 0; j < c.size(); ++j) {
            int a = c[j], b = c[(j + 1) % c.size()];
            face_of[index.half_edge(a, index.position(a, b))] = static_cast<int>(fi);
        }
    }
    std::set<Edge> crossed;
    for (const auto& c : emb.crossings) crossed.insert(c.e1), crossed.insert(c.e2);
    for (Edge e : emb.graph.edges()) {
        if (crossed.count(e)) continue;
        auto [u, v] = e;
        int f1 = face_of[index.half_edge(u, index.position(u, v))];
        int f2 = face_of[index.half_edge(v, index.position(v, u))];
        int a = d.face_node[f1], b = d.face_node[f2];
        if (a == b) {
            const auto& node = d.nodes[a];
            if (node.label == NodeLabel::Tetrahedron && (u == node.center || v == node.center)) continue;
            bad("edge (" + std::to_string(u) + "," + std::to_string(v) + ") would be a dual loop");
        }
        d.edges.push_back({a, b, e});
    }
    d.rebuild_incidence();
    return d;
}

namespace {

std::vector<int> kites_of(const GeneralizedDual& d, int v) {
    std::set<int> s;
    for (int w : d.neighbors(v))
        if (d.nodes[w].label == NodeLabel::Kite) s.insert(w);
    return {s.begin(), s.end()};
}

std::vector<char> marks(const GeneralizedDual& d) {
    std::vector<char> m(d.nodes.size(), 0);
    for (size_t v = 0; v < d.nodes.size(); ++v)
        if (d.nodes[v].label != NodeLabel::Kite && !kites_of(d, static_cast<int>(v)).empty()) m[v] = 1;
    return m;
}

int apex(const DualNode& node, Edge seg) {
    for (int v : node.key)
        if (v != seg.first && v != seg.second) return v;
    return -1;
}

}  // namespace

VerificationReport check_adjacency_rules(const GeneralizedDual& d, const Graph& host) {
    VerificationReport rep;
    auto marked = marks(d);
    auto lab = [&](int v) { return d.nodes[v].label; };
    for (const auto& e : d.edges) {
        if (lab(e.a) == NodeLabel::Kite && lab(e.b) == NodeLabel::Kite)
            rep.add("rule-i", {e.a, e.b}, "adjacent kites " + key_string(d.nodes[e.a].key) + " and " + key_string(d.nodes[e.b].key));
        for (auto [p, q] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
            if (lab(p) != NodeLabel::Tetrahedron) continue;
            if (lab(q) == NodeLabel::Tetrahedron && p < q)
                rep.add("rule-ii", {p, q}, "adjacent tetrahedra " + key_string(d.nodes[p].key) + " and " + key_string(d.nodes[q].key));
            if (lab(q) == NodeLabel::Triangle && !marked[q])
                rep.add("rule-ii", {p, q}, "tetrahedron " + key_string(d.nodes[p].key) + " next to unmarked triangle " + key_string(d.nodes[q].key));
        }
        if (lab(e.a) == NodeLabel::Triangle && lab(e.b) == NodeLabel::Triangle && !marked[e.a] && !marked[e.b]) {
            int w = apex(d.nodes[e.a], e.segment), x = apex(d.nodes[e.b], e.segment);
            if (w < 0 || x < 0 || !host.has_edge(w, x))
                rep.add("rule-iv", {e.a, e.b}, "unmarked triangles " + key_string(d.nodes[e.a].key) + " and " +
                                                   key_string(d.nodes[e.b].key) + " are not tetrahedral");
        }
    }
    for (size_t v = 0; v < d.nodes.size(); ++v) {
        int iv = static_cast<int>(v);
        if (lab(iv) == NodeLabel::Tetrahedron && !marked[v])
            rep.add("rule-iii", {iv}, "unmarked tetrahedron " + key_string(d.nodes[v].key));
        if (lab(iv) != NodeLabel::Triangle) continue;
        std::set<int> tri;
        for (int w : d.neighbors(iv))
            if (lab(w) == NodeLabel::Triangle) tri.insert(w);
        std::vector<int> t(tri.begin(), tri.end());
        for (size_t a = 0; a < t.size(); ++a)
            for (size_t b = a + 1; b < t.size(); ++b)
                if (!marked[v] && !marked[t[a]] && !marked[t[b]])
                    rep.add("rule-v", {iv, t[a], t[b]}, "triangle " + key_string(d.nodes[v].key) + " with two unmarked triangle neighbors");
    }
    return rep;
}

VerificationReport check_dual_structure(const GeneralizedDual& d) {
    VerificationReport rep;
    for (size_t v = 0; v < d.nodes.size(); ++v) {
        const auto& node = d.nodes[v];
        int want = node.label == NodeLabel::Kite ? 4 : 3;
        size_t groups = node.label == NodeLabel::Kite ? 4 : node.label == NodeLabel::Tetrahedron ? 3 : 1;
        if (static_cast<int>(d.incident[v].size()) != want)
            rep.add("degree", {static_cast<int>(v)}, std::string(to_string(node.label)) + " node " + key_string(node.key) +
                                                         " has degree " + std::to_string(d.incident[v].size()));
        if (node.faces.size() != groups)
            rep.add("face-group", {static_cast<int>(v)}, "node " + key_string(node.key) + " groups " + std::to_string(node.faces.size()) + " faces");
    }
    if (d.has_parallel_edges()) rep.add("simple", {}, "dual has parallel edges");
    Graph s = d.simple_graph();
    if (!test_planarity(s).planar) rep.add("planar", {}, "dual is not planar");
    if (s.n() < 4 || !is_triconnected(s)) rep.add("triconnected", {}, "dual is not 3-connected");
    return rep;
}

LevelMap compute_levels(const GeneralizedDual& d) {
    LevelMap lm;
    int nn = static_cast<int>(d.nodes.size());
    lm.level.assign(nn, -1);
    lm.marked.assign(nn, 0);
    std::deque<int> queue;
    for (int v = 0; v < nn; ++v)
        if (d.nodes[v].label == NodeLabel::Kite) lm.level[v] = 0, queue.push_back(v);
    if (queue.empty()) throw Error(ErrorCode::NoKiteNode, "dual has no kite node");
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : d.neighbors(v))
            if (lm.level[w] < 0) lm.level[w] = lm.level[v] + 1, queue.push_back(w);
    }
    for (int v = 0; v < nn; ++v) {
        if (lm.level[v] < 0) throw Error(ErrorCode::LevelExceedsTwo, "node " + key_string(d.nodes[v].key) + " unreachable from kites");
        if (lm.level[v] > 2)
            throw Error(ErrorCode::LevelExceedsTwo, "node " + key_string(d.nodes[v].key) + " has level " + std::to_string(lm.level[v]));
        lm.marked[v] = lm.level[v] == 1;
        lm.max_level = std::max(lm.max_level, lm.level[v]);
    }
    return lm;
}

SphereAccount quarter_sphere_accounting(const GeneralizedDual& d, const LevelMap& lm) {
    auto fail = [&](int kite, const std::string& msg) {
        std::string where = kite >= 0 ? "sphere of kite " + key_string(d.nodes[kite].key) + ": " : "";
        throw Error(ErrorCode::AccountingViolation, where + msg);
    };
    std::map<std::pair<int, int>, Quarter> q;
    SphereAccount acc;
    for (size_t v = 0; v < d.nodes.size(); ++v)
        if (d.nodes[v].label == NodeLabel::Kite) {
            int k = static_cast<int>(v);
            acc.kites.push_back(k);
            for (int w : d.neighbors(k)) q[{k, w}] = Quarter{k, w, Rational(0), Rational(0)};
        }
    auto add = [&](int kite, int nb, NodeLabel label, Rational w) {
        auto it = q.find({kite, nb});
        if (it == q.end()) fail(kite, "missing quarter toward " + key_string(d.nodes[nb].key));
        (label == NodeLabel::Tetrahedron ? it->second.tetrahedron : it->second.triangle) += w;
    };

    for (size_t v = 0; v < d.nodes.size(); ++v) {
        int iv = static_cast<int>(v);
        const auto label = d.nodes[v].label;
        if (lm.level[v] == 1) {
            auto ks = kites_of(d, iv);
            for (int k : ks) add(k, iv, label, Rational(1, static_cast<long long>(ks.size())));
        } else if (lm.level[v] == 2) {
            std::set<std::pair<int, int>> spots;
            for (int r : d.neighbors(iv))
                if (lm.level[r] == 1)
                    for (int k : kites_of(d, r)) spots.insert({k, r});
            if (spots.empty()) fail(-1, "level-2 node " + key_string(d.nodes[v].key) + " lies in no quarter");
            for (auto [k, r] : spots) add(k, r, label, Rational(1, static_cast<long long>(spots.size())));
        }
    }

    // A tetrahedron served by a single kite trades a quarter of itself with each
    // neighboring triangle's quarter.
    for (size_t v = 0; v < d.nodes.size(); ++v) {
        int r = static_cast<int>(v);
        if (d.nodes[v].label != NodeLabel::Tetrahedron) continue;
        auto ks = kites_of(d, r);
        if (ks.size() != 1) continue;
        for (int s : d.neighbors(r)) {
            if (d.nodes[s].label != NodeLabel::Triangle) continue;
            auto sk = kites_of(d, s);
            if (sk.empty()) fail(ks[0], "tetrahedron " + key_string(d.nodes[r].key) + " next to an unmarked triangle");
            Rational share(1, 4 * static_cast<long long>(sk.size()));
            auto& qr = q[{ks[0], r}];
            auto& qs = q[{sk[0], s}];
            qr.tetrahedron -= Rational(1, 4);
            qr.triangle += share;
            qs.tetrahedron += Rational(1, 4);
            qs.triangle -= share;
        }
    }

    const Rational third(1, 3);
    std::map<int, Rational> per_kite;
    for (int k : acc.kites) per_kite[k] = Rational(2);
    for (auto& [key, quarter] : q) {
        if (quarter.triangle < third && quarter.tetrahedron < third)
            fail(quarter.kite, "quarter toward " + key_string(d.nodes[quarter.neighbor].key) + " holds less than 1/3 of a node");
        if (quarter.planar_edges() > Rational(3))
            fail(quarter.kite, "quarter toward " + key_string(d.nodes[quarter.neighbor].key) + " exceeds 3 planar edges");
        per_kite[quarter.kite] += quarter.planar_edges();
        acc.quarters.push_back(quarter);
    }
    for (int k : acc.kites) {
        Rational s = per_kite[k];
        if (s < Rational(4) || s > Rational(14)) fail(k, "sphere holds " + std::to_string(boost::rational_cast<double>(s)) + " planar edges");
        acc.sphere_edges.push_back(s);
        acc.total += s;
    }
    Rational expected(d.host_m - 2 * d.host_crossings);
    if (acc.total != expected)
        fail(-1, "spheres hold " + std::to_string(boost::rational_cast<double>(acc.total)) + " planar edges, graph has " +
                     std::to_string(d.host_m - 2 * d.host_crossings));
    return acc;
}

namespace {

// Kite node for each crossing index.
std::vector<int> kite_by_crossing(const GeneralizedDual& d) {
    std::vector<int> out(d.host_crossings, -1);
    for (size_t v = 0; v < d.nodes.size(); ++v)
        if (d.nodes[v].label == NodeLabel::Kite) out[d.nodes[v].crossing] = static_cast<int>(v);
    return out;
}

// Empty string when (r, s) satisfies the flip preconditions; fills the shared
// edge and the tetrahedral edge.
std::string flip_problem(const GeneralizedDual& d, const Graph& host, int r, int s, Edge& shared, Edge& tetra) {
    int nn = static_cast<int>(d.nodes.size());
    if (r < 0 || s < 0 || r >= nn || s >= nn || r == s) return "node ids out of range";
    if (d.nodes[r].label != NodeLabel::Triangle || d.nodes[s].label != NodeLabel::Triangle)
        return "pair is not two Triangle nodes";
    int edge = -1;
    for (int e : d.incident[r])
        if (d.other(e, r) == s) edge = e;
    if (edge < 0) return "Triangle nodes are not adjacent";
    auto kr = kites_of(d, r), ks = kites_of(d, s);
    bool unmarked = kr.empty() && ks.empty();
    bool common = kr.size() == 1 && kr == ks;
    if (!unmarked && !common) return "pair is neither unmarked nor served by a single common kite";
    shared = d.edges[edge].segment;
    int w = apex(d.nodes[r], shared), x = apex(d.nodes[s], shared);
    if (w < 0 || x < 0 || w == x || !host.has_edge(w, x)) return "pair is not tetrahedral";
    tetra = make_edge(w, x);
    return {};
}

}  // namespace

std::vector<FlipCandidate> flip_candidates(const GeneralizedDual& d, const NicEmbedding& emb) {
    std::vector<FlipCandidate> out;
    auto by_crossing = kite_by_crossing(d);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : d.edges) {
        int r = std::min(e.a, e.b), s = std::max(e.a, e.b);
        if (!seen.insert({r, s}).second) continue;
        Edge shared, tetra;
        if (!flip_problem(d, emb.graph, r, s, shared, tetra).empty()) continue;
        for (size_t i = 0; i < emb.crossings.size(); ++i)
            if (emb.crossings[i].e1 == tetra || emb.crossings[i].e2 == tetra) out.push_back({by_crossing[i], r, s});
    }
    return out;
}

NicEmbedding kite_flip(const NicEmbedding& emb, int kite, int r, int s) {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::PreconditionViolated, msg); };
    GeneralizedDual d = build_dual(emb);
    if (kite < 0 || kite >= static_cast<int>(d.nodes.size()) || d.nodes[kite].label != NodeLabel::Kite)
        fail("named node is not a Kite node");
    Edge shared, tetra;
    auto problem = flip_problem(d, emb.graph, r, s, shared, tetra);
    if (!problem.empty()) fail(problem);
    auto crossings = emb.crossings;
    auto& slot = crossings[d.nodes[kite].crossing];
    if (slot.e1 == tetra)
        slot.e2 = shared;
    else if (slot.e2 == tetra)
        slot.e1 = shared;
    else
        fail("tetrahedral edge is not a crossing edge of the named kite");
    return embed_with_crossings(emb.graph, std::move(crossings));
}

std::string dual_to_dot(const GeneralizedDual& d) {
    std::string out = "graph dual {\n";
    for (size_t v = 0; v < d.nodes.size(); ++v) {
        const auto& node = d.nodes[v];
        const char* shape = node.label == NodeLabel::Kite ? "diamond" : node.label == NodeLabel::Triangle ? "triangle" : "house";
        out += "  n" + std::to_string(v) + " [label=\"" + key_string(node.key) + "\", shape=" + shape + "];\n";
    }
    for (const auto& e : d.edges)
        out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"" + std::to_string(e.segment.first) +
               "-" + std::to_string(e.segment.second) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace nic
