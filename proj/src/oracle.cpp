#include "nic/oracle.hpp"

#include <algorithm>

#include "nic/error.hpp"
#include "nic/planarity.hpp"

namespace nic {

namespace {

int shared_vertices(const K4& a, const K4& b) {
    int s = 0;
    for (int x : a)
        for (int y : b) s += x == y;
    return s;
}

struct Search {
    const Graph& g;
    const OracleOptions& opts;
    std::vector<K4> cat;
    std::vector<std::vector<int>> buckets;
    std::vector<std::vector<char>> compatible;
    OracleResult res;
    std::vector<int> chosen;

    void accept_if_planar() {
        ++res.candidates;
        KiteSet ks;
        for (int i : chosen) ks.push_back(cat[i]);
        auto star = build_star_graph(g, ks);
        if (test_planarity(star.graph).planar) res.kite_sets.push_back(std::move(ks));
    }

    bool fits(int i) const {
        for (int j : chosen)
            if (!compatible[i][j]) return false;
        return true;
    }

    // Every compatible subset, in catalog order.
    void enumerate_all(size_t next) {
        if (next == cat.size()) {
            if (opts.optimal && !exact_cover()) return;
            accept_if_planar();
            return;
        }
        enumerate_all(next + 1);
        if (fits(static_cast<int>(next))) {
            chosen.push_back(static_cast<int>(next));
            enumerate_all(next + 1);
            chosen.pop_back();
        }
    }

    bool exact_cover() const {
        long target = g.m() - (3L * g.n() - 6);
        if (static_cast<long>(chosen.size()) != target) return false;
        std::vector<int> cover(g.m(), 0);
        for (int i : chosen)
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) ++cover[g.edge_id(cat[i][a], cat[i][b])];
        return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
    }

    // Exact cover: branch on the uncovered edge with the fewest usable K4s.
    void exact(std::vector<int>& covered) {
        int best = -1;
        size_t best_count = SIZE_MAX;
        for (int e = 0; e < g.m(); ++e) {
            if (covered[e]) continue;
            size_t count = 0;
            for (int k : buckets[e])
                if (usable(k, covered)) ++count;
            if (count < best_count) best_count = count, best = e;
        }
        if (best < 0) {
            if (static_cast<long>(chosen.size()) == g.m() - (3L * g.n() - 6)) accept_if_planar();
            return;
        }
        if (best_count == 0) {
            ++res.prunes;
            return;
        }
        for (int k : buckets[best]) {
            if (!usable(k, covered)) continue;
            toggle(k, covered, 1);
            chosen.push_back(k);
            exact(covered);
            chosen.pop_back();
            toggle(k, covered, 0);
        }
    }

    bool usable(int k, const std::vector<int>& covered) const {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (covered[g.edge_id(cat[k][a], cat[k][b])]) return false;
        return fits(k);
    }

    void toggle(int k, std::vector<int>& covered, int value) const {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) covered[g.edge_id(cat[k][a], cat[k][b])] = value;
    }
};

}  // namespace

OracleResult oracle_maximal_nic(const Graph& g, const OracleOptions& opts) {
    if (g.n() > opts.limit)
        throw Error(ErrorCode::LimitExceeded, "n = " + std::to_string(g.n()) + " exceeds limit " + std::to_string(opts.limit));
    Search s{g, opts, brute_force_k4(g), {}, {}, {}, {}};
    s.buckets = bucket_by_edge(s.cat, g);
    size_t c = s.cat.size();
    s.compatible.assign(c, std::vector<char>(c, 0));
    for (size_t i = 0; i < c; ++i)
        for (size_t j = 0; j < c; ++j) s.compatible[i][j] = i != j && shared_vertices(s.cat[i], s.cat[j]) <= 1;

    if (opts.optimal && opts.prune) {
        std::vector<int> covered(g.m(), 0);
        s.exact(covered);
    } else {
        s.enumerate_all(0);
    }
    for (auto& ks : s.res.kite_sets) std::sort(ks.begin(), ks.end());
    std::sort(s.res.kite_sets.begin(), s.res.kite_sets.end());
    s.res.decision = !s.res.kite_sets.empty();
    return s.res;
}

}  // namespace nic
