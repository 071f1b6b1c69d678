#include "vogel/configs.hpp"

#include "vogel/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vogel {

namespace {

// Incidence graph: points 0..p-1, lines 0..l-1.
struct Graph {
    int p, l;
    std::vector<std::vector<int>> lines_of;   // per point
    std::vector<std::vector<int>> points_of;  // per line
};

Graph graph_of(const ConfigurationTable& t) {
    Graph g{t.p, t.l, std::vector<std::vector<int>>(t.p), std::vector<std::vector<int>>(t.l)};
    for (int j = 0; j < t.l; ++j)
        for (int label : t.columns[j]) {
            g.points_of[j].push_back(label - 1);
            g.lines_of[label - 1].push_back(j);
        }
    return g;
}

// Ranks are assigned by sorting signatures, so they depend only on the labeled structure up
// to isomorphism.
template <typename Sig>
int rerank(const std::vector<Sig>& sigs, std::vector<int>& color) {
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        color[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return static_cast<int>(sorted.size());
}

void refine(const Graph& g, std::vector<int>& pc, std::vector<int>& lc) {
    using Sig = std::pair<int, std::vector<int>>;
    int classes = -1;
    for (;;) {
        std::vector<Sig> ls(g.l);
        for (int j = 0; j < g.l; ++j) {
            ls[j].first = lc[j];
            for (int v : g.points_of[j]) ls[j].second.push_back(pc[v]);
            std::sort(ls[j].second.begin(), ls[j].second.end());
        }
        const int lcount = rerank(ls, lc);
        std::vector<Sig> ps(g.p);
        for (int v = 0; v < g.p; ++v) {
            ps[v].first = pc[v];
            for (int j : g.lines_of[v]) ps[v].second.push_back(lc[j]);
            std::sort(ps[v].second.begin(), ps[v].second.end());
        }
        const int pcount = rerank(ps, pc);
        if (pcount + lcount == classes) return;
        classes = pcount + lcount;
    }
}

using Certificate = std::vector<std::vector<int>>;

struct Best {
    bool have = false;
    Certificate cert;
    std::vector<int> point_color;
};

Certificate certificate(const Graph& g, const std::vector<int>& pc) {
    Certificate cert;
    for (int j = 0; j < g.l; ++j) {
        std::vector<int> col;
        for (int v : g.points_of[j]) col.push_back(pc[v] + 1);
        std::sort(col.begin(), col.end());
        cert.push_back(std::move(col));
    }
    std::sort(cert.begin(), cert.end());
    return cert;
}

void search(const Graph& g, std::vector<int> pc, std::vector<int> lc, Best& best) {
    refine(g, pc, lc);
    // First non-singleton point cell (smallest color).
    std::vector<int> count(g.p, 0);
    for (int c : pc) ++count[c];
    int target = -1;
    for (int c = 0; c < g.p; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        Certificate cert = certificate(g, pc);
        if (!best.have || cert < best.cert) {
            best.have = true;
            best.cert = std::move(cert);
            best.point_color = pc;
        }
        return;
    }
    for (int v = 0; v < g.p; ++v) {
        if (pc[v] != target) continue;
        std::vector<int> npc(g.p);
        for (int u = 0; u < g.p; ++u) npc[u] = 2 * pc[u] + (pc[u] == target && u != v ? 1 : 0);
        search(g, npc, lc, best);
    }
}

}  // namespace

CanonicalLabeling canonical_labeling(const ConfigurationTable& t) {
    if (auto v = validate_table(t); !v.empty())
        throw ConfigurationError("invalid configuration table: " + v.front().detail);
    const Graph g = graph_of(t);
    Best best;
    search(g, std::vector<int>(g.p, 0), std::vector<int>(g.l, 0), best);

    CanonicalLabeling out;
    out.point_map.resize(t.p);
    for (int v = 0; v < t.p; ++v) out.point_map[v] = best.point_color[v] + 1;
    out.table = t;
    out.table.columns = best.cert;
    // Lines keep their identity through the relabeled, sorted column.
    out.line_map.resize(t.l);
    std::vector<bool> taken(t.l, false);
    for (int j = 0; j < t.l; ++j) {
        std::vector<int> col;
        for (int label : t.columns[j]) col.push_back(out.point_map[label - 1]);
        std::sort(col.begin(), col.end());
        const auto it = std::lower_bound(best.cert.begin(), best.cert.end(), col);
        std::size_t pos = static_cast<std::size_t>(it - best.cert.begin());
        while (taken[pos]) ++pos;  // repeated columns cannot occur in valid tables
        taken[pos] = true;
        out.line_map[j] = static_cast<int>(pos) + 1;
    }
    return out;
}

ConfigurationTable canonical_form(const ConfigurationTable& t) { return canonical_labeling(t).table; }

bool isomorphic(const ConfigurationTable& a, const ConfigurationTable& b) {
    if (a.p != b.p || a.l != b.l || a.gamma != b.gamma || a.pi != b.pi) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace vogel
