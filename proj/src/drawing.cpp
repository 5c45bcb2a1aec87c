#include "oneplane/drawing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace oneplane {

void fail(const std::string& code, const std::string& msg) {
    throw drawing_error(code, msg);
}

int sketch::add_vertex(std::string label) {
    labels.push_back(std::move(label));
    rot.emplace_back();
    return n++;
}

int sketch::add_edge(int u, int v) {
    edges.emplace_back(u, v);
    return static_cast<int>(edges.size()) - 1;
}

int sketch::add_crossing(int e, int f, bool positive) {
    crossings.push_back({e, f, positive});
    return static_cast<int>(crossings.size()) - 1;
}

int sketch::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < n; ++v)
        if (labels[v] == label) return v;
    return -1;
}

namespace {

struct dsu {
    std::vector<int> p;
    explicit dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}   // namespace

drawing drawing::build(sketch sk) {
    const int n = sk.n;
    const int m = static_cast<int>(sk.edges.size());
    const int x = static_cast<int>(sk.crossings.size());
    if (static_cast<int>(sk.labels.size()) != n || static_cast<int>(sk.rot.size()) != n)
        fail("SyntaxError", "vertex table sizes disagree");

    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = sk.edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("SyntaxError", "edge " + std::to_string(e) + " references an unknown vertex");
        if (u == v)
            fail("LoopEdge", "edge " + std::to_string(e) + " joins vertex " +
                                 std::to_string(u) + " to itself");
        if (!seen.insert(std::minmax(u, v)).second)
            fail("DuplicateEdge", "edge " + std::to_string(e) + " repeats {" +
                                      std::to_string(u) + "," + std::to_string(v) + "}");
    }

    std::vector<int> cross_of(m, -1);
    for (int c = 0; c < x; ++c) {
        const crossing& cr = sk.crossings[c];
        if (cr.e < 0 || cr.e >= m || cr.f < 0 || cr.f >= m || cr.e == cr.f)
            fail("SyntaxError", "crossing " + std::to_string(c) + " references a bad edge");
        if (cross_of[cr.e] != -1 || cross_of[cr.f] != -1)
            fail("EdgeCrossedTwice", "crossing " + std::to_string(c) +
                                         " reuses an already crossed edge");
        auto [a, b] = sk.edges[cr.e];
        auto [p, q] = sk.edges[cr.f];
        if (a == p || a == q || b == p || b == q)
            fail("AdjacentCrossing", "crossing " + std::to_string(c) +
                                         " pairs edges sharing a vertex");
        cross_of[cr.e] = c;
        cross_of[cr.f] = c;
    }

    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < m; ++e) {
        incident[sk.edges[e].first].push_back(e);
        incident[sk.edges[e].second].push_back(e);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> a = sk.rot[v];
        std::vector<int> b = incident[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            fail("SyntaxError", "rotation at vertex " + std::to_string(v) +
                                    " does not list its incident edges exactly once");
    }

    const int base = 2 * m;
    const int nd = base + 4 * x;
    std::vector<int> twin(nd, -1), nxt(nd, -1), origin(nd, -1), dedge(nd, -1);
    for (int e = 0; e < m; ++e) {
        dedge[2 * e] = dedge[2 * e + 1] = e;
        origin[2 * e] = sk.edges[e].first;
        origin[2 * e + 1] = sk.edges[e].second;
        if (cross_of[e] == -1) {
            twin[2 * e] = 2 * e + 1;
            twin[2 * e + 1] = 2 * e;
        }
    }
    for (int c = 0; c < x; ++c) {
        const crossing& cr = sk.crossings[c];
        const int b0 = base + 4 * c;
        for (int k = 0; k < 4; ++k) origin[b0 + k] = n + c;
        dedge[b0 + 0] = dedge[b0 + 1] = cr.e;
        dedge[b0 + 2] = dedge[b0 + 3] = cr.f;
        twin[2 * cr.e] = b0 + 0;
        twin[b0 + 0] = 2 * cr.e;
        twin[2 * cr.e + 1] = b0 + 1;
        twin[b0 + 1] = 2 * cr.e + 1;
        twin[2 * cr.f] = b0 + 2;
        twin[b0 + 2] = 2 * cr.f;
        twin[2 * cr.f + 1] = b0 + 3;
        twin[b0 + 3] = 2 * cr.f + 1;
    }

    std::vector<std::vector<int>> rotd(n + x);
    for (int v = 0; v < n; ++v) {
        rotd[v].reserve(sk.rot[v].size());
        for (int e : sk.rot[v])
            rotd[v].push_back(sk.edges[e].first == v ? 2 * e : 2 * e + 1);
    }
    for (int c = 0; c < x; ++c) {
        const int b0 = base + 4 * c;
        // ccw order at the fake vertex alternates the two edges; the
        // orientation bit picks which of f's ends follows e's first end
        if (sk.crossings[c].positive)
            rotd[n + c] = {b0 + 0, b0 + 2, b0 + 1, b0 + 3};
        else
            rotd[n + c] = {b0 + 0, b0 + 3, b0 + 1, b0 + 2};
    }
    for (int pv = 0; pv < n + x; ++pv) {
        const auto& lst = rotd[pv];
        for (size_t i = 0; i < lst.size(); ++i)
            nxt[lst[i]] = lst[(i + 1) % lst.size()];
    }

    // faces to the right of walks: successor of d is next(twin(d)); scanning
    // darts in ascending order makes each stored walk start at its least dart
    std::vector<int> face_of(nd, -1);
    std::vector<std::vector<int>> faces;
    for (int d0 = 0; d0 < nd; ++d0) {
        if (face_of[d0] != -1) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            face_of[d] = static_cast<int>(faces.size());
            walk.push_back(d);
            d = nxt[twin[d]];
        } while (d != d0);
        faces.push_back(std::move(walk));
    }

    // genus check per planarization component; edgeless components are
    // single points and trivially spherical
    dsu pc(n + x);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = sk.edges[e];
        if (cross_of[e] == -1) {
            pc.unite(u, v);
        } else {
            pc.unite(u, n + cross_of[e]);
            pc.unite(v, n + cross_of[e]);
        }
    }
    std::map<int, std::array<long long, 3>> vef;
    for (int pv = 0; pv < n + x; ++pv) vef[pc.find(pv)][0]++;
    for (int e = 0; e < m; ++e)
        vef[pc.find(sk.edges[e].first)][1] += cross_of[e] == -1 ? 1 : 2;
    for (const auto& w : faces) vef[pc.find(origin[w[0]])][2]++;
    for (const auto& [root, t] : vef) {
        if (t[1] == 0) continue;
        if (t[0] - t[1] + t[2] != 2)
            fail("NotGenusZero", "rotation system is not spherical (V-E+F = " +
                                     std::to_string(t[0] - t[1] + t[2]) +
                                     " on a component)");
    }

    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : sk.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    dsu ac(n);
    for (auto [u, v] : sk.edges) ac.unite(u, v);
    int acomp = 0;
    for (int v = 0; v < n; ++v)
        if (ac.find(v) == v) ++acomp;
    int pcomp = 0;
    for (int pv = 0; pv < n + x; ++pv)
        if (pc.find(pv) == pv) ++pcomp;

    drawing d;
    d.sk_ = std::move(sk);
    d.n_ = n;
    d.m_ = m;
    d.cross_of_edge_ = std::move(cross_of);
    d.twin_ = std::move(twin);
    d.next_ = std::move(nxt);
    d.origin_ = std::move(origin);
    d.dart_edge_ = std::move(dedge);
    d.rot_darts_ = std::move(rotd);
    d.face_of_ = std::move(face_of);
    d.faces_ = std::move(faces);
    d.adj_ = std::move(adj);
    d.abstract_components_ = acomp;
    d.planar_components_ = pcomp;
    return d;
}

std::vector<int> drawing::face_vertices(int fid) const {
    std::vector<int> out;
    out.reserve(faces_[fid].size());
    for (int d : faces_[fid]) out.push_back(origin_[d]);
    return out;
}

bool drawing::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

}   // namespace oneplane
