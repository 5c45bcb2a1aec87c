#include "oneplane/cliques.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace oneplane {

bool abstract_graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

abstract_graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) fail("BadParam", "negative vertex count");
    abstract_graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("SyntaxError", "edge endpoint out of range");
        if (u == v) fail("LoopEdge", "loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            fail("DuplicateEdge", "repeated edge {" + std::to_string(u) + "," +
                                      std::to_string(v) + "}");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.edges.assign(seen.begin(), seen.end());
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

abstract_graph abstract_of(const drawing& d) {
    std::vector<std::pair<int, int>> es;
    es.reserve(d.m());
    for (int e = 0; e < d.m(); ++e) es.push_back(d.edge_ends(e));
    return make_graph(d.n(), std::move(es));
}

namespace {

int parse_count(const std::string& tok, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        fail("SyntaxError", "bad " + what + " '" + tok + "'");
    return value;
}

}   // namespace

abstract_graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, raw)) {
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (!tok.empty()) rows.push_back(std::move(tok));
    }
    if (rows.empty()) fail("SyntaxError", "empty edge list, expected 'n m' header");
    if (rows[0].size() != 2)
        fail("SyntaxError", "edge list header must be 'n m'");
    int n = parse_count(rows[0][0], "vertex count");
    int m = parse_count(rows[0][1], "edge count");
    if (static_cast<int>(rows.size()) - 1 != m)
        fail("SyntaxError", "edge list declares " + std::to_string(m) + " edges but has " +
                                std::to_string(rows.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i) {
        if (rows[i].size() != 2)
            fail("SyntaxError", "edge line must be 'u v'");
        edges.emplace_back(parse_count(rows[i][0], "vertex id"),
                           parse_count(rows[i][1], "vertex id"));
    }
    return make_graph(n, std::move(edges));
}

std::string serialize_edge_list(const abstract_graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

bool extend_clique(const abstract_graph& g, std::vector<int>& chosen, int from,
                   int k) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = from; v < g.n; ++v) {
        if (g.n - v < k - static_cast<int>(chosen.size())) break;
        bool ok = true;
        for (int u : chosen)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(v);
        if (extend_clique(g, chosen, v + 1, k)) return true;
        chosen.pop_back();
    }
    return false;
}

}   // namespace

std::optional<std::vector<int>> clique_witness(const abstract_graph& g, int k) {
    if (k < 2) fail("BadParam", "clique size must be at least 2");
    std::vector<int> chosen;
    if (extend_clique(g, chosen, 0, k)) return chosen;
    return std::nullopt;
}

bool has_clique(const abstract_graph& g, int k) {
    return clique_witness(g, k).has_value();
}

bool has_clique(const drawing& d, int k) { return has_clique(abstract_of(d), k); }

bool is_bipartite(const abstract_graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const abstract_graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == g.n;
}

abstract_graph turan_graph(int n, int k) {
    if (n < 1 || k < 2) fail("BadParam", "need n >= 1 and k >= 2");
    const int parts = k - 1;
    const int q = n / parts;
    const int r = n % parts;
    std::vector<int> part_of(n);
    int v = 0;
    for (int p = 0; p < parts && v < n; ++p) {
        int size = q + (p < r ? 1 : 0);
        for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return make_graph(n, std::move(edges));
}

long long turan_size(int n, int k) {
    if (n < 1 || k < 2) fail("BadParam", "need n >= 1 and k >= 2");
    const long long parts = k - 1;
    const long long r = n % parts;
    // (k-2)(n^2 - r^2) / (2(k-1)) + C(r,2), exact in integers
    return (parts - 1) * (static_cast<long long>(n) * n - r * r) / (2 * parts) +
           r * (r - 1) / 2;
}

}   // namespace oneplane
