#include "oneplane/search.hpp"

#include <algorithm>
#include <functional>

namespace oneplane {

search_result drawing_search(const abstract_graph& g, const search_limits& lim) {
    search_result res;
    const int n = g.n;
    const long long m = static_cast<long long>(g.edges.size());

    long long cap;
    if (n <= 6)
        cap = static_cast<long long>(n) * (n - 1) / 2;
    else if (n == 7 || n == 9)
        cap = 4LL * n - 9;
    else
        cap = 4LL * n - 8;
    if (m > cap) {
        res.exhausted_full_space = true;
        res.reject_reason = "m=" + std::to_string(m) +
                            " exceeds the order-" + std::to_string(n) +
                            " edge maximum " + std::to_string(cap);
        return res;
    }
    if (n >= 4 && m > 3LL * n - 8) {
        if (is_bipartite(g)) {
            res.exhausted_full_space = true;
            res.reject_reason = "bipartite graphs of order " + std::to_string(n) +
                                " carry at most " + std::to_string(3 * n - 8) + " edges";
            return res;
        }
        if (!has_clique(g, 3)) {
            res.exhausted_full_space = true;
            res.reject_reason = "triangle-free graphs of order " + std::to_string(n) +
                                " carry at most " + std::to_string(3 * n - 8) + " edges";
            return res;
        }
    }

    long long lo = 0;
    if (n >= 3) lo = std::max(lo, m - (3LL * n - 6));
    if (n >= 4 && is_connected(g) && !has_clique(g, 4))
        lo = std::max(lo, 2 * (m - 3LL * n + 6));
    const long long hi = std::min<long long>(std::max(0, n - 2), m / 2);
    if (lo > hi) {
        res.exhausted_full_space = true;
        res.reject_reason = "needs at least " + std::to_string(lo) +
                            " crossings but at most " + std::to_string(hi) +
                            " are possible";
        return res;
    }

    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < m; ++e) {
        incident[g.edges[e].first].push_back(e);
        incident[g.edges[e].second].push_back(e);
    }
    std::vector<std::pair<int, int>> cand;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = g.edges[e];
            auto [c, d] = g.edges[f];
            if (a != c && a != d && b != c && b != d) cand.emplace_back(e, f);
        }

    bool budget_hit = false;

    // try every rotation system over the given crossing set; returns true to
    // stop the enumeration (drawing found or budget exceeded)
    auto try_set = [&](const std::vector<std::pair<int, int>>& chosen) -> bool {
        if (++res.crossing_sets_tried > lim.max_crossing_sets) {
            budget_hit = true;
            return true;
        }
        std::vector<int> free_vertices;
        std::vector<std::vector<int>> tail(n);
        for (int v = 0; v < n; ++v)
            if (incident[v].size() >= 3) {
                free_vertices.push_back(v);
                tail[v].assign(incident[v].begin() + 1, incident[v].end());
            }
        while (true) {
            for (long long bits = 0; bits < (1LL << chosen.size()); ++bits) {
                if (++res.rotation_systems_tried > lim.max_rotation_systems) {
                    budget_hit = true;
                    return true;
                }
                sketch sk;
                sk.n = n;
                sk.labels.assign(n, "");
                sk.rot.assign(n, {});
                sk.edges = g.edges;
                for (size_t i = 0; i < chosen.size(); ++i)
                    sk.add_crossing(chosen[i].first, chosen[i].second,
                                    (bits >> i) & 1);
                for (int v = 0; v < n; ++v) {
                    if (incident[v].size() >= 3) {
                        sk.rot[v].push_back(incident[v][0]);
                        sk.rot[v].insert(sk.rot[v].end(), tail[v].begin(),
                                         tail[v].end());
                    } else {
                        sk.rot[v] = incident[v];
                    }
                }
                try {
                    res.found = drawing::build(std::move(sk));
                    return true;
                } catch (const drawing_error&) {
                }
            }
            size_t i = 0;
            while (i < free_vertices.size() &&
                   !std::next_permutation(tail[free_vertices[i]].begin(),
                                          tail[free_vertices[i]].end()))
                ++i;
            if (i == free_vertices.size()) break;
        }
        return false;
    };

    std::vector<char> edge_used(m, 0);
    std::vector<std::pair<int, int>> chosen;
    std::function<bool(size_t, long long)> pick = [&](size_t from,
                                                      long long need) -> bool {
        if (need == 0) return try_set(chosen);
        for (size_t i = from; i < cand.size(); ++i) {
            auto [e, f] = cand[i];
            if (edge_used[e] || edge_used[f]) continue;
            edge_used[e] = edge_used[f] = 1;
            chosen.emplace_back(e, f);
            const bool stop = pick(i + 1, need - 1);
            chosen.pop_back();
            edge_used[e] = edge_used[f] = 0;
            if (stop) return true;
        }
        return false;
    };

    for (long long x = lo; x <= hi; ++x)
        if (pick(0, x)) break;

    if (!res.found) {
        res.exhausted_full_space = !budget_hit;
        res.reject_reason = budget_hit
                                ? "search budget exhausted before covering the space"
                                : "no spherical rotation system in the full range";
    }
    return res;
}

}   // namespace oneplane
