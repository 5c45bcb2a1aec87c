#include "oneplane/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <vector>

namespace oneplane {

namespace {

struct point {
    double x = 0;
    double y = 0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// solve A p = b by Gaussian elimination with partial pivoting
std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; ++r) {
            if (a[col][col] == 0) continue;
            const double factor = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> out(n, 0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * out[c];
        out[r] = a[r][r] != 0 ? acc / a[r][r] : 0;
    }
    return out;
}

}   // namespace

std::string svg_render(const drawing& d) {
    const int N = d.planar_n();
    std::vector<std::vector<int>> nbr(N);
    std::vector<std::pair<int, int>> segments;
    for (int e = 0; e < d.m(); ++e) {
        auto [u, v] = d.edge_ends(e);
        if (d.edge_crossed(e)) {
            const int z = d.n() + d.crossing_of_edge(e);
            segments.emplace_back(u, z);
            segments.emplace_back(z, v);
        } else {
            segments.emplace_back(u, v);
        }
    }
    for (auto [a, b] : segments) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }

    std::vector<int> comp(N, -1);
    int comps = 0;
    for (int s = 0; s < N; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = comps;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : nbr[v])
                if (comp[w] == -1) {
                    comp[w] = comps;
                    q.push(w);
                }
        }
        ++comps;
    }

    std::vector<point> pos(N);
    for (int c = 0; c < comps; ++c) {
        std::vector<int> members;
        for (int v = 0; v < N; ++v)
            if (comp[v] == c) members.push_back(v);
        const double off = 2.5 * c;
        if (members.size() == 1) {
            pos[members[0]] = {off, 0};
            continue;
        }
        // outer face: largest walk owned by this component, lowest id on ties
        int outer = -1;
        for (int fid = 0; fid < d.face_count(); ++fid) {
            if (comp[d.dart_origin(d.face_walk(fid)[0])] != c) continue;
            if (outer == -1 || d.face_degree(fid) > d.face_degree(outer)) outer = fid;
        }
        std::vector<char> pinned(N, 0);
        const std::vector<int>& walk = d.face_walk(outer);
        const double L = static_cast<double>(walk.size());
        for (size_t i = 0; i < walk.size(); ++i) {
            const int v = d.dart_origin(walk[i]);
            if (pinned[v]) continue;
            pinned[v] = 1;
            const double ang = 2 * M_PI * static_cast<double>(i) / L;
            pos[v] = {off + std::cos(ang), std::sin(ang)};
        }
        std::vector<int> free_list;
        std::vector<int> slot(N, -1);
        for (int v : members)
            if (!pinned[v]) {
                slot[v] = static_cast<int>(free_list.size());
                free_list.push_back(v);
            }
        if (free_list.empty()) continue;
        const int F = static_cast<int>(free_list.size());
        std::vector<std::vector<double>> a(F, std::vector<double>(F, 0));
        std::vector<double> bx(F, 0), by(F, 0);
        for (int i = 0; i < F; ++i) {
            const int v = free_list[i];
            a[i][i] = static_cast<double>(nbr[v].size());
            for (int w : nbr[v]) {
                if (slot[w] != -1)
                    a[i][slot[w]] -= 1;
                else {
                    bx[i] += pos[w].x;
                    by[i] += pos[w].y;
                }
            }
        }
        const std::vector<double> xs = solve(a, bx);
        const std::vector<double> ys = solve(a, by);
        for (int i = 0; i < F; ++i) pos[free_list[i]] = {xs[i], ys[i]};
    }

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (int v = 0; v < N; ++v) {
        min_x = std::min(min_x, pos[v].x);
        max_x = std::max(max_x, pos[v].x);
        min_y = std::min(min_y, pos[v].y);
        max_y = std::max(max_y, pos[v].y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double scale = 720.0 / span;
    auto sx = [&](double x) { return 40 + (x - min_x) * scale; };
    auto sy = [&](double y) { return 40 + (max_y - y) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    for (auto [a2, b2] : segments)
        out << "<line x1=\"" << num(sx(pos[a2].x)) << "\" y1=\"" << num(sy(pos[a2].y))
            << "\" x2=\"" << num(sx(pos[b2].x)) << "\" y2=\"" << num(sy(pos[b2].y))
            << "\" stroke=\"#334\" stroke-width=\"1.5\"/>\n";
    for (int z = d.n(); z < N; ++z) {
        const double cx = sx(pos[z].x);
        const double cy = sy(pos[z].y);
        const double r = 5;
        out << "<line x1=\"" << num(cx - r) << "\" y1=\"" << num(cy - r) << "\" x2=\""
            << num(cx + r) << "\" y2=\"" << num(cy + r)
            << "\" stroke=\"#b22\" stroke-width=\"1.5\"/>\n";
        out << "<line x1=\"" << num(cx - r) << "\" y1=\"" << num(cy + r) << "\" x2=\""
            << num(cx + r) << "\" y2=\"" << num(cy - r)
            << "\" stroke=\"#b22\" stroke-width=\"1.5\"/>\n";
    }
    for (int v = 0; v < d.n(); ++v) {
        out << "<circle cx=\"" << num(sx(pos[v].x)) << "\" cy=\"" << num(sy(pos[v].y))
            << "\" r=\"4\" fill=\"#246\"/>\n";
        const std::string& lab = d.label(v);
        out << "<text x=\"" << num(sx(pos[v].x) + 6) << "\" y=\""
            << num(sy(pos[v].y) - 6) << "\" font-size=\"12\" fill=\"#246\">"
            << (lab.empty() ? std::to_string(v) : lab) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}   // namespace oneplane
