#include "oneplane/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oneplane/cliques.hpp"
#include "oneplane/invariants.hpp"
#include "oneplane/opg.hpp"

namespace oneplane {

sketch delete_edges(const sketch& sk, const std::vector<int>& eids) {
    std::set<int> gone(eids.begin(), eids.end());
    std::vector<int> remap(sk.edges.size(), -1);
    sketch out;
    out.n = sk.n;
    out.labels = sk.labels;
    out.rot.assign(sk.n, {});
    for (int e = 0; e < static_cast<int>(sk.edges.size()); ++e)
        if (!gone.count(e)) {
            remap[e] = static_cast<int>(out.edges.size());
            out.edges.push_back(sk.edges[e]);
        }
    for (const crossing& cr : sk.crossings)
        if (!gone.count(cr.e) && !gone.count(cr.f))
            out.crossings.push_back({remap[cr.e], remap[cr.f], cr.positive});
    for (int v = 0; v < sk.n; ++v)
        for (int e : sk.rot[v])
            if (remap[e] != -1) out.rot[v].push_back(remap[e]);
    return out;
}

sketch delete_vertex(const sketch& sk, int vid) {
    if (vid < 0 || vid >= sk.n) fail("BadParam", "no vertex " + std::to_string(vid));
    std::vector<int> gone;
    for (int e = 0; e < static_cast<int>(sk.edges.size()); ++e)
        if (sk.edges[e].first == vid || sk.edges[e].second == vid) gone.push_back(e);
    sketch tmp = delete_edges(sk, gone);
    auto vmap = [vid](int v) { return v < vid ? v : v - 1; };
    sketch out;
    out.n = tmp.n - 1;
    for (int v = 0; v < tmp.n; ++v) {
        if (v == vid) continue;
        out.labels.push_back(tmp.labels[v]);
        out.rot.push_back(tmp.rot[v]);
    }
    for (auto [a, b] : tmp.edges) out.edges.emplace_back(vmap(a), vmap(b));
    out.crossings = tmp.crossings;
    return out;
}

sketch mirror(const sketch& sk) {
    sketch out = sk;
    for (crossing& cr : out.crossings) cr.positive = !cr.positive;
    for (auto& lst : out.rot) std::reverse(lst.begin(), lst.end());
    return out;
}

namespace {

// add both diagonals, crossed, to every quadrilateral face of a plane sketch
void add_crossed_diagonals(sketch& sk) {
    drawing d = drawing::build(sk);
    for (int fid = 0; fid < d.face_count(); ++fid) {
        const std::vector<int> walk = d.face_walk(fid);
        if (walk.size() != 4)
            throw std::logic_error("diagonal augmentation needs quadrilateral faces");
        std::array<int, 4> ws{};
        for (int i = 0; i < 4; ++i) ws[i] = d.dart_origin(walk[i]);
        if (std::set<int>(ws.begin(), ws.end()).size() != 4)
            throw std::logic_error("quadrilateral face revisits a vertex");
        const int e = sk.add_edge(ws[0], ws[2]);
        const int f = sk.add_edge(ws[3], ws[1]);
        sk.add_crossing(e, f, true);
        const std::array<int, 4> diag = {e, f, e, f};
        for (int i = 0; i < 4; ++i) {
            const int enter = d.dart_edge(walk[(i + 3) % 4]);
            auto& lst = sk.rot[ws[i]];
            auto it = std::find(lst.begin(), lst.end(), enter);
            lst.insert(it + 1, diag[i]);
        }
    }
}

sketch cube_sketch() {
    sketch sk;
    for (int i = 0; i < 8; ++i) sk.add_vertex();
    // outer ring 0..3 ccw, inner ring 4..7 ccw, spokes between them
    std::array<int, 4> ring_o{}, ring_i{}, spoke{};
    for (int k = 0; k < 4; ++k) ring_o[k] = sk.add_edge(k, (k + 1) % 4);
    for (int k = 0; k < 4; ++k) ring_i[k] = sk.add_edge(4 + k, 4 + (k + 1) % 4);
    for (int k = 0; k < 4; ++k) spoke[k] = sk.add_edge(k, 4 + k);
    for (int k = 0; k < 4; ++k) {
        sk.rot[k] = {ring_o[k], spoke[k], ring_o[(k + 3) % 4]};
        sk.rot[4 + k] = {spoke[k], ring_i[k], ring_i[(k + 3) % 4]};
    }
    add_crossed_diagonals(sk);
    return sk;
}

// unique face of degree 6 whose corners are exactly the six labeled true
// vertices, each once
std::vector<int> labeled_hexagon_walk(const drawing& d,
                                      const std::array<std::string, 6>& labels) {
    std::set<int> want;
    for (const std::string& l : labels) {
        int v = d.source().vertex_by_label(l);
        if (v < 0) throw std::logic_error("hexagon label " + l + " missing");
        want.insert(v);
    }
    std::vector<int> hit;
    int count = 0;
    for (int fid = 0; fid < d.face_count(); ++fid) {
        if (d.face_degree(fid) != 6) continue;
        std::vector<int> vs = d.face_vertices(fid);
        bool all_true = true;
        for (int pv : vs)
            if (d.is_fake(pv)) all_true = false;
        if (!all_true) continue;
        std::set<int> got(vs.begin(), vs.end());
        if (got.size() == 6 && got == want) {
            hit = d.face_walk(fid);
            ++count;
        }
    }
    if (count != 1)
        throw std::logic_error("labeled hexagon face not unique (" +
                               std::to_string(count) + " candidates)");
    return hit;
}

}   // namespace

drawing gen_cube_g8() { return drawing::build(cube_sketch()); }

sketch ladder_sketch(int k) {
    if (k < 2) fail("BadParam", "ladder needs k >= 2");
    sketch sk;
    const int u = sk.add_vertex("u");
    const int v = sk.add_vertex("v");
    std::vector<int> a(k), b(k);
    for (int i = 0; i < k; ++i) a[i] = sk.add_vertex("a" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) b[i] = sk.add_vertex("b" + std::to_string(i + 1));
    std::vector<int> UA(k), VB(k), RailA(k - 1), RailB(k - 1), Rung(k), UB(k - 1),
        VA(k - 1);
    for (int i = 0; i < k; ++i) UA[i] = sk.add_edge(u, a[i]);
    for (int i = 0; i < k; ++i) VB[i] = sk.add_edge(v, b[i]);
    for (int i = 0; i + 1 < k; ++i) RailA[i] = sk.add_edge(a[i], a[i + 1]);
    for (int i = 0; i + 1 < k; ++i) RailB[i] = sk.add_edge(b[i], b[i + 1]);
    for (int i = 0; i < k; ++i) Rung[i] = sk.add_edge(a[i], b[i]);
    for (int i = 0; i + 1 < k; ++i) UB[i] = sk.add_edge(u, b[i + 1]);
    for (int i = 0; i + 1 < k; ++i) VA[i] = sk.add_edge(v, a[i]);
    for (int i = 0; i + 1 < k; ++i) {
        sk.add_crossing(UB[i], RailA[i], true);
        sk.add_crossing(VA[i], RailB[i], false);
    }
    for (int i = 0; i < k; ++i) {
        sk.rot[u].push_back(UA[i]);
        if (i + 1 < k) sk.rot[u].push_back(UB[i]);
    }
    for (int i = k - 1; i >= 0; --i) {
        sk.rot[v].push_back(VB[i]);
        if (i - 1 >= 0) sk.rot[v].push_back(VA[i - 1]);
    }
    for (int i = 0; i < k; ++i) {
        if (i == 0)
            sk.rot[a[0]] = {RailA[0], UA[0], Rung[0], VA[0]};
        else if (i == k - 1)
            sk.rot[a[i]] = {UA[i], RailA[i - 1], Rung[i]};
        else
            sk.rot[a[i]] = {RailA[i], UA[i], RailA[i - 1], Rung[i], VA[i]};
        if (i == 0)
            sk.rot[b[0]] = {RailB[0], Rung[0], VB[0]};
        else if (i == k - 1)
            sk.rot[b[i]] = {Rung[i], UB[i - 1], RailB[i - 1], VB[i]};
        else
            sk.rot[b[i]] = {RailB[i], Rung[i], UB[i - 1], RailB[i - 1], VB[i]};
    }
    return sk;
}

drawing gen_ladder_H(int k) { return drawing::build(ladder_sketch(k)); }

drawing ladder_with_chords(int k) {
    sketch sk = ladder_sketch(k);
    drawing d = drawing::build(sk);
    const std::array<std::string, 6> labs = {
        "u", "a1", "b1", "v", "b" + std::to_string(k), "a" + std::to_string(k)};
    const std::vector<int> walk = labeled_hexagon_walk(d, labs);
    std::array<int, 6> ws{};
    for (int i = 0; i < 6; ++i) ws[i] = d.dart_origin(walk[i]);
    auto corner_insert = [&](int w, int edge_id) {
        int i = static_cast<int>(std::find(ws.begin(), ws.end(), w) - ws.begin());
        const int enter = d.dart_edge(walk[(i + 5) % 6]);
        auto& lst = sk.rot[w];
        auto it = std::find(lst.begin(), lst.end(), enter);
        lst.insert(it + 1, edge_id);
    };
    const int u = sk.vertex_by_label("u");
    const int v = sk.vertex_by_label("v");
    const int b1 = sk.vertex_by_label("b1");
    const int ak = sk.vertex_by_label("a" + std::to_string(k));
    const int ub1 = sk.add_edge(u, b1);
    corner_insert(u, ub1);
    corner_insert(b1, ub1);
    const int vak = sk.add_edge(v, ak);
    corner_insert(v, vak);
    corner_insert(ak, vak);
    return drawing::build(sk);
}

q4_result q4_addition_step(const sketch& sk0, const std::array<int, 4>& quad_in) {
    drawing d = drawing::build(sk0);
    std::array<int, 4> quad = quad_in;
    std::sort(quad.begin(), quad.end());

    int ci = -1;
    for (int i = 0; i < d.x(); ++i) {
        const crossing& cr = sk0.crossings[i];
        std::array<int, 4> ends = {sk0.edges[cr.e].first, sk0.edges[cr.e].second,
                                   sk0.edges[cr.f].first, sk0.edges[cr.f].second};
        std::sort(ends.begin(), ends.end());
        if (ends == quad) {
            ci = i;
            break;
        }
    }
    if (ci < 0)
        fail("NoCrossedK4AtSeed", "no crossing spans the given four vertices");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!d.has_edge(quad[i], quad[j]))
                fail("NoCrossedK4AtSeed", "seed vertices do not induce a complete graph");
    const int base = 2 * d.m();
    for (int t = 0; t < 4; ++t)
        if (d.face_degree(d.face_of(base + 4 * ci + t)) != 3)
            fail("NoCrossedK4AtSeed", "a corner face of the seed crossing is not a triangle");

    const int e = sk0.crossings[ci].e;
    const int f = sk0.crossings[ci].f;
    const auto [eu, ev] = sk0.edges[e];
    const auto [fu, fv] = sk0.edges[f];
    // ccw endpoint order around the crossing point
    const std::array<int, 4> w = sk0.crossings[ci].positive
                                     ? std::array<int, 4>{eu, fu, ev, fv}
                                     : std::array<int, 4>{eu, fv, ev, fu};

    sketch nsk = delete_edges(sk0, {e, f});
    std::vector<int> remap(sk0.edges.size(), -1);
    {
        int next_id = 0;
        for (int oldi = 0; oldi < static_cast<int>(sk0.edges.size()); ++oldi)
            if (oldi != e && oldi != f) remap[oldi] = next_id++;
    }

    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) s[i] = nsk.add_vertex();
    std::array<int, 4> R{}, P{}, X{}, Y{};
    for (int i = 0; i < 4; ++i) R[i] = nsk.add_edge(s[i], s[(i + 1) % 4]);
    for (int i = 0; i < 4; ++i) P[i] = nsk.add_edge(w[i], s[i]);
    for (int i = 0; i < 4; ++i) X[i] = nsk.add_edge(s[(i + 1) % 4], w[i]);
    for (int i = 0; i < 4; ++i) Y[i] = nsk.add_edge(w[(i + 1) % 4], s[i]);
    const int D1 = nsk.add_edge(s[0], s[2]);
    const int D2 = nsk.add_edge(s[3], s[1]);
    const int first_new_cross = static_cast<int>(nsk.crossings.size());
    for (int i = 0; i < 4; ++i) nsk.add_crossing(X[i], Y[i], false);
    nsk.add_crossing(D1, D2, false);

    for (int i = 0; i < 4; ++i)
        nsk.rot[s[i]] = {P[i],          Y[i],
                         R[i],          i % 2 == 0 ? D1 : D2,
                         R[(i + 3) % 4], X[(i + 3) % 4]};
    // the deleted diagonal entry at each corner becomes the three new spokes
    const std::array<int, 4> old_diag = {e, f, e, f};
    for (int i = 0; i < 4; ++i) {
        std::vector<int> lst;
        for (int tok : sk0.rot[w[i]]) {
            if (tok == old_diag[i]) {
                lst.push_back(X[i]);
                lst.push_back(P[i]);
                lst.push_back(Y[(i + 3) % 4]);
            } else {
                lst.push_back(remap[tok]);
            }
        }
        nsk.rot[w[i]] = std::move(lst);
    }

    q4_result out;
    out.sk = std::move(nsk);
    for (int i = 0; i < 5; ++i) out.new_crossings.push_back(first_new_cross + i);
    return out;
}

drawing q4_addition(const drawing& d, const std::array<int, 4>& quad) {
    q4_result r = q4_addition_step(d.source(), quad);
    try {
        return drawing::build(std::move(r.sk));
    } catch (const drawing_error& ex) {
        if (ex.code() == "DuplicateEdge")
            fail("ResultNotSimple", ex.what());
        throw;
    }
}

std::vector<std::array<int, 4>> crossed_k4_sets(const sketch& sk,
                                                const std::vector<int>* only) {
    std::set<std::pair<int, int>> have;
    for (auto [a, b] : sk.edges) have.insert(std::minmax(a, b));
    std::set<std::array<int, 4>> out;
    std::vector<int> ids;
    if (only)
        ids = *only;
    else
        for (int i = 0; i < static_cast<int>(sk.crossings.size()); ++i) ids.push_back(i);
    for (int ci : ids) {
        const crossing& cr = sk.crossings[ci];
        std::array<int, 4> q = {sk.edges[cr.e].first, sk.edges[cr.e].second,
                                sk.edges[cr.f].first, sk.edges[cr.f].second};
        std::sort(q.begin(), q.end());
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
                if (!have.count(std::minmax(q[i], q[j]))) ok = false;
        if (ok) out.insert(q);
    }
    return {out.begin(), out.end()};
}

namespace {

std::pair<sketch, std::vector<int>> k5_chain(int n) {
    if (n == 8) return {cube_sketch(), {}};
    if (n == 10) return {load_fixture("g10_k5").source(), {}};
    if (n == 11) return {load_fixture("g11_k5").source(), {}};
    if (n == 13) return {load_fixture("g13_k5").source(), {}};
    auto [base, fresh] = k5_chain(n - 4);
    std::vector<std::array<int, 4>> cands =
        crossed_k4_sets(base, fresh.empty() ? nullptr : &fresh);
    if (cands.empty()) cands = crossed_k4_sets(base);
    if (cands.empty()) throw std::logic_error("no crossed K4 available for growth");
    q4_result r = q4_addition_step(base, cands.front());
    return {std::move(r.sk), std::move(r.new_crossings)};
}

}   // namespace

drawing gen_k5_optimal(int n) {
    if (n < 8 || n == 9)
        fail("BadParam", "family defined for n = 8 and n >= 10, got " +
                             std::to_string(n));
    return drawing::build(k5_chain(n).first);
}

namespace {

sketch glue_k4_sketch(int n) {
    const bool odd = n % 2 == 1;
    const int ell = odd ? (n - 1) / 2 : (n - 2) / 2;
    const int k = ell - 2;
    sketch qfull = load_fixture(odd ? "g9_k4" : "g10_k4").source();

    // remove the four edges closing the hexagon u a1 b1 v b2 a2
    const std::array<std::pair<std::string, std::string>, 4> gone_pairs = {
        std::make_pair(std::string("a1"), std::string("a2")),
        std::make_pair(std::string("b1"), std::string("b2")),
        std::make_pair(std::string("u"), std::string("b2")),
        std::make_pair(std::string("v"), std::string("a1"))};
    std::vector<int> eids;
    for (const auto& [la, lb] : gone_pairs) {
        const int va = qfull.vertex_by_label(la);
        const int vb = qfull.vertex_by_label(lb);
        for (int e = 0; e < static_cast<int>(qfull.edges.size()); ++e)
            if (std::minmax(qfull.edges[e].first, qfull.edges[e].second) ==
                std::minmax(va, vb))
                eids.push_back(e);
    }
    if (eids.size() != 4) throw std::logic_error("hexagon closing edges not found");
    sketch Q = delete_edges(qfull, eids);
    drawing bq = drawing::build(Q);
    const std::array<std::string, 6> qlabs = {"u", "a1", "b1", "v", "b2", "a2"};
    std::vector<int> hexq = labeled_hexagon_walk(bq, qlabs);

    sketch H = ladder_sketch(k);
    const std::array<std::string, 6> hlabs = {
        "u", "a1", "b1", "v", "b" + std::to_string(k), "a" + std::to_string(k)};
    // H hexagon label -> Q hexagon label
    std::map<std::string, std::string> lmap = {
        {"u", "u"},
        {"a1", "a1"},
        {"b1", "b1"},
        {"v", "v"},
        {"b" + std::to_string(k), "b2"},
        {"a" + std::to_string(k), "a2"}};

    auto walk_vertices = [](const drawing& d, const std::vector<int>& walk) {
        std::vector<int> vs;
        for (int dart : walk) vs.push_back(d.dart_origin(dart));
        return vs;
    };
    auto walk_edges = [](const drawing& d, const std::vector<int>& walk) {
        std::vector<int> es;
        for (int dart : walk) es.push_back(d.dart_edge(dart));
        return es;
    };

    std::vector<int> qverts = walk_vertices(bq, hexq);
    std::vector<int> qedges = walk_edges(bq, hexq);

    drawing bh = drawing::build(H);
    std::vector<int> hexh = labeled_hexagon_walk(bh, hlabs);
    std::vector<int> hverts = walk_vertices(bh, hexh);
    std::vector<int> hedges = walk_edges(bh, hexh);

    // the shared hexagon is traversed in opposite directions by the two
    // patches; if not, flip H
    auto index_of = [](const std::vector<int>& vs, int v) {
        return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
    };
    {
        const int wq = Q.vertex_by_label("u");
        const int wh = H.vertex_by_label("u");
        const int h_next = hverts[(index_of(hverts, wh) + 1) % 6];
        const int q_prev = qverts[(index_of(qverts, wq) + 5) % 6];
        if (Q.labels[q_prev] != lmap[H.labels[h_next]]) {
            H = mirror(H);
            bh = drawing::build(H);
            hexh = labeled_hexagon_walk(bh, hlabs);
            hverts = walk_vertices(bh, hexh);
            hedges = walk_edges(bh, hexh);
            const int wh2 = H.vertex_by_label("u");
            const int h_next2 = hverts[(index_of(hverts, wh2) + 1) % 6];
            if (Q.labels[q_prev] != lmap[H.labels[h_next2]])
                throw std::logic_error("hexagon orientation mismatch after mirror");
        }
    }

    std::map<int, int> shared;   // H vertex -> Q vertex
    for (const auto& [hl, ql] : lmap)
        shared[H.vertex_by_label(hl)] = Q.vertex_by_label(ql);

    std::map<int, int> qin, hin, hout;
    for (int i = 0; i < 6; ++i) qin[qverts[i]] = qedges[(i + 5) % 6];
    for (int i = 0; i < 6; ++i) {
        hin[hverts[i]] = hedges[(i + 5) % 6];
        hout[hverts[i]] = hedges[i];
    }
    for (int whv : hverts) {
        const int wq = shared.at(whv);
        const auto eq = std::minmax(Q.edges[qin[wq]].first, Q.edges[qin[wq]].second);
        const auto [ha, hb] = H.edges[hout[whv]];
        if (!shared.count(ha) || !shared.count(hb))
            throw std::logic_error("hexagon edge leaves the shared boundary");
        if (eq != std::minmax(shared.at(ha), shared.at(hb)))
            throw std::logic_error("splice anchor mismatch at a shared vertex");
    }

    sketch out;
    out.n = Q.n;
    out.labels = Q.labels;
    out.rot = Q.rot;
    std::map<int, int> hv_map;
    for (int v = 0; v < H.n; ++v) {
        if (shared.count(v)) {
            hv_map[v] = shared.at(v);
        } else {
            hv_map[v] = out.n++;
            out.labels.emplace_back();
            out.rot.emplace_back();
        }
    }
    out.edges = Q.edges;
    std::set<int> hex_edges(hedges.begin(), hedges.end());
    std::map<int, int> he_map;
    for (int e = 0; e < static_cast<int>(H.edges.size()); ++e) {
        if (hex_edges.count(e)) continue;
        he_map[e] = static_cast<int>(out.edges.size());
        out.edges.emplace_back(hv_map[H.edges[e].first], hv_map[H.edges[e].second]);
    }
    out.crossings = Q.crossings;
    for (const crossing& cr : H.crossings)
        out.crossings.push_back({he_map.at(cr.e), he_map.at(cr.f), cr.positive});
    for (int v = 0; v < H.n; ++v) {
        if (shared.count(v)) continue;
        for (int e : H.rot[v]) out.rot[hv_map[v]].push_back(he_map.at(e));
    }
    // splice the ccw fan of H edges strictly between hout and hin into Q's
    // rotation right after the entering hexagon edge
    for (int whv : hverts) {
        const int wq = shared.at(whv);
        const std::vector<int>& roth = H.rot[whv];
        const int j = index_of(roth, hout[whv]);
        std::vector<int> seg;
        int p = (j + 1) % static_cast<int>(roth.size());
        while (roth[p] != hin[whv]) {
            seg.push_back(he_map.at(roth[p]));
            p = (p + 1) % static_cast<int>(roth.size());
        }
        std::vector<int>& lst = out.rot[wq];
        auto at = std::find(lst.begin(), lst.end(), qin[wq]);
        lst.insert(at + 1, seg.begin(), seg.end());
    }
    return out;
}

}   // namespace

drawing gen_k4_extremal(int n) {
    if (n < 9) fail("BadParam", "family defined for n >= 9, got " + std::to_string(n));
    if (n == 9) return load_fixture("g9_k4");
    if (n == 10) return load_fixture("g10_k4");
    return drawing::build(glue_k4_sketch(n));
}

namespace {

const char* const turan7_k5_opg = R"(opg 1
vertex 0 x
vertex 1 y
vertex 2 z
vertex 3 xp
vertex 4 yp
vertex 5 zp
vertex 6 d
edge 0 0 1
edge 1 1 2
edge 2 2 0
edge 3 3 4
edge 4 4 5
edge 5 5 3
edge 6 0 4
edge 7 0 5
edge 8 1 3
edge 9 1 5
edge 10 2 3
edge 11 2 4
edge 12 6 3
edge 13 6 4
edge 14 6 5
edge 15 6 0
edge 16 6 1
edge 17 6 2
cross 0 3 17 neg
cross 1 4 15 neg
cross 2 5 16 neg
rot 0 e0 e7 e15 e6 e2
rot 1 e0 e1 e8 e16 e9
rot 2 e1 e2 e11 e17 e10
rot 3 e3 e12 e5 e8 e10
rot 4 e3 e11 e6 e4 e13
rot 5 e4 e7 e9 e5 e14
rot 6 e12 e17 e13 e15 e14 e16
)";

const char* const turan7_k4_opg = R"(opg 1
vertex 0 a1
vertex 1 a2
vertex 2 a3
vertex 3 b1
vertex 4 b2
vertex 5 c1
vertex 6 c2
edge 0 3 5
edge 1 5 0
edge 2 0 3
edge 3 4 6
edge 4 6 1
edge 5 1 4
edge 6 3 6
edge 7 3 1
edge 8 5 1
edge 9 5 4
edge 10 0 4
edge 11 0 6
edge 12 2 3
edge 13 2 4
edge 14 2 5
edge 15 2 6
cross 0 5 15 pos
cross 1 8 12 pos
rot 0 e1 e2 e11 e10
rot 1 e4 e7 e8 e5
rot 2 e12 e14 e13 e15
rot 3 e0 e12 e7 e6 e2
rot 4 e3 e5 e13 e9 e10
rot 5 e0 e1 e9 e14 e8
rot 6 e3 e11 e6 e4 e15
)";

const char* const turan_k5_deletion[] = {"zp", "yp", "xp", "d", "z", "y"};
const char* const turan_k4_deletion[] = {"a3", "a2", "c2", "b2", "c1", "b1"};

}   // namespace

drawing gen_turan_drawing(int n, int k) {
    if (n < 1 || n > 7 || (k != 4 && k != 5))
        fail("BadParam", "turan drawings cover n in 1..7 and k in {4,5}");
    sketch sk = parse_opg_sketch(k == 5 ? turan7_k5_opg : turan7_k4_opg);
    const char* const* order = k == 5 ? turan_k5_deletion : turan_k4_deletion;
    while (sk.n > n) {
        const int vid = sk.vertex_by_label(order[7 - sk.n]);
        if (vid < 0) throw std::logic_error("deletion label missing");
        sk = delete_vertex(sk, vid);
    }
    return drawing::build(sk);
}

namespace {

struct fixture_profile {
    int n;
    int m;
    int x;
    int free_k;      // drawing must contain no clique of this size
    bool nonbip;     // drawing must contain an odd cycle
};

const std::map<std::string, fixture_profile>& fixture_profiles() {
    static const std::map<std::string, fixture_profile> table = {
        {"maxe84", {8, 20, 4, 4, false}},
        {"maxe95", {9, 27, 6, 5, false}},
        {"g9_k4", {9, 24, 6, 4, false}},
        {"g10_k4", {10, 28, 8, 4, false}},
        {"g10_k5", {10, 32, 8, 5, false}},
        {"g11_k5", {11, 36, 9, 5, false}},
        {"g13_k5", {13, 44, 11, 5, false}},
        {"fig13_nonbip", {10, 20, 6, 3, true}},
    };
    return table;
}

}   // namespace

std::string fixture_directory() {
    if (const char* env = std::getenv("ONEPLANE_FIXTURES"); env && *env) return env;
#ifdef ONEPLANE_DEFAULT_FIXTURES
    return ONEPLANE_DEFAULT_FIXTURES;
#else
    return "fixtures";
#endif
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, p] : fixture_profiles()) out.push_back(name);
    return out;
}

drawing load_fixture(const std::string& name) {
    auto it = fixture_profiles().find(name);
    if (it == fixture_profiles().end())
        fail("UnknownFixture", "no fixture named '" + name + "'");
    const std::string path = fixture_directory() + "/" + name + ".opg";
    std::ifstream in(path);
    if (!in) fail("FixtureInvalid", name + ": cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const fixture_profile& p = it->second;
    try {
        drawing d = parse_opg(buf.str());
        if (d.n() != p.n || d.m() != p.m || d.x() != p.x)
            fail("FixtureInvalid", name + ": size profile mismatch (n=" +
                                       std::to_string(d.n()) + " m=" +
                                       std::to_string(d.m()) + " x=" +
                                       std::to_string(d.x()) + ")");
        if (!check_edge_formula(d).ok)
            fail("FixtureInvalid", name + ": edge count identity fails");
        if (has_clique(d, p.free_k))
            fail("FixtureInvalid", name + ": clique profile mismatch");
        if (p.nonbip && is_bipartite(abstract_of(d)))
            fail("FixtureInvalid", name + ": expected an odd cycle");
        return d;
    } catch (const drawing_error& ex) {
        if (ex.code() == "FixtureInvalid") throw;
        fail("FixtureInvalid", name + ": " + ex.what());
    }
}

}   // namespace oneplane
