#include "oneplane/invariants.hpp"

#include <algorithm>

#include "oneplane/cliques.hpp"

namespace oneplane {

invariant_report compute_invariants(const drawing& d) {
    invariant_report rep;
    rep.n = d.n();
    rep.m = d.m();
    rep.x = d.x();
    rep.a_values.assign(rep.x, 0);

    for (int fid = 0; fid < d.face_count(); ++fid) {
        const int deg = d.face_degree(fid);
        rep.face_degree_histogram[deg]++;
        int fakes = 0;
        for (int dart : d.face_walk(fid)) {
            int pv = d.dart_origin(dart);
            if (!d.is_fake(pv)) continue;
            ++fakes;
            if (deg >= 4) rep.a_values[pv - d.n()]++;
        }
        if (deg >= 4) {
            rep.c_values[fid] = fakes;
            rep.twoB += deg - 2LL * fakes;
            rep.C += deg - 4LL;
        }
    }
    for (int a : rep.a_values) rep.A += a - 2LL;

    rep.residual = 4LL * rep.m -
                   (12LL * rep.n - 24 - 2 * rep.A - rep.twoB - 3 * rep.C);
    rep.identity_ok = d.connected() && rep.n >= 3 && rep.residual == 0;
    return rep;
}

int eta(const drawing& d, int pv, int fid) {
    if (pv < 0 || pv >= d.planar_n())
        fail("UnknownVertex", "no planarization vertex " + std::to_string(pv));
    if (fid < 0 || fid >= d.face_count())
        fail("UnknownFace", "no face " + std::to_string(fid));
    int count = 0;
    for (int dart : d.face_walk(fid))
        if (d.dart_origin(dart) == pv) ++count;
    return count;
}

edge_formula_result check_edge_formula(const drawing& d) {
    if (d.n() < 3) fail("TooFewVertices", "edge count identity needs n >= 3");
    if (!d.connected()) fail("Disconnected", "edge count identity needs a connected graph");
    invariant_report rep = compute_invariants(d);
    return {rep.residual == 0, rep.residual};
}

bool check_incidence_identity(const drawing& d) {
    invariant_report rep = compute_invariants(d);
    long long sum_a = 0;
    for (int a : rep.a_values) sum_a += a;
    long long sum_c = 0;
    long long deg4 = 0;
    for (const auto& [fid, c] : rep.c_values) {
        sum_c += c;
        deg4 += d.face_degree(fid);
    }
    return sum_a == sum_c && 2 * rep.A + rep.twoB == deg4 - 4LL * rep.x;
}

bool plane_edge_count_check(const drawing& d) {
    if (d.x() > 0) fail("HasCrossings", "plane edge count needs a crossing-free drawing");
    if (d.n() < 3) fail("TooFewVertices", "plane edge count needs n >= 3");
    if (!d.connected()) fail("Disconnected", "plane edge count needs a connected graph");
    long long excess = 0;
    for (int fid = 0; fid < d.face_count(); ++fid)
        if (d.face_degree(fid) >= 4) excess += d.face_degree(fid) - 3;
    return d.m() == 3LL * d.n() - 6 - excess;
}

namespace {

long long ceil_half(long long a) { return a >= 0 ? (a + 1) / 2 : a / 2; }

}   // namespace

low_degree_report low_degree_bound_check(const drawing& d) {
    if (d.x() > 0) fail("HasCrossings", "low degree bound needs a crossing-free drawing");
    if (!d.connected()) fail("Disconnected", "low degree bound needs a connected graph");
    if (d.n() < 3) fail("TooFewVertices", "low degree bound needs n >= 3");
    for (int v = 0; v < d.n(); ++v)
        if (d.planar_degree(v) < 2)
            fail("MinDegreeTooSmall", "vertex " + std::to_string(v) +
                                          " has degree below 2");

    low_degree_report rep;
    std::vector<int> non4;
    for (int fid = 0; fid < d.face_count(); ++fid) {
        int deg = d.face_degree(fid);
        if (deg != 4) {
            rep.s += deg - 4;
            non4.push_back(deg);
        }
    }
    for (int v = 0; v < d.n(); ++v) {
        if (d.planar_degree(v) == 2) rep.n2++;
        if (d.planar_degree(v) == 3) rep.n3++;
    }
    rep.bound = ceil_half(rep.s + rep.n3) + 4;
    rep.holds = rep.n2 + rep.n3 >= rep.bound;

    if (non4.size() == 1) {
        rep.single_large_applicable = true;
        rep.single_large_bound = ceil_half(non4[0]) + 2;
        rep.single_large_holds = rep.n2 + rep.n3 >= rep.single_large_bound;
    }
    if (non4.size() == 2 && non4[0] == 6 && non4[1] == 6) {
        rep.two_hex_applicable = true;
        rep.two_hex_bound = rep.n3 >= 1 ? 7 : 6;
        rep.two_hex_holds = rep.n2 + rep.n3 >= rep.two_hex_bound;
    }
    return rep;
}

std::vector<face_info> classify_faces(const drawing& d) {
    std::vector<face_info> out;
    out.reserve(d.face_count());
    for (int fid = 0; fid < d.face_count(); ++fid) {
        face_info fi;
        fi.id = fid;
        fi.degree = d.face_degree(fid);
        for (int dart : d.face_walk(fid))
            if (d.is_fake(d.dart_origin(dart))) fi.fakes++;
        if (fi.degree == 3 && fi.fakes == 1)
            fi.cls = face_class::fake3;
        else if (fi.degree == 3 && fi.fakes == 0)
            fi.cls = face_class::true3;
        else if (fi.degree == 4 && fi.fakes == 0)
            fi.cls = face_class::true4;
        else if (fi.degree == 4 && fi.fakes == 1)
            fi.cls = face_class::single_fake4;
        else if (fi.degree == 4 && fi.fakes == 2)
            fi.cls = face_class::alternating4;
        else if (fi.degree == 5 && fi.fakes == 2)
            fi.cls = face_class::almost_alternating5;
        else
            fi.cls = face_class::other;
        if (fi.cls == face_class::alternating4) {
            // an alternating 4-face can only bound crossed edge segments
            for (int dart : d.face_walk(fid))
                if (!d.edge_crossed(d.dart_edge(dart)))
                    throw std::logic_error(
                        "alternating 4-face bounded by an uncrossed edge");
        }
        out.push_back(fi);
    }
    return out;
}

std::string face_class_name(const face_info& fi) {
    switch (fi.cls) {
        case face_class::fake3: return "Fake3";
        case face_class::true3: return "True3";
        case face_class::true4: return "True4";
        case face_class::single_fake4: return "SingleFake4";
        case face_class::alternating4: return "Alternating4";
        case face_class::almost_alternating5: return "AlmostAlternating5";
        case face_class::other: break;
    }
    return "Other(" + std::to_string(fi.degree) + "," + std::to_string(fi.fakes) + ")";
}

std::vector<int> alternating_vertices(const drawing& d) {
    std::vector<face_info> info = classify_faces(d);
    std::vector<int> out;
    for (int v = 0; v < d.n(); ++v) {
        if (d.planar_degree(v) < 1) continue;
        bool all = true;
        for (int dart : d.planar_rotation(v))
            if (info[d.face_of(dart)].cls != face_class::alternating4) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

drawing crossing_skeleton(const drawing& d) {
    const sketch& src = d.source();
    sketch sk;
    sk.n = src.n;
    sk.labels = src.labels;
    sk.rot.assign(src.n, {});
    std::vector<int> remap(src.edges.size(), -1);
    for (size_t e = 0; e < src.edges.size(); ++e)
        if (d.edge_crossed(static_cast<int>(e))) {
            remap[e] = static_cast<int>(sk.edges.size());
            sk.edges.push_back(src.edges[e]);
        }
    for (const crossing& cr : src.crossings)
        sk.crossings.push_back({remap[cr.e], remap[cr.f], cr.positive});
    for (int v = 0; v < src.n; ++v)
        for (int e : src.rot[v])
            if (remap[e] != -1) sk.rot[v].push_back(remap[e]);
    return drawing::build(std::move(sk));
}

bool fake_triangle_check(const drawing& d, bool require_k3free) {
    invariant_report rep = compute_invariants(d);
    if (require_k3free) {
        if (has_clique(d, 3))
            fail("PreconditionNotK3Free", "drawing contains a triangle");
        for (int c = 0; c < d.x(); ++c) {
            const std::vector<int>& darts = d.planar_rotation(d.n() + c);
            std::vector<int> corners;
            for (int i = 0; i < 4; ++i)
                if (d.face_degree(d.face_of(darts[i])) == 3) corners.push_back(i);
            if (corners.size() > 2) return false;
            if (corners.size() == 2 && corners[1] - corners[0] != 2) return false;
        }
        return rep.A >= 0;
    }
    if (has_clique(d, 4)) fail("NotK4Free", "drawing contains a K4");
    for (int a : rep.a_values)
        if (a < 1) return false;
    return rep.A >= -static_cast<long long>(rep.x);
}

}   // namespace oneplane
