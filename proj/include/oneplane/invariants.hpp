#pragma once

#include <map>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

// Planarization face and incidence invariants of a drawing:
//   a(z)  = occurrences of fake vertex z on boundaries of faces of degree >= 4
//   c(F)  = occurrences of fake vertices on the boundary of F
//   A     = sum over fake z of (a(z) - 2)
//   twoB  = sum over faces of degree >= 4 of (deg - 2c), twice the usual B
//   C     = sum over faces of degree >= 4 of (deg - 4)
// For a connected drawing with n >= 3 these satisfy
//   4m = 12n - 24 - 2A - twoB - 3C
// and residual is the left side minus the right side.
struct invariant_report {
    int n = 0;
    int m = 0;
    int x = 0;
    long long A = 0;
    long long twoB = 0;
    long long C = 0;
    long long residual = 0;
    bool identity_ok = false;
    std::vector<int> a_values;            // indexed by crossing id
    std::map<int, int> c_values;          // face id -> c(F), faces of degree >= 4
    std::map<int, int> face_degree_histogram;
};

invariant_report compute_invariants(const drawing& d);

// occurrences of planarization vertex pv on the walk of face fid
int eta(const drawing& d, int pv, int fid);

struct edge_formula_result {
    bool ok = false;
    long long residual = 0;
};
edge_formula_result check_edge_formula(const drawing& d);

// sum of a(z) equals sum of c(F), and 2A + twoB equals the total degree of
// 4+ faces minus 4x
bool check_incidence_identity(const drawing& d);

// crossing-free drawings only: m = 3n - 6 - sum over 4+ faces of (deg - 3)
bool plane_edge_count_check(const drawing& d);

// crossing-free, connected, min degree 2: counts s = sum over non-4-faces of
// (deg - 4) and checks n2 + n3 >= ceil((s + n3)/2) + 4, plus the two
// specializations when the face profile matches
struct low_degree_report {
    long long s = 0;
    int n2 = 0;
    int n3 = 0;
    long long bound = 0;
    bool holds = false;
    bool single_large_applicable = false;   // exactly one non-4-face, degree k
    long long single_large_bound = 0;
    bool single_large_holds = false;
    bool two_hex_applicable = false;        // exactly two non-4-faces, both hexagons
    long long two_hex_bound = 0;
    bool two_hex_holds = false;
};
low_degree_report low_degree_bound_check(const drawing& d);

enum class face_class {
    fake3,                  // triangle with one fake corner
    true3,                  // triangle, all corners true
    true4,                  // 4-face, all corners true
    single_fake4,           // 4-face with one fake corner
    alternating4,           // 4-face alternating true and fake
    almost_alternating5,    // 5-face with two fakes
    other
};

struct face_info {
    int id = 0;
    int degree = 0;
    int fakes = 0;
    face_class cls = face_class::other;
};

std::vector<face_info> classify_faces(const drawing& d);
std::string face_class_name(const face_info& fi);

// true vertices of positive degree all of whose incident faces alternate
std::vector<int> alternating_vertices(const drawing& d);

// sub-drawing keeping exactly the crossed edges with their crossings and
// induced rotations; every original vertex is kept
drawing crossing_skeleton(const drawing& d);

// triangle corner structure at fake vertices.
// require_k3free: the drawing must have no triangle in its abstract graph;
// checks each fake vertex has at most two incident 3-face corners, opposite
// when there are two, and that A >= 0.
// otherwise: the drawing must have no K4; checks a(z) >= 1 for every fake
// vertex and A >= -x.
bool fake_triangle_check(const drawing& d, bool require_k3free);

}   // namespace oneplane
