#pragma once

#include <array>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

// sketch surgery helpers; all return fresh sketches with dense ids
sketch delete_edges(const sketch& sk, const std::vector<int>& eids);
sketch delete_vertex(const sketch& sk, int vid);
sketch mirror(const sketch& sk);

// cube quadrangulation with both crossed diagonals added in every face:
// 8 vertices, 24 edges, 6 crossings
drawing gen_cube_g8();

// ladder gadget H_k on 2k+2 vertices with 7k-4 edges and 2(k-1) crossings;
// vertices are labeled u, v, a1..ak, b1..bk and the 6-cycle
// u a1 b1 v bk ak bounds a face
sketch ladder_sketch(int k);
drawing gen_ladder_H(int k);

// H_k plus the two chords u-b1 and v-ak drawn inside the hexagon face
drawing ladder_with_chords(int k);

// replace the crossed diagonal pair spanning the given 4 vertices by a
// 4-cycle with crossed inner diagonals and 8 corner edges; adds 4 vertices,
// 16 edges, 4 crossings net
struct q4_result {
    sketch sk;
    std::vector<int> new_crossings;
};
q4_result q4_addition_step(const sketch& sk, const std::array<int, 4>& quad);
drawing q4_addition(const drawing& d, const std::array<int, 4>& quad);

// vertex sets of crossings whose four endpoints induce a complete graph;
// sorted ascending, restricted to the given crossing ids when provided
std::vector<std::array<int, 4>> crossed_k4_sets(const sketch& sk,
                                                const std::vector<int>* only = nullptr);

// K5-free drawings with 4n-8 edges and n-2 crossings, n = 8 or n >= 10
drawing gen_k5_optimal(int n);

// K4-free drawings with floor(7n/2)-7 edges, n >= 9
drawing gen_k4_extremal(int n);

// drawings of the Turan graphs T_{k-1}(n) for n <= 7, k in {4,5}
drawing gen_turan_drawing(int n, int k);

// bundled hand-transcribed drawings, re-verified against their recorded
// vertex, edge, crossing and clique profile on every load
drawing load_fixture(const std::string& name);
std::vector<std::string> fixture_names();
std::string fixture_directory();

}   // namespace oneplane
