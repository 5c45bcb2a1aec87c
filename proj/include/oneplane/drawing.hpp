#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oneplane {

// Every failure carries a stable code string (first word of what()) so
// callers and the CLI can dispatch on it without scraping messages.
class drawing_error : public std::runtime_error {
public:
    drawing_error(const std::string& code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(code) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] void fail(const std::string& code, const std::string& msg);

struct crossing {
    int e = -1;
    int f = -1;
    bool positive = true;
};

// Mutable description of a 1-plane drawing on the sphere. Only true vertices
// are stored; the endpoint order of each edge is the orientation reference
// for crossings on it; rot[v] lists incident edge ids in ccw order around v.
struct sketch {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<crossing> crossings;
    std::vector<std::vector<int>> rot;

    int add_vertex(std::string label = "");
    int add_edge(int u, int v);
    int add_crossing(int e, int f, bool positive);
    int vertex_by_label(const std::string& label) const;   // -1 if absent
};

// Validated immutable drawing with dart and face machinery over the
// planarization. Edge e owns darts 2e (at edges[e].first) and 2e+1 (at
// .second). Crossing c adds fake darts base+4c+k with base = 2m:
//   +0 toward e's first endpoint, +1 toward e's second,
//   +2 toward f's first endpoint, +3 toward f's second.
// Planarization vertices: true v is v, the fake of crossing c is n+c.
class drawing {
public:
    static drawing build(sketch sk);   // throws drawing_error

    int n() const { return n_; }       // true vertices
    int m() const { return m_; }       // edges
    int x() const { return static_cast<int>(sk_.crossings.size()); }
    int planar_n() const { return n_ + x(); }
    int planar_m() const { return m_ + 2 * x(); }

    const sketch& source() const { return sk_; }
    const std::string& label(int v) const { return sk_.labels[v]; }
    std::pair<int, int> edge_ends(int e) const { return sk_.edges[e]; }
    const crossing& crossing_at(int c) const { return sk_.crossings[c]; }
    int crossing_of_edge(int e) const { return cross_of_edge_[e]; }
    bool edge_crossed(int e) const { return cross_of_edge_[e] != -1; }

    bool is_fake(int pv) const { return pv >= n_; }
    int planar_degree(int pv) const { return static_cast<int>(rot_darts_[pv].size()); }
    const std::vector<int>& planar_rotation(int pv) const { return rot_darts_[pv]; }

    int dart_count() const { return static_cast<int>(twin_.size()); }
    int twin(int d) const { return twin_[d]; }
    int next(int d) const { return next_[d]; }
    int dart_origin(int d) const { return origin_[d]; }
    int dart_edge(int d) const { return dart_edge_[d]; }

    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(int d) const { return face_of_[d]; }
    const std::vector<int>& face_walk(int fid) const { return faces_[fid]; }
    int face_degree(int fid) const { return static_cast<int>(faces_[fid].size()); }
    std::vector<int> face_vertices(int fid) const;

    bool connected() const { return abstract_components_ <= 1; }
    int component_count() const { return abstract_components_; }
    bool planarization_connected() const { return planar_components_ <= 1; }

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    bool has_edge(int u, int v) const;

private:
    drawing() = default;

    sketch sk_;
    int n_ = 0;
    int m_ = 0;
    std::vector<int> cross_of_edge_;
    std::vector<int> twin_, next_, origin_, dart_edge_;
    std::vector<std::vector<int>> rot_darts_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> adj_;
    int abstract_components_ = 0;
    int planar_components_ = 0;
};

}   // namespace oneplane
