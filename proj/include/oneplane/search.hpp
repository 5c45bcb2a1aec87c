#pragma once

#include <optional>
#include <string>

#include "oneplane/cliques.hpp"
#include "oneplane/drawing.hpp"

namespace oneplane {

struct search_limits {
    long long max_crossing_sets = 200000;
    long long max_rotation_systems = 2000000;
};

struct search_result {
    std::optional<drawing> found;
    // true when every crossing set and rotation system in range was tried
    // (or a sound filter proved none can exist), so absence is a proof
    bool exhausted_full_space = false;
    std::string reject_reason;
    long long crossing_sets_tried = 0;
    long long rotation_systems_tried = 0;
};

// look for a drawing of g with every edge crossed at most once: filter by
// proven edge bounds, then enumerate crossing pair sets and rotation systems,
// accepting the first spherical one
search_result drawing_search(const abstract_graph& g, const search_limits& lim = {});

}   // namespace oneplane
