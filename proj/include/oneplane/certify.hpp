#pragma once

#include <string>

#include "oneplane/cliques.hpp"
#include "oneplane/drawing.hpp"

namespace oneplane {

// status of the upper bound in a bound table entry
enum class tightness {
    tight_with_witness,   // a drawing attaining the bound is available
    upper_only,           // only the upper bound is proven
    conjectured_lower     // upper bound proven, matching value conjectured
};

struct bound_entry {
    int n = 0;
    int k = 0;
    long long upper = 0;
    tightness tight = tightness::upper_only;
    long long conjectured_value = -1;   // meaningful for conjectured_lower
    std::string witness;                // how the bound is (or is not) attained
};

// largest edge count of a K_k-free drawing on n vertices; k is clamped at 7,
// every k above that shares the unconditional table
bound_entry maxe_bound(int n, int k);

struct certificate {
    std::string subject;   // content digest of the drawing
    int k = 0;
    int n = 0;
    int m = 0;
    int x = 0;
    long long claimed_bound = 0;
    bool valid_drawing = false;
    bool clique_free = false;
    bool edge_count = false;
    bool crossing_bounds = false;
    bool crossing_applicable = false;
    bool pass = false;
    bool extremal = false;
};

// failures are recorded in the certificate, never thrown
certificate certify(const drawing& d, int k);

// certificate for input that failed to parse or validate
certificate failed_certificate(const std::string& subject, int k);

std::string certificate_text(const certificate& c);

// max(0, 2(m - 3n + 6)) for connected K4-free drawings with n >= 4
long long crossing_lower_bound(const drawing& d);

// maximum edge count over all K_k-free graphs on n labeled vertices by
// exhaustive enumeration; n is capped at 7
long long turan_exhaustive(int n, int k);

// stable content digest of the canonical serialization
std::string drawing_digest(const drawing& d);

}   // namespace oneplane
