#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace sdpcut {

/// Exact lower bound on the expected value of a (possibly randomized) cut
/// procedure. Derandomized procedures always return a cut whose value is at
/// least `expected_value`.
struct CutCertificate {
    double expected_value = 0.0;
    std::vector<double> per_edge_terms; // Pr[edge cut], in Graph::edges() order; may be empty
    std::string bound_reference;        // name of the closed-form bound evaluated in `bound`
    double bound = 0.0;
};

struct CutResult {
    Cut cut;
    CutCertificate certificate;
};

inline constexpr double kCertificateTolerance = 1e-9;

} // namespace sdpcut
