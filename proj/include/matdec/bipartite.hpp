#pragma once
#include <utility>
#include <vector>

#include "matdec/core.hpp"

namespace matdec {

// Bipartite presentation of a fundamental transversal matroid: ground set is
// A u B (all ids distinct), B is a basis, and X is independent iff some
// matching joins every vertex of X n A to a distinct vertex of B - X.
struct BipartitePresentation {
    std::vector<int> a_side, b_side;        // element ids
    std::vector<std::pair<int, int>> edges;  // (a, b) pairs
};

void validate(const BipartitePresentation& G);  // throws std::domain_error

GroundSet ft_ground(const BipartitePresentation& G);

MatroidOracle fundamental_transversal_oracle(const BipartitePresentation& G);

// The standard transversal presentation of the same matroid: one auxiliary
// set-vertex b' per b in B, adjacent to b and to the A-neighbours of b. Used
// by tests to cross-check against a plain transversal oracle. Auxiliary ids
// are max(id)+1, max(id)+2, ... following B's ascending order.
BipartitePresentation standard_presentation(const BipartitePresentation& G);

}  // namespace matdec
