#pragma once

#include <utility>
#include <vector>

#include "matdec/core.hpp"

namespace matdec {

// A digraph with a distinguished target set T.  The strict gammoid on the
// full vertex set declares X independent when X can be linked to T by
// vertex-disjoint directed paths (paths of length zero allowed).
struct GammoidPresentation {
    int nvertices = 0;
    std::vector<std::pair<int, int>> arcs;  // u -> v
    std::vector<int> targets;
};

void validate(const GammoidPresentation& P);

// Ground set = vertex ids 0..nvertices-1.
MatroidOracle strict_gammoid_oracle(const GammoidPresentation& P);

// Adds one new vertex (id = old nvertices) with arcs to every vertex in
// `reach`; the new strict gammoid restricted to the old vertices is unchanged.
GammoidPresentation gammoid_extension(const GammoidPresentation& P, const std::vector<int>& reach);

}  // namespace matdec
