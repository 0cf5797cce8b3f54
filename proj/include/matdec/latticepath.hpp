#pragma once
#include <string>

#include "matdec/core.hpp"

namespace matdec {

// Lattice path matroid presentation: bounding paths P (lower) and Q (upper)
// over {N, E}, equal length and equal N-count, with Q weakly above P on every
// prefix. Ground set is {1, ..., m+r} (step positions); the bases are the
// north-step position sets of the intermediate paths.
struct LatticePathPresentation {
    std::string lower, upper;  // P, Q
};

void validate(const LatticePathPresentation& L);  // throws std::domain_error

// number of N steps among the first i characters
int ncount(const std::string& path, int i);

inline int north_total(const LatticePathPresentation& L) {
    return ncount(L.lower, static_cast<int>(L.lower.size()));
}
inline int east_total(const LatticePathPresentation& L) {
    return static_cast<int>(L.lower.size()) - north_total(L);
}

// Greedy feasibility: walk positions 1..m+r keeping the lowest admissible
// height (north when the element is picked or the lower path forces it, east
// otherwise); Y extends to an intermediate path iff the walk never exceeds
// the upper path.
MatroidOracle lattice_path_oracle(const LatticePathPresentation& L);

}  // namespace matdec
