#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "matdec/core.hpp"

namespace matdec {

// Unrooted tree with every degree 1 or 3 whose leaves carry the ground
// elements: leaf_node[i] is the tree node holding ground position i.
struct Decomposition {
    int nnodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaf_node;
};

void validate(const Decomposition& D, const GroundSet& ground);

// Ground split induced by tree edge e: first component = elements on the
// side of edges[e].first, second = the complement.
std::pair<subset_t, subset_t> displayed_sets(const Decomposition& D, const GroundSet& ground,
                                             int edge_index);

// Partition of the subsets of U by their independence bit-vector over all
// Z in the complement: X and X' land together iff no Z distinguishes them.
// Members and classes are ordered by the subset order of groundset.hpp;
// each class's representative is its least member.
struct BoundaryClasses {
    subset_t u = 0;
    std::vector<std::vector<subset_t>> classes;

    int count() const { return static_cast<int>(classes.size()); }
    std::vector<subset_t> representatives() const;
    // equality = same U and same representative sets
    bool operator==(const BoundaryClasses& o) const;
};

BoundaryClasses sim_classes(const MatroidOracle& M, subset_t U);
int count_sim_classes(const MatroidOracle& M, subset_t U);
int count_sim_classes(const IndependenceTable& t, subset_t U);

// Max class count over both sides of every tree edge (singleton displays for
// one-element grounds, 1 for the empty ground).
int dw_of(const MatroidOracle& M, const Decomposition& D);
// Max over tree edges of lambda(displayed set) + 1.
int bw_of(const MatroidOracle& M, const Decomposition& D);

// Exact minima of dw_of / bw_of over every decomposition of the ground set.
int decomposition_width(const MatroidOracle& M);
int branch_width(const MatroidOracle& M);

// Every leaf-labeled tree with all degrees in {1,3} on n leaves, each
// exactly once, in a fixed deterministic order.  Leaves are nodes 0..n-1.
void enumerate_decompositions(int n, const std::function<void(const Decomposition&)>& fn);
std::vector<Decomposition> all_decompositions(int n);  // materialized; tighter guard

// Result of a refinement check: when ok is false, x and x2 are equivalent
// under the candidate relation yet some z distinguishes their independence.
struct RefineWitness {
    bool ok = true;
    subset_t x = 0, x2 = 0, z = 0;
    explicit operator bool() const { return ok; }
};

// True iff every pair identified by `coarse` is sim-equivalent.
RefineWitness check_refines(const MatroidOracle& M, subset_t U,
                            const std::function<bool(subset_t, subset_t)>& coarse);
// Same check for a relation given as a key function (equal keys = related);
// linear in the number of subsets of U instead of quadratic.
RefineWitness check_refines_keys(const MatroidOracle& M, subset_t U,
                                 const std::function<std::string(subset_t)>& key);

}  // namespace matdec
