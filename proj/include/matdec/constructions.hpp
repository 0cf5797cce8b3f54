#pragma once

#include <utility>
#include <vector>

#include "matdec/core.hpp"
#include "matdec/gaingraph.hpp"

namespace matdec {

// Loopless graph without parallel edges.
struct SimpleGraph {
    int nvertices = 0;
    std::vector<std::pair<int, int>> edges;
};

void validate(const SimpleGraph& G);
SimpleGraph complete_graph(int n);

// Rank-3 sparse paving matroid on vertices plus edges of G: ground ids are
// 0..n-1 for vertices and n+k for the k-th edge; the circuits of size 3 are
// exactly {i, j, n+k} for each edge k = (i,j), every other 3-set is a basis.
// Requires at least 3 vertices.
MatroidOracle m_of_graph(const SimpleGraph& G);

// Adds a new element freely on the flat F: X u {e} is independent iff X is
// independent and F is not contained in cl(X).  F = empty set makes e a loop.
// Throws if F is not a flat or new_id collides with the ground set.
MatroidOracle principal_extension(const MatroidOracle& M, subset_t flat, int new_id);
// Same, picking the smallest fresh id (max ground id + 1, or 0 when empty).
MatroidOracle principal_extension(const MatroidOracle& M, subset_t flat);

// Bicircular presentation of G with two unbalanced loops attached at every
// vertex.  Edge ids: original edge k keeps id k; the loops at vertex v get
// ids m+2v and m+2v+1 where m = |E(G)|.
BicircularPresentation courcelle_gadget(const SimpleGraph& G);
// The two loop ids at v -- a 2-element circuit of the gadget matroid.
std::vector<int> gadget_vertex_pair(const SimpleGraph& G, int v);
// {edge id, one loop id at each endpoint} -- a 3-element circuit.
std::vector<int> gadget_incidence_triple(const SimpleGraph& G, int edge_index);

// A = {1..m}, B = {k(m+1) : k = 1..n}.  All m*n pairwise sums are distinct
// and avoid A and B; validated on construction.
struct SumSets {
    std::vector<long long> a, b;
    std::vector<long long> sums;  // sorted, size m*n
};
SumSets raunch_sets(int m, int n);

// Integer gain graph on 3 vertices encoding the (q,q) sum sets: the A values
// label parallel 0-1 edges, the B values parallel 1-2 edges, and every
// pairwise sum labels a 0-2 edge.  Balanced triangles are exactly
// {a_i, b_j, a_i + b_j}.
struct ObjectConstruction {
    GainGraph graph;
    std::vector<int> a_ids;                // a_ids[i]: edge id carrying a_i
    std::vector<int> b_ids;                // b_ids[j]: edge id carrying b_j
    std::vector<std::vector<int>> sum_ids;  // sum_ids[i][j]: edge id carrying a_i+b_j
};
ObjectConstruction object_construction(int q);

}  // namespace matdec
