#pragma once
#include <cstdint>
#include <map>
#include <vector>

#include "matdec/core.hpp"

namespace matdec {

// Group labels are carried as int64: for a finite group given by a
// multiplication table they are element indices 0..k-1; for the infinite
// cyclic group ("integers") they are the integers themselves.
struct Group {
    enum class Kind { integers, table };
    Kind kind = Kind::integers;
    std::vector<std::vector<int>> mul;  // table only
    int identity_index = 0;             // table only

    static Group integers();
    static Group from_table(std::vector<std::vector<int>> table);  // validates axioms
    static Group cyclic(int k);
    static Group sym3();  // symmetric group on 3 letters, order 6

    bool contains(long long v) const;
    long long op(long long a, long long b) const;
    long long inv(long long a) const;
    long long identity() const;
    uint64_t order() const;  // 0 for integers
    // smallest-index non-identity element (1 for the integers); used when a
    // contraction must relabel an edge with an arbitrary non-identity gain
    long long smallest_non_identity() const;  // domain_error on trivial group
    bool operator==(const Group& o) const;
};

struct Multigraph {
    struct Edge {
        int id;
        int u, v;  // u == v for loops
    };
    int nvertices = 0;
    std::vector<Edge> edges;

    bool is_loop(int idx) const { return edges[idx].u == edges[idx].v; }
    int index_of_edge(int id) const;  // -1 if absent
    GroundSet edge_ground() const;    // sorted edge ids
};

void validate(const Multigraph& g);  // vertex range, distinct edge ids

// Gain graph: an orientation-aware group labelling. gains[i] is
// sigma(e_i, u_i, v_i) in the stored orientation; the reverse traversal uses
// the inverse. Loop labels are used as-is (balance only asks "identity?").
struct GainGraph {
    Group group;
    Multigraph g;
    std::vector<long long> gains;  // parallel to g.edges

    long long sigma(int edge_idx, int from, int to) const;
};

void validate(const GainGraph& G);

// Bicircular presentation: a multigraph whose listed loops are balanced
// (matroid loops); every other cycle, loops included, is unbalanced.
struct BicircularPresentation {
    Multigraph g;
    std::vector<int> balanced_loops;  // edge ids; must be loops
};

void validate(const BicircularPresentation& B);

// Translate a mask over the sorted edge-id ground set into a mask over
// edge-list positions.
subset_t edge_positions_of(const Multigraph& g, subset_t ground_mask);

// Edge-set components of the subgraph G[X] (vertices incident with X only).
std::vector<subset_t> edge_components(const Multigraph& g, subset_t X);

// nu(G[X]) = |edges| - |incident vertices|
int nu_excess(const Multigraph& g, subset_t X);

// Frame / bicircular independence: no balanced cycle in G[X] and at most one
// cycle per component, i.e. every component has nu <= 0 and a component with
// nu = 0 owns an unbalanced cycle.
MatroidOracle bicircular_oracle(const BicircularPresentation& B);
MatroidOracle gain_oracle(const GainGraph& G);

// Balance test plus anchored path gains for one connected edge set D:
// anchored[v] is the gain of any path in D from the least incident vertex to
// v (well-defined exactly when D is balanced). domain_error if G[D] is empty
// or disconnected.
struct BalanceInfo {
    bool balanced = false;
    std::map<int, long long> anchored;  // only filled when balanced
};
BalanceInfo balance_and_gain(const GainGraph& G, subset_t D);

// Switching at u by alpha: non-loop edges leaving u get alpha on the left,
// entering u get alpha^{-1} on the right; loops and other edges unchanged.
GainGraph switch_at(const GainGraph& G, int u, long long alpha);

enum class MinorOp { remove, contract };

// Graph-level minor rules. Deleting is edge removal. Contracting a non-loop
// switches its gain to the identity and identifies its endpoints; a balanced
// loop contracts to a deletion; contracting an unbalanced loop at u turns the
// other u-edges into loops (non-loops get the smallest non-identity gain,
// remaining u-loops become balanced).
GainGraph gain_minor(const GainGraph& G, int edge_id, MinorOp op);
BicircularPresentation bicircular_minor(const BicircularPresentation& B, int edge_id, MinorOp op);

}  // namespace matdec
