#pragma once
#include <vector>

namespace matdec {

// Bipartite maximum matching by augmenting paths, deterministic: left
// vertices are processed in ascending order and adjacency lists keep
// insertion order. Small instances only; O(V*E) is fine here.
struct BipartiteMatcher {
    int nl = 0, nr = 0;
    std::vector<std::vector<int>> adj;  // adj[l] = right neighbours
    std::vector<int> ml, mr;            // matches, -1 when exposed

    BipartiteMatcher(int nl_, int nr_) : nl(nl_), nr(nr_), adj(nl_) {}

    void add_edge(int l, int r) { adj[l].push_back(r); }

    int solve();  // returns matching size, fills ml/mr

    // Matching size if only the left vertices flagged in `use` participate.
    int solve_restricted(const std::vector<char>& use_left);

private:
    bool augment(int l, std::vector<char>& seen);
};

// Koenig cover of a bipartite graph from a maximum matching: vertices
// reachable from exposed left vertices by alternating paths give the cover
// (unreached left) u (reached right); its size equals the matching size and
// it meets every edge.
struct KoenigCover {
    std::vector<int> left, right;  // covered vertex indices per side
};
KoenigCover koenig_cover(const BipartiteMatcher& done);

}  // namespace matdec
