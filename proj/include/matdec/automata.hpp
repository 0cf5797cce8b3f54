#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "matdec/core.hpp"

namespace matdec {

// Rooted binary tree with labeled nodes: every node has zero or two
// children, so non-root degrees are 1 or 3 and the root has degree 2 (or the
// tree is the single vertex).
struct SigmaTree {
    struct Node {
        int parent = -1;
        int left = -1;
        int right = -1;
        std::string label;
    };
    std::vector<Node> nodes;
    int root = -1;

    bool is_leaf(int v) const { return nodes[static_cast<std::size_t>(v)].left < 0; }
};

void validate(const SigmaTree& t);

// Bottom-up nondeterministic automaton on labeled binary trees.  delta0 and
// delta2 are partial; an undefined transition yields the empty state set.
struct TreeAutomaton {
    std::set<std::string> alphabet;
    int nstates = 0;
    std::set<int> accepting;
    std::map<std::string, std::set<int>> delta0;
    std::map<std::tuple<std::string, int, int>, std::set<int>> delta2;
};

void validate(const TreeAutomaton& A);

struct Run {
    std::vector<std::set<int>> states;  // per tree node
};

// The recursion: leaves get delta0 of their label; an internal node collects
// delta2 over every pair of child states, except that any pair with an
// undefined entry empties the whole node.
Run run(const TreeAutomaton& A, const SigmaTree& t);
bool accepts(const TreeAutomaton& A, const SigmaTree& t);

// Leaf labels become "label#0" / "label#1" according to membership of the
// leaf's element in Y; internal labels are untouched.  phi[i] is the leaf
// node of ground position i and must hit every leaf exactly once.
SigmaTree encode(const SigmaTree& t, const std::vector<int>& phi, const GroundSet& ground,
                 subset_t Y);

// {Y : the automaton accepts the encoded tree}; |ground| <= 16.
SetSystem accepted_family(const TreeAutomaton& A, const SigmaTree& t, const std::vector<int>& phi,
                          const GroundSet& ground);

// Deterministic text forms (one line per node / transition).
std::string to_text(const SigmaTree& t);
std::string to_text(const TreeAutomaton& A);

}  // namespace matdec
