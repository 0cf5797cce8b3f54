#pragma once

#include <utility>
#include <vector>

#include "matdec/automata.hpp"
#include "matdec/latticepath.hpp"

namespace matdec {

// Lattice point: (east steps, north steps).
using lattice_vertex = std::pair<int, int>;

// Staircase k holds the region's unit steps from diagonal k-1 to diagonal k;
// the vertex list walks the incident vertices of both diagonals starting at
// the top-left.
struct Staircase {
    std::vector<std::pair<lattice_vertex, lattice_vertex>> edges;
    std::vector<lattice_vertex> vertices;
};

std::vector<Staircase> staircases(const LatticePathPresentation& L);

// True iff every staircase touches at most 3*lambda - 1 vertices.
bool staircase_bound_check(const LatticePathPresentation& L, int lambda);

struct LatticeParse {
    SigmaTree tree;
    std::vector<int> phi;  // ground position -> leaf node
    TreeAutomaton automaton;
};

// Caterpillar parse tree whose automaton accepts exactly the independent
// sets of the lattice path matroid: the states track the greedy walk's
// position inside the current staircase, plus a sink for dependence and two
// carrier states for leaf bits.  Throws when a staircase exceeds
// 3*lambda - 1 vertices.
LatticeParse lattice_parse(const LatticePathPresentation& L, int lambda);

}  // namespace matdec
