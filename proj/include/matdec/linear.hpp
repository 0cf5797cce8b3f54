#pragma once
#include <vector>

#include "matdec/core.hpp"

namespace matdec {

// Column representation of a matroid over a prime field GF(p). Elements are
// the columns, ids 1..cols.
struct LinearRep {
    int p = 2;                           // prime
    int rows = 0;
    std::vector<std::vector<int>> cols;  // each of length rows, entries in [0, p)
};

void validate(const LinearRep& rep);  // throws std::domain_error

MatroidOracle linear_oracle(const LinearRep& rep);

// Row-space helpers over GF(p). Matrices are vectors of equal-length rows.
using FpMatrix = std::vector<std::vector<int>>;

int fp_inv(int a, int p);

// In-place Gaussian elimination to reduced row echelon form; returns rank.
// Zero rows are dropped, pivot columns ascend, pivots are 1 with zeros above:
// the result is the canonical basis of the row space.
int rref(FpMatrix& m, int p);

int matrix_rank(FpMatrix m, int p);

// Canonical (RREF) basis of span(X) n span(Y), where X and Y are given by
// generator vectors. Kernel construction on the juxtaposed generator matrix:
// solutions of sum u_i x_i = sum w_j y_j yield the intersection.
FpMatrix subspace_intersection(const FpMatrix& gens_x, const FpMatrix& gens_y, int dim, int p);

}  // namespace matdec
