#pragma once
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "matdec/groundset.hpp"

namespace matdec {

// Hard caps for the exhaustive algorithms. Exceeding one raises
// size_guard_error; these are correctness fences, not tunables.
constexpr int kExhaustiveCap = 20;  // full independence tables, axiom scans
constexpr int kSimClassCap = 16;    // boundary-class bit-vector computations
constexpr int kDecompCap = 10;      // decomposition / width enumeration
constexpr int kDecompMaterializeCap = 8;  // materialized lists of all trees

// A matroid is handed around as an independence oracle over an ordered ground
// set. Oracles are immutable after construction and safe to copy and share;
// the callable must be pure.
struct MatroidOracle {
    GroundSet ground;
    std::function<bool(subset_t)> indep;
};

// Greedy rank in ascending element order.
int rank_of(const MatroidOracle& M, subset_t X);
int rank_full(const MatroidOracle& M);

// X together with every e whose addition does not raise the rank.
subset_t closure_of(const MatroidOracle& M, subset_t X);

// lambda_M(U) = r(U) + r(E-U) - r(E)
int connectivity(const MatroidOracle& M, subset_t U);

// True iff no k-separation exists for any k < n, i.e. no partition (U, E-U)
// with |U|,|E-U| >= k and lambda(U) < k. Exhaustive; |E| <= kExhaustiveCap.
bool is_n_connected(const MatroidOracle& M, int n);

// M / contract \ del. Ground set keeps the surviving ids. Independence is
// rank(X u B_C) - rank(B_C) = |X| where B_C is the greedy basis of the
// contracted part (ascending element order, computed once).
MatroidOracle minor_of(const MatroidOracle& M, subset_t contract, subset_t del);

// X independent in M* iff E-X spans M.
MatroidOracle dual_of(const MatroidOracle& M);

// An explicit family of independent sets, for axiom checking.
struct SetSystem {
    GroundSet ground;
    std::vector<subset_t> independents;
};

struct AxiomCheck {
    bool ok = true;
    std::string witness;  // human-readable failure description, empty when ok

    explicit operator bool() const { return ok; }
};

// Checks the independence axioms: nonempty family, downward closure, and the
// exchange property (checked between adjacent sizes, which suffices once
// downward closure holds). |E| <= kExhaustiveCap.
AxiomCheck verify_axioms(const SetSystem& S);

// Fully materialized independence predicate; the workhorse behind every
// exhaustive computation. |E| <= kExhaustiveCap.
struct IndependenceTable {
    GroundSet ground;
    std::vector<char> indep;  // size 1 << ground.size()

    bool operator()(subset_t X) const { return indep[X] != 0; }
    subset_t full() const { return ground.full(); }
};

IndependenceTable materialize(const MatroidOracle& M);

// rank of every mask, by DP over the table.
std::vector<int> rank_table(const IndependenceTable& T);

SetSystem to_set_system(const IndependenceTable& T);
MatroidOracle table_oracle(const IndependenceTable& T);
MatroidOracle table_oracle(const SetSystem& S);

}  // namespace matdec
