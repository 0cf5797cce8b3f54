#include "matdec/core.hpp"

#include <vector>

#include "doctest.h"
#include "matdec/bipartite.hpp"
#include "matdec/constructions.hpp"
#include "matdec/gaingraph.hpp"
#include "matdec/gammoid.hpp"
#include "matdec/linear.hpp"
#include "matdec/uniform.hpp"

using namespace matdec;

namespace {

// independent reference: maximum independent subset size, scanning all subsets
int brute_rank(const MatroidOracle& M, subset_t X) {
    int best = 0;
    for (subset_t S : all_subsets(X))
        if (M.indep(S)) best = std::max(best, popcount(S));
    return best;
}

bool same_table(const MatroidOracle& A, const MatroidOracle& B) {
    if (A.ground.size() != B.ground.size()) return false;
    for (subset_t X = 0; X <= A.ground.full(); ++X)
        if (A.indep(X) != B.indep(X)) return false;
    return true;
}

MatroidOracle mk3() { return m_of_graph(complete_graph(3)); }

LinearRep two_blocks_gf2() {
    // e1,e1,e2,e2: the direct sum of two parallel pairs
    LinearRep rep;
    rep.p = 2;
    rep.rows = 2;
    rep.cols = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
    return rep;
}

std::vector<MatroidOracle> small_zoo() {
    BipartitePresentation ft;
    ft.a_side = {1, 2};
    ft.b_side = {3, 4, 5};
    ft.edges = {{1, 3}, {1, 4}, {2, 4}, {2, 5}};
    BicircularPresentation bc;
    bc.g.nvertices = 3;
    bc.g.edges = {{0, 0, 1}, {1, 0, 1}, {2, 1, 2}, {3, 2, 2}};
    return {uniform_oracle(2, 4), mk3(), linear_oracle(two_blocks_gf2()),
            fundamental_transversal_oracle(ft), bicircular_oracle(bc)};
}

}  // namespace

TEST_CASE("rank by greedy ascent") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    CHECK(rank_of(u24, u24.ground.mask_of({1, 2, 3})) == 2);
    CHECK(rank_of(u24, 0) == 0);
    CHECK(rank_full(u24) == 2);

    // {vertex 0, vertex 1, the edge joining them} is a circuit
    MatroidOracle m = mk3();
    CHECK(rank_of(m, m.ground.mask_of({0, 1, 3})) == 2);

    for (const MatroidOracle& M : small_zoo())
        for (subset_t X = 0; X <= M.ground.full(); ++X) CHECK(rank_of(M, X) == brute_rank(M, X));
}

TEST_CASE("rank is monotone and submodular") {
    std::vector<MatroidOracle> ms = small_zoo();
    ms.push_back(uniform_oracle(3, 12));
    for (const MatroidOracle& M : ms) {
        std::vector<int> rk = rank_table(materialize(M));
        subset_t full = M.ground.full();
        for (subset_t a = 0; a <= full; ++a) {
            for (int i = 0; i < M.ground.size(); ++i) {
                subset_t b = a | (subset_t{1} << i);
                CHECK(rk[a] <= rk[b]);  // monotone in single steps
            }
            if (M.ground.size() > 10) continue;  // pair scan only at desk size
            for (subset_t b = 0; b <= full; ++b)
                CHECK(rk[a | b] + rk[a & b] <= rk[a] + rk[b]);
        }
        // submodularity of the larger instance, sampled diagonal-free
        if (M.ground.size() > 10)
            for (subset_t a = 0; a <= full; a += 7)
                for (subset_t b = 0; b <= full; b += 13)
                    CHECK(rk[a | b] + rk[a & b] <= rk[a] + rk[b]);
    }
}

TEST_CASE("closure adds exactly the rank-preserving elements") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    CHECK(closure_of(u24, u24.ground.mask_of({1, 2})) == u24.ground.full());

    MatroidOracle m = mk3();
    CHECK(closure_of(m, m.ground.mask_of({0, 1})) == m.ground.mask_of({0, 1, 3}));

    // closure of the empty set collects the loops
    GammoidPresentation loops;
    loops.nvertices = 3;
    MatroidOracle all_loops = strict_gammoid_oracle(loops);
    CHECK(closure_of(all_loops, 0) == all_loops.ground.full());
    CHECK(closure_of(u24, 0) == 0);
}

TEST_CASE("connectivity value and its symmetries") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    CHECK(connectivity(u24, u24.ground.mask_of({1, 2})) == 2);
    CHECK(connectivity(u24, 0) == 0);

    MatroidOracle free4 = uniform_oracle(4, 4);
    for (subset_t U = 0; U <= free4.ground.full(); ++U) CHECK(connectivity(free4, U) == 0);

    for (const MatroidOracle& M : small_zoo()) {
        MatroidOracle d = dual_of(M);
        subset_t full = M.ground.full();
        for (subset_t U = 0; U <= full; ++U) {
            CHECK(connectivity(M, U) == connectivity(M, full & ~U));
            CHECK(connectivity(M, U) == connectivity(d, U));
        }
    }
}

TEST_CASE("n-connectivity by exhaustive separation scan") {
    CHECK(is_n_connected(uniform_oracle(2, 4), 3));
    CHECK(is_n_connected(uniform_oracle(1, 1), 2));
    // a direct sum always has a 1-separation
    CHECK_FALSE(is_n_connected(linear_oracle(two_blocks_gf2()), 2));
}

TEST_CASE("minors agree with direct reconstruction") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    CHECK(same_table(minor_of(u24, 0, 0), u24));
    CHECK(same_table(minor_of(u24, u24.ground.mask_of({1}), 0), uniform_oracle(1, 3)));
    CHECK(same_table(minor_of(u24, 0, u24.ground.mask_of({1})), uniform_oracle(2, 3)));

    // deleting one edge element of the sparse paving instance kills exactly
    // the circuits through it
    MatroidOracle m = mk3();
    MatroidOracle md = minor_of(m, 0, m.ground.mask_of({3}));
    CHECK(md.ground.ids == std::vector<int>{0, 1, 2, 4, 5});
    for (subset_t X = 0; X <= md.ground.full(); ++X) {
        subset_t big = m.ground.mask_of(md.ground.ids_of(X));
        CHECK(md.indep(X) == m.indep(big));
    }

    // composing minors equals the single combined minor
    for (const MatroidOracle& M : small_zoo()) {
        subset_t c1 = lowbit(M.ground.full());
        subset_t d1 = lowbit(M.ground.full() & ~c1);
        MatroidOracle step1 = minor_of(M, c1, d1);
        subset_t c2 = lowbit(step1.ground.full());
        MatroidOracle step2 = minor_of(step1, c2, 0);
        subset_t c2_in_m = M.ground.mask_of(step1.ground.ids_of(c2));
        CHECK(same_table(step2, minor_of(M, c1 | c2_in_m, d1)));
    }
}

TEST_CASE("duality") {
    CHECK(same_table(dual_of(uniform_oracle(1, 3)), uniform_oracle(2, 3)));
    for (const MatroidOracle& M : small_zoo()) {
        CHECK(same_table(dual_of(dual_of(M)), M));
        CHECK(rank_full(dual_of(M)) == M.ground.size() - rank_full(M));
    }
    BipartitePresentation ft;
    ft.a_side = {1, 2};
    ft.b_side = {3, 4};
    ft.edges = {{1, 3}, {2, 3}, {2, 4}};
    AxiomCheck ok = verify_axioms(to_set_system(materialize(dual_of(fundamental_transversal_oracle(ft)))));
    CHECK(ok.ok);
}

TEST_CASE("axiom checker accepts matroids and pins violations") {
    CHECK(verify_axioms(to_set_system(materialize(uniform_oracle(2, 4)))).ok);
    CHECK(verify_axioms(to_set_system(materialize(m_of_graph(complete_graph(4))))).ok);

    SetSystem no_empty;
    no_empty.ground = iota_ground(2);
    no_empty.independents = {1u, 2u};
    AxiomCheck r1 = verify_axioms(no_empty);
    CHECK_FALSE(r1.ok);
    CHECK_FALSE(r1.witness.empty());

    SetSystem not_down;
    not_down.ground = iota_ground(2);
    not_down.independents = {0u, 3u};
    CHECK_FALSE(verify_axioms(not_down).ok);

    SetSystem no_exchange;  // {0} cannot grow into {1,2}
    no_exchange.ground = iota_ground(3);
    no_exchange.independents = {0u, 1u, 2u, 4u, 6u};
    AxiomCheck r3 = verify_axioms(no_exchange);
    CHECK_FALSE(r3.ok);
    CHECK_FALSE(r3.witness.empty());
}

TEST_CASE("materialized tables round-trip through set systems") {
    for (const MatroidOracle& M : small_zoo()) {
        IndependenceTable t = materialize(M);
        std::vector<int> rk = rank_table(t);
        for (subset_t X = 0; X <= t.full(); ++X) {
            CHECK(t(X) == M.indep(X));
            CHECK(rk[X] == rank_of(M, X));
        }
        CHECK(same_table(table_oracle(t), M));
        CHECK(same_table(table_oracle(to_set_system(t)), M));
    }
}

TEST_CASE("exhaustive operations refuse oversized grounds") {
    MatroidOracle big{iota_ground(21), [](subset_t) { return true; }};
    CHECK_THROWS_AS(materialize(big), size_guard_error);
    CHECK_THROWS_AS(is_n_connected(big, 2), size_guard_error);
}
