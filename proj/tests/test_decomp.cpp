#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "matdec/constructions.hpp"
#include "matdec/core.hpp"
#include "matdec/decomp.hpp"
#include "matdec/errors.hpp"
#include "matdec/uniform.hpp"

using namespace matdec;

namespace {

// 4-leaf caterpillar: leaves 0,1 on node 4 and leaves 2,3 on node 5
Decomposition two_cherries() {
    Decomposition D;
    D.nnodes = 6;
    D.edges = {{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}};
    D.leaf_node = {0, 1, 2, 3};
    return D;
}

std::string canonical_edges(const Decomposition& D) {
    std::vector<std::pair<int, int>> es = D.edges;
    for (auto& e : es)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    std::string s;
    for (auto [a, b] : es) s += std::to_string(a) + "-" + std::to_string(b) + ";";
    return s;
}

}  // namespace

TEST_CASE("tree validation") {
    GroundSet g4 = iota_ground(4, 1);
    CHECK_NOTHROW(validate(two_cherries(), g4));

    Decomposition star;  // center of degree 4 is not allowed
    star.nnodes = 5;
    star.edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    star.leaf_node = {0, 1, 2, 3};
    CHECK_THROWS_AS(validate(star, g4), std::domain_error);

    Decomposition single;
    single.nnodes = 1;
    single.leaf_node = {0};
    CHECK_NOTHROW(validate(single, iota_ground(1, 1)));

    Decomposition pair;
    pair.nnodes = 2;
    pair.edges = {{0, 1}};
    pair.leaf_node = {0, 1};
    CHECK_NOTHROW(validate(pair, iota_ground(2, 1)));

    Decomposition empty;
    CHECK_NOTHROW(validate(empty, GroundSet{}));
}

TEST_CASE("displayed sets partition the ground set") {
    GroundSet g4 = iota_ground(4, 1);
    Decomposition D = two_cherries();
    auto [a, b] = displayed_sets(D, g4, 2);  // middle edge {4,5}
    CHECK(a == 0b0011u);
    CHECK(b == 0b1100u);
    auto [l, r] = displayed_sets(D, g4, 0);  // leaf edge {0,4}
    CHECK(l == 0b0001u);
    CHECK(r == 0b1110u);
    for (int e = 0; e < 5; ++e) {
        auto [x, y] = displayed_sets(D, g4, e);
        CHECK((x | y) == g4.full());
        CHECK((x & y) == 0u);
    }
}

TEST_CASE("boundary classes of small uniforms") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    BoundaryClasses c = sim_classes(u24, 0b0011u);
    REQUIRE(c.count() == 3);
    CHECK(c.classes[0] == std::vector<subset_t>{0u});
    CHECK(c.classes[1] == std::vector<subset_t>{0b01u, 0b10u});
    CHECK(c.classes[2] == std::vector<subset_t>{0b11u});
    CHECK(c.representatives() == std::vector<subset_t>{0u, 0b01u, 0b11u});

    // every dependent subset of U is indistinguishable
    MatroidOracle u14 = uniform_oracle(1, 4);
    BoundaryClasses d = sim_classes(u14, 0b0111u);
    CHECK(d.count() == 3);
    std::vector<subset_t> dependents;
    for (const auto& cls : d.classes)
        if (!u14.indep(cls.front())) dependents = cls;
    CHECK(dependents.size() == 4);  // the three pairs and the triple

    // a coloop singleton cannot be told apart from the empty set
    CHECK(count_sim_classes(uniform_oracle(2, 2), 0b01u) == 1);
    CHECK(count_sim_classes(uniform_oracle(1, 2), 0b01u) == 2);
    CHECK(count_sim_classes(uniform_oracle(0, 1), 0b1u) == 2);

    CHECK(count_sim_classes(u24, 0b0011u) == 3);
    CHECK(count_sim_classes(materialize(u24), 0b0011u) == 3);
}

TEST_CASE("class counts are invariant under relabeling in uniforms") {
    MatroidOracle u25 = uniform_oracle(2, 5);
    std::vector<int> by_size(6, -1);
    for (subset_t U = 0; U <= u25.ground.full(); ++U) {
        int n = count_sim_classes(u25, U);
        int s = popcount(U);
        if (by_size[s] == -1) by_size[s] = n;
        CHECK(by_size[s] == n);
    }
}

TEST_CASE("width of a fixed tree") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    Decomposition D = two_cherries();
    CHECK(dw_of(u24, D) == 3);
    CHECK(bw_of(u24, D) == 3);  // middle edge has connectivity 2

    MatroidOracle u12 = uniform_oracle(1, 2);
    Decomposition pair;
    pair.nnodes = 2;
    pair.edges = {{0, 1}};
    pair.leaf_node = {0, 1};
    CHECK(dw_of(u12, pair) == 2);
    CHECK(bw_of(u12, pair) == 2);

    Decomposition single;
    single.nnodes = 1;
    single.leaf_node = {0};
    CHECK(dw_of(uniform_oracle(1, 1), single) == 1);
    CHECK(dw_of(uniform_oracle(0, 1), single) == 2);
    CHECK(bw_of(uniform_oracle(1, 1), single) == 1);
}

TEST_CASE("exact width minima") {
    CHECK(decomposition_width(uniform_oracle(2, 4)) == 3);
    CHECK(decomposition_width(uniform_oracle(0, 3)) == 2);
    CHECK(decomposition_width(uniform_oracle(1, 1)) == 1);
    CHECK(decomposition_width(uniform_oracle(0, 1)) == 2);
    CHECK(decomposition_width(uniform_oracle(4, 4)) == 1);
    CHECK(decomposition_width(MatroidOracle{GroundSet{}, [](subset_t) { return true; }}) == 1);

    CHECK(branch_width(uniform_oracle(2, 4)) == 3);
    CHECK(branch_width(uniform_oracle(1, 1)) == 1);
    MatroidOracle k3 = m_of_graph(complete_graph(3));
    CHECK(branch_width(k3) <= 4);
    CHECK(branch_width(k3) == branch_width(dual_of(k3)));
    CHECK(branch_width(uniform_oracle(2, 4)) == branch_width(dual_of(uniform_oracle(2, 4))));
}

TEST_CASE("tree enumeration") {
    const int expected[] = {1, 1, 1, 3, 15};
    for (int n = 1; n <= 5; ++n) {
        std::vector<Decomposition> all = all_decompositions(n);
        CHECK(static_cast<int>(all.size()) == expected[n - 1]);
        std::set<std::string> seen;
        GroundSet g = iota_ground(n, 1);
        for (const Decomposition& D : all) {
            CHECK_NOTHROW(validate(D, g));
            if (n >= 2) CHECK(D.nnodes == 2 * n - 2);
            for (int i = 0; i < n; ++i) CHECK(D.leaf_node[i] == i);
            CHECK(seen.insert(canonical_edges(D)).second);
        }
    }
    int count = 0;
    enumerate_decompositions(4, [&](const Decomposition&) { ++count; });
    CHECK(count == 3);
}

TEST_CASE("refinement checks") {
    MatroidOracle u24 = uniform_oracle(2, 4);
    subset_t U = 0b0011u;
    // size determines the class in a uniform matroid
    RefineWitness ok = check_refines(u24, U, [](subset_t x, subset_t y) {
        return popcount(x) == popcount(y);
    });
    CHECK(ok.ok);
    CHECK(static_cast<bool>(ok));

    RefineWitness keyed = check_refines_keys(
        u24, U, [](subset_t x) { return std::to_string(popcount(x)); });
    CHECK(keyed.ok);

    // the all-equal relation is too coarse; the witness must be genuine
    MatroidOracle u12 = uniform_oracle(1, 2);
    RefineWitness bad = check_refines(u12, 0b11u, [](subset_t, subset_t) { return true; });
    REQUIRE_FALSE(bad.ok);
    CHECK(u12.indep(bad.x | bad.z) != u12.indep(bad.x2 | bad.z));
    CHECK((bad.x & ~0b11u) == 0u);
    CHECK((bad.x2 & ~0b11u) == 0u);
    CHECK((bad.z & 0b11u) == 0u);

    RefineWitness badk =
        check_refines_keys(u12, 0b11u, [](subset_t) { return std::string("same"); });
    REQUIRE_FALSE(badk.ok);
    CHECK(u12.indep(badk.x | badk.z) != u12.indep(badk.x2 | badk.z));

    // equality always refines
    for (const MatroidOracle& M : {uniform_oracle(1, 3), m_of_graph(complete_graph(3))})
        CHECK(check_refines(M, M.ground.mask_of(std::vector<int>{M.ground.ids[0]}),
                            [](subset_t x, subset_t y) { return x == y; })
                  .ok);
}

TEST_CASE("width computations refuse oversized grounds") {
    CHECK_THROWS_AS(all_decompositions(9), size_guard_error);
    CHECK_THROWS_AS(enumerate_decompositions(11, [](const Decomposition&) {}),
                    size_guard_error);
    CHECK_THROWS_AS(decomposition_width(uniform_oracle(2, 11)), size_guard_error);
}
