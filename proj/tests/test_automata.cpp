#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "matdec/automata.hpp"
#include "matdec/core.hpp"
#include "matdec/errors.hpp"
#include "matdec/latticeparse.hpp"
#include "matdec/latticepath.hpp"
#include "matdec/rng.hpp"

using namespace matdec;

namespace {

SigmaTree single(const std::string& label) {
    SigmaTree t;
    t.nodes.push_back({-1, -1, -1, label});
    t.root = 0;
    return t;
}

// root 0 over two leaves 1, 2
SigmaTree cherry(const std::string& top, const std::string& l, const std::string& r) {
    SigmaTree t;
    t.nodes.push_back({-1, 1, 2, top});
    t.nodes.push_back({0, -1, -1, l});
    t.nodes.push_back({0, -1, -1, r});
    t.root = 0;
    return t;
}

// both children of every pair map through bitwise AND; accepts when every
// leaf bit is 1
TreeAutomaton and_automaton() {
    TreeAutomaton A;
    A.alphabet = {"x#0", "x#1", "u"};
    A.nstates = 2;
    A.accepting = {1};
    A.delta0["x#0"] = {0};
    A.delta0["x#1"] = {1};
    for (int a : {0, 1})
        for (int b : {0, 1}) A.delta2[{"u", a, b}] = {a & b};
    return A;
}

std::set<subset_t> family_set(const SetSystem& S) {
    return {S.independents.begin(), S.independents.end()};
}

int min_feasible_lambda(const LatticePathPresentation& L) {
    int lam = 1;
    while (!staircase_bound_check(L, lam)) ++lam;
    return lam;
}

void check_parse_matches(const LatticePathPresentation& L, int lambda) {
    LatticeParse parse = lattice_parse(L, lambda);
    MatroidOracle M = lattice_path_oracle(L);
    std::set<subset_t> fam =
        family_set(accepted_family(parse.automaton, parse.tree, parse.phi, M.ground));
    for (subset_t X = 0; X <= M.ground.full(); ++X)
        CHECK(fam.count(X) == (M.indep(X) ? 1u : 0u));
}

std::string random_path(Lcg& rng, int len, int r) {
    std::string s(static_cast<std::size_t>(len), 'E');
    std::vector<int> pos(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>(i)] = i;
    for (int i = len - 1; i > 0; --i)
        std::swap(pos[static_cast<std::size_t>(i)],
                  pos[static_cast<std::size_t>(rng.below(static_cast<uint32_t>(i + 1)))]);
    for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = 'N';
    return s;
}

LatticePathPresentation random_presentation(Lcg& rng, int len, int r) {
    std::string a = random_path(rng, len, r), b = random_path(rng, len, r);
    LatticePathPresentation L;
    for (int i = 1; i <= len; ++i) {
        int lo = std::min(ncount(a, i), ncount(b, i));
        int hi = std::max(ncount(a, i), ncount(b, i));
        L.lower += lo > ncount(L.lower, i - 1) ? 'N' : 'E';
        L.upper += hi > ncount(L.upper, i - 1) ? 'N' : 'E';
    }
    return L;
}

}  // namespace

TEST_CASE("bottom-up runs") {
    TreeAutomaton A;
    A.alphabet = {"a", "b", "u"};
    A.nstates = 2;
    A.accepting = {1};
    A.delta0["a"] = {0, 1};
    A.delta0["b"] = {0};
    A.delta2[{"u", 0, 0}] = {0};
    A.delta2[{"u", 1, 0}] = {1};

    Run leaf = run(A, single("a"));
    CHECK(leaf.states[0] == std::set<int>{0, 1});
    CHECK(accepts(A, single("a")));
    CHECK_FALSE(accepts(A, single("b")));
    CHECK(run(A, single("u")).states[0].empty());  // no leaf rule for "u"
    CHECK_THROWS_AS(run(A, single("c")), std::domain_error);

    SigmaTree t = cherry("u", "a", "b");
    Run r = run(A, t);
    CHECK(r.states[1] == std::set<int>{0, 1});
    CHECK(r.states[2] == std::set<int>{0});
    CHECK(r.states[0] == std::set<int>{0, 1});
    CHECK(accepts(A, t));

    // one undefined child pair wipes the whole node, even with other pairs
    // defined
    TreeAutomaton broken = A;
    broken.delta2.erase({"u", 1, 0});
    CHECK(run(broken, t).states[0].empty());
    CHECK_FALSE(accepts(broken, t));

    SigmaTree lopsided = cherry("u", "a", "b");
    lopsided.nodes[0].right = -1;
    CHECK_THROWS_AS(validate(lopsided), std::domain_error);
    TreeAutomaton badq = A;
    badq.accepting = {7};
    CHECK_THROWS_AS(validate(badq), std::domain_error);
}

TEST_CASE("bit encoding of subsets") {
    SigmaTree t = cherry("u", "x", "y");
    GroundSet ground({5, 9});
    std::vector<int> phi = {1, 2};

    SigmaTree e = encode(t, phi, ground, 0b10u);  // only element 9 inside
    CHECK(e.nodes[1].label == "x#0");
    CHECK(e.nodes[2].label == "y#1");
    CHECK(e.nodes[0].label == "u");

    std::set<std::string> forms;
    for (subset_t Y = 0; Y < 4; ++Y) forms.insert(to_text(encode(t, phi, ground, Y)));
    CHECK(forms.size() == 4);

    CHECK_THROWS_AS(encode(t, {1}, ground, 0u), std::domain_error);
    CHECK_THROWS_AS(encode(t, {0, 2}, ground, 0u), std::domain_error);
    CHECK_THROWS_AS(encode(t, {1, 1}, ground, 0u), std::domain_error);
}

TEST_CASE("accepted families") {
    SigmaTree t = cherry("u", "x", "x");
    GroundSet ground({1, 2});
    std::vector<int> phi = {1, 2};
    SetSystem fam = accepted_family(and_automaton(), t, phi, ground);
    CHECK(family_set(fam) == std::set<subset_t>{0b11u});

    TreeAutomaton never = and_automaton();
    never.accepting.clear();
    CHECK(accepted_family(never, t, phi, ground).independents.empty());

    // seventeen elements exceed the enumeration guard
    SigmaTree big;
    big.nodes.push_back({-1, -1, -1, "x"});
    big.root = 0;
    std::vector<int> bigphi = {0};
    for (int i = 1; i < 17; ++i) {
        int prev = big.root;
        int leaf = static_cast<int>(big.nodes.size());
        big.nodes.push_back({-1, -1, -1, "x"});
        int join = static_cast<int>(big.nodes.size());
        big.nodes.push_back({-1, prev, leaf, "u"});
        big.nodes[static_cast<std::size_t>(prev)].parent = join;
        big.nodes[static_cast<std::size_t>(leaf)].parent = join;
        big.root = join;
        bigphi.push_back(leaf);
    }
    CHECK_THROWS_AS(accepted_family(and_automaton(), big, bigphi, iota_ground(17, 1)),
                    size_guard_error);
}

TEST_CASE("text forms") {
    CHECK(to_text(cherry("u", "x", "y")) ==
          "tree nodes=3 root=0\n"
          "node 0 left=1 right=2 label=u\n"
          "node 1 left=-1 right=-1 label=x\n"
          "node 2 left=-1 right=-1 label=y\n");

    TreeAutomaton A;
    A.alphabet = {"a", "u"};
    A.nstates = 2;
    A.accepting = {};
    A.delta0["a"] = {0, 1};
    A.delta2[{"u", 0, 1}] = {1};
    CHECK(to_text(A) ==
          "automaton states=2\n"
          "accepting -\n"
          "char a\n"
          "char u\n"
          "d0 a -> 0 1\n"
          "d2 u 0 1 -> 1\n");
}

TEST_CASE("staircase slicing") {
    LatticePathPresentation square{"EENN", "NNEE"};
    std::vector<Staircase> sc = staircases(square);
    REQUIRE(sc.size() == 4);
    const int vcounts[] = {3, 5, 5, 3};
    const int ecounts[] = {2, 4, 4, 2};
    std::set<std::pair<lattice_vertex, lattice_vertex>> all_edges;
    for (int k = 0; k < 4; ++k) {
        CHECK(static_cast<int>(sc[k].vertices.size()) == vcounts[k]);
        CHECK(static_cast<int>(sc[k].edges.size()) == ecounts[k]);
        // top-left first: the difference x - y ascends along the list
        for (std::size_t i = 1; i < sc[k].vertices.size(); ++i) {
            auto [x0, y0] = sc[k].vertices[i - 1];
            auto [x1, y1] = sc[k].vertices[i];
            CHECK(x0 - y0 < x1 - y1);
        }
        for (auto e : sc[k].edges) {
            if (e.second < e.first) std::swap(e.first, e.second);
            CHECK(all_edges.insert(e).second);  // staircases never share a step
        }
    }
    CHECK(all_edges.size() == 12);  // every unit step of the 2x2 square

    LatticePathPresentation line{"NE", "NE"};
    std::vector<Staircase> thin = staircases(line);
    REQUIRE(thin.size() == 2);
    for (const Staircase& s : thin) {
        CHECK(s.vertices.size() == 2);
        CHECK(s.edges.size() == 1);
    }

    CHECK(staircase_bound_check(line, 1));
    CHECK(staircase_bound_check(square, 2));
    CHECK_FALSE(staircase_bound_check(square, 1));
}

TEST_CASE("parse trees decide independence") {
    check_parse_matches({"EENN", "NNEE"}, 2);
    check_parse_matches({"EENN", "NNEE"}, 3);  // slack in lambda changes nothing
    check_parse_matches({"NE", "NE"}, 1);
    check_parse_matches({"N", "N"}, 1);
    check_parse_matches({"E", "E"}, 1);
    check_parse_matches({"ENE", "NEE"}, 2);  // the first staircase holds three vertices

    Lcg rng(131);
    for (int trial = 0; trial < 8; ++trial) {
        int len = rng.range(2, 10);
        int r = rng.range(1, len - 1);
        LatticePathPresentation L = random_presentation(rng, len, r);
        check_parse_matches(L, min_feasible_lambda(L));
    }
}

TEST_CASE("parse structure") {
    LatticePathPresentation square{"EENN", "NNEE"};
    LatticeParse parse = lattice_parse(square, 2);
    CHECK(parse.automaton.nstates == 3 * 2 + 2);  // slots + sink + two carriers
    CHECK(parse.phi == std::vector<int>{0, 1, 2, 3});
    CHECK(parse.tree.nodes.size() == 7);
    CHECK(parse.tree.root == 6);
    for (int q : parse.automaton.accepting) CHECK(q < 3 * 2 - 1);

    // runs are deterministic: every node resolves to exactly one state
    GroundSet ground = lattice_path_oracle(square).ground;
    for (subset_t Y = 0; Y <= ground.full(); ++Y) {
        Run r = run(parse.automaton, encode(parse.tree, parse.phi, ground, Y));
        for (const auto& qs : r.states) CHECK(qs.size() == 1);
    }

    CHECK_THROWS_AS(lattice_parse(square, 0), std::domain_error);
    CHECK_THROWS_AS(lattice_parse(square, 1), std::domain_error);  // staircases overflow
    CHECK_THROWS_AS(lattice_parse({"NE", "NE"}, -3), std::domain_error);
}

TEST_CASE("every fired transition is load-bearing") {
    LatticePathPresentation square{"EENN", "NNEE"};
    LatticeParse parse = lattice_parse(square, 2);
    MatroidOracle M = lattice_path_oracle(square);
    std::set<subset_t> fam =
        family_set(accepted_family(parse.automaton, parse.tree, parse.phi, M.ground));

    std::set<std::string> leaf_keys;
    std::set<std::tuple<std::string, int, int>> pair_keys;
    for (subset_t Y : fam) {
        SigmaTree enc = encode(parse.tree, parse.phi, M.ground, Y);
        Run r = run(parse.automaton, enc);
        for (std::size_t v = 0; v < enc.nodes.size(); ++v) {
            const auto& nd = enc.nodes[v];
            if (nd.left < 0) {
                leaf_keys.insert(nd.label);
            } else {
                int ql = *r.states[static_cast<std::size_t>(nd.left)].begin();
                int qr = *r.states[static_cast<std::size_t>(nd.right)].begin();
                pair_keys.insert({nd.label, ql, qr});
            }
        }
    }
    for (const std::string& k : leaf_keys) {
        TreeAutomaton cut = parse.automaton;
        cut.delta0.erase(k);
        CHECK(family_set(accepted_family(cut, parse.tree, parse.phi, M.ground)) != fam);
    }
    for (const auto& k : pair_keys) {
        TreeAutomaton cut = parse.automaton;
        cut.delta2.erase(k);
        CHECK(family_set(accepted_family(cut, parse.tree, parse.phi, M.ground)) != fam);
    }
}
