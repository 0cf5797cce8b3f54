#include "matdec/constructions.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace matdec {

void validate(const SimpleGraph& G) {
    if (G.nvertices < 0) throw std::domain_error("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : G.edges) {
        if (u < 0 || u >= G.nvertices || v < 0 || v >= G.nvertices)
            throw std::domain_error("edge endpoint outside vertex range");
        if (u == v) throw std::domain_error("loops are not allowed in a simple graph");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::domain_error("parallel edges are not allowed in a simple graph");
    }
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g;
    g.nvertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    validate(g);
    return g;
}

MatroidOracle m_of_graph(const SimpleGraph& G) {
    validate(G);
    if (G.nvertices < 3) throw std::domain_error("m_of_graph needs at least 3 vertices");
    int n = G.nvertices;
    auto triangles = std::make_shared<std::vector<subset_t>>();
    for (std::size_t k = 0; k < G.edges.size(); ++k) {
        auto [u, v] = G.edges[k];
        triangles->push_back((subset_t{1} << u) | (subset_t{1} << v) |
                             (subset_t{1} << (n + static_cast<int>(k))));
    }
    GroundSet ground = iota_ground(n + static_cast<int>(G.edges.size()));
    auto f = [triangles](subset_t X) {
        if (popcount(X) > 3) return false;
        for (subset_t tri : *triangles)
            if ((X & tri) == tri) return false;
        return true;
    };
    return {ground, f};
}

MatroidOracle principal_extension(const MatroidOracle& M, subset_t flat, int new_id) {
    if (closure_of(M, flat) != flat) throw std::domain_error("extension set is not a flat");
    for (int id : M.ground.ids)
        if (id == new_id) throw std::domain_error("new element id already in ground set");

    std::vector<int> ids = M.ground.ids;
    ids.push_back(new_id);
    GroundSet ground(std::move(ids));
    int epos = ground.index_of(new_id);

    // position translation new ground -> old ground (new_id may sort anywhere)
    auto oldpos = std::make_shared<std::vector<int>>(static_cast<std::size_t>(ground.size()), -1);
    for (int i = 0; i < ground.size(); ++i)
        if (i != epos)
            (*oldpos)[static_cast<std::size_t>(i)] =
                M.ground.index_of(ground.ids[static_cast<std::size_t>(i)]);

    auto base = std::make_shared<MatroidOracle>(M);
    auto f = [base, oldpos, epos, flat](subset_t X) {
        subset_t ox = 0;
        for (std::size_t i = 0; i < oldpos->size(); ++i)
            if ((X >> i & 1u) && static_cast<int>(i) != epos)
                ox |= subset_t{1} << (*oldpos)[i];
        if (!(X >> epos & 1u)) return base->indep(ox);
        if (!base->indep(ox)) return false;
        subset_t cl = closure_of(*base, ox);
        return (flat & ~cl) != 0;  // some element of the flat is outside cl(X)
    };
    return {ground, f};
}

MatroidOracle principal_extension(const MatroidOracle& M, subset_t flat) {
    int fresh = M.ground.ids.empty() ? 0 : M.ground.ids.back() + 1;
    return principal_extension(M, flat, fresh);
}

BicircularPresentation courcelle_gadget(const SimpleGraph& G) {
    validate(G);
    BicircularPresentation B;
    B.g.nvertices = G.nvertices;
    int m = static_cast<int>(G.edges.size());
    for (int k = 0; k < m; ++k)
        B.g.edges.push_back({k, G.edges[static_cast<std::size_t>(k)].first,
                             G.edges[static_cast<std::size_t>(k)].second});
    for (int v = 0; v < G.nvertices; ++v) {
        B.g.edges.push_back({m + 2 * v, v, v});
        B.g.edges.push_back({m + 2 * v + 1, v, v});
    }
    validate(B);
    return B;
}

std::vector<int> gadget_vertex_pair(const SimpleGraph& G, int v) {
    if (v < 0 || v >= G.nvertices) throw std::domain_error("vertex out of range");
    int m = static_cast<int>(G.edges.size());
    return {m + 2 * v, m + 2 * v + 1};
}

std::vector<int> gadget_incidence_triple(const SimpleGraph& G, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(G.edges.size()))
        throw std::domain_error("edge index out of range");
    int m = static_cast<int>(G.edges.size());
    auto [u, v] = G.edges[static_cast<std::size_t>(edge_index)];
    return {edge_index, m + 2 * u, m + 2 * v};
}

SumSets raunch_sets(int m, int n) {
    if (m < 1 || n < 1) throw std::domain_error("sum set sizes must be positive");
    SumSets s;
    for (int a = 1; a <= m; ++a) s.a.push_back(a);
    for (int k = 1; k <= n; ++k) s.b.push_back(static_cast<long long>(k) * (m + 1));
    std::set<long long> sums;
    for (long long a : s.a)
        for (long long b : s.b) sums.insert(a + b);
    if (static_cast<int>(sums.size()) != m * n)
        throw std::domain_error("pairwise sums are not distinct");
    for (long long v : sums)
        if (std::count(s.a.begin(), s.a.end(), v) || std::count(s.b.begin(), s.b.end(), v))
            throw std::domain_error("a sum collides with a generator");
    s.sums.assign(sums.begin(), sums.end());
    return s;
}

ObjectConstruction object_construction(int q) {
    SumSets s = raunch_sets(q, q);
    ObjectConstruction oc;
    oc.graph.group = Group::integers();
    oc.graph.g.nvertices = 3;
    int next_id = 0;
    for (int i = 0; i < q; ++i) {
        oc.graph.g.edges.push_back({next_id, 0, 1});
        oc.graph.gains.push_back(s.a[static_cast<std::size_t>(i)]);
        oc.a_ids.push_back(next_id++);
    }
    for (int j = 0; j < q; ++j) {
        oc.graph.g.edges.push_back({next_id, 1, 2});
        oc.graph.gains.push_back(s.b[static_cast<std::size_t>(j)]);
        oc.b_ids.push_back(next_id++);
    }
    oc.sum_ids.assign(static_cast<std::size_t>(q), {});
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            oc.graph.g.edges.push_back({next_id, 0, 2});
            oc.graph.gains.push_back(s.a[static_cast<std::size_t>(i)] +
                                     s.b[static_cast<std::size_t>(j)]);
            oc.sum_ids[static_cast<std::size_t>(i)].push_back(next_id++);
        }
    validate(oc.graph);
    return oc;
}

}  // namespace matdec
