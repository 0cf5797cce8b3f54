#include "matdec/bipartite.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "matdec/matching.hpp"

namespace matdec {

void validate(const BipartitePresentation& G) {
    std::set<int> a(G.a_side.begin(), G.a_side.end());
    std::set<int> b(G.b_side.begin(), G.b_side.end());
    if (a.size() != G.a_side.size() || b.size() != G.b_side.size())
        throw std::domain_error("duplicate vertex id within a side");
    for (int x : a)
        if (b.count(x)) throw std::domain_error("vertex id on both sides");
    for (auto [u, v] : G.edges) {
        if (!a.count(u) || !b.count(v))
            throw std::domain_error("edge endpoints must lie in A x B");
    }
}

GroundSet ft_ground(const BipartitePresentation& G) {
    std::vector<int> ids = G.a_side;
    ids.insert(ids.end(), G.b_side.begin(), G.b_side.end());
    return GroundSet(std::move(ids));
}

MatroidOracle fundamental_transversal_oracle(const BipartitePresentation& G) {
    validate(G);
    GroundSet g = ft_ground(G);
    int n = g.size();

    // adjacency between ground indices, a-index -> list of b-indices
    auto adj = std::make_shared<std::vector<std::vector<int>>>(n);
    subset_t amask = 0;
    for (int id : G.a_side) amask |= subset_t{1} << g.index_of(id);
    for (auto [u, v] : G.edges) (*adj)[g.index_of(u)].push_back(g.index_of(v));
    for (auto& l : *adj) std::sort(l.begin(), l.end());

    auto f = [adj, amask, n](subset_t X) {
        // match X n A into B - X
        std::vector<int> lefts;
        for (int i = 0; i < n; ++i)
            if ((X >> i & 1u) && (amask >> i & 1u)) lefts.push_back(i);
        BipartiteMatcher m(static_cast<int>(lefts.size()), n);
        for (std::size_t li = 0; li < lefts.size(); ++li)
            for (int b : (*adj)[lefts[li]])
                if (!(X >> b & 1u)) m.add_edge(static_cast<int>(li), b);
        return m.solve() == static_cast<int>(lefts.size());
    };
    return {g, f};
}

BipartitePresentation standard_presentation(const BipartitePresentation& G) {
    validate(G);
    int next = 0;
    for (int id : G.a_side) next = std::max(next, id + 1);
    for (int id : G.b_side) next = std::max(next, id + 1);

    BipartitePresentation out;
    out.a_side = G.a_side;
    out.a_side.insert(out.a_side.end(), G.b_side.begin(), G.b_side.end());
    std::sort(out.a_side.begin(), out.a_side.end());

    std::vector<int> bs = G.b_side;
    std::sort(bs.begin(), bs.end());
    std::vector<std::pair<int, int>> prime(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
        int bp = next + static_cast<int>(i);
        out.b_side.push_back(bp);
        prime[i] = {bs[i], bp};
        out.edges.emplace_back(bs[i], bp);
    }
    auto prime_of = [&](int b) {
        for (auto [orig, bp] : prime)
            if (orig == b) return bp;
        return -1;
    };
    for (auto [a, b] : G.edges) out.edges.emplace_back(a, prime_of(b));
    return out;
}

}  // namespace matdec
