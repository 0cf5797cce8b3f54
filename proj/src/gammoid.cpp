#include "matdec/gammoid.hpp"

#include <memory>
#include <queue>
#include <set>

namespace matdec {

void validate(const GammoidPresentation& P) {
    if (P.nvertices < 0) throw std::domain_error("negative vertex count");
    for (auto [u, v] : P.arcs)
        if (u < 0 || u >= P.nvertices || v < 0 || v >= P.nvertices)
            throw std::domain_error("arc endpoint outside vertex range");
    std::set<int> seen;
    for (int t : P.targets) {
        if (t < 0 || t >= P.nvertices) throw std::domain_error("target outside vertex range");
        if (!seen.insert(t).second) throw std::domain_error("duplicate target");
    }
}

namespace {
// Unit-capacity max flow, BFS augmentation.  Small graphs only.
struct Flow {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> adj;
    explicit Flow(int n) : adj(static_cast<std::size_t>(n)) {}
    void add(int u, int v) {
        adj[static_cast<std::size_t>(u)].push_back(
            {v, 1, static_cast<int>(adj[static_cast<std::size_t>(v)].size())});
        adj[static_cast<std::size_t>(v)].push_back(
            {u, 0, static_cast<int>(adj[static_cast<std::size_t>(u)].size()) - 1});
    }
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[static_cast<std::size_t>(s)] = {s, -1};
        while (!q.empty() && pred[static_cast<std::size_t>(t)].first < 0) {
            int u = q.front();
            q.pop();
            for (std::size_t i = 0; i < adj[static_cast<std::size_t>(u)].size(); ++i) {
                const Arc& a = adj[static_cast<std::size_t>(u)][i];
                if (a.cap > 0 && pred[static_cast<std::size_t>(a.to)].first < 0) {
                    pred[static_cast<std::size_t>(a.to)] = {u, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[static_cast<std::size_t>(t)].first < 0) return false;
        for (int v = t; v != s;) {
            auto [u, i] = pred[static_cast<std::size_t>(v)];
            Arc& a = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
            a.cap -= 1;
            adj[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            v = u;
        }
        return true;
    }
    int maxflow(int s, int t) {
        int f = 0;
        while (augment(s, t)) ++f;
        return f;
    }
};
}  // namespace

MatroidOracle strict_gammoid_oracle(const GammoidPresentation& P) {
    validate(P);
    auto shared = std::make_shared<GammoidPresentation>(P);
    GroundSet ground = iota_ground(P.nvertices);

    auto f = [shared](subset_t X) {
        int n = shared->nvertices;
        // split v into 2v (in) -> 2v+1 (out); source 2n, sink 2n+1
        Flow fl(2 * n + 2);
        int s = 2 * n, t = 2 * n + 1;
        for (int v = 0; v < n; ++v) fl.add(2 * v, 2 * v + 1);
        for (auto [u, v] : shared->arcs) fl.add(2 * u + 1, 2 * v);
        int need = 0;
        for (int v = 0; v < n; ++v)
            if (X >> v & 1u) {
                fl.add(s, 2 * v);
                ++need;
            }
        for (int tv : shared->targets) fl.add(2 * tv + 1, t);
        return fl.maxflow(s, t) == need;
    };
    return {ground, f};
}

GammoidPresentation gammoid_extension(const GammoidPresentation& P, const std::vector<int>& reach) {
    validate(P);
    std::set<int> seen;
    for (int v : reach) {
        if (v < 0 || v >= P.nvertices) throw std::domain_error("extension arc outside vertex range");
        if (!seen.insert(v).second) throw std::domain_error("duplicate extension arc");
    }
    GammoidPresentation out = P;
    int fresh = out.nvertices++;
    for (int v : reach) out.arcs.emplace_back(fresh, v);
    return out;
}

}  // namespace matdec
