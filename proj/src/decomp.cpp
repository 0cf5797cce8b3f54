#include "matdec/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matdec/errors.hpp"

namespace matdec {

// ----------------------------------------------------------- validation ----

void validate(const Decomposition& D, const GroundSet& ground) {
    int n = ground.size();
    if (static_cast<int>(D.leaf_node.size()) != n)
        throw std::domain_error("leaf map size differs from ground size");
    if (n == 0) {
        if (D.nnodes != 0 || !D.edges.empty()) throw std::domain_error("empty ground needs an empty tree");
        return;
    }
    if (D.nnodes < 1) throw std::domain_error("tree has no nodes");
    if (static_cast<int>(D.edges.size()) != D.nnodes - 1)
        throw std::domain_error("edge count is not nodes-1");
    std::vector<int> deg(static_cast<std::size_t>(D.nnodes), 0);
    for (auto [a, b] : D.edges) {
        if (a < 0 || a >= D.nnodes || b < 0 || b >= D.nnodes || a == b)
            throw std::domain_error("bad tree edge");
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    // connectivity
    std::vector<char> seen(static_cast<std::size_t>(D.nnodes), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : D.edges) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (char c : seen)
        if (!c) throw std::domain_error("tree is disconnected");

    std::set<int> leaves;
    for (int v : D.leaf_node) {
        if (v < 0 || v >= D.nnodes) throw std::domain_error("leaf node out of range");
        if (!leaves.insert(v).second) throw std::domain_error("two elements share a leaf");
    }
    for (int v = 0; v < D.nnodes; ++v) {
        int d = deg[static_cast<std::size_t>(v)];
        bool is_leaf = leaves.count(v) != 0;
        if (D.nnodes == 1) {
            if (!is_leaf) throw std::domain_error("single node must carry the element");
            continue;
        }
        if (is_leaf && d != 1) throw std::domain_error("labeled leaf has degree != 1");
        if (!is_leaf && d != 3) throw std::domain_error("internal node has degree != 3");
    }
    if (static_cast<int>(leaves.size()) != n)
        throw std::domain_error("leaf count differs from ground size");
}

// ------------------------------------------------------- displayed sets ----

namespace {
// one displayed side per tree edge: the side holding edges[i].second when the
// tree is explored from node `root` (the complement is the other side)
std::vector<subset_t> displayed_all(const Decomposition& D, const GroundSet& ground) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(D.nnodes));
    for (std::size_t i = 0; i < D.edges.size(); ++i) {
        auto [a, b] = D.edges[i];
        adj[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(i)});
        adj[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(i)});
    }
    std::vector<subset_t> leafmask(static_cast<std::size_t>(D.nnodes), 0);
    for (int i = 0; i < ground.size(); ++i)
        leafmask[static_cast<std::size_t>(D.leaf_node[static_cast<std::size_t>(i)])] |=
            subset_t{1} << i;

    // iterative post-order from node 0 accumulating subtree masks
    std::vector<subset_t> sub = leafmask;
    std::vector<int> parent_edge(static_cast<std::size_t>(D.nnodes), -1);
    std::vector<int> parent(static_cast<std::size_t>(D.nnodes), -1);
    std::vector<int> order;
    std::vector<int> stack = {0};
    std::vector<char> seen(static_cast<std::size_t>(D.nnodes), 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto [w, ei] : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = v;
                parent_edge[static_cast<std::size_t>(w)] = ei;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[static_cast<std::size_t>(*it)] >= 0)
            sub[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] |=
                sub[static_cast<std::size_t>(*it)];

    std::vector<subset_t> out(D.edges.size(), 0);
    for (int v = 0; v < D.nnodes; ++v)
        if (parent_edge[static_cast<std::size_t>(v)] >= 0)
            out[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)])] =
                sub[static_cast<std::size_t>(v)];
    return out;
}
}  // namespace

std::pair<subset_t, subset_t> displayed_sets(const Decomposition& D, const GroundSet& ground,
                                             int edge_index) {
    validate(D, ground);
    if (edge_index < 0 || edge_index >= static_cast<int>(D.edges.size()))
        throw std::domain_error("edge index out of range");
    auto sides = displayed_all(D, ground);
    subset_t away = sides[static_cast<std::size_t>(edge_index)];
    // `away` holds the side of edges[e].second as seen from node 0; report
    // the side of edges[e].first first
    subset_t full = ground.full();
    // determine whether node 0's side is the .first side for this edge
    // displayed_all stores the subtree side of whichever endpoint is the
    // child; that endpoint may be .first or .second
    // recompute orientation: walk from edges[e].first avoiding the edge
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(D.nnodes));
    for (std::size_t i = 0; i < D.edges.size(); ++i) {
        auto [a, b] = D.edges[i];
        adj[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(i)});
        adj[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(i)});
    }
    std::vector<char> seen(static_cast<std::size_t>(D.nnodes), 0);
    std::vector<int> stack = {D.edges[static_cast<std::size_t>(edge_index)].first};
    seen[static_cast<std::size_t>(stack[0])] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, ei] : adj[static_cast<std::size_t>(v)]) {
            if (ei == edge_index || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    subset_t first_side = 0;
    for (int i = 0; i < ground.size(); ++i)
        if (seen[static_cast<std::size_t>(D.leaf_node[static_cast<std::size_t>(i)])])
            first_side |= subset_t{1} << i;
    (void)away;
    return {first_side, full & ~first_side};
}

// --------------------------------------------------------- sim classes -----

namespace {
// independence bit-vector of X over all Z below the complement of U
std::vector<uint64_t> sim_key(const IndependenceTable& t, subset_t X,
                              const std::vector<subset_t>& zs) {
    std::vector<uint64_t> key((zs.size() + 63) / 64, 0);
    for (std::size_t j = 0; j < zs.size(); ++j)
        if (t(X | zs[j])) key[j / 64] |= uint64_t{1} << (j % 64);
    return key;
}

void sim_guard(int n) {
    if (n > kSimClassCap)
        throw size_guard_error("boundary-class computation limited to " +
                               std::to_string(kSimClassCap) + " elements, got " +
                               std::to_string(n));
}
}  // namespace

BoundaryClasses sim_classes(const MatroidOracle& M, subset_t U) {
    sim_guard(M.ground.size());
    if (U & ~M.ground.full()) throw std::domain_error("U is not a subset of the ground set");
    IndependenceTable t = materialize(M);
    auto zs = all_subsets(t.ground.full() & ~U);
    std::map<std::vector<uint64_t>, std::vector<subset_t>> groups;
    for (subset_t X : all_subsets(U)) groups[sim_key(t, X, zs)].push_back(X);

    BoundaryClasses out;
    out.u = U;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end(), lex_subset_less);
        out.classes.push_back(std::move(members));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return lex_subset_less(a.front(), b.front()); });
    return out;
}

std::vector<subset_t> BoundaryClasses::representatives() const {
    std::vector<subset_t> out;
    for (const auto& c : classes) out.push_back(c.front());
    return out;
}

bool BoundaryClasses::operator==(const BoundaryClasses& o) const {
    return u == o.u && representatives() == o.representatives();
}

int count_sim_classes(const IndependenceTable& t, subset_t U) {
    if (U & ~t.ground.full()) throw std::domain_error("U is not a subset of the ground set");
    auto zs = all_subsets(t.ground.full() & ~U);
    std::vector<std::vector<uint64_t>> keys;
    for (subset_t X : all_subsets(U)) keys.push_back(sim_key(t, X, zs));
    std::sort(keys.begin(), keys.end());
    return static_cast<int>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

int count_sim_classes(const MatroidOracle& M, subset_t U) {
    sim_guard(M.ground.size());
    return count_sim_classes(materialize(M), U);
}

// --------------------------------------------------------------- widths ----

int dw_of(const MatroidOracle& M, const Decomposition& D) {
    sim_guard(M.ground.size());
    validate(D, M.ground);
    int n = M.ground.size();
    if (n == 0) return 1;
    IndependenceTable t = materialize(M);
    if (n == 1) return count_sim_classes(t, M.ground.full());  // singleton display
    int best = 1;
    for (subset_t side : displayed_all(D, M.ground)) {
        best = std::max(best, count_sim_classes(t, side));
        best = std::max(best, count_sim_classes(t, M.ground.full() & ~side));
    }
    return best;
}

int bw_of(const MatroidOracle& M, const Decomposition& D) {
    sim_guard(M.ground.size());
    validate(D, M.ground);
    if (M.ground.size() <= 1) return 1;
    IndependenceTable t = materialize(M);
    std::vector<int> rk = rank_table(t);
    subset_t full = M.ground.full();
    int rM = rk[full];
    int best = 1;
    for (subset_t side : displayed_all(D, M.ground))
        best = std::max(best, rk[side] + rk[full & ~side] - rM + 1);
    return best;
}

namespace {
void decomp_guard(int n) {
    if (n > kDecompCap)
        throw size_guard_error("exhaustive decomposition search limited to " +
                               std::to_string(kDecompCap) + " elements, got " + std::to_string(n));
}
}  // namespace

int decomposition_width(const MatroidOracle& M) {
    int n = M.ground.size();
    decomp_guard(n);
    if (n == 0) return 1;
    IndependenceTable t = materialize(M);
    if (n == 1) return count_sim_classes(t, M.ground.full());
    std::vector<int> cc(std::size_t{1} << n, 0);
    for (subset_t U = 0; U < (subset_t{1} << n); ++U)
        cc[U] = count_sim_classes(t, U);
    subset_t full = M.ground.full();
    int best_overall = -1;
    enumerate_decompositions(n, [&](const Decomposition& D) {
        int worst = 1;
        for (subset_t side : displayed_all(D, M.ground))
            worst = std::max({worst, cc[side], cc[full & ~side]});
        if (best_overall < 0 || worst < best_overall) best_overall = worst;
    });
    return best_overall;
}

int branch_width(const MatroidOracle& M) {
    int n = M.ground.size();
    decomp_guard(n);
    if (n <= 1) return 1;
    IndependenceTable t = materialize(M);
    std::vector<int> rk = rank_table(t);
    subset_t full = M.ground.full();
    int rM = rk[full];
    int best_overall = -1;
    enumerate_decompositions(n, [&](const Decomposition& D) {
        int worst = 1;
        for (subset_t side : displayed_all(D, M.ground))
            worst = std::max(worst, rk[side] + rk[full & ~side] - rM + 1);
        if (best_overall < 0 || worst < best_overall) best_overall = worst;
    });
    return best_overall;
}

// ---------------------------------------------------------- enumeration ----

void enumerate_decompositions(int n, const std::function<void(const Decomposition&)>& fn) {
    if (n < 0) throw std::domain_error("negative leaf count");
    decomp_guard(n);
    if (n == 0) {
        fn(Decomposition{});
        return;
    }
    Decomposition D;
    D.leaf_node.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) D.leaf_node[static_cast<std::size_t>(i)] = i;
    if (n == 1) {
        D.nnodes = 1;
        fn(D);
        return;
    }
    if (n == 2) {
        D.nnodes = 2;
        D.edges = {{0, 1}};
        fn(D);
        return;
    }
    // grow from the 3-leaf star by subdividing any edge and hanging the next
    // leaf off the new node; every labeled tree arises exactly once
    std::vector<std::pair<int, int>> edges = {{0, n}, {1, n}, {2, n}};
    auto rec = [&](auto&& self, int k, int next_internal) -> void {
        if (k == n) {
            D.nnodes = n + (n - 2);
            D.edges = edges;
            fn(D);
            return;
        }
        std::size_t base = edges.size();
        for (std::size_t i = 0; i < base; ++i) {
            auto [a, b] = edges[i];
            int m = next_internal;
            edges[i] = {a, m};
            edges.push_back({b, m});
            edges.push_back({k, m});
            self(self, k + 1, next_internal + 1);
            edges.pop_back();
            edges.pop_back();
            edges[i] = {a, b};
        }
    };
    rec(rec, 3, n + 1);
}

std::vector<Decomposition> all_decompositions(int n) {
    if (n > kDecompMaterializeCap)
        throw size_guard_error("materialized tree list limited to " +
                               std::to_string(kDecompMaterializeCap) + " leaves, got " +
                               std::to_string(n));
    std::vector<Decomposition> out;
    enumerate_decompositions(n, [&](const Decomposition& D) { out.push_back(D); });
    return out;
}

// ---------------------------------------------------- refinement checks ----

namespace {
RefineWitness locate_witness(const IndependenceTable& t, const std::vector<subset_t>& zs,
                             subset_t x, subset_t x2) {
    for (subset_t z : zs)
        if (t(x | z) != t(x2 | z)) return {false, x, x2, z};
    return {};  // unreachable when keys differ
}
}  // namespace

RefineWitness check_refines(const MatroidOracle& M, subset_t U,
                            const std::function<bool(subset_t, subset_t)>& coarse) {
    sim_guard(M.ground.size());
    if (U & ~M.ground.full()) throw std::domain_error("U is not a subset of the ground set");
    IndependenceTable t = materialize(M);
    auto zs = all_subsets(t.ground.full() & ~U);
    auto xs = all_subsets(U);
    std::vector<std::vector<uint64_t>> keys;
    keys.reserve(xs.size());
    for (subset_t X : xs) keys.push_back(sim_key(t, X, zs));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (keys[i] != keys[j] && coarse(xs[i], xs[j]))
                return locate_witness(t, zs, xs[i], xs[j]);
    return {};
}

RefineWitness check_refines_keys(const MatroidOracle& M, subset_t U,
                                 const std::function<std::string(subset_t)>& key) {
    sim_guard(M.ground.size());
    if (U & ~M.ground.full()) throw std::domain_error("U is not a subset of the ground set");
    IndependenceTable t = materialize(M);
    auto zs = all_subsets(t.ground.full() & ~U);
    std::map<std::string, std::pair<subset_t, std::vector<uint64_t>>> first_in_group;
    for (subset_t X : all_subsets(U)) {
        auto k = sim_key(t, X, zs);
        auto [it, fresh] = first_in_group.try_emplace(key(X), X, k);
        if (!fresh && it->second.second != k) return locate_witness(t, zs, it->second.first, X);
    }
    return {};
}

}  // namespace matdec
