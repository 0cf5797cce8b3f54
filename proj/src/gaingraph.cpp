#include "matdec/gaingraph.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>

namespace matdec {

// ---------------------------------------------------------------- Group ----

Group Group::integers() {
    Group g;
    g.kind = Kind::integers;
    return g;
}

Group Group::from_table(std::vector<std::vector<int>> table) {
    Group g;
    g.kind = Kind::table;
    g.mul = std::move(table);
    int k = static_cast<int>(g.mul.size());
    if (k == 0) throw std::domain_error("empty multiplication table");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != k)
            throw std::domain_error("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= k) throw std::domain_error("table entry outside element range");
    }
    // identity
    int id = -1;
    for (int e = 0; e < k; ++e) {
        bool ok = true;
        for (int x = 0; x < k && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw std::domain_error("table has no identity element");
    g.identity_index = id;
    // associativity
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                    throw std::domain_error("table is not associative");
    // inverses
    for (int a = 0; a < k; ++a) {
        bool has = false;
        for (int b = 0; b < k && !has; ++b) has = g.mul[a][b] == id && g.mul[b][a] == id;
        if (!has) throw std::domain_error("table element lacks an inverse");
    }
    return g;
}

Group Group::cyclic(int k) {
    if (k < 1) throw std::domain_error("cyclic group order must be positive");
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
    return from_table(std::move(t));
}

Group Group::sym3() {
    // permutations of {0,1,2} in lexicographic one-line order;
    // (a*b)(x) = a(b(x))
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            t[a][b] = find(comp);
        }
    return from_table(std::move(t));
}

bool Group::contains(long long v) const {
    if (kind == Kind::integers) return true;
    return v >= 0 && v < static_cast<long long>(mul.size());
}

long long Group::op(long long a, long long b) const {
    if (kind == Kind::integers) return a + b;
    if (!contains(a) || !contains(b)) throw std::domain_error("value is not a group element");
    return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

long long Group::inv(long long a) const {
    if (kind == Kind::integers) return -a;
    if (!contains(a)) throw std::domain_error("value is not a group element");
    int k = static_cast<int>(mul.size());
    for (int b = 0; b < k; ++b)
        if (mul[static_cast<std::size_t>(a)][b] == identity_index) return b;
    throw std::domain_error("element lacks an inverse");  // unreachable after validation
}

long long Group::identity() const {
    return kind == Kind::integers ? 0 : identity_index;
}

uint64_t Group::order() const {
    return kind == Kind::integers ? 0 : static_cast<uint64_t>(mul.size());
}

long long Group::smallest_non_identity() const {
    if (kind == Kind::integers) return 1;
    for (std::size_t i = 0; i < mul.size(); ++i)
        if (static_cast<int>(i) != identity_index) return static_cast<long long>(i);
    throw std::domain_error("trivial group has no non-identity element");
}

bool Group::operator==(const Group& o) const {
    return kind == o.kind && mul == o.mul && identity_index == o.identity_index;
}

// ----------------------------------------------------------- Multigraph ----

int Multigraph::index_of_edge(int id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return static_cast<int>(i);
    return -1;
}

GroundSet Multigraph::edge_ground() const {
    std::vector<int> ids;
    for (const auto& e : edges) ids.push_back(e.id);
    return GroundSet(std::move(ids));
}

void validate(const Multigraph& g) {
    if (g.nvertices < 0) throw std::domain_error("negative vertex count");
    std::set<int> ids;
    for (const auto& e : g.edges) {
        if (e.u < 0 || e.u >= g.nvertices || e.v < 0 || e.v >= g.nvertices)
            throw std::domain_error("edge endpoint outside vertex range");
        if (e.id < 0) throw std::domain_error("edge ids must be non-negative");
        if (!ids.insert(e.id).second)
            throw std::domain_error("duplicate edge id " + std::to_string(e.id));
    }
}

void validate(const GainGraph& G) {
    validate(G.g);
    if (G.gains.size() != G.g.edges.size())
        throw std::domain_error("gain list length differs from edge count");
    for (long long v : G.gains)
        if (!G.group.contains(v)) throw std::domain_error("gain is not a group element");
}

void validate(const BicircularPresentation& B) {
    validate(B.g);
    std::set<int> seen;
    for (int id : B.balanced_loops) {
        int idx = B.g.index_of_edge(id);
        if (idx < 0) throw std::domain_error("balanced loop id not an edge");
        if (!B.g.is_loop(idx)) throw std::domain_error("balanced loop id is not a loop");
        if (!seen.insert(id).second) throw std::domain_error("duplicate balanced loop id");
    }
}

long long GainGraph::sigma(int edge_idx, int from, int to) const {
    const auto& e = g.edges[static_cast<std::size_t>(edge_idx)];
    if (e.u == e.v) {
        if (from != e.u || to != e.u) throw std::domain_error("loop traversal endpoints wrong");
        return gains[static_cast<std::size_t>(edge_idx)];
    }
    if (from == e.u && to == e.v) return gains[static_cast<std::size_t>(edge_idx)];
    if (from == e.v && to == e.u) return group.inv(gains[static_cast<std::size_t>(edge_idx)]);
    throw std::domain_error("traversal endpoints do not match edge");
}

// ------------------------------------------------------------ subgraphs ----

namespace {
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

std::vector<subset_t> edge_components(const Multigraph& g, subset_t X) {
    Dsu d(g.nvertices);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (X >> i & 1u) d.join(g.edges[i].u, g.edges[i].v);
    std::map<int, subset_t> comp;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (X >> i & 1u) comp[d.find(g.edges[i].u)] |= subset_t{1} << i;
    std::vector<subset_t> out;
    for (auto& [root, mask] : comp) out.push_back(mask);
    return out;
}

int nu_excess(const Multigraph& g, subset_t X) {
    std::set<int> verts;
    int edges = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (X >> i & 1u) {
            ++edges;
            verts.insert(g.edges[i].u);
            verts.insert(g.edges[i].v);
        }
    return edges - static_cast<int>(verts.size());
}

// -------------------------------------------------------------- oracles ----

// NOTE: edge masks returned by these oracles are indexed by *sorted edge id*,
// matching GroundSet order, which may differ from the edge list order. The
// helpers below translate.
namespace {
std::vector<int> ground_to_edgeidx(const Multigraph& g) {
    GroundSet ground = g.edge_ground();
    std::vector<int> map(static_cast<std::size_t>(ground.size()));
    for (int i = 0; i < ground.size(); ++i)
        map[static_cast<std::size_t>(i)] = g.index_of_edge(ground.ids[static_cast<std::size_t>(i)]);
    return map;
}

subset_t to_edgelist_mask(const std::vector<int>& map, subset_t ground_mask) {
    subset_t m = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (ground_mask >> i & 1u) m |= subset_t{1} << map[i];
    return m;
}
}  // namespace

subset_t edge_positions_of(const Multigraph& g, subset_t ground_mask) {
    return to_edgelist_mask(ground_to_edgeidx(g), ground_mask);
}

MatroidOracle bicircular_oracle(const BicircularPresentation& B) {
    validate(B);
    auto shared = std::make_shared<BicircularPresentation>(B);
    GroundSet ground = B.g.edge_ground();
    auto map = std::make_shared<std::vector<int>>(ground_to_edgeidx(B.g));
    subset_t balanced = 0;
    for (int id : B.balanced_loops) balanced |= subset_t{1} << B.g.index_of_edge(id);

    auto f = [shared, map, balanced](subset_t X) {
        subset_t E = to_edgelist_mask(*map, X);
        if (E & balanced) return false;  // a balanced loop is a matroid loop
        for (subset_t comp : edge_components(shared->g, E))
            if (nu_excess(shared->g, comp) > 0) return false;
        return true;
    };
    return {ground, f};
}

MatroidOracle gain_oracle(const GainGraph& G) {
    validate(G);
    auto shared = std::make_shared<GainGraph>(G);
    GroundSet ground = G.g.edge_ground();
    auto map = std::make_shared<std::vector<int>>(ground_to_edgeidx(G.g));

    auto f = [shared, map](subset_t X) {
        subset_t E = to_edgelist_mask(*map, X);
        for (subset_t comp : edge_components(shared->g, E)) {
            int nu = nu_excess(shared->g, comp);
            if (nu > 0) return false;
            if (nu == 0 && balance_and_gain(*shared, comp).balanced) return false;
        }
        return true;
    };
    return {ground, f};
}

// ------------------------------------------------------ balance / gains ----

BalanceInfo balance_and_gain(const GainGraph& G, subset_t D) {
    validate(G);
    std::set<int> verts;
    for (std::size_t i = 0; i < G.g.edges.size(); ++i)
        if (D >> i & 1u) {
            verts.insert(G.g.edges[i].u);
            verts.insert(G.g.edges[i].v);
        }
    if (verts.empty()) throw std::domain_error("balance_and_gain: empty edge set");

    // BFS over the non-loop edges from the least vertex; potentials are the
    // tree path gains
    std::map<int, long long> pot;
    int root = *verts.begin();
    pot[root] = G.group.identity();
    std::vector<int> queue = {root};
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < G.g.edges.size(); ++i) {
            if (!(D >> i & 1u) || G.g.is_loop(static_cast<int>(i))) continue;
            const auto& e = G.g.edges[i];
            int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
            if (other < 0 || pot.count(other)) continue;
            pot[other] = G.group.op(pot[u], G.sigma(static_cast<int>(i), u, other));
            queue.push_back(other);
        }
    }
    if (pot.size() != verts.size())
        throw std::domain_error("balance_and_gain: edge set is disconnected");

    BalanceInfo info;
    info.balanced = true;
    for (std::size_t i = 0; i < G.g.edges.size() && info.balanced; ++i) {
        if (!(D >> i & 1u)) continue;
        const auto& e = G.g.edges[i];
        if (G.g.is_loop(static_cast<int>(i))) {
            if (G.gains[i] != G.group.identity()) info.balanced = false;
        } else if (G.group.op(pot[e.u], G.sigma(static_cast<int>(i), e.u, e.v)) != pot[e.v]) {
            info.balanced = false;
        }
    }
    if (info.balanced) info.anchored = std::move(pot);
    return info;
}

GainGraph switch_at(const GainGraph& G, int u, long long alpha) {
    validate(G);
    if (u < 0 || u >= G.g.nvertices) throw std::domain_error("switching vertex out of range");
    if (!G.group.contains(alpha)) throw std::domain_error("switching value not a group element");
    GainGraph out = G;
    for (std::size_t i = 0; i < out.g.edges.size(); ++i) {
        const auto& e = out.g.edges[i];
        if (e.u == e.v) continue;  // loops never change
        if (e.u == u)
            out.gains[i] = out.group.op(alpha, out.gains[i]);
        else if (e.v == u)
            out.gains[i] = out.group.op(out.gains[i], out.group.inv(alpha));
    }
    return out;
}

// --------------------------------------------------------------- minors ----

GainGraph gain_minor(const GainGraph& G, int edge_id, MinorOp op) {
    validate(G);
    int idx = G.g.index_of_edge(edge_id);
    if (idx < 0) throw std::domain_error("no edge with id " + std::to_string(edge_id));

    auto drop = [](GainGraph g, int i) {
        g.g.edges.erase(g.g.edges.begin() + i);
        g.gains.erase(g.gains.begin() + i);
        return g;
    };

    if (op == MinorOp::remove) return drop(G, idx);

    const auto e = G.g.edges[static_cast<std::size_t>(idx)];
    if (e.u != e.v) {
        // non-loop: switch so the contracted gain is the identity, then
        // identify u with v
        GainGraph out = switch_at(G, e.u, G.group.inv(G.sigma(idx, e.u, e.v)));
        out = drop(out, idx);
        for (auto& f : out.g.edges) {
            if (f.u == e.u) f.u = e.v;
            if (f.v == e.u) f.v = e.v;
        }
        return out;
    }

    if (G.gains[static_cast<std::size_t>(idx)] == G.group.identity()) {
        // balanced loop: contraction equals deletion
        return drop(G, idx);
    }

    // unbalanced loop at u: other u-edges become loops; non-loops keep only
    // "some non-identity" gain, further u-loops become balanced
    if (G.group.order() == 1)
        throw std::domain_error("unbalanced loop cannot exist over the trivial group");
    int u = e.u;
    GainGraph out = drop(G, idx);
    int host = -1;
    for (int v = 0; v < out.g.nvertices; ++v)
        if (v != u) {
            host = v;
            break;
        }
    if (host < 0) host = u;  // single-vertex graph keeps u as the loop carrier
    for (std::size_t i = 0; i < out.g.edges.size(); ++i) {
        auto& f = out.g.edges[i];
        if (f.u != u && f.v != u) continue;
        if (f.u == f.v) {  // another loop at u
            f.u = f.v = host;
            out.gains[i] = out.group.identity();
        } else {
            int w = f.u == u ? f.v : f.u;
            f.u = f.v = w;
            out.gains[i] = out.group.smallest_non_identity();
        }
    }
    return out;
}

BicircularPresentation bicircular_minor(const BicircularPresentation& B, int edge_id, MinorOp op) {
    validate(B);
    int idx = B.g.index_of_edge(edge_id);
    if (idx < 0) throw std::domain_error("no edge with id " + std::to_string(edge_id));

    auto unlist = [](std::vector<int> l, int id) {
        l.erase(std::remove(l.begin(), l.end(), id), l.end());
        return l;
    };
    auto drop = [&unlist](BicircularPresentation b, int i, int id) {
        b.g.edges.erase(b.g.edges.begin() + i);
        b.balanced_loops = unlist(std::move(b.balanced_loops), id);
        return b;
    };

    if (op == MinorOp::remove) return drop(B, idx, edge_id);

    const auto e = B.g.edges[static_cast<std::size_t>(idx)];
    bool listed = std::find(B.balanced_loops.begin(), B.balanced_loops.end(), edge_id) !=
                  B.balanced_loops.end();

    if (e.u != e.v) {
        BicircularPresentation out = drop(B, idx, edge_id);
        for (auto& f : out.g.edges) {
            if (f.u == e.u) f.u = e.v;
            if (f.v == e.u) f.v = e.v;
        }
        return out;
    }

    if (listed) return drop(B, idx, edge_id);  // balanced loop: contract = delete

    int u = e.u;
    BicircularPresentation out = drop(B, idx, edge_id);
    int host = -1;
    for (int v = 0; v < out.g.nvertices; ++v)
        if (v != u) {
            host = v;
            break;
        }
    if (host < 0) host = u;
    for (auto& f : out.g.edges) {
        if (f.u != u && f.v != u) continue;
        if (f.u == f.v) {
            f.u = f.v = host;
            if (std::find(out.balanced_loops.begin(), out.balanced_loops.end(), f.id) ==
                out.balanced_loops.end())
                out.balanced_loops.push_back(f.id);
        } else {
            int w = f.u == u ? f.v : f.u;
            f.u = f.v = w;  // new loop, unbalanced by default
        }
    }
    std::sort(out.balanced_loops.begin(), out.balanced_loops.end());
    return out;
}

}  // namespace matdec
