#include "matdec/pigeonhole.hpp"

#include <algorithm>
#include <set>

#include "matdec/matching.hpp"
#include "matdec/uniform.hpp"

namespace matdec {

// ------------------------------------------------------------- bounds ------

namespace {
constexpr uint64_t kSat = UINT64_MAX;

uint64_t sat_add(uint64_t a, uint64_t b) { return a > kSat - b ? kSat : a + b; }

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSat / b ? kSat : a * b;
}

uint64_t sat_pow2(uint64_t e) { return e >= 64 ? kSat : uint64_t{1} << e; }

uint64_t sat_pow(uint64_t base, uint64_t e) {
    if (base == 0) return e == 0 ? 1 : 0;
    if (base == 1) return 1;
    if (e >= 64) return kSat;  // base >= 2
    uint64_t r = 1;
    while (e--) {
        r = sat_mul(r, base);
        if (r == kSat) return kSat;
    }
    return r;
}
}  // namespace

uint64_t pi_uniform(uint64_t lambda) { return sat_add(lambda, 2); }

uint64_t pi_linear(uint64_t q, uint64_t lambda) {
    if (q < 2) throw std::domain_error("field order must be at least 2");
    uint64_t geom = 0, term = 1;  // 1 + q + ... + q^(lambda-1)
    for (uint64_t i = 0; i < lambda; ++i) {
        geom = sat_add(geom, term);
        term = sat_mul(term, q);
    }
    return sat_add(sat_pow2(geom), 1);
}

uint64_t pi_ft_reference(uint64_t lambda) {
    return sat_add(sat_pow2(sat_pow2(sat_pow2(lambda))), 1);
}

uint64_t pi_ft_certified(uint64_t cover_size) {
    return sat_add(sat_pow2(sat_pow2(sat_mul(4, cover_size))), 1);
}

uint64_t frame_boundary_cap(uint64_t lambda) {
    if (lambda < 1) throw std::domain_error("boundary cap needs lambda >= 1");
    uint64_t v = sat_mul(14, lambda);
    return v == kSat ? kSat : v - 12;
}

uint64_t pi_frame(uint64_t lambda, uint64_t group_order) {
    if (group_order == 0) return kSat;  // infinite group: no finite ceiling
    uint64_t n = frame_boundary_cap(lambda);
    if (n == kSat) return kSat;
    uint64_t base = sat_mul(2, sat_mul(sat_add(n, 1), group_order));
    return sat_add(sat_pow(base, n), 1);
}

uint64_t rho_from_pi(const std::function<uint64_t(uint64_t)>& pi, uint64_t width) {
    return width == 0 ? 1 : pi(width - 1);
}

// ------------------------------------------------- uniform refinement ------

int UniformRefinement::bucket(subset_t X) const {
    int s = popcount(X);
    if (s > rank_u) return 0;  // dependent bucket
    if (s > rank_u - lambda) return 1 + (rank_u - s);
    return lambda + 1;
}

UniformRefinement uniform_refinement(int r, int n, subset_t U, int lambda) {
    if (r < 0 || n < 0 || r > n) throw std::domain_error("need 0 <= r <= n");
    if (n < 31 && (U >> n) != 0) throw std::domain_error("U is not a subset of the ground set");
    int a = popcount(U);
    int actual = std::min(a, r) + std::min(n - a, r) - r;
    if (lambda < actual)
        throw std::domain_error("lambda " + std::to_string(lambda) +
                                " below the connectivity " + std::to_string(actual));
    return {std::min(a, r), lambda};
}

// -------------------------------------------------- linear signature -------

std::string LinearSignature::to_string() const {
    if (dependent) return "dep";
    std::string s = "ind";
    for (const auto& row : basis) {
        s += ';';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(row[i]);
        }
    }
    return s;
}

LinearSignature linear_signature(const LinearRep& rep, subset_t U, subset_t X) {
    validate(rep);
    int n = static_cast<int>(rep.cols.size());
    GroundSet ground = iota_ground(n, 1);
    if (U & ~ground.full()) throw std::domain_error("U is not a subset of the ground set");
    if (X & ~U) throw std::domain_error("X must be a subset of U");

    FpMatrix gens_x;
    for (int i = 0; i < n; ++i)
        if (X >> i & 1u) gens_x.push_back(rep.cols[static_cast<std::size_t>(i)]);
    if (matrix_rank(gens_x, rep.p) < popcount(X)) return {true, {}};

    FpMatrix gens_v;
    subset_t V = ground.full() & ~U;
    for (int i = 0; i < n; ++i)
        if (V >> i & 1u) gens_v.push_back(rep.cols[static_cast<std::size_t>(i)]);
    return {false, subspace_intersection(gens_x, gens_v, rep.rows, rep.p)};
}

// --------------------------------- fundamental transversal signatures ------

namespace {
struct FtContext {
    GroundSet ground;
    subset_t full = 0, amask = 0, bmask = 0;
    std::vector<std::pair<int, int>> edge_pos;  // (a position, b position)
};

FtContext ft_context(const BipartitePresentation& G) {
    validate(G);
    FtContext c;
    c.ground = ft_ground(G);
    c.full = c.ground.full();
    c.amask = c.ground.mask_of(G.a_side);
    c.bmask = c.ground.mask_of(G.b_side);
    for (auto [a, b] : G.edges) c.edge_pos.push_back({c.ground.index_of(a), c.ground.index_of(b)});
    return c;
}
}  // namespace

std::vector<int> ft_boundary_cover(const BipartitePresentation& G, subset_t U) {
    FtContext c = ft_context(G);
    if (U & ~c.full) throw std::domain_error("U is not a subset of the ground set");

    BipartiteMatcher m(static_cast<int>(G.a_side.size()), static_cast<int>(G.b_side.size()));
    GroundSet aset(G.a_side), bset(G.b_side);
    for (auto [a, b] : G.edges) {
        bool across = ((U >> c.ground.index_of(a)) & 1u) != ((U >> c.ground.index_of(b)) & 1u);
        if (across) m.add_edge(aset.index_of(a), bset.index_of(b));
    }
    m.solve();
    KoenigCover cover = koenig_cover(m);
    std::vector<int> ids;
    for (int i : cover.left) ids.push_back(aset.ids[static_cast<std::size_t>(i)]);
    for (int i : cover.right) ids.push_back(bset.ids[static_cast<std::size_t>(i)]);
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {
// matching test on the pruned graph: does some matching saturate every
// left vertex of `aside` and, simultaneously, all of r2|r3?
bool cert_matchings(const FtContext& c, subset_t aside, subset_t s3, subset_t z, subset_t r1,
                    subset_t r2, subset_t r3, subset_t r4) {
    std::vector<int> lidx(static_cast<std::size_t>(c.ground.size()), -1);
    std::vector<int> ridx(static_cast<std::size_t>(c.ground.size()), -1);
    int nl = 0, nr = 0;
    subset_t rall = r1 | r2 | r3 | r4;
    for (int i = 0; i < c.ground.size(); ++i) {
        if (aside >> i & 1u) lidx[static_cast<std::size_t>(i)] = nl++;
        if (rall >> i & 1u) ridx[static_cast<std::size_t>(i)] = nr++;
    }
    BipartiteMatcher full_graph(nl, nr), into_required(nl, nr);
    for (auto [pa, pb] : c.edge_pos) {
        if (!(aside >> pa & 1u) || !(rall >> pb & 1u)) continue;
        subset_t abit = subset_t{1} << pa, bbit = subset_t{1} << pb;
        bool allowed;
        if (abit & s3)
            allowed = (bbit & r4) != 0;  // cover elements of X reach only uncovered far Bs
        else if (abit & z)
            allowed = (bbit & r1) != 0;  // borrowed cover elements reach plain near Bs
        else
            allowed = (bbit & (r1 | r2 | r3)) != 0;
        if (!allowed) continue;
        int l = lidx[static_cast<std::size_t>(pa)], r = ridx[static_cast<std::size_t>(pb)];
        full_graph.add_edge(l, r);
        if (bbit & (r2 | r3)) into_required.add_edge(l, r);
    }
    if (full_graph.solve() != popcount(aside)) return false;
    return into_required.solve() == popcount(r2 | r3);
}

struct CertCorners {
    subset_t bps, aqs, aps, bqs;  // the four corners of the cover
};

CertCorners corners_of(const FtContext& c, subset_t P, subset_t smask) {
    subset_t Q = c.full & ~P;
    return {c.bmask & P & smask, c.amask & Q & smask, c.amask & P & smask, c.bmask & Q & smask};
}

bool cert_test_inner(const FtContext& c, subset_t P, subset_t smask, subset_t X,
                     const FTCertificate& cert) {
    CertCorners k = corners_of(c, P, smask);
    if ((cert.s1 & ~k.bps) || (cert.z & ~k.aqs) || (cert.s3 & ~k.aps) || (cert.s4 & ~k.bqs))
        throw std::domain_error("certificate corner outside its cover corner");
    if ((X & k.bps) & ~cert.s1) return false;  // covered X elements must be declared
    if (cert.s3 & ~X) return false;            // declared cover elements must be present
    subset_t Q = c.full & ~P;
    subset_t aside = (X & c.amask) | cert.z;
    subset_t r1 = (c.bmask & P) & ~(smask | X);
    subset_t r2 = cert.s1 & ~X;
    subset_t r3 = cert.s4;
    subset_t r4 = (c.bmask & Q) & ~smask;
    return cert_matchings(c, aside, cert.s3, cert.z, r1, r2, r3, r4);
}
}  // namespace

bool ft_certificate_test(const BipartitePresentation& G, const std::vector<int>& S, subset_t P,
                         subset_t X, const FTCertificate& cert) {
    FtContext c = ft_context(G);
    if (P & ~c.full) throw std::domain_error("side is not a subset of the ground set");
    if (X & ~P) throw std::domain_error("X must lie inside the given side");
    if (!fundamental_transversal_oracle(G).indep(X))
        throw std::domain_error("certificate test requires independent X");
    return cert_test_inner(c, P, c.ground.mask_of(S), X, cert);
}

std::string FTSignatureSet::to_string() const {
    if (dependent) return "dep";
    std::string s = "ind";
    for (const auto& t : accepted) {
        s += ';';
        s += std::to_string(t.s1) + "," + std::to_string(t.z) + "," + std::to_string(t.s3) + "," +
             std::to_string(t.s4);
    }
    return s;
}

FTSignatureSet ft_signature(const BipartitePresentation& G, const std::vector<int>& S, subset_t P,
                            bool u_side, subset_t X) {
    FtContext c = ft_context(G);
    if (P & ~c.full) throw std::domain_error("side is not a subset of the ground set");
    if (X & ~P) throw std::domain_error("X must lie inside the given side");
    if (!fundamental_transversal_oracle(G).indep(X)) return {true, {}};

    subset_t smask = c.ground.mask_of(S);
    CertCorners k = corners_of(c, P, smask);
    FTSignatureSet out;
    for (subset_t s1 : all_subsets(k.bps))
        for (subset_t z : all_subsets(k.aqs))
            for (subset_t s3 : all_subsets(k.aps))
                for (subset_t s4 : all_subsets(k.bqs)) {
                    FTCertificate cert{s1, z, s3, s4, u_side};
                    if (cert_test_inner(c, P, smask, X, cert)) out.accepted.push_back(cert);
                }
    std::sort(out.accepted.begin(), out.accepted.end());
    return out;
}

bool ft_compatible(const FTCertificate& c, const FTCertificate& d) {
    if (c.u_side == d.u_side) throw std::domain_error("certificates come from the same side");
    const FTCertificate& a = c.u_side ? c : d;
    const FTCertificate& b = c.u_side ? d : c;
    return (a.s1 & b.s4) == 0 && a.z == b.s3 && b.z == a.s3 && (a.s4 & b.s1) == 0;
}

bool ft_compatible_pair_exists(const FTSignatureSet& sx, const FTSignatureSet& sy) {
    if (sx.dependent || sy.dependent) return false;
    for (const auto& a : sx.accepted)
        for (const auto& b : sy.accepted)
            if (ft_compatible(a, b)) return true;
    return false;
}

// ----------------------------------------------------- frame signature -----

std::vector<int> frame_boundary(const Multigraph& g, subset_t U) {
    validate(g);
    GroundSet ground = g.edge_ground();
    if (U & ~ground.full()) throw std::domain_error("U is not a subset of the ground set");
    subset_t upos = edge_positions_of(g, U);
    std::vector<char> in_u(static_cast<std::size_t>(g.nvertices), 0);
    std::vector<char> in_rest(static_cast<std::size_t>(g.nvertices), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto& mark = (upos >> i & 1u) ? in_u : in_rest;
        mark[static_cast<std::size_t>(g.edges[i].u)] = 1;
        mark[static_cast<std::size_t>(g.edges[i].v)] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.nvertices; ++v)
        if (in_u[static_cast<std::size_t>(v)] && in_rest[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

std::string FrameSignature::to_string() const {
    if (dependent) return "dep";
    std::string s = "ind";
    for (const auto& b : blocks) {
        s += ";[";
        for (std::size_t i = 0; i < b.vertices.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b.vertices[i]);
        }
        s += b.balanced ? "]bal" : "]unb";
        for (const auto& [v, g] : b.anchored)
            s += "|" + std::to_string(v) + "=" + std::to_string(g);
    }
    return s;
}

namespace {
std::vector<int> block_vertices(const Multigraph& g, subset_t comp, const std::set<int>& nset) {
    std::set<int> verts;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (comp >> i & 1u) {
            if (nset.count(g.edges[i].u)) verts.insert(g.edges[i].u);
            if (nset.count(g.edges[i].v)) verts.insert(g.edges[i].v);
        }
    return {verts.begin(), verts.end()};
}
}  // namespace

FrameSignature frame_signature(const GainGraph& G, subset_t U, subset_t X) {
    validate(G);
    GroundSet ground = G.g.edge_ground();
    if (U & ~ground.full()) throw std::domain_error("U is not a subset of the ground set");
    if (X & ~U) throw std::domain_error("X must be a subset of U");
    if (!gain_oracle(G).indep(X)) return {true, {}};

    std::vector<int> N = frame_boundary(G.g, U);
    std::set<int> nset(N.begin(), N.end());
    FrameSignature out;
    for (subset_t comp : edge_components(G.g, edge_positions_of(G.g, X))) {
        FrameBlock block;
        block.vertices = block_vertices(G.g, comp, nset);
        if (block.vertices.empty()) continue;  // cannot meet any extension edge
        BalanceInfo info = balance_and_gain(G, comp);
        block.balanced = info.balanced;
        if (info.balanced) {
            long long base = info.anchored.at(block.vertices.front());
            for (int v : block.vertices)
                block.anchored[v] = G.group.op(G.group.inv(base), info.anchored.at(v));
        }
        out.blocks.push_back(std::move(block));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

FrameSignature frame_signature(const BicircularPresentation& B, subset_t U, subset_t X) {
    validate(B);
    GroundSet ground = B.g.edge_ground();
    if (U & ~ground.full()) throw std::domain_error("U is not a subset of the ground set");
    if (X & ~U) throw std::domain_error("X must be a subset of U");
    if (!bicircular_oracle(B).indep(X)) return {true, {}};

    std::vector<int> N = frame_boundary(B.g, U);
    std::set<int> nset(N.begin(), N.end());
    FrameSignature out;
    for (subset_t comp : edge_components(B.g, edge_positions_of(B.g, X))) {
        FrameBlock block;
        block.vertices = block_vertices(B.g, comp, nset);
        if (block.vertices.empty()) continue;
        // independent X carries no balanced loop, so the only possible cycle
        // is unbalanced; a tree component is (vacuously) balanced
        block.balanced = nu_excess(B.g, comp) < 0;
        out.blocks.push_back(std::move(block));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

// ------------------------------------------------------- class counting ----

int class_count_keys(subset_t U, const std::function<std::string(subset_t)>& key) {
    std::set<std::string> keys;
    for (subset_t X : all_subsets(U)) keys.insert(key(X));
    return static_cast<int>(keys.size());
}

}  // namespace matdec
