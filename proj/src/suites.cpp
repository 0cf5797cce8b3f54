#include "matdec/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "matdec/automata.hpp"
#include "matdec/constructions.hpp"
#include "matdec/decomp.hpp"
#include "matdec/errors.hpp"
#include "matdec/gammoid.hpp"
#include "matdec/latticeparse.hpp"
#include "matdec/pigeonhole.hpp"
#include "matdec/uniform.hpp"

namespace matdec {

// ------------------------------------------------------------ reporting ----

void SuiteResult::add(SuiteRow row) {
    row.index = static_cast<int>(rows.size());
    if (!row.pass) pass = false;
    rows.push_back(std::move(row));
}

int SuiteResult::failures() const {
    int k = 0;
    for (const auto& r : rows)
        if (!r.pass) ++k;
    return k;
}

namespace {

std::string hex16(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// id list without commas, safe inside a CSV cell
std::string ids_str(const GroundSet& g, subset_t mask) {
    std::string s = "{";
    bool first = true;
    for (int id : g.ids_of(mask)) {
        if (!first) s += " ";
        s += std::to_string(id);
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string SuiteResult::to_csv() const {
    std::string s = "index,instance,lambda,sim_classes,refine_classes,bound,pass,note\n";
    for (const auto& r : rows) {
        s += std::to_string(r.index) + ",";
        s += (r.instance ? hex16(r.instance) : std::string()) + ",";
        s += (r.lambda >= 0 ? std::to_string(r.lambda) : std::string()) + ",";
        s += (r.sim_classes >= 0 ? std::to_string(r.sim_classes) : std::string()) + ",";
        s += (r.refine_classes >= 0 ? std::to_string(r.refine_classes) : std::string()) + ",";
        s += (r.bound ? std::to_string(r.bound) : std::string()) + ",";
        s += (r.pass ? "1" : "0") + std::string(",");
        s += r.note + "\n";
    }
    return s;
}

std::string SuiteResult::to_text() const {
    std::string s = name + ": " + (pass ? "PASS" : "FAIL") + " (" + std::to_string(rows.size()) +
                    " checks, " + std::to_string(failures()) + " failures)\n";
    for (const auto& r : rows)
        if (!r.pass)
            s += "  row " + std::to_string(r.index) + " instance=" + hex16(r.instance) + ": " +
                 r.note + "\n";
    return s;
}

// ----------------------------------------------------------- generators ----

namespace {

std::string random_path(Lcg& rng, int len, int norths) {
    std::string s(static_cast<std::size_t>(len), 'E');
    for (int i = 0; i < norths; ++i) s[static_cast<std::size_t>(i)] = 'N';
    for (int i = len - 1; i > 0; --i)
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(rng.range(0, i))]);
    return s;
}

UniformInstance gen_uniform(Lcg& rng, int maxn) {
    int n = rng.range(2, maxn);
    return UniformInstance{rng.range(0, n), n};
}

LinearRep gen_linear(Lcg& rng, int q, int maxcols) {
    LinearRep rep;
    rep.p = q;
    int n = rng.range(3, maxcols);
    rep.rows = rng.range(1, std::min(4, n));
    rep.cols.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(rep.rows)));
    for (auto& col : rep.cols)
        for (int& x : col) x = static_cast<int>(rng.below(static_cast<uint32_t>(q)));
    return rep;
}

BipartitePresentation gen_ftransversal(Lcg& rng, int maxground, int maxedges) {
    int total = rng.range(3, maxground);
    int asize = rng.range(1, total - 1);
    BipartitePresentation g;
    for (int i = 1; i <= asize; ++i) g.a_side.push_back(i);
    for (int i = asize + 1; i <= total; ++i) g.b_side.push_back(i);
    int cap = std::min(maxedges, asize * (total - asize));
    int ne = rng.range(0, cap);
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(used.size()) < ne)
        used.insert({1 + static_cast<int>(rng.below(static_cast<uint32_t>(asize))),
                     asize + 1 + static_cast<int>(rng.below(static_cast<uint32_t>(total - asize)))});
    g.edges.assign(used.begin(), used.end());
    return g;
}

LatticePathPresentation gen_latticepath(Lcg& rng, int maxlen) {
    int len = rng.range(2, maxlen);
    int norths = rng.range(1, len - 1);
    std::string s1 = random_path(rng, len, norths), s2 = random_path(rng, len, norths);
    std::string lower, upper;
    int lo = 0, hi = 0, c1 = 0, c2 = 0;
    for (int i = 0; i < len; ++i) {
        c1 += s1[static_cast<std::size_t>(i)] == 'N';
        c2 += s2[static_cast<std::size_t>(i)] == 'N';
        int nlo = std::min(c1, c2), nhi = std::max(c1, c2);
        lower += nlo > lo ? 'N' : 'E';
        upper += nhi > hi ? 'N' : 'E';
        lo = nlo;
        hi = nhi;
    }
    return LatticePathPresentation{lower, upper};
}

Multigraph gen_multigraph(Lcg& rng, int minv, int maxv, int mine, int maxe) {
    Multigraph g;
    g.nvertices = rng.range(minv, maxv);
    int ne = rng.range(mine, maxe);
    for (int k = 0; k < ne; ++k)
        g.edges.push_back({k, static_cast<int>(rng.below(static_cast<uint32_t>(g.nvertices))),
                           static_cast<int>(rng.below(static_cast<uint32_t>(g.nvertices)))});
    return g;
}

// spanning tree first, then random extra edges (loops and parallels allowed)
Multigraph gen_connected_multigraph(Lcg& rng, int minv, int maxv, int mine, int maxe) {
    Multigraph g;
    g.nvertices = rng.range(minv, maxv);
    if (mine < g.nvertices) mine = g.nvertices;
    int ne = rng.range(mine, maxe);
    for (int k = 0; k + 1 < g.nvertices; ++k)
        g.edges.push_back({k, k + 1, rng.range(0, k)});
    for (int k = g.nvertices - 1; k < ne; ++k)
        g.edges.push_back({k, static_cast<int>(rng.below(static_cast<uint32_t>(g.nvertices))),
                           static_cast<int>(rng.below(static_cast<uint32_t>(g.nvertices)))});
    return g;
}

BicircularPresentation gen_bicircular(Lcg& rng, int maxe) {
    BicircularPresentation b;
    b.g = gen_connected_multigraph(rng, 2, 5, 2, maxe);
    for (std::size_t i = 0; i < b.g.edges.size(); ++i)
        if (b.g.edges[i].u == b.g.edges[i].v && rng.coin())
            b.balanced_loops.push_back(b.g.edges[i].id);
    return b;
}

Group group_by_name(const std::string& name) {
    if (name == "z2") return Group::cyclic(2);
    if (name == "z3") return Group::cyclic(3);
    if (name == "s3") return Group::sym3();
    if (name == "int") return Group::integers();
    throw std::domain_error("unknown group name '" + name + "'");
}

GainGraph gen_gain(Lcg& rng, const Group& grp, int maxe) {
    GainGraph G;
    G.group = grp;
    G.g = gen_connected_multigraph(rng, 2, 5, 2, maxe);
    for (std::size_t i = 0; i < G.g.edges.size(); ++i) {
        if (grp.kind == Group::Kind::integers)
            G.gains.push_back(rng.range(-3, 3));
        else
            G.gains.push_back(rng.below(static_cast<uint32_t>(grp.order())));
    }
    return G;
}

GammoidPresentation gen_gammoid(Lcg& rng, int maxv) {
    GammoidPresentation p;
    p.nvertices = rng.range(2, maxv);
    int tries = rng.range(0, 2 * p.nvertices);
    std::set<std::pair<int, int>> used;
    for (int t = 0; t < tries; ++t) {
        int u = static_cast<int>(rng.below(static_cast<uint32_t>(p.nvertices)));
        int v = static_cast<int>(rng.below(static_cast<uint32_t>(p.nvertices)));
        if (u != v) used.insert({u, v});
    }
    p.arcs.assign(used.begin(), used.end());
    int nt = rng.range(1, p.nvertices);
    std::vector<int> verts(static_cast<std::size_t>(p.nvertices));
    for (int i = 0; i < p.nvertices; ++i) verts[static_cast<std::size_t>(i)] = i;
    for (int i = p.nvertices - 1; i > 0; --i)
        std::swap(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(rng.range(0, i))]);
    verts.resize(static_cast<std::size_t>(nt));
    std::sort(verts.begin(), verts.end());
    p.targets = verts;
    return p;
}

SimpleGraph gen_sparsepaving(Lcg& rng, int maxv) {
    SimpleGraph g;
    g.nvertices = rng.range(3, maxv);
    for (int i = 0; i < g.nvertices; ++i)
        for (int j = i + 1; j < g.nvertices; ++j)
            if (rng.coin()) g.edges.push_back({i, j});
    return g;
}

}  // namespace

std::vector<std::string> generator_kinds() {
    return {"uniform",    "linear-gf2", "linear-gf3", "ftransversal", "latticepath", "bicircular",
            "gain-z2",    "gain-z3",    "gain-s3",    "gammoid",      "sparsepaving"};
}

Instance generate_instance(const std::string& kind, Lcg& rng, int max_elements) {
    int m = max_elements;
    if (kind == "uniform") return gen_uniform(rng, m ? m : 9);
    if (kind == "linear-gf2") return gen_linear(rng, 2, m ? m : 12);
    if (kind == "linear-gf3") return gen_linear(rng, 3, m ? m : 12);
    if (kind == "ftransversal") return gen_ftransversal(rng, m ? m : 10, 12);
    if (kind == "latticepath") return gen_latticepath(rng, m ? m : 14);
    if (kind == "bicircular") return gen_bicircular(rng, m ? m : 10);
    if (kind == "gain-z2") return gen_gain(rng, group_by_name("z2"), m ? m : 10);
    if (kind == "gain-z3") return gen_gain(rng, group_by_name("z3"), m ? m : 10);
    if (kind == "gain-s3") return gen_gain(rng, group_by_name("s3"), m ? m : 10);
    if (kind == "gammoid") return gen_gammoid(rng, m ? m : 9);
    if (kind == "sparsepaving") return gen_sparsepaving(rng, m ? m : 5);
    throw std::domain_error("unknown generator kind '" + kind + "'");
}

// ------------------------------------------------------ refinement suite ---

// signature key of X within U for the instance's presentation class
std::function<std::string(subset_t)> refinement_key(const Instance& inst, const MatroidOracle& M,
                                                    subset_t U) {
    if (const auto* u = std::get_if<UniformInstance>(&inst)) {
        UniformRefinement ref = uniform_refinement(u->r, u->n, U, connectivity(M, U));
        return [ref](subset_t X) { return std::to_string(ref.bucket(X)); };
    }
    if (const auto* rep = std::get_if<LinearRep>(&inst)) {
        return [rep = *rep, U](subset_t X) { return linear_signature(rep, U, X).to_string(); };
    }
    if (const auto* g = std::get_if<BipartitePresentation>(&inst)) {
        auto S = ft_boundary_cover(*g, U);
        return [g = *g, S, U](subset_t X) { return ft_signature(g, S, U, true, X).to_string(); };
    }
    if (const auto* b = std::get_if<BicircularPresentation>(&inst)) {
        return [b = *b, U](subset_t X) { return frame_signature(b, U, X).to_string(); };
    }
    if (const auto* g = std::get_if<GainGraph>(&inst)) {
        return [g = *g, U](subset_t X) { return frame_signature(g, U, X).to_string(); };
    }
    throw std::domain_error("no signature refinement for kind '" + kind_of(inst) + "'");
}

namespace {

subset_t random_proper_subset(Lcg& rng, subset_t full) {
    return 1 + rng.below(full - 1);  // needs at least two elements
}

const std::vector<std::string> kRefinementKinds = {
    "uniform", "linear-gf2", "linear-gf3", "ftransversal",
    "bicircular", "gain-z2", "gain-z3", "gain-s3"};

}  // namespace

SuiteResult refinement_suite(uint64_t seed, int per_class) {
    SuiteResult out{"refinement", {}, true};
    Lcg rng(seed);
    for (const auto& kind : kRefinementKinds) {
        for (int i = 0; i < per_class; ++i) {
            Instance inst = generate_instance(kind, rng);
            MatroidOracle M = to_oracle(inst);
            IndependenceTable T = materialize(M);
            MatroidOracle TO = table_oracle(T);
            for (int pick = 0; pick < 2; ++pick) {
                subset_t U = random_proper_subset(rng, T.full());
                SuiteRow row;
                row.instance = instance_hash(inst);
                row.lambda = connectivity(TO, U);
                auto key = refinement_key(inst, TO, U);
                RefineWitness w = check_refines_keys(TO, U, key);
                row.sim_classes = count_sim_classes(T, U);
                row.refine_classes = class_count_keys(U, key);
                row.pass = w.ok && row.sim_classes <= row.refine_classes;
                row.note = kind + " U=" + ids_str(M.ground, U);
                if (!w.ok)
                    row.note += " equal signatures but split by Z: X=" + ids_str(M.ground, w.x) +
                                " X'=" + ids_str(M.ground, w.x2) + " Z=" + ids_str(M.ground, w.z);
                out.add(std::move(row));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------- bounds suite ---

SuiteResult bounds_suite(uint64_t seed, int per_class) {
    SuiteResult out{"bounds", {}, true};
    Lcg rng(seed);
    for (const auto& kind : kRefinementKinds) {
        for (int i = 0; i < per_class; ++i) {
            Instance inst = generate_instance(kind, rng);
            MatroidOracle M = to_oracle(inst);
            IndependenceTable T = materialize(M);
            MatroidOracle TO = table_oracle(T);
            for (int pick = 0; pick < 2; ++pick) {
                subset_t U = random_proper_subset(rng, T.full());
                SuiteRow row;
                row.instance = instance_hash(inst);
                int lambda = connectivity(TO, U);
                row.lambda = lambda;
                auto key = refinement_key(inst, TO, U);
                row.sim_classes = count_sim_classes(T, U);
                row.refine_classes = class_count_keys(U, key);
                row.note = kind + " U=" + ids_str(M.ground, U);
                bool ok = row.sim_classes <= row.refine_classes;
                if (kind == "uniform") {
                    row.bound = pi_uniform(static_cast<uint64_t>(lambda));
                } else if (kind == "linear-gf2" || kind == "linear-gf3") {
                    row.bound = pi_linear(static_cast<uint64_t>(std::get<LinearRep>(inst).p),
                                          static_cast<uint64_t>(lambda));
                } else if (kind == "ftransversal") {
                    auto S = ft_boundary_cover(std::get<BipartitePresentation>(inst), U);
                    row.bound = pi_ft_certified(S.size());
                    ok = ok && static_cast<int>(S.size()) <= lambda;
                    row.note += " cover=" + std::to_string(S.size());
                }
                // frame kinds carry no class-count ceiling here: the
                // boundary-vertex cap needs 3-connectivity and is checked in
                // the dedicated pass below
                if (row.bound)
                    ok = ok && static_cast<uint64_t>(row.refine_classes) <= row.bound;
                row.pass = ok;
                if (!ok) row.note += " count exceeds bound";
                out.add(std::move(row));
            }
        }
    }

    // boundary-vertex cap |N| <= 14*lambda-12 on 3-connected frame instances
    for (const std::string& kind : {std::string("bicircular"), std::string("gain-z2"),
                                    std::string("gain-z3"), std::string("gain-s3")}) {
        const int needed = 15;
        int found = 0;
        for (int attempt = 0; attempt < needed * 50 && found < needed; ++attempt) {
            Instance inst;
            if (kind == "bicircular") {
                BicircularPresentation b;
                b.g = gen_connected_multigraph(rng, 2, 4, 6, 9);
                inst = b;  // no balanced loops: matroid loops break 3-connectivity
            } else {
                Group grp = group_by_name(kind.substr(5));
                GainGraph G;
                G.group = grp;
                G.g = gen_connected_multigraph(rng, 2, 4, 6, 9);
                for (std::size_t e = 0; e < G.g.edges.size(); ++e) {
                    bool loop = G.g.edges[e].u == G.g.edges[e].v;
                    G.gains.push_back(
                        loop ? 1 + rng.below(static_cast<uint32_t>(grp.order() - 1))
                             : rng.below(static_cast<uint32_t>(grp.order())));
                }
                inst = G;
            }
            MatroidOracle M = to_oracle(inst);
            IndependenceTable T = materialize(M);
            MatroidOracle TO = table_oracle(T);
            if (!is_n_connected(TO, 3)) continue;
            ++found;
            const Multigraph& mg = kind == "bicircular"
                                       ? std::get<BicircularPresentation>(inst).g
                                       : std::get<GainGraph>(inst).g;
            for (int pick = 0; pick < 2; ++pick) {
                subset_t U = random_proper_subset(rng, T.full());
                SuiteRow row;
                row.instance = instance_hash(inst);
                int lambda = connectivity(TO, U);
                row.lambda = lambda;
                auto nverts = frame_boundary(mg, U);
                row.bound = frame_boundary_cap(static_cast<uint64_t>(lambda));
                row.pass = nverts.size() <= row.bound;
                row.note = kind + " 3-connected U=" + ids_str(M.ground, U) +
                           " boundary-vertices=" + std::to_string(nverts.size());
                out.add(std::move(row));
            }
        }
        SuiteRow tally;
        tally.pass = found >= needed;
        tally.note = kind + " 3-connected instances checked=" + std::to_string(found);
        out.add(std::move(tally));
    }
    return out;
}

// ------------------------------------------------------- parse-tree suite --

namespace {

// All maximal sets: north-step positions of every monotone path inside the
// band, by direct enumeration.
std::vector<subset_t> brute_path_bases(const LatticePathPresentation& L) {
    int len = static_cast<int>(L.lower.size());
    std::vector<subset_t> bases;
    // walk(i, norths, mask): extend a valid prefix of length i
    std::function<void(int, int, subset_t)> walk = [&](int i, int norths, subset_t mask) {
        if (i == len) {
            bases.push_back(mask);
            return;
        }
        for (int north = 0; north <= 1; ++north) {
            int h = norths + north;
            if (h < ncount(L.lower, i + 1) || h > ncount(L.upper, i + 1)) continue;
            walk(i + 1, h, north ? mask | (subset_t{1} << i) : mask);
        }
    };
    walk(0, 0, 0);
    return bases;
}

}  // namespace

SuiteResult parsetree_suite(uint64_t seed, int instances) {
    SuiteResult out{"parsetree", {}, true};
    Lcg rng(seed);
    for (int i = 0; i < instances; ++i) {
        // alternate sizes so at least half the draws admit the brute check
        Instance inst = gen_latticepath(rng, i % 2 == 0 ? 12 : 14);
        const auto& L = std::get<LatticePathPresentation>(inst);
        int len = static_cast<int>(L.lower.size());
        MatroidOracle M = to_oracle(inst);
        IndependenceTable T = materialize(M);

        int maxcount = 0;
        for (const auto& sc : staircases(L))
            maxcount = std::max(maxcount, static_cast<int>(sc.vertices.size()));
        int lambda = (maxcount + 3) / 3;  // least value with 3*lambda-1 >= maxcount

        SuiteRow row;
        row.instance = instance_hash(inst);
        row.lambda = lambda;
        row.note = "P=" + L.lower + " Q=" + L.upper;
        LatticeParse parse = lattice_parse(L, lambda);
        SetSystem fam = accepted_family(parse.automaton, parse.tree, parse.phi, M.ground);
        std::set<subset_t> accepted(fam.independents.begin(), fam.independents.end());
        bool ok = true;
        for (subset_t X = 0; X <= T.full(); ++X) {
            if (T(X) != (accepted.count(X) > 0)) {
                ok = false;
                row.note += " automaton disagrees at X=" + ids_str(M.ground, X);
                break;
            }
            if (X == T.full()) break;
        }
        if (len <= 12) {
            auto bases = brute_path_bases(L);
            for (subset_t X = 0; ok; ++X) {
                bool brute = false;
                for (subset_t b : bases)
                    if ((X & ~b) == 0) {
                        brute = true;
                        break;
                    }
                if (T(X) != brute) {
                    ok = false;
                    row.note += " oracle disagrees with path enumeration at X=" +
                                ids_str(M.ground, X);
                }
                if (X == T.full()) break;
            }
            row.note += " paths=" + std::to_string(bases.size());
        }
        row.pass = ok;
        out.add(std::move(row));
    }
    return out;
}

// ----------------------------------------------------------- width suite ---

SuiteResult width_suite(uint64_t seed, int lattice_instances) {
    SuiteResult out{"width", {}, true};

    {
        SuiteRow row;
        Instance inst = UniformInstance{2, 4};
        row.instance = instance_hash(inst);
        int bw = branch_width(to_oracle(inst));
        row.pass = bw == 3;
        row.note = "branch-width of the rank-2 four-element uniform matroid = " +
                   std::to_string(bw) + " (want 3)";
        out.add(std::move(row));
    }
    {
        SuiteRow row;
        Instance inst = LatticePathPresentation{"EENN", "NNEE"};
        row.instance = instance_hash(inst);
        int bw = branch_width(to_oracle(inst));
        row.pass = bw == 3;
        row.note = "branch-width of the full 2x2 lattice square = " + std::to_string(bw) +
                   " (want 3)";
        out.add(std::move(row));
    }
    {
        SuiteRow row;
        Instance inst = SimpleGraph{3, {{0, 1}, {0, 2}, {1, 2}}};
        row.instance = instance_hash(inst);
        int bw = branch_width(to_oracle(inst));
        row.pass = bw <= 4;
        row.note = "branch-width of the triangle sparse-paving matroid = " + std::to_string(bw) +
                   " (want <= 4)";
        out.add(std::move(row));
    }

    Lcg rng(seed);
    for (int i = 0; i < lattice_instances; ++i) {
        Instance inst = gen_latticepath(rng, 10);
        const auto& L = std::get<LatticePathPresentation>(inst);
        SuiteRow row;
        row.instance = instance_hash(inst);
        int bw = branch_width(to_oracle(inst));
        row.lambda = bw;
        row.pass = staircase_bound_check(L, bw);
        int maxcount = 0;
        for (const auto& sc : staircases(L))
            maxcount = std::max(maxcount, static_cast<int>(sc.vertices.size()));
        row.note = "P=" + L.lower + " Q=" + L.upper + " bw=" + std::to_string(bw) +
                   " max-staircase-vertices=" + std::to_string(maxcount) +
                   " cap=" + std::to_string(3 * bw - 1);
        out.add(std::move(row));
    }
    return out;
}

// ----------------------------------------- certificate compatibility suite -

SuiteResult ftcompat_suite(uint64_t seed, int instances) {
    SuiteResult out{"ftcompat", {}, true};
    Lcg rng(seed);
    for (int i = 0; i < instances; ++i) {
        BipartitePresentation g = gen_ftransversal(rng, 8, 12);
        Instance inst = g;
        MatroidOracle M = to_oracle(inst);
        IndependenceTable T = materialize(M);
        subset_t full = T.full();
        subset_t U = random_proper_subset(rng, full);
        subset_t Q = full & ~U;
        auto S = ft_boundary_cover(g, U);

        SuiteRow row;
        row.instance = instance_hash(inst);
        row.lambda = connectivity(table_oracle(T), U);
        row.note = "U=" + ids_str(M.ground, U) + " cover=" + std::to_string(S.size());

        std::map<subset_t, FTSignatureSet> sx, sy;
        for (subset_t X : all_subsets(U))
            if (T(X)) sx.emplace(X, ft_signature(g, S, U, true, X));
        for (subset_t Y : all_subsets(Q))
            if (T(Y)) sy.emplace(Y, ft_signature(g, S, Q, false, Y));

        bool ok = true;
        for (const auto& [X, sigx] : sx) {
            for (const auto& [Y, sigy] : sy) {
                bool want = T(X | Y);
                bool got = ft_compatible_pair_exists(sigx, sigy);
                if (want != got) {
                    ok = false;
                    row.note += " mismatch at X=" + ids_str(M.ground, X) +
                                " Y=" + ids_str(M.ground, Y) + " independent=" +
                                (want ? "yes" : "no") + " compatible-pair=" + (got ? "yes" : "no");
                    break;
                }
            }
            if (!ok) break;
        }
        row.pass = ok;
        out.add(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------- minors suite ---

namespace {

bool oracles_agree(const MatroidOracle& a, const MatroidOracle& b, std::string& why) {
    if (!(a.ground == b.ground)) {
        why = "ground sets differ";
        return false;
    }
    for (subset_t X = 0;; ++X) {
        if (a.indep(X) != b.indep(X)) {
            why = "independence differs at X=" + ids_str(a.ground, X);
            return false;
        }
        if (X == a.ground.full()) break;
    }
    return true;
}

}  // namespace

SuiteResult minors_suite(uint64_t seed, int instances) {
    SuiteResult out{"minors", {}, true};
    Lcg rng(seed);
    const std::vector<std::string> groups = {"z2", "z3", "s3", "int"};
    for (int i = 0; i < instances; ++i) {
        bool bic = i % 2 == 0;
        Instance inst;
        if (bic) {
            inst = gen_bicircular(rng, 9);
        } else {
            inst = gen_gain(rng, group_by_name(groups[static_cast<std::size_t>(i / 2) % 4]), 9);
        }
        MatroidOracle M = to_oracle(inst);
        SuiteRow row;
        row.instance = instance_hash(inst);
        row.note = bic ? "bicircular" : "gain";
        bool ok = true;
        std::string why;
        for (int id : M.ground.ids) {
            subset_t emask = M.ground.mask_of({id});
            for (MinorOp op : {MinorOp::remove, MinorOp::contract}) {
                MatroidOracle graph_level =
                    bic ? bicircular_oracle(
                              bicircular_minor(std::get<BicircularPresentation>(inst), id, op))
                        : gain_oracle(gain_minor(std::get<GainGraph>(inst), id, op));
                MatroidOracle core_level = op == MinorOp::remove ? minor_of(M, 0, emask)
                                                                 : minor_of(M, emask, 0);
                if (!oracles_agree(graph_level, core_level, why)) {
                    ok = false;
                    row.note += std::string(" ") +
                                (op == MinorOp::remove ? "delete" : "contract") + " of edge " +
                                std::to_string(id) + ": " + why;
                    break;
                }
            }
            if (!ok) break;
        }
        row.pass = ok;
        out.add(std::move(row));
    }
    return out;
}

// --------------------------------------------------- constructions suite ---

namespace {

SuiteRow axiom_row(const MatroidOracle& M, const std::string& what) {
    SuiteRow row;
    AxiomCheck c = verify_axioms(to_set_system(materialize(M)));
    row.pass = c.ok;
    row.note = what + (c.ok ? " satisfies the independence axioms"
                            : " violates the independence axioms: " + c.witness);
    return row;
}

// circuits of size <= 3 (with rank 3 these are exactly the non-spanning ones)
std::vector<subset_t> small_circuits(const IndependenceTable& T) {
    std::vector<subset_t> out;
    for (subset_t X = 1;; ++X) {
        if (popcount(X) <= 3 && !T(X)) {
            bool minimal = true;
            for (subset_t e = X; e; e &= e - 1)
                if (!T(X & ~lowbit(e))) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(X);
        }
        if (X == T.full()) break;
    }
    return out;
}

void push_triples(const GroundSet& g, const std::vector<int>& ids, std::set<subset_t>& into) {
    int k = static_cast<int>(ids.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c) into.insert(g.mask_of({ids[a], ids[b], ids[c]}));
}

}  // namespace

SuiteResult constructions_suite() {
    SuiteResult out{"constructions", {}, true};

    for (int n = 3; n <= 5; ++n) {
        Instance inst = complete_graph(n);
        SuiteRow row = axiom_row(to_oracle(inst),
                                 "vertex-edge matroid of the complete graph on " +
                                     std::to_string(n) + " vertices");
        row.instance = instance_hash(inst);
        out.add(std::move(row));
    }

    for (int q = 2; q <= 3; ++q) {
        ObjectConstruction oc = object_construction(q);
        Instance inst = oc.graph;
        MatroidOracle M = gain_oracle(oc.graph);
        SuiteRow row = axiom_row(M, "sum-set gain graph q=" + std::to_string(q));
        row.instance = instance_hash(inst);
        out.add(std::move(row));

        // non-spanning circuits are exactly the parallel-class triples plus
        // the balanced triangles {a_i, b_j, a_i+b_j}
        IndependenceTable T = materialize(M);
        std::vector<subset_t> got = small_circuits(T);
        std::set<subset_t> want;
        push_triples(M.ground, oc.a_ids, want);
        push_triples(M.ground, oc.b_ids, want);
        std::vector<int> all_sums;
        for (const auto& per_i : oc.sum_ids)
            all_sums.insert(all_sums.end(), per_i.begin(), per_i.end());
        push_triples(M.ground, all_sums, want);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                want.insert(M.ground.mask_of({oc.a_ids[static_cast<std::size_t>(i)],
                                              oc.b_ids[static_cast<std::size_t>(j)],
                                              oc.sum_ids[static_cast<std::size_t>(i)]
                                                        [static_cast<std::size_t>(j)]}));
        SuiteRow circ;
        circ.instance = instance_hash(inst);
        std::set<subset_t> gotset(got.begin(), got.end());
        circ.pass = gotset == want;
        circ.note = "q=" + std::to_string(q) +
                    " non-spanning circuits: got=" + std::to_string(gotset.size()) +
                    " want=" + std::to_string(want.size());
        if (!circ.pass) {
            for (subset_t m : gotset)
                if (!want.count(m)) {
                    circ.note += " unexpected circuit " + ids_str(M.ground, m);
                    break;
                }
            for (subset_t m : want)
                if (!gotset.count(m)) {
                    circ.note += " missing circuit " + ids_str(M.ground, m);
                    break;
                }
        }
        out.add(std::move(circ));
    }

    {
        // principal extensions of the rank-2 three-element uniform matroid,
        // one per flat; extending along the full ground set adds a free
        // element: the result is the rank-2 four-element uniform matroid
        MatroidOracle M = uniform_oracle(2, 3);
        for (subset_t F = 0;; ++F) {
            if (closure_of(M, F) == F) {
                MatroidOracle ext = principal_extension(M, F);
                SuiteRow row = axiom_row(ext, "principal extension of U(2,3) along flat " +
                                                  ids_str(M.ground, F));
                if (F == M.ground.full()) {
                    IndependenceTable a = materialize(ext), b = materialize(uniform_oracle(2, 4));
                    row.pass = row.pass && a.indep == b.indep;
                    row.note += "; agrees with U(2,4)";
                }
                out.add(std::move(row));
            }
            if (F == M.ground.full()) break;
        }
    }

    {
        // principal extensions of strict gammoids stay strict gammoids:
        // extending along cl(X) matches adding a vertex with arcs into cl(X)
        Lcg rng(12345);
        for (int i = 0; i < 10; ++i) {
            GammoidPresentation P = gen_gammoid(rng, 9);
            Instance inst = P;
            MatroidOracle M = strict_gammoid_oracle(P);
            subset_t X = M.ground.full() ? rng.below(M.ground.full() + 1) : 0;
            subset_t F = closure_of(M, X);
            MatroidOracle ext = principal_extension(M, F);
            SuiteRow row = axiom_row(ext, "principal extension of a strict gammoid on " +
                                              std::to_string(P.nvertices) + " vertices");
            row.instance = instance_hash(inst);
            MatroidOracle arc = strict_gammoid_oracle(gammoid_extension(P, M.ground.ids_of(F)));
            std::string why;
            if (!oracles_agree(ext, arc, why)) {
                row.pass = false;
                row.note += "; arc-addition form disagrees: " + why;
            } else {
                row.note += "; matches the arc-addition form";
            }
            out.add(std::move(row));
        }
    }

    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            SuiteRow row;
            SumSets s = raunch_sets(m, n);
            std::set<long long> sums(s.sums.begin(), s.sums.end());
            bool ok = static_cast<int>(sums.size()) == m * n;
            for (long long a : s.a) ok = ok && !sums.count(a);
            for (long long b : s.b) ok = ok && !sums.count(b);
            row.pass = ok;
            row.note = "sum sets m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                       std::to_string(sums.size()) + " distinct sums avoiding the generators";
            out.add(std::move(row));
        }
    }
    return out;
}

// ------------------------------------------------------- courcelle suite ---

namespace {

// true iff {a, b, c} is a circuit (dependent, every 2-subset independent)
bool is_triangle_circuit(const MatroidOracle& M, subset_t t) {
    if (M.indep(t)) return false;
    for (subset_t e = t; e; e &= e - 1)
        if (!M.indep(t & ~lowbit(e))) return false;
    return true;
}

}  // namespace

SuiteResult courcelle_suite() {
    SuiteResult out{"courcelle", {}, true};
    for (int nv = 1; nv <= 5; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) pairs.push_back({i, j});
        SuiteRow row;
        row.note = std::to_string(nv) + " vertices";
        int graphs = 0;
        bool ok = true;
        for (subset_t pick = 0; pick < (subset_t{1} << pairs.size()) && ok; ++pick) {
            SimpleGraph G;
            G.nvertices = nv;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (pick >> k & 1u) G.edges.push_back(pairs[k]);
            ++graphs;
            BicircularPresentation B = courcelle_gadget(G);
            MatroidOracle M = bicircular_oracle(B);
            int m = static_cast<int>(G.edges.size());

            for (int v = 0; v < nv && ok; ++v) {
                subset_t pair = M.ground.mask_of(gadget_vertex_pair(G, v));
                if (M.indep(pair) || !M.indep(lowbit(pair)) || !M.indep(pair & ~lowbit(pair))) {
                    ok = false;
                    row.note += " loop pair at vertex " + std::to_string(v) +
                                " is not a 2-element circuit (graph mask " +
                                std::to_string(pick) + ")";
                }
            }
            for (int k = 0; k < m && ok; ++k) {
                subset_t triple = M.ground.mask_of(gadget_incidence_triple(G, k));
                if (!is_triangle_circuit(M, triple)) {
                    ok = false;
                    row.note += " incidence triple of edge " + std::to_string(k) +
                                " is not a circuit (graph mask " + std::to_string(pick) + ")";
                }
            }
            // incidence(e, v) <=> some 3-circuit holds e and a loop at v
            for (int k = 0; k < m && ok; ++k) {
                for (int v = 0; v < nv && ok; ++v) {
                    bool incident = G.edges[static_cast<std::size_t>(k)].first == v ||
                                    G.edges[static_cast<std::size_t>(k)].second == v;
                    bool found = false;
                    subset_t kmask = M.ground.mask_of({k});
                    for (int loop : gadget_vertex_pair(G, v)) {
                        subset_t lmask = M.ground.mask_of({loop});
                        for (int x : M.ground.ids) {
                            subset_t xmask = M.ground.mask_of({x});
                            if (xmask == kmask || xmask == lmask) continue;
                            if (is_triangle_circuit(M, kmask | lmask | xmask)) {
                                found = true;
                                break;
                            }
                        }
                        if (found) break;
                    }
                    if (found != incident) {
                        ok = false;
                        row.note += " edge " + std::to_string(k) + " vertex " + std::to_string(v) +
                                    ": incidence=" + (incident ? "yes" : "no") + " but 3-circuit " +
                                    (found ? "found" : "absent") + " (graph mask " +
                                    std::to_string(pick) + ")";
                    }
                }
            }
        }
        row.pass = ok;
        row.note += " graphs=" + std::to_string(graphs);
        out.add(std::move(row));
    }
    return out;
}

// ------------------------------------------------------ nu-identity suite --

SuiteResult nu_identity_suite(uint64_t seed, int pairs) {
    SuiteResult out{"nu", {}, true};
    Lcg rng(seed);
    for (int i = 0; i < pairs; ++i) {
        Multigraph g = gen_multigraph(rng, 1, 8, 1, 12);
        Instance inst = BicircularPresentation{g, {}};
        subset_t full = (subset_t{1} << g.edges.size()) - 1;
        subset_t L = rng.below(full + 1);
        subset_t R = full & ~L;
        int shared = 0;
        for (int v = 0; v < g.nvertices; ++v) {
            bool in_l = false, in_r = false;
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].u != v && g.edges[e].v != v) continue;
                ((L >> e & 1u) ? in_l : in_r) = true;
            }
            if (in_l && in_r) ++shared;
        }
        int lhs = nu_excess(g, full);
        int rhs = nu_excess(g, L) + nu_excess(g, R) + shared;
        SuiteRow row;
        row.instance = instance_hash(inst);
        row.pass = lhs == rhs;
        row.note = "edges=" + std::to_string(g.edges.size()) + " split=" + std::to_string(popcount(L)) +
                   "+" + std::to_string(popcount(R)) + " shared=" + std::to_string(shared);
        if (!row.pass)
            row.note += " identity fails: " + std::to_string(lhs) + " vs " + std::to_string(rhs);
        out.add(std::move(row));
    }
    return out;
}

// --------------------------------------------------------------- dispatch --

std::vector<std::string> suite_names() {
    return {"refinement", "bounds",        "parsetree", "width", "ftcompat",
            "minors",     "constructions", "courcelle", "nu"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
    if (name == "refinement") return refinement_suite(seed);
    if (name == "bounds") return bounds_suite(seed);
    if (name == "parsetree") return parsetree_suite(seed);
    if (name == "width") return width_suite(seed);
    if (name == "ftcompat") return ftcompat_suite(seed);
    if (name == "minors") return minors_suite(seed);
    if (name == "constructions") return constructions_suite();
    if (name == "courcelle") return courcelle_suite();
    if (name == "nu") return nu_identity_suite(seed);
    throw std::domain_error("unknown suite '" + name + "'");
}

}  // namespace matdec
