#include "matdec/latticeparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace matdec {

namespace {
std::vector<int> prefix_norths(const std::string& path) {
    std::vector<int> t(path.size() + 1, 0);
    for (std::size_t i = 0; i < path.size(); ++i) t[i + 1] = t[i] + (path[i] == 'N');
    return t;
}
}  // namespace

std::vector<Staircase> staircases(const LatticePathPresentation& L) {
    validate(L);
    int len = static_cast<int>(L.lower.size());
    std::vector<int> np = prefix_norths(L.lower), nq = prefix_norths(L.upper);

    auto diagonal = [&](int c) {  // region vertices on x+y = c, top-left first
        std::vector<lattice_vertex> out;
        for (int y = nq[static_cast<std::size_t>(c)]; y >= np[static_cast<std::size_t>(c)]; --y)
            out.push_back({c - y, y});
        return out;
    };

    std::vector<Staircase> out;
    for (int k = 1; k <= len; ++k) {
        Staircase sc;
        auto in_next = [&](int y) {
            return y >= np[static_cast<std::size_t>(k)] && y <= nq[static_cast<std::size_t>(k)];
        };
        for (auto [x, y] : diagonal(k - 1)) {
            if (in_next(y + 1)) sc.edges.push_back({{x, y}, {x, y + 1}});  // north
            if (in_next(y)) sc.edges.push_back({{x, y}, {x + 1, y}});      // east
        }
        std::vector<lattice_vertex> verts;
        for (const auto& [a, b] : sc.edges) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end(), [](lattice_vertex a, lattice_vertex b) {
            return a.first - a.second < b.first - b.second;  // top-left first; no ties
        });
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        sc.vertices = std::move(verts);
        out.push_back(std::move(sc));
    }
    return out;
}

bool staircase_bound_check(const LatticePathPresentation& L, int lambda) {
    for (const Staircase& sc : staircases(L))
        if (static_cast<int>(sc.vertices.size()) > 3 * lambda - 1) return false;
    return true;
}

namespace {
int vertex_index(const Staircase& sc, lattice_vertex v) {
    for (std::size_t i = 0; i < sc.vertices.size(); ++i)
        if (sc.vertices[i] == v) return static_cast<int>(i);
    throw std::logic_error("vertex missing from its staircase");
}
}  // namespace

LatticeParse lattice_parse(const LatticePathPresentation& L, int lambda) {
    validate(L);
    if (lambda < 1) throw std::domain_error("lambda must be at least 1");
    int len = static_cast<int>(L.lower.size());
    std::vector<int> np = prefix_norths(L.lower), nq = prefix_norths(L.upper);
    std::vector<Staircase> sc = staircases(L);
    for (const Staircase& s : sc)
        if (static_cast<int>(s.vertices.size()) > 3 * lambda - 1)
            throw std::domain_error("staircase with " + std::to_string(s.vertices.size()) +
                                    " vertices exceeds the " + std::to_string(3 * lambda - 1) +
                                    " slots of lambda " + std::to_string(lambda));

    int npos = 3 * lambda - 1;
    int dep = npos, bit0 = npos + 1, bit1 = npos + 2;
    LatticeParse out;
    TreeAutomaton& A = out.automaton;
    A.nstates = npos + 3;
    for (int q = 0; q < npos; ++q) A.accepting.insert(q);

    // the greedy walk: a set element forces its step north, otherwise east
    // whenever the lower boundary allows; exceeding the upper boundary is
    // the dependence sink
    auto step = [&](int i, lattice_vertex v, bool member) -> int {  // -> dep or next-vertex state
        auto [x, y] = v;
        if (member || y < np[static_cast<std::size_t>(i)]) {
            ++y;
            if (y > nq[static_cast<std::size_t>(i)]) return dep;
        } else {
            ++x;
        }
        return vertex_index(sc[static_cast<std::size_t>(i - 1)], {x, y});
    };
    auto tgt_str = [&](int q) { return q == dep ? std::string("d") : "p" + std::to_string(q); };

    if (len == 1) {
        out.tree.nodes.push_back({-1, -1, -1, "start"});
        out.tree.root = 0;
        out.phi = {0};
        for (bool b : {false, true}) {
            std::string label = std::string("start#") + (b ? "1" : "0");
            A.alphabet.insert(label);
            A.delta0[label] = {step(1, {0, 0}, b)};
        }
        return out;
    }

    // caterpillar: leaves 0..len-1, chain nodes len..2*len-2, root at the end
    out.tree.nodes.resize(static_cast<std::size_t>(2 * len - 1));
    for (int i = 0; i < len; ++i) out.tree.nodes[static_cast<std::size_t>(i)].label = "x";
    out.phi.resize(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.phi[static_cast<std::size_t>(i)] = i;
    out.tree.root = 2 * len - 2;
    A.alphabet.insert("x#0");
    A.alphabet.insert("x#1");
    A.delta0["x#0"] = {bit0};
    A.delta0["x#1"] = {bit1};

    auto link = [&](int node, int l, int r) {
        out.tree.nodes[static_cast<std::size_t>(node)].left = l;
        out.tree.nodes[static_cast<std::size_t>(node)].right = r;
        out.tree.nodes[static_cast<std::size_t>(l)].parent = node;
        out.tree.nodes[static_cast<std::size_t>(r)].parent = node;
    };

    // u_1 consumes the first two elements from the origin
    {
        int u1 = len;
        link(u1, 0, 1);
        std::string label = "init:";
        std::vector<std::tuple<int, int, int>> entries;  // (bit a, bit b, target)
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                int mid = step(1, {0, 0}, a != 0);
                int fin = mid == dep
                              ? dep
                              : step(2, sc[0].vertices[static_cast<std::size_t>(mid)], b != 0);
                entries.push_back({a, b, fin});
                label += std::to_string(a) + std::to_string(b) + ">" + tgt_str(fin) + ";";
            }
        out.tree.nodes[static_cast<std::size_t>(u1)].label = label;
        A.alphabet.insert(label);
        for (auto [a, b, fin] : entries)
            A.delta2[{label, a ? bit1 : bit0, b ? bit1 : bit0}] = {fin};
    }

    // u_l (l >= 2) moves the walk from staircase l to staircase l+1
    for (int l = 2; l < len; ++l) {
        int ul = len + l - 1;
        link(ul, ul - 1, l);
        const Staircase& cur = sc[static_cast<std::size_t>(l - 1)];
        std::string label = "step:";
        std::vector<std::tuple<int, int, int>> entries;  // (position, bit, target)
        for (std::size_t j = 0; j < cur.vertices.size(); ++j) {
            auto [x, y] = cur.vertices[j];
            if (x + y != l) continue;  // walk states live on the far diagonal
            for (int b = 0; b <= 1; ++b) {
                int fin = step(l + 1, {x, y}, b != 0);
                entries.push_back({static_cast<int>(j), b, fin});
                label += std::to_string(j) + "." + std::to_string(b) + ">" + tgt_str(fin) + ";";
            }
        }
        out.tree.nodes[static_cast<std::size_t>(ul)].label = label;
        A.alphabet.insert(label);
        for (auto [j, b, fin] : entries) A.delta2[{label, j, b ? bit1 : bit0}] = {fin};
        for (int b = 0; b <= 1; ++b) A.delta2[{label, dep, b ? bit1 : bit0}] = {dep};
    }
    return out;
}

}  // namespace matdec
