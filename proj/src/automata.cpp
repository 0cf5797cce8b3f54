#include "matdec/automata.hpp"

#include <algorithm>

#include "matdec/errors.hpp"

namespace matdec {

void validate(const SigmaTree& t) {
    int n = static_cast<int>(t.nodes.size());
    if (n == 0) throw std::domain_error("tree has no nodes");
    if (t.root < 0 || t.root >= n) throw std::domain_error("root out of range");
    if (t.nodes[static_cast<std::size_t>(t.root)].parent != -1)
        throw std::domain_error("root has a parent");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack = {t.root};
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(v)]++) throw std::domain_error("tree revisits a node");
        ++visited;
        const auto& nd = t.nodes[static_cast<std::size_t>(v)];
        if (nd.label.empty()) throw std::domain_error("unlabeled node");
        if ((nd.left < 0) != (nd.right < 0))
            throw std::domain_error("node must have zero or two children");
        for (int c : {nd.left, nd.right}) {
            if (c < 0) continue;
            if (c >= n) throw std::domain_error("child out of range");
            if (t.nodes[static_cast<std::size_t>(c)].parent != v)
                throw std::domain_error("child/parent mismatch");
            stack.push_back(c);
        }
    }
    if (visited != n) throw std::domain_error("tree is disconnected");
}

void validate(const TreeAutomaton& A) {
    if (A.nstates < 0) throw std::domain_error("negative state count");
    auto check_states = [&](const std::set<int>& s) {
        for (int q : s)
            if (q < 0 || q >= A.nstates) throw std::domain_error("state out of range");
    };
    check_states(A.accepting);
    for (const auto& [label, image] : A.delta0) {
        if (!A.alphabet.count(label)) throw std::domain_error("delta0 label outside alphabet");
        check_states(image);
    }
    for (const auto& [key, image] : A.delta2) {
        if (!A.alphabet.count(std::get<0>(key)))
            throw std::domain_error("delta2 label outside alphabet");
        if (std::get<1>(key) < 0 || std::get<1>(key) >= A.nstates || std::get<2>(key) < 0 ||
            std::get<2>(key) >= A.nstates)
            throw std::domain_error("delta2 key state out of range");
        check_states(image);
    }
}

Run run(const TreeAutomaton& A, const SigmaTree& t) {
    validate(A);
    validate(t);
    for (const auto& nd : t.nodes)
        if (!A.alphabet.count(nd.label))
            throw std::domain_error("tree label outside the automaton alphabet: " + nd.label);

    Run r;
    r.states.resize(t.nodes.size());
    auto eval = [&](auto&& self, int v) -> void {
        const auto& nd = t.nodes[static_cast<std::size_t>(v)];
        if (nd.left < 0) {
            auto it = A.delta0.find(nd.label);
            if (it != A.delta0.end()) r.states[static_cast<std::size_t>(v)] = it->second;
            return;
        }
        self(self, nd.left);
        self(self, nd.right);
        const auto& ls = r.states[static_cast<std::size_t>(nd.left)];
        const auto& rs = r.states[static_cast<std::size_t>(nd.right)];
        std::set<int> out;
        for (int ql : ls)
            for (int qr : rs) {
                auto it = A.delta2.find({nd.label, ql, qr});
                if (it == A.delta2.end()) {  // any undefined pair empties the node
                    r.states[static_cast<std::size_t>(v)].clear();
                    return;
                }
                out.insert(it->second.begin(), it->second.end());
            }
        r.states[static_cast<std::size_t>(v)] = std::move(out);
    };
    eval(eval, t.root);
    return r;
}

bool accepts(const TreeAutomaton& A, const SigmaTree& t) {
    Run r = run(A, t);
    for (int q : r.states[static_cast<std::size_t>(t.root)])
        if (A.accepting.count(q)) return true;
    return false;
}

SigmaTree encode(const SigmaTree& t, const std::vector<int>& phi, const GroundSet& ground,
                 subset_t Y) {
    validate(t);
    if (static_cast<int>(phi.size()) != ground.size())
        throw std::domain_error("phi size differs from ground size");
    std::set<int> leaves;
    for (std::size_t v = 0; v < t.nodes.size(); ++v)
        if (t.is_leaf(static_cast<int>(v))) leaves.insert(static_cast<int>(v));
    std::set<int> used;
    for (int v : phi) {
        if (!leaves.count(v)) throw std::domain_error("phi target is not a leaf");
        if (!used.insert(v).second) throw std::domain_error("phi repeats a leaf");
    }
    if (used.size() != leaves.size()) throw std::domain_error("phi misses a leaf");

    SigmaTree out = t;
    for (int i = 0; i < ground.size(); ++i) {
        auto& nd = out.nodes[static_cast<std::size_t>(phi[static_cast<std::size_t>(i)])];
        nd.label += (Y >> i & 1u) ? "#1" : "#0";
    }
    return out;
}

SetSystem accepted_family(const TreeAutomaton& A, const SigmaTree& t, const std::vector<int>& phi,
                          const GroundSet& ground) {
    if (ground.size() > kSimClassCap)
        throw size_guard_error("accepted-family scan limited to " + std::to_string(kSimClassCap) +
                               " elements, got " + std::to_string(ground.size()));
    SetSystem sys;
    sys.ground = ground;
    for (subset_t Y = 0;; ++Y) {
        if (accepts(A, encode(t, phi, ground, Y))) sys.independents.push_back(Y);
        if (Y == ground.full()) break;
    }
    return sys;
}

std::string to_text(const SigmaTree& t) {
    std::string s = "tree nodes=" + std::to_string(t.nodes.size()) +
                    " root=" + std::to_string(t.root) + "\n";
    for (std::size_t v = 0; v < t.nodes.size(); ++v) {
        const auto& nd = t.nodes[v];
        s += "node " + std::to_string(v) + " left=" + std::to_string(nd.left) +
             " right=" + std::to_string(nd.right) + " label=" + nd.label + "\n";
    }
    return s;
}

std::string to_text(const TreeAutomaton& A) {
    auto states = [](const std::set<int>& qs) {
        std::string s;
        for (int q : qs) s += " " + std::to_string(q);
        return s.empty() ? std::string(" -") : s;
    };
    std::string s = "automaton states=" + std::to_string(A.nstates) + "\n";
    s += "accepting" + states(A.accepting) + "\n";
    for (const auto& a : A.alphabet) s += "char " + a + "\n";
    for (const auto& [label, image] : A.delta0) s += "d0 " + label + " ->" + states(image) + "\n";
    for (const auto& [key, image] : A.delta2)
        s += "d2 " + std::get<0>(key) + " " + std::to_string(std::get<1>(key)) + " " +
             std::to_string(std::get<2>(key)) + " ->" + states(image) + "\n";
    return s;
}

}  // namespace matdec
