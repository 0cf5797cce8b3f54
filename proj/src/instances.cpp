#include "matdec/instances.hpp"

#include <sstream>

#include "matdec/errors.hpp"
#include "matdec/uniform.hpp"

namespace matdec {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long long to_ll(const std::string& tok, int lineno) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(lineno, "expected a number, got '" + tok + "'");
    }
}

int to_int(const std::string& tok, int lineno) {
    long long v = to_ll(tok, lineno);
    if (v < INT32_MIN || v > INT32_MAX) throw parse_error(lineno, "number out of range: " + tok);
    return static_cast<int>(v);
}

// sequential reader with 1-based line numbers
struct Reader {
    std::vector<std::string> lines;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    int lineno() const { return static_cast<int>(pos) + 1; }
    const std::string& peek() const { return lines[pos]; }
    std::string next() {
        if (done()) throw parse_error(lineno(), "unexpected end of file");
        return lines[pos++];
    }
};

std::vector<int> id_list_after(const std::string& line, const std::string& prefix, int lineno) {
    if (line.rfind(prefix, 0) != 0)
        throw parse_error(lineno, "expected a '" + prefix + "' line, got '" + line + "'");
    std::vector<int> ids;
    for (const auto& t : tokens_of(line.substr(prefix.size()))) ids.push_back(to_int(t, lineno));
    return ids;
}

// ------------------------------------------------------------- parsers -----

UniformInstance parse_uniform(Reader& r) {
    int ln = r.lineno();
    auto toks = tokens_of(r.next());
    UniformInstance u;
    if (toks.size() == 2 && toks[0].rfind("r=", 0) == 0 && toks[1].rfind("n=", 0) == 0) {
        u.r = to_int(toks[0].substr(2), ln);
        u.n = to_int(toks[1].substr(2), ln);
    } else if (toks.size() == 2) {
        u.r = to_int(toks[0], ln);
        u.n = to_int(toks[1], ln);
    } else {
        throw parse_error(ln, "expected 'r=<rank> n=<size>'");
    }
    if (u.r < 0 || u.n < 0 || u.r > u.n) throw parse_error(ln, "need 0 <= r <= n");
    return u;
}

LinearRep parse_linear(Reader& r) {
    int ln = r.lineno();
    auto toks = tokens_of(r.next());
    if (toks.size() != 2 || toks[0] != "p") throw parse_error(ln, "expected 'p <prime>'");
    LinearRep rep;
    rep.p = to_int(toks[1], ln);
    std::vector<std::vector<int>> rows;
    while (!r.done()) {
        int rowln = r.lineno();
        auto row = tokens_of(r.next());
        if (row.empty()) throw parse_error(rowln, "empty matrix row");
        std::vector<int> vals;
        for (const auto& t : row) vals.push_back(to_int(t, rowln));
        if (!rows.empty() && vals.size() != rows.front().size())
            throw parse_error(rowln, "matrix rows have unequal lengths");
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw parse_error(r.lineno(), "matrix needs at least one row");
    rep.rows = static_cast<int>(rows.size());
    rep.cols.assign(rows.front().size(), std::vector<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.front().size(); ++j) rep.cols[j][i] = rows[i][j];
    return rep;
}

BipartitePresentation parse_ftransversal(Reader& r) {
    BipartitePresentation g;
    int ln = r.lineno();
    g.a_side = id_list_after(r.next(), "A:", ln);
    ln = r.lineno();
    g.b_side = id_list_after(r.next(), "B:", ln);
    while (!r.done()) {
        ln = r.lineno();
        auto toks = tokens_of(r.next());
        if (toks.size() != 3 || toks[0] != "edge") throw parse_error(ln, "expected 'edge a b'");
        g.edges.push_back({to_int(toks[1], ln), to_int(toks[2], ln)});
    }
    return g;
}

LatticePathPresentation parse_latticepath(Reader& r) {
    LatticePathPresentation L;
    int ln = r.lineno();
    std::string p = r.next();
    if (p.rfind("P=", 0) != 0) throw parse_error(ln, "expected 'P=<steps>'");
    L.lower = p.substr(2);
    ln = r.lineno();
    std::string q = r.next();
    if (q.rfind("Q=", 0) != 0) throw parse_error(ln, "expected 'Q=<steps>'");
    L.upper = q.substr(2);
    for (const std::string* s : {&L.lower, &L.upper})
        for (char c : *s)
            if (c != 'N' && c != 'E') throw parse_error(ln, "paths use only N and E steps");
    return L;
}

Multigraph parse_multigraph_edges(Reader& r, bool with_ids, std::vector<long long>* gains) {
    int ln = r.lineno();
    auto toks = tokens_of(r.next());
    if (toks.size() != 2 || toks[0] != "vertices") throw parse_error(ln, "expected 'vertices <n>'");
    Multigraph g;
    g.nvertices = to_int(toks[1], ln);
    int next_id = 0;
    while (!r.done() && tokens_of(r.peek()).size() > 0 && tokens_of(r.peek())[0] == "edge") {
        ln = r.lineno();
        auto et = tokens_of(r.next());
        std::size_t want = 1 + (with_ids ? 1 : 0) + 2 + (gains ? 1 : 0);
        if (et.size() != want) throw parse_error(ln, "malformed edge line");
        std::size_t k = 1;
        int id = with_ids ? to_int(et[k++], ln) : next_id++;
        int u = to_int(et[k++], ln);
        int v = to_int(et[k++], ln);
        g.edges.push_back({id, u, v});
        if (gains) gains->push_back(to_ll(et[k++], ln));
    }
    return g;
}

BicircularPresentation parse_bicircular(Reader& r) {
    BicircularPresentation b;
    b.g = parse_multigraph_edges(r, true, nullptr);
    int ln = r.lineno();
    b.balanced_loops = id_list_after(r.next(), "balancedloops:", ln);
    if (!r.done()) throw parse_error(r.lineno(), "unexpected trailing line");
    return b;
}

GainGraph parse_gaingraph(Reader& r) {
    GainGraph g;
    int ln = r.lineno();
    auto toks = tokens_of(r.next());
    if (toks.size() >= 2 && toks[0] == "group" && toks[1] == "integers" && toks.size() == 2) {
        g.group = Group::integers();
    } else if (toks.size() == 3 && toks[0] == "group" && toks[1] == "table") {
        int k = to_int(toks[2], ln);
        std::vector<std::vector<int>> table;
        for (int i = 0; i < k; ++i) {
            int rowln = r.lineno();
            auto row = tokens_of(r.next());
            if (static_cast<int>(row.size()) != k)
                throw parse_error(rowln, "group table row needs " + std::to_string(k) + " entries");
            std::vector<int> vals;
            for (const auto& t : row) vals.push_back(to_int(t, rowln));
            table.push_back(std::move(vals));
        }
        try {
            g.group = Group::from_table(std::move(table));
        } catch (const std::domain_error& e) {
            throw parse_error(ln, std::string("bad group table: ") + e.what());
        }
    } else {
        throw parse_error(ln, "expected 'group integers' or 'group table <k>'");
    }
    g.g = parse_multigraph_edges(r, true, &g.gains);
    if (!r.done()) throw parse_error(r.lineno(), "unexpected trailing line");
    return g;
}

GammoidPresentation parse_gammoid(Reader& r) {
    int ln = r.lineno();
    auto toks = tokens_of(r.next());
    if (toks.size() != 2 || toks[0] != "vertices") throw parse_error(ln, "expected 'vertices <n>'");
    GammoidPresentation p;
    p.nvertices = to_int(toks[1], ln);
    while (!r.done() && tokens_of(r.peek()).size() > 0 && tokens_of(r.peek())[0] == "arc") {
        ln = r.lineno();
        auto at = tokens_of(r.next());
        if (at.size() != 3) throw parse_error(ln, "expected 'arc u v'");
        p.arcs.push_back({to_int(at[1], ln), to_int(at[2], ln)});
    }
    ln = r.lineno();
    p.targets = id_list_after(r.next(), "targets:", ln);
    if (!r.done()) throw parse_error(r.lineno(), "unexpected trailing line");
    return p;
}

SimpleGraph parse_sparsepaving(Reader& r) {
    int ln = r.lineno();
    auto toks = tokens_of(r.next());
    if (toks.size() != 2 || toks[0] != "vertices") throw parse_error(ln, "expected 'vertices <n>'");
    SimpleGraph g;
    g.nvertices = to_int(toks[1], ln);
    while (!r.done()) {
        ln = r.lineno();
        auto et = tokens_of(r.next());
        if (et.size() != 3 || et[0] != "edge") throw parse_error(ln, "expected 'edge u v'");
        g.edges.push_back({to_int(et[1], ln), to_int(et[2], ln)});
    }
    return g;
}

// ------------------------------------------------------------- writers -----

std::string id_list_line(const std::string& prefix, const std::vector<int>& ids) {
    std::string s = prefix;
    for (int id : ids) s += " " + std::to_string(id);
    return s + "\n";
}

std::string write_multigraph_edges(const Multigraph& g, const std::vector<long long>* gains) {
    std::string s = "vertices " + std::to_string(g.nvertices) + "\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        s += "edge " + std::to_string(e.id) + " " + std::to_string(e.u) + " " +
             std::to_string(e.v);
        if (gains) s += " " + std::to_string((*gains)[i]);
        s += "\n";
    }
    return s;
}

struct Writer {
    std::string operator()(const UniformInstance& u) const {
        return "uniform\nr=" + std::to_string(u.r) + " n=" + std::to_string(u.n) + "\n";
    }
    std::string operator()(const LinearRep& rep) const {
        std::string s = "linear\np " + std::to_string(rep.p) + "\n";
        for (int i = 0; i < rep.rows; ++i) {
            for (std::size_t j = 0; j < rep.cols.size(); ++j)
                s += (j ? " " : "") + std::to_string(rep.cols[j][static_cast<std::size_t>(i)]);
            s += "\n";
        }
        return s;
    }
    std::string operator()(const BipartitePresentation& g) const {
        std::string s = "ftransversal\n" + id_list_line("A:", g.a_side) +
                        id_list_line("B:", g.b_side);
        for (auto [a, b] : g.edges)
            s += "edge " + std::to_string(a) + " " + std::to_string(b) + "\n";
        return s;
    }
    std::string operator()(const LatticePathPresentation& L) const {
        return "latticepath\nP=" + L.lower + "\nQ=" + L.upper + "\n";
    }
    std::string operator()(const BicircularPresentation& b) const {
        return "bicircular\n" + write_multigraph_edges(b.g, nullptr) +
               id_list_line("balancedloops:", b.balanced_loops);
    }
    std::string operator()(const GainGraph& g) const {
        std::string s = "gaingraph\n";
        if (g.group.kind == Group::Kind::integers) {
            s += "group integers\n";
        } else {
            s += "group table " + std::to_string(g.group.mul.size()) + "\n";
            for (const auto& row : g.group.mul) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    s += (j ? " " : "") + std::to_string(row[j]);
                s += "\n";
            }
        }
        return s + write_multigraph_edges(g.g, &g.gains);
    }
    std::string operator()(const GammoidPresentation& p) const {
        std::string s = "gammoid\nvertices " + std::to_string(p.nvertices) + "\n";
        for (auto [u, v] : p.arcs) s += "arc " + std::to_string(u) + " " + std::to_string(v) + "\n";
        return s + id_list_line("targets:", p.targets);
    }
    std::string operator()(const SimpleGraph& g) const {
        std::string s = "sparsepaving\nvertices " + std::to_string(g.nvertices) + "\n";
        for (auto [u, v] : g.edges)
            s += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
        return s;
    }
};

struct OracleOf {
    MatroidOracle operator()(const UniformInstance& u) const { return uniform_oracle(u.r, u.n); }
    MatroidOracle operator()(const LinearRep& rep) const { return linear_oracle(rep); }
    MatroidOracle operator()(const BipartitePresentation& g) const {
        return fundamental_transversal_oracle(g);
    }
    MatroidOracle operator()(const LatticePathPresentation& L) const {
        return lattice_path_oracle(L);
    }
    MatroidOracle operator()(const BicircularPresentation& b) const { return bicircular_oracle(b); }
    MatroidOracle operator()(const GainGraph& g) const { return gain_oracle(g); }
    MatroidOracle operator()(const GammoidPresentation& p) const {
        return strict_gammoid_oracle(p);
    }
    MatroidOracle operator()(const SimpleGraph& g) const { return m_of_graph(g); }
};

struct KindOf {
    std::string operator()(const UniformInstance&) const { return "uniform"; }
    std::string operator()(const LinearRep&) const { return "linear"; }
    std::string operator()(const BipartitePresentation&) const { return "ftransversal"; }
    std::string operator()(const LatticePathPresentation&) const { return "latticepath"; }
    std::string operator()(const BicircularPresentation&) const { return "bicircular"; }
    std::string operator()(const GainGraph&) const { return "gaingraph"; }
    std::string operator()(const GammoidPresentation&) const { return "gammoid"; }
    std::string operator()(const SimpleGraph&) const { return "sparsepaving"; }
};

}  // namespace

std::string kind_of(const Instance& inst) { return std::visit(KindOf{}, inst); }

Instance parse_instance(const std::string& text) {
    Reader r{split_lines(text)};
    if (r.done()) throw parse_error(1, "empty input");
    std::string kind = r.next();
    if (kind == "uniform") return parse_uniform(r);
    if (kind == "linear") return parse_linear(r);
    if (kind == "ftransversal") return parse_ftransversal(r);
    if (kind == "latticepath") return parse_latticepath(r);
    if (kind == "bicircular") return parse_bicircular(r);
    if (kind == "gaingraph") return parse_gaingraph(r);
    if (kind == "gammoid") return parse_gammoid(r);
    if (kind == "sparsepaving") return parse_sparsepaving(r);
    throw parse_error(1, "unknown instance kind '" + kind + "'");
}

std::string write_instance(const Instance& inst) { return std::visit(Writer{}, inst); }

MatroidOracle to_oracle(const Instance& inst) { return std::visit(OracleOf{}, inst); }

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

uint64_t instance_hash(const Instance& inst) { return fnv1a64(write_instance(inst)); }

}  // namespace matdec
