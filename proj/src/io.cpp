#include "tgr/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "tgr/errors.hpp"

namespace tgr {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
class LineReader {
public:
    LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

    bool next(Line& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++lineno_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            out.number = lineno_;
            out.tokens.clear();
            for (std::string tok; ls >> tok;) out.tokens.push_back(tok);
            if (!out.tokens.empty()) return true;
        }
        return false;
    }

    Line require(const std::string& what) {
        Line l;
        if (!next(l)) fail(lineno_, "", "unexpected end of file, expected " + what);
        return l;
    }

    void expect_end() {
        Line l;
        if (next(l)) fail(l.number, l.tokens.front(), "unexpected trailing content");
    }

    [[noreturn]] void fail(std::size_t line, const std::string& tok, const std::string& what) const {
        throw ParseError(name_, line, tok, what);
    }

    const std::string& name() const { return name_; }

private:
    std::istream& in_;
    std::string name_;
    std::size_t lineno_ = 0;
};

bool to_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (*b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

long long int_token(const LineReader& r, const Line& l, std::size_t i, const std::string& what,
                    long long min_value) {
    long long v = 0;
    if (!to_int(l.tokens[i], v)) r.fail(l.number, l.tokens[i], "expected integer " + what);
    if (v < min_value)
        r.fail(l.number, l.tokens[i], what + " must be >= " + std::to_string(min_value));
    return v;
}

void arity(const LineReader& r, const Line& l, std::size_t count, const std::string& what) {
    if (l.tokens.size() != count)
        r.fail(l.number, l.tokens.size() > count ? l.tokens[count] : l.tokens.back(),
               "expected " + what);
}

int read_dimension(LineReader& r) {
    Line l = r.require("dimension line 'n'");
    arity(r, l, 1, "a single dimension 'n'");
    return static_cast<int>(int_token(r, l, 0, "dimension", 0));
}

Vertex vertex_token(const LineReader& r, const Line& l, std::size_t i, int n) {
    const long long v = int_token(r, l, i, "vertex", 1);
    if (v > n) r.fail(l.number, l.tokens[i], "vertex exceeds n=" + std::to_string(n));
    return static_cast<Vertex>(v);
}

Dist dist_token(const LineReader& r, const Line& l, std::size_t i) {
    if (l.tokens[i] == "inf") return kInfinity;
    return Dist(int_token(r, l, i, "entry", 0));
}

// Applies a setter, turning a ValidationError into a ParseError at the token.
template <class F>
void checked(const LineReader& r, const Line& l, std::size_t i, F&& f) {
    try {
        f();
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        r.fail(l.number, l.tokens[i], e.what());
    }
}

template <class T, class F>
T load(const std::string& path, F&& reader) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, path, "cannot open file");
    return reader(in, path);
}

}  // namespace

TemporalGraph read_tg(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    Line head = r.require("header 'n period'");
    arity(r, head, 2, "header 'n period'");
    const int n = static_cast<int>(int_token(r, head, 0, "vertex count", 0));
    const Time period = int_token(r, head, 1, "period", 0);
    TemporalGraph g(n, period);
    std::set<EdgeKey> seen;
    Line l;
    while (r.next(l)) {
        arity(r, l, 3, "'u v t1,t2,...'");
        const Vertex u = vertex_token(r, l, 0, n);
        const Vertex v = vertex_token(r, l, 1, n);
        if (u >= v) r.fail(l.number, l.tokens[1], "edge endpoints must satisfy u < v");
        if (!seen.insert({u, v}).second) r.fail(l.number, l.tokens[0], "edge listed twice");
        const std::string& list = l.tokens[2];
        Time prev = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = list.find(',', start);
            const std::string_view part =
                std::string_view(list).substr(start, comma == std::string::npos ? std::string::npos
                                                                                 : comma - start);
            long long t = 0;
            if (!to_int(part, t) || t < 1)
                r.fail(l.number, std::string(part), "labels must be positive integers");
            if (t <= prev) r.fail(l.number, std::string(part), "labels must be strictly increasing");
            if (period > 0 && t > period)
                r.fail(l.number, std::string(part),
                       "label exceeds period " + std::to_string(period));
            g.add_label(u, v, t);
            prev = t;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return g;
}

void write_tg(std::ostream& out, const TemporalGraph& g) {
    out << g.size() << ' ' << g.period() << '\n';
    for (const auto& [e, ls] : g.edges()) {
        out << e.u << ' ' << e.v << ' ';
        for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? "," : "") << ls[i];
        out << '\n';
    }
}

DistanceMatrix read_dm(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    const int n = read_dimension(r);
    DistanceMatrix d(n);
    for (Vertex u = 1; u <= n; ++u) {
        Line l = r.require("matrix row " + std::to_string(u));
        arity(r, l, static_cast<std::size_t>(n), std::to_string(n) + " entries per row");
        for (Vertex v = 1; v <= n; ++v) {
            const Dist x = dist_token(r, l, v - 1);
            checked(r, l, v - 1, [&] { d.set(u, v, x); });
        }
    }
    r.expect_end();
    return d;
}

void write_dm(std::ostream& out, const DistanceMatrix& d) {
    out << d.size() << '\n';
    for (Vertex u = 1; u <= d.size(); ++u) {
        for (Vertex v = 1; v <= d.size(); ++v) out << (v > 1 ? " " : "") << d(u, v);
        out << '\n';
    }
}

RangeMatrix read_rm(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    const int n = read_dimension(r);
    RangeMatrix d(n);
    for (Vertex u = 1; u <= n; ++u) {
        Line l = r.require("matrix row " + std::to_string(u));
        arity(r, l, static_cast<std::size_t>(n), std::to_string(n) + " entries per row");
        for (Vertex v = 1; v <= n; ++v) {
            const std::string& tok = l.tokens[v - 1];
            Range rg;
            if (auto dots = tok.find(".."); dots != std::string::npos) {
                Line part{l.number, {tok.substr(0, dots), tok.substr(dots + 2)}};
                if (part.tokens[0] == "inf")
                    r.fail(l.number, tok, "range lower end must be finite");
                rg.lo = dist_token(r, part, 0);
                rg.hi = dist_token(r, part, 1);
            } else {
                rg.lo = rg.hi = dist_token(r, l, v - 1);
            }
            checked(r, l, v - 1, [&] { d.set(u, v, rg); });
        }
    }
    r.expect_end();
    return d;
}

void write_rm(std::ostream& out, const RangeMatrix& d) {
    out << d.size() << '\n';
    for (Vertex u = 1; u <= d.size(); ++u) {
        for (Vertex v = 1; v <= d.size(); ++v) out << (v > 1 ? " " : "") << to_string(d(u, v));
        out << '\n';
    }
}

StaticGraph read_graph(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    const int n = read_dimension(r);
    StaticGraph g(n);
    Line l;
    while (r.next(l)) {
        arity(r, l, 2, "'u v'");
        const Vertex u = vertex_token(r, l, 0, n);
        const Vertex v = vertex_token(r, l, 1, n);
        if (u == v) r.fail(l.number, l.tokens[1], "self-loop");
        if (g.has_edge(u, v)) r.fail(l.number, l.tokens[0], "edge listed twice");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph(std::ostream& out, const StaticGraph& g) {
    out << g.size() << '\n';
    for (const EdgeKey& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

MccInstance read_mcc(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    Line head = r.require("header 'n k'");
    arity(r, head, 2, "header 'n k'");
    MccInstance inst;
    inst.n = static_cast<int>(int_token(r, head, 0, "vertex count", 0));
    inst.k = static_cast<int>(int_token(r, head, 1, "class count", 1));
    Line classes = r.require("class ids");
    arity(r, classes, static_cast<std::size_t>(inst.n), std::to_string(inst.n) + " class ids");
    for (std::size_t i = 0; i < classes.tokens.size(); ++i) {
        const long long c = int_token(r, classes, i, "class id", 1);
        if (c > inst.k) r.fail(classes.number, classes.tokens[i], "class id exceeds k");
        inst.color.push_back(static_cast<int>(c));
    }
    std::set<EdgeKey> seen;
    Line l;
    while (r.next(l)) {
        arity(r, l, 2, "'u v'");
        const Vertex u = vertex_token(r, l, 0, inst.n);
        const Vertex v = vertex_token(r, l, 1, inst.n);
        if (u == v) r.fail(l.number, l.tokens[1], "self-loop");
        if (!seen.insert(EdgeKey::of(u, v)).second)
            r.fail(l.number, l.tokens[0], "edge listed twice");
    }
    inst.edges.assign(seen.begin(), seen.end());
    try {
        check_mcc(inst);
    } catch (const ValidationError& e) {
        r.fail(head.number, head.tokens[0], e.what());
    }
    return inst;
}

void write_mcc(std::ostream& out, const MccInstance& inst) {
    out << inst.n << ' ' << inst.k << '\n';
    for (int v = 0; v < inst.n; ++v) out << (v ? " " : "") << inst.color[v];
    out << '\n';
    for (const EdgeKey& e : inst.edges) out << e.u << ' ' << e.v << '\n';
}

std::vector<Vertex> read_clique(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    std::vector<Vertex> out;
    Line l;
    while (r.next(l))
        for (std::size_t i = 0; i < l.tokens.size(); ++i)
            out.push_back(static_cast<Vertex>(int_token(r, l, i, "vertex", 1)));
    if (out.empty()) r.fail(0, "", "clique file lists no vertices");
    return out;
}

void write_clique(std::ostream& out, const std::vector<Vertex>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) out << (i ? " " : "") << clique[i];
    out << '\n';
}

TemporalGraph load_tg(const std::string& path) {
    return load<TemporalGraph>(path, [](std::istream& in, const std::string& p) { return read_tg(in, p); });
}
DistanceMatrix load_dm(const std::string& path) {
    return load<DistanceMatrix>(path, [](std::istream& in, const std::string& p) { return read_dm(in, p); });
}
RangeMatrix load_rm(const std::string& path) {
    return load<RangeMatrix>(path, [](std::istream& in, const std::string& p) { return read_rm(in, p); });
}
StaticGraph load_graph(const std::string& path) {
    return load<StaticGraph>(path, [](std::istream& in, const std::string& p) { return read_graph(in, p); });
}
MccInstance load_mcc(const std::string& path) {
    return load<MccInstance>(path, [](std::istream& in, const std::string& p) { return read_mcc(in, p); });
}
std::vector<Vertex> load_clique(const std::string& path) {
    return load<std::vector<Vertex>>(
        path, [](std::istream& in, const std::string& p) { return read_clique(in, p); });
}
CnfFormula load_cnf(const std::string& path) {
    return load<CnfFormula>(path, [](std::istream& in, const std::string& p) { return read_dimacs(in, p); });
}
Assignment load_assignment(const std::string& path, int num_vars) {
    return load<Assignment>(path, [num_vars](std::istream& in, const std::string& p) {
        return read_assignment(in, num_vars, p);
    });
}

}  // namespace tgr
