#include "tgr/cnf.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tgr/errors.hpp"

namespace tgr {

namespace {

std::string clause_text(const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    return s + ")";
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(tok.c_str(), &end, 10);
    return *end == '\0';
}

}  // namespace

void validate_cnf(const CnfFormula& f) {
    if (f.num_vars < 0) throw ValidationError("negative variable count");
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        if (c.empty()) throw ValidationError("clause " + std::to_string(i + 1) + " is empty");
        for (int lit : c) {
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw ValidationError("clause " + std::to_string(i + 1) + " has literal " +
                                      std::to_string(lit) + " outside 1.." +
                                      std::to_string(f.num_vars));
            for (int other : c)
                if (other == -lit)
                    throw ValidationError("clause " + std::to_string(i + 1) + " " +
                                          clause_text(c) + " contains variable " +
                                          std::to_string(std::abs(lit)) + " in both polarities");
        }
    }
}

void validate_cnf_both_polarities(const CnfFormula& f) {
    validate_cnf(f);
    std::vector<char> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (const auto& c : f.clauses)
        for (int lit : c) (lit > 0 ? pos : neg)[std::abs(lit)] = 1;
    for (int x = 1; x <= f.num_vars; ++x) {
        if (!pos[x])
            throw ValidationError("variable " + std::to_string(x) + " never occurs positively");
        if (!neg[x])
            throw ValidationError("variable " + std::to_string(x) + " never occurs negatively");
    }
}

bool literal_true(int lit, const Assignment& a) {
    const bool v = a.at(static_cast<std::size_t>(std::abs(lit) - 1));
    return lit > 0 ? v : !v;
}

std::optional<std::size_t> first_violated_clause(const CnfFormula& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw ValidationError("assignment has " + std::to_string(a.size()) +
                              " variables, formula has " + std::to_string(f.num_vars));
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        bool sat = false;
        for (int lit : f.clauses[i]) sat = sat || literal_true(lit, a);
        if (!sat) return i;
    }
    return std::nullopt;
}

void require_satisfies(const CnfFormula& f, const Assignment& a) {
    if (auto bad = first_violated_clause(f, a))
        throw ValidationError("assignment violates clause " + std::to_string(*bad + 1) + " " +
                              clause_text(f.clauses[*bad]));
}

CnfFormula read_dimacs(std::istream& in, const std::string& name) {
    CnfFormula f;
    bool header = false;
    long long declared = 0;
    std::vector<int> current;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
        if (tok == "p") {
            std::string kind, v, c;
            if (header) throw ParseError(name, lineno, tok, "duplicate header");
            if (!(ls >> kind) || kind != "cnf")
                throw ParseError(name, lineno, kind, "expected 'p cnf V C'");
            long long nv = 0, nc = 0;
            if (!(ls >> v) || !parse_int(v, nv) || nv < 0)
                throw ParseError(name, lineno, v, "bad variable count");
            if (!(ls >> c) || !parse_int(c, nc) || nc < 0)
                throw ParseError(name, lineno, c, "bad clause count");
            f.num_vars = static_cast<int>(nv);
            declared = nc;
            header = true;
            continue;
        }
        if (!header) throw ParseError(name, lineno, tok, "clause before 'p cnf' header");
        do {
            long long lit = 0;
            if (!parse_int(tok, lit)) throw ParseError(name, lineno, tok, "expected integer literal");
            if (lit == 0) {
                if (current.empty()) throw ParseError(name, lineno, tok, "empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::llabs(lit) > f.num_vars)
                    throw ParseError(name, lineno, tok, "literal exceeds declared variable count");
                current.push_back(static_cast<int>(lit));
            }
        } while (ls >> tok);
    }
    if (!header) throw ParseError(name, lineno, "", "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(name, lineno, "", "last clause not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw ParseError(name, lineno, std::to_string(f.clauses.size()),
                         "clause count differs from header (" + std::to_string(declared) + ")");
    return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
}

Assignment read_assignment(std::istream& in, int num_vars, const std::string& name) {
    Assignment a(static_cast<std::size_t>(num_vars), false);
    std::vector<char> seen(static_cast<std::size_t>(num_vars) + 1, 0);
    std::string line, tok;
    std::size_t lineno = 0;
    bool done = false;
    while (!done && std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        while (ls >> tok) {
            if (tok[0] == 'c' || tok[0] == '#') break;
            if (tok == "v" || tok == "s" || tok == "SAT" || tok == "SATISFIABLE") continue;
            long long lit = 0;
            if (!parse_int(tok, lit)) throw ParseError(name, lineno, tok, "expected signed literal");
            if (lit == 0) {
                done = true;
                break;
            }
            if (std::llabs(lit) > num_vars)
                throw ParseError(name, lineno, tok, "literal exceeds variable count");
            const auto x = static_cast<std::size_t>(std::llabs(lit));
            if (seen[x]) throw ParseError(name, lineno, tok, "variable assigned twice");
            seen[x] = 1;
            a[x - 1] = lit > 0;
        }
    }
    return a;
}

void write_assignment(std::ostream& out, const Assignment& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        out << (a[i] ? "" : "-") << (i + 1) << ' ';
    out << "0\n";
}

}  // namespace tgr
