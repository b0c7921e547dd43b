#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tgr {

// Literal +i is variable i, -i its negation (1-based, DIMACS style).
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// assignment[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

// Literal range, no empty clause, no clause with both x and not-x.
void validate_cnf(const CnfFormula& f);
// Additionally every variable appears positively and negatively somewhere.
void validate_cnf_both_polarities(const CnfFormula& f);

bool literal_true(int lit, const Assignment& a);
// Index of the first clause falsified by a, if any.
std::optional<std::size_t> first_violated_clause(const CnfFormula& f, const Assignment& a);
// Throws ValidationError naming the violated clause.
void require_satisfies(const CnfFormula& f, const Assignment& a);

CnfFormula read_dimacs(std::istream& in, const std::string& name = "<cnf>");
void write_dimacs(std::ostream& out, const CnfFormula& f);

// Signed literals terminated by 0; unlisted variables default to false.
Assignment read_assignment(std::istream& in, int num_vars, const std::string& name = "<asg>");
void write_assignment(std::ostream& out, const Assignment& a);

}  // namespace tgr
