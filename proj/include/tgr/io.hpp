#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tgr/cnf.hpp"
#include "tgr/dist.hpp"
#include "tgr/hardness.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

// Text formats. Every reader throws ParseError naming `name`, the line and the
// offending token. `#` starts a comment that runs to the end of the line.
//
//   .tg   "n period", then "u v t1,t2,..." per edge (u < v, labels strictly
//         increasing, within [1, period] when periodic)
//   .dm   "n", then n rows of n entries (integer or inf)
//   .rm   like .dm; off-diagonal entries may also be "a..b" or "a..inf"
//   .g    "n", then "u v" per edge
//   .mcc  "n k", then the n class ids, then "u v" per edge
//   .clq  the k clique vertices, one per class in class order
//
// Writers emit edges in lexicographic order so output is byte-stable.

TemporalGraph read_tg(std::istream& in, const std::string& name = "<tg>");
void write_tg(std::ostream& out, const TemporalGraph& g);

DistanceMatrix read_dm(std::istream& in, const std::string& name = "<dm>");
void write_dm(std::ostream& out, const DistanceMatrix& d);

RangeMatrix read_rm(std::istream& in, const std::string& name = "<rm>");
void write_rm(std::ostream& out, const RangeMatrix& d);

StaticGraph read_graph(std::istream& in, const std::string& name = "<g>");
void write_graph(std::ostream& out, const StaticGraph& g);

// The planted clique, if any, is not part of the format.
MccInstance read_mcc(std::istream& in, const std::string& name = "<mcc>");
void write_mcc(std::ostream& out, const MccInstance& inst);

std::vector<Vertex> read_clique(std::istream& in, const std::string& name = "<clq>");
void write_clique(std::ostream& out, const std::vector<Vertex>& clique);

// Path-based wrappers; a file that cannot be opened is a ParseError at line 0.
TemporalGraph load_tg(const std::string& path);
DistanceMatrix load_dm(const std::string& path);
RangeMatrix load_rm(const std::string& path);
StaticGraph load_graph(const std::string& path);
MccInstance load_mcc(const std::string& path);
std::vector<Vertex> load_clique(const std::string& path);
CnfFormula load_cnf(const std::string& path);
Assignment load_assignment(const std::string& path, int num_vars);

}  // namespace tgr
