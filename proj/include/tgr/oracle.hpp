#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "tgr/cnf.hpp"
#include "tgr/dist.hpp"
#include "tgr/metrics.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

enum class Verdict { Yes, No, BudgetExceeded };

std::string to_string(Verdict v);

struct SearchBudget {
    int max_vertices = 6;
    std::size_t max_universe = 40;
    std::uint64_t max_nodes = 200'000'000;
    std::chrono::milliseconds time_cap{std::chrono::minutes(10)};
    // ranged oracle: number of determinations tried
    std::uint64_t max_determinations = 1'000'000;
    // Skip labels that fail the (locally re-derived) compatibility test.
    // Sound because every temporal edge of a realization passes it.
    bool prune_compat = true;
};

struct OracleResult {
    Verdict verdict = Verdict::No;
    std::optional<TemporalGraph> certificate;
    std::uint64_t nodes = 0;
};

// Depth-first search over label subsets per edge (edges in lexicographic
// order, subsets in increasing binary order), labels drawn from the distinct
// finite entries of d. Prunes with two monotonicity bounds: labels only ever
// lower foremost values.
OracleResult oracle_foremost_realizable(const DistanceMatrix& d, Semantics sem = Semantics::Strict,
                                        const SearchBudget& budget = {});

// Same search with at most one label per edge, strict semantics.
OracleResult oracle_single_label_foremost(const DistanceMatrix& d, const SearchBudget& budget = {});

struct RangedOracleResult {
    Verdict verdict = Verdict::No;
    std::optional<DistanceMatrix> determination;
    std::optional<TemporalGraph> certificate;
    std::uint64_t determinations = 0;
};

// Tries every determination, each through oracle_foremost_realizable. An
// entry [a, inf] ranges over a..(largest finite lower bound + k) and inf.
RangedOracleResult oracle_ranged(const RangeMatrix& d, const SearchBudget& budget = {});

// First satisfying assignment with variable 1 most significant and false
// before true. Throws ValidationError above 20 variables.
std::optional<Assignment> sat_solve_brute(const CnfFormula& f);

}  // namespace tgr
