#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwnca/milp.hpp"

namespace rwnca {

enum class SolveStatus { optimal, infeasible, timeout };

const char* to_string(SolveStatus s);

struct SolveOptions {
    double time_limit_seconds = 0;  // 0: unlimited
    int threads = 1;                // search is single-threaded; kept for callers
    // Deterministic mode additionally extracts, among all optimal
    // assignments, the lexicographically smallest one in variable-creation
    // order (zero before one).
    bool deterministic = true;

    enum class Branching { creation_order, activity };
    Branching branching = Branching::activity;

    // Externally established lower bound on the objective (e.g. a cut
    // argument). Must be valid; used to stop as soon as it is attained.
    std::optional<Rational> objective_floor;

    // Blocks of variables that any solution permutes wholesale (same-length
    // sequences). Used for symmetry reduction during the value search; never
    // applied to the final reported assignment.
    std::vector<std::vector<VarId>> interchangeable_blocks;

    int64_t conflict_limit = 0;  // 0: unlimited (counts as timeout when hit)
};

struct SolveStats {
    int64_t conflicts = 0;
    int64_t decisions = 0;
    int64_t propagations = 0;
    int lsu_rounds = 0;
    double wall_seconds = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    Assignment assignment;  // complete when status != infeasible and an incumbent exists
    bool has_assignment = false;
    Rational objective;  // incumbent value when has_assignment
    Rational bound;      // proven lower bound; equals objective when optimal
    SolveStats stats;
};

// Exact minimization of a binary linear program by conflict-driven search
// with bound propagation on linear rows and solution-improving descent.
SolveResult solve(const MilpModel& m, const SolveOptions& opts = {});

struct LexResult {
    SolveStatus status = SolveStatus::infeasible;
    Assignment assignment;
    bool has_assignment = false;
    Rational primary_value;
    Rational secondary_value;
    SolveStats stats;
};

// Minimizes `primary`, pins its optimum with an equality row, then
// minimizes `secondary` under that pin.
LexResult solve_lexicographic(const MilpModel& m, const std::vector<LinTerm>& primary,
                              const std::vector<LinTerm>& secondary,
                              const SolveOptions& opts = {});

// Parses an external solver's "name value" listing into a complete
// assignment; unlisted variables default to 0.
Assignment import_solution(const MilpModel& m, const std::string& text);

}  // namespace rwnca
