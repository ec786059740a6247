#pragma once

#include "pivotlab/pivot_rules.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pivotlab {

struct StepRecord {
    long iteration = 0;
    Basis basis_before;
    int entering = -1;
    int leaving = -1;
    Rational objective_before;
    Rational objective_after;
    Rational delta_d;
    Rational delta_l;
    Rational step_length;           // value of the entering variable after the pivot
    bool solution_changed = false;  // step_length > 0
};

enum class SolveStatus { Optimal, Unbounded, CycleDetected, IterationLimit };

const char* to_string(SolveStatus status);

struct SolveTrace {
    SolveStatus status = SolveStatus::Optimal;
    std::vector<StepRecord> steps;
    BasicSolution initial_solution;
    BasicSolution final_solution;
    long t_tilde = 0;       // solution-changing steps
    long distinct_bfs = 0;  // distinct solution vectors visited, x^0 included
};

/// Minimum-ratio test over rows with positive entering coefficient. Ties go
/// to the smallest leaving column index. nullopt certifies an unbounded ray
/// (the entering column of Abar_N is <= 0 componentwise).
std::optional<std::pair<int, Rational>> ratio_test(const SimplexDictionary& d, int entering);

struct PivotOutcome {
    enum class Kind { Pivoted, Optimal, Unbounded };
    Kind kind = Kind::Optimal;
    Basis next_basis;           // Pivoted
    StepRecord step;            // Pivoted
    int unbounded_column = -1;  // Unbounded: entering column with Abar <= 0
};

/// One pivot under `rule` from a feasible basis: selector, ratio test, basis
/// exchange. The dictionary is rebuilt from scratch (no factorization
/// updates).
PivotOutcome pivot_step(const StandardFormLP& lp, const Basis& basis, PivotRule rule,
                        const Vec& norms_sq);

/// C(n, m) + 1, saturated to LONG_MAX: an a priori cap on visitable bases.
long default_iteration_cap(const StandardFormLP& lp);

/// Pivot loop with full tracing. Detects cycling by exact repetition of a
/// visited basis. max_iterations = 0 selects the default cap.
/// Throws INFEASIBLE_START when the initial basis is not feasible.
SolveTrace solve(const StandardFormLP& lp, const Basis& initial_basis, PivotRule rule,
                 long max_iterations = 0);

}  // namespace pivotlab
