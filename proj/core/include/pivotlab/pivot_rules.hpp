#pragma once

#include "pivotlab/dictionary.hpp"

#include <optional>
#include <string_view>

namespace pivotlab {

enum class PivotRule { Dantzig, Bland, SteepestEdge, LargestDistance };

constexpr PivotRule kAllRules[] = {PivotRule::Dantzig, PivotRule::Bland,
                                   PivotRule::SteepestEdge, PivotRule::LargestDistance};

const char* to_string(PivotRule rule);
std::optional<PivotRule> pivot_rule_from_string(std::string_view name);

// Entering-variable selectors. Candidates are the nonbasic columns with
// negative reduced cost; nullopt means the dictionary is optimal. Ties break
// toward the smallest column index. Norm-based comparisons are done on
// squared quantities so selection stays exact.

std::optional<int> dantzig_select(const SimplexDictionary& d);
std::optional<int> bland_select(const SimplexDictionary& d);
std::optional<int> steepest_edge_select(const SimplexDictionary& d);

/// Largest unit violation of the dual constraint: argmin cbar_j / ||a_j||
/// over negative-cost candidates. norms_sq indexes the original columns of
/// A. Throws ZERO_COLUMN when a candidate column has zero norm.
std::optional<int> largest_distance_select(const SimplexDictionary& d, const Vec& norms_sq);

std::optional<int> select_entering(PivotRule rule, const SimplexDictionary& d,
                                   const Vec& norms_sq);

/// Per-dictionary decrease rates, stored as nonnegative magnitudes:
/// delta_d = -min cbar_j, delta_l = -cbar at the largest-distance choice.
/// delta_d >= delta_l > 0 on any non-optimal feasible dictionary.
struct DeltaPair {
    Rational delta_d;
    Rational delta_l;
};

/// Throws OPTIMAL_DICTIONARY when no reduced cost is negative.
DeltaPair compute_deltas(const SimplexDictionary& d, const Vec& norms_sq);

}  // namespace pivotlab
