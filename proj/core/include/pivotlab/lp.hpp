#pragma once

#include "pivotlab/linalg.hpp"

#include <vector>

namespace pivotlab {

/// min c'x subject to Ax = b, x >= 0, with rank(A) = m < n.
struct StandardFormLP {
    Eigen::Index m = 0;
    Eigen::Index n = 0;
    Mat A;
    Vec b;
    Vec c;
};

/// Validates shapes and computes rank(A) exactly.
/// Throws DIMENSION_MISMATCH / RANK_DEFICIENT.
StandardFormLP make_lp(Mat a, Vec b, Vec c);

/// Entry j is sum_i a_ij^2. Squared norms stay rational, so norm-based
/// orderings never leave exact arithmetic.
Vec column_norms_squared(const StandardFormLP& lp);

/// Column index sets. Indices are 0-based in the API; serialized artifacts
/// and log output use the 1-based convention.
struct Basis {
    std::vector<int> basic;     // ascending
    std::vector<int> nonbasic;  // ascending complement

    /// Sorts, deduplicates-checks and completes the complement.
    static Basis from_basic(std::vector<int> basic, int n);

    bool operator==(const Basis& other) const = default;
};

struct BasicSolution {
    Vec x;
    Basis basis;
    bool feasible = false;
    bool degenerate = false;  // some basic variable is exactly 0
    Rational objective;
};

/// x_B = A_B^{-1} b, x_N = 0, solved exactly. Throws SINGULAR_BASIS.
BasicSolution basis_solve(const StandardFormLP& lp, const Basis& basis);

}  // namespace pivotlab
