#pragma once

#include "pivotlab/lp.hpp"

namespace pivotlab {

/// Basis-transformed system: x_B = A_B^{-1} b - Abar_N x_N with reduced
/// costs cbar_N = c_N - A_N' (A_B')^{-1} c_B and objective c_B' A_B^{-1} b.
struct SimplexDictionary {
    Basis basis;
    Vec x_basic;          // m, aligned with basis.basic
    Vec reduced_costs;    // n - m, aligned with basis.nonbasic
    Mat nonbasic_matrix;  // m x (n - m)
    Rational objective;

    bool feasible() const;  // x_basic >= 0 componentwise
    bool optimal() const;   // reduced_costs >= 0 componentwise
};

/// Throws SINGULAR_BASIS.
SimplexDictionary build_dictionary(const StandardFormLP& lp, const Basis& basis);

}  // namespace pivotlab
