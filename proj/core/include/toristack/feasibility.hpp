#pragma once

// Exact rational feasibility of { r : A r = b, r >= 0 } by Fourier-Motzkin
// elimination. Every answer carries exact evidence: a witness r when the
// system is feasible, a Farkas vector y (y^T A >= 0, y^T b < 0) when not.

#include "toristack/matrix.hpp"

namespace toristack {

struct FeasibilityOutcome {
  bool feasible = false;
  RatVector witness;  ///< length cols(A) when feasible
  RatVector farkas;   ///< length rows(A) when infeasible
};

FeasibilityOutcome solve_nonnegative(const RatMatrix& a, const RatVector& b);

/// Feasibility of { A r = b, r > 0 } (every coordinate strictly positive),
/// decided through the homogenised system A r' - t b = 0, r' >= 1, t >= 1.
/// On infeasibility the Farkas vector passes verify_strict_farkas.
FeasibilityOutcome solve_strictly_positive(const RatMatrix& a, const RatVector& b);

bool verify_witness(const RatMatrix& a, const RatVector& b, const RatVector& r, bool strict);
bool verify_farkas(const RatMatrix& a, const RatVector& b, const RatVector& y);
/// Certificate that no strictly positive solution exists:
/// y^T A >= 0, y^T b <= 0 and y^T b < sum_j (y^T A)_j.
bool verify_strict_farkas(const RatMatrix& a, const RatVector& b, const RatVector& y);

}  // namespace toristack
