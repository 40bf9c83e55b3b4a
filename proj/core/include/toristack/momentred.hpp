#pragma once

// Moment map data of the ker(beta-bar) action on C^m, in the coordinates
// r_j = |z_j|^2 / 2: mu(r) = iota* r, and the level sets restricted to
// coordinate subspaces.

#include "toristack/feasibility.hpp"
#include "toristack/polytope.hpp"

#include <optional>

namespace toristack {

struct MomentData {
  /// (m-d) x m, rows = saturated kernel basis of beta.
  RatMatrix iota_star;
  /// Level value, length m-d.
  RatVector xi;
  /// lambda_j = n_j * eta_j; xi = iota* lambda.
  RatVector level_point;

  std::size_t ambient_rank() const { return iota_star.cols(); }

  friend bool operator==(const MomentData&, const MomentData&) = default;
};

/// Throws InvalidInput when eta does not have one entry per ray.
MomentData moment_data(const StackyFan& sf, const RatVector& eta);
MomentData moment_data(const LabelledPolytope& p);

/// Moment data with a prescribed level value (no polytope behind it).
MomentData moment_data_at(const StackyFan& sf, RatVector xi);

struct FeasibilityResult {
  ZeroPattern pattern;
  bool feasible = false;
  /// Whether the question asked for r_j > 0 off the pattern.
  bool strict = false;
  /// Length m, zero on the pattern.
  RatVector witness;
  /// Length m-d: y with y^T A >= 0 > y^T xi (or the strict variant) for the
  /// columns A of iota* off the pattern.
  RatVector certificate;

  friend bool operator==(const FeasibilityResult&, const FeasibilityResult&) = default;
};

/// r >= 0, r_j = 0 on the pattern, iota* r = xi.
FeasibilityResult level_set_feasibility(const MomentData& md, const ZeroPattern& pattern);
/// The same with r_j > 0 off the pattern, i.e. points whose zero set is the
/// pattern exactly.
FeasibilityResult strict_level_set_feasibility(const MomentData& md, const ZeroPattern& pattern);

/// Re-checks a stored witness or certificate by substitution.
bool reverify(const MomentData& md, const FeasibilityResult& result);

struct RegularValueResult {
  bool regular = false;
  std::optional<ZeroPattern> offending;
  /// Every feasible pattern, size then lexicographic order.
  std::vector<ZeroPattern> feasible_patterns;
};

/// Regular iff iota* restricted to the nonvanishing coordinates has rank
/// m-d for every feasible pattern (locally free action on the level set).
RegularValueResult check_regular_value(const MomentData& md, const Fan& fan, std::size_t jobs = 1);

struct InclusionResult {
  bool holds = false;
  std::optional<ZeroPattern> violating;
  /// One result per minimal inadmissible pattern; infeasibility there covers
  /// every inadmissible pattern.
  std::vector<FeasibilityResult> evidence;
};

/// The level set lies in C^m_Sigma iff no inadmissible pattern is feasible.
InclusionResult level_set_in_Cm(const MomentData& md, const Fan& fan, std::size_t jobs = 1);

/// Feasible patterns by a breadth-first sweep; feasibility is closed under
/// subsets, so infeasible patterns are not extended.
std::vector<ZeroPattern> feasible_patterns(const MomentData& md, std::size_t jobs = 1);

}  // namespace toristack
