#pragma once

// Comparison of the two quotient presentations of a labelled polytope,
// [level set / ker beta-bar] and [C^m_Sigma / H(beta)], with exact evidence
// for every check.

#include "toristack/momentred.hpp"

namespace toristack {

struct SplittingData {
  std::size_t free_rank = 0;
  IntVector torsion;
  /// m x l exponent rows of the positive part C_R = R^l inside H(beta).
  IntMatrix positive_exponents;
  /// Compact part ker(beta-bar), which must account for all the torsion and
  /// a torus of the same rank.
  FinAbGroup compact;
  bool consistent = false;

  friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

SplittingData check_splitting(const StackyFan& sf);

struct MuIndependence {
  bool independent = false;
  /// A with iota*_beta D = A iota*_0, D = diag(n).
  RatMatrix transition;
  bool kernel_rows_match = false;
  bool image_matches = false;
  /// Only checked when a level value is available.
  std::optional<bool> level_matches;

  friend bool operator==(const MuIndependence&, const MuIndependence&) = default;
};

/// Compares the moment map of the labelled fan with that of the trivially
/// labelled fan after the rescaling r -> D r. When eta is given the level
/// values are compared too.
MuIndependence check_mu_independence(const StackyFan& sf,
                                     const std::optional<RatVector>& eta = std::nullopt);

struct JacobianEvidence {
  ZeroPattern pattern;
  /// Strictly positive off the pattern; empty when none exists.
  RatVector witness;
  Rational determinant;
  bool nonsingular = false;

  friend bool operator==(const JacobianEvidence&, const JacobianEvidence&) = default;
};

struct M1Result {
  bool holds = false;
  std::vector<JacobianEvidence> evidence;

  friend bool operator==(const M1Result&, const M1Result&) = default;
};

/// Jacobian of the C_R action on the level equations at a point of each
/// feasible admissible stratum: J = iota* diag(2 r) E_free.
Rational scaling_jacobian(const MomentData& md, const IntMatrix& positive_exponents,
                          const RatVector& r);

M1Result check_M1_prime(const StackyFan& sf, const MomentData& md, std::size_t jobs = 1);

struct M2Result {
  bool holds = false;
  std::optional<ZeroPattern> failing;
  /// One strict feasibility result per admissible pattern.
  std::vector<FeasibilityResult> evidence;

  friend bool operator==(const M2Result&, const M2Result&) = default;
};

M2Result check_M2(const StackyFan& sf, const MomentData& md, std::size_t jobs = 1);

struct IsotropyRow {
  ZeroPattern pattern;
  /// Stabiliser in ker(beta-bar), from its presentation.
  FinAbGroup symplectic;
  /// Stabiliser in H(beta).
  FinAbGroup complex;
  /// Stabiliser read off beta directly, coker(beta_P^T).
  FinAbGroup direct;
  bool match = false;

  friend bool operator==(const IsotropyRow&, const IsotropyRow&) = default;
};

std::vector<IsotropyRow> isotropy_table(const StackyFan& sf, std::size_t jobs = 1);

struct MoritaCertificate {
  StackyFan stacky_fan;
  MomentData moment;
  DiagGroupPresentation H;
  DiagGroupPresentation kerbar;
  bool presentations_agree = false;
  SplittingData splitting;
  MuIndependence mu_independence;
  RegularValueResult regular_value;
  InclusionResult level_in_V;
  M1Result m1_prime;
  M2Result m2;
  std::vector<IsotropyRow> isotropy;
  bool isotropy_match = false;
  bool verdict = false;
};

struct CertifyOptions {
  std::size_t jobs = 1;
};

MoritaCertificate morita_certificate(const LabelledPolytope& p, CertifyOptions options = {});
MoritaCertificate morita_certificate(const StackyFan& sf, const RatVector& eta,
                                     CertifyOptions options = {});

/// Re-checks the stored evidence by substitution without rerunning the
/// searches. Returns the list of problems found (empty when sound).
std::vector<std::string> reverify(const MoritaCertificate& cert);

}  // namespace toristack
