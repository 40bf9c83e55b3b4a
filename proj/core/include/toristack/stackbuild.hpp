#pragma once

// Group presentations attached to a stacky fan: H(beta) acting on C^m_Sigma,
// ker(beta-bar) acting on the level set, their isotropy groups, the local
// charts N(sigma) and the finite extension Gamma.

#include "toristack/exactalg.hpp"
#include "toristack/fan.hpp"

namespace toristack {

/// A fan with a choice of lattice generators n_j * u_j on its rays.
struct StackyFan {
  Fan fan;
  IntVector labels;
  /// d x m, column j = labels[j] * rays[j].
  IntMatrix beta;

  /// Builds beta from the rays and labels. Throws InvalidInput when the
  /// label count does not match the ray count or a label is < 1.
  static StackyFan make(Fan fan, IntVector labels);

  StackyFan with_trivial_labels() const;
  std::size_t dim() const { return fan.dim; }
  std::size_t ray_count() const { return fan.ray_count(); }

  friend bool operator==(const StackyFan&, const StackyFan&) = default;
};

/// Fan validation plus the stacky conditions (labels, finite cokernel).
ValidationReport validate_stacky_fan(const StackyFan& sf, FanValidationOptions options = {});

enum class GroupFlavor { algebraic, compact };

std::string to_string(GroupFlavor f);

/// A subgroup of the rank-m diagonal group, (C*)^m or (R/Z)^m, given as the
/// image of (free part) x (+)_i Z/torsion_i. Coordinate j of the image of
/// (t, a) is prod_k t_k^{E_jk} * prod_i zeta_i^{a_i E_j,free+i}, with zeta_i a
/// primitive torsion_i-th root of unity.
struct DiagGroupPresentation {
  GroupFlavor flavor = GroupFlavor::algebraic;
  std::size_t ambient_rank = 0;
  std::size_t free_rank = 0;
  IntVector torsion;
  /// ambient_rank x (free_rank + torsion.size()); free generators first.
  IntMatrix exponents;

  FinAbGroup group() const { return {free_rank, torsion}; }

  friend bool operator==(const DiagGroupPresentation&, const DiagGroupPresentation&) = default;
};

/// Same subgroup data regardless of flavor.
bool same_data(const DiagGroupPresentation& a, const DiagGroupPresentation& b);

/// Injectivity of the embedding: the characters e_j restricted to the group
/// generate its whole character group.
bool is_injective(const DiagGroupPresentation& g);

/// Hermite basis (rows) of the characters of the ambient torus that are
/// trivial on the subgroup. Two presentations describe the same subgroup iff
/// their annihilators coincide.
IntMatrix annihilator(const DiagGroupPresentation& g);

/// Canonical presentation of the subgroup whose annihilator is spanned by
/// the given rows: exponents read off the deterministic SNF of the Hermite
/// basis. Equal lattices give identical presentations.
DiagGroupPresentation canonical_presentation(const IntMatrix& annihilator_rows,
                                             std::size_t ambient_rank, GroupFlavor flavor);

/// H(beta) = Hom(coker beta*, C*) embedded through beta^vee.
DiagGroupPresentation build_H(const StackyFan& sf);

/// ker(beta-bar) inside (R/Z)^m, computed directly from the Smith form of beta
/// and brought to canonical form.
DiagGroupPresentation build_kerbar(const StackyFan& sf);

/// The raw presentation of ker(beta-bar) before canonicalisation.
DiagGroupPresentation kerbar_direct(const StackyFan& sf);

/// Gamma = ker(nbar : ker beta-bar -> ker beta_0-bar), nbar[x] = [n_j x_j].
FinAbGroup finite_extension(const StackyFan& sf);

struct IsotropyReport {
  ZeroPattern pattern;
  FinAbGroup group;
  /// False when the pattern lies in the irrelevant locus; the group is still
  /// computed.
  bool admissible = true;

  friend bool operator==(const IsotropyReport&, const IsotropyReport&) = default;
};

/// Stabiliser of a point whose vanishing coordinates are exactly `pattern`,
/// as the canonical form of its character group.
IsotropyReport isotropy(const DiagGroupPresentation& g, const ZeroPattern& pattern);
IsotropyReport isotropy(const StackyFan& sf, const DiagGroupPresentation& g,
                        const ZeroPattern& pattern);

/// Stabiliser in ker(beta-bar) computed straight from beta:
/// { [x] : x_j = 0 off the pattern, beta x in N } has character group
/// coker(beta_P^T).
FinAbGroup kernel_stabilizer(const StackyFan& sf, const ZeroPattern& pattern);

struct LocalChart {
  std::vector<std::size_t> cone;
  IntMatrix beta_sigma;
  FinAbGroup chart_group;
  Integer order;

  friend bool operator==(const LocalChart&, const LocalChart&) = default;
};

/// N(sigma) = N / im(beta_sigma) for a maximal cone. Throws NotMaximalCone.
LocalChart local_chart(const StackyFan& sf, const std::vector<std::size_t>& cone);

struct ChartExtension {
  FinAbGroup cyclic_part;  ///< (+)_{j in cone} Z/n_j
  FinAbGroup stacky;       ///< H(beta_sigma)
  FinAbGroup classical;    ///< H(beta_sigma,0)

  bool multiplicative() const { return stacky.order() == cyclic_part.order() * classical.order(); }

  friend bool operator==(const ChartExtension&, const ChartExtension&) = default;
};

ChartExtension chart_extension(const StackyFan& sf, const std::vector<std::size_t>& cone);

}  // namespace toristack
