#pragma once

// Labelled rational polytopes { alpha : <alpha, u_j> >= -eta_j } with a
// positive integer label on each facet.

#include "toristack/stackbuild.hpp"

namespace toristack {

struct HalfSpace {
  /// Primitive inward normal.
  IntVector u;
  Rational eta;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

struct LabelledFacet {
  HalfSpace half_space;
  Integer label = 1;

  friend bool operator==(const LabelledFacet&, const LabelledFacet&) = default;
};

struct LabelledPolytope {
  std::size_t dim = 0;
  std::vector<LabelledFacet> facets;

  std::size_t facet_count() const { return facets.size(); }
  /// d x m matrix of normals.
  IntMatrix normal_matrix() const;
  RatVector eta() const;
  IntVector labels() const;

  friend bool operator==(const LabelledPolytope&, const LabelledPolytope&) = default;
};

struct Vertex {
  RatVector point;
  /// Sorted 0-based facet indices with <point, u_j> = -eta_j.
  std::vector<std::size_t> active_facets;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Checks "dimension", "labels", "primitive", "bounded", "full_dimensional"
/// and "irredundant".
ValidationReport validate_polytope(const LabelledPolytope& p);

/// All vertices, sorted lexicographically by coordinates. Throws
/// DegeneratePolytope when the polytope is empty, unbounded or lower
/// dimensional.
std::vector<Vertex> enumerate_vertices(const LabelledPolytope& p);

struct SmoothnessReport {
  bool smooth = true;
  std::vector<Vertex> offending;
};

SmoothnessReport is_smooth(const LabelledPolytope& p);

/// Rays are the facet normals in facet order, one maximal cone per vertex.
/// Throws NonSimpleVertex when a vertex has more than d active facets.
StackyFan normal_fan(const LabelledPolytope& p);

/// The polytope moved by c: eta_j -> eta_j - <c, u_j>.
LabelledPolytope translated(const LabelledPolytope& p, const RatVector& c);

/// Facet k of the result is facet perm[k] of p.
LabelledPolytope permuted(const LabelledPolytope& p, const std::vector<std::size_t>& perm);

}  // namespace toristack
