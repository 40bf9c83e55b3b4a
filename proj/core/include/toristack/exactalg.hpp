#pragma once

// Exact integer and rational linear algebra: Smith normal form, integer
// kernels, cokernels as finitely generated abelian groups, and the
// dualization of a lattice map into (beta*, beta^vee).

#include "toristack/matrix.hpp"

#include <string>
#include <vector>

namespace toristack {

/// U * A * V = S with U, V unimodular and S diagonal in divisibility order.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  /// Diagonal of S, length min(rows, cols).
  IntVector invariant_factors;

  std::size_t rank() const;
};

/// Z^free_rank (+) Z/t_1 (+) ... (+) Z/t_k with t_i >= 2 and t_i | t_{i+1}.
/// The representation is canonical, so == is group isomorphism.
struct FinAbGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup cyclic(const Integer& n);
  /// Canonical form of Z^free (+) (+)_i Z/orders_i for arbitrary orders
  /// (0 means a free summand, 1 a trivial one).
  static FinAbGroup from_orders(const IntVector& orders, std::size_t extra_free = 0);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Order of a finite group; 0 when the group is infinite.
  Integer order() const;
  /// Order of the torsion subgroup.
  Integer torsion_order() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// ASCII rendering, e.g. "Z/2 + Z/2 + Z", "0" for the trivial group.
std::string to_string(const FinAbGroup& g);

/// Quotient Z^rows / im(A) together with the quotient map, in the canonical
/// generator order: torsion generators (increasing orders) then free ones.
struct CokernelPresentation {
  FinAbGroup group;
  /// (torsion count + free rank) x rows. Torsion rows are reduced modulo
  /// their order; free rows are in Hermite normal form.
  IntMatrix projection;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

CokernelPresentation cokernel(const IntMatrix& a);

/// Saturated Z-basis of ker(A) as the columns of a cols x k matrix,
/// normalised to Hermite form (k = cols - rank A).
IntMatrix integer_kernel(const IntMatrix& a);

struct DualizedMap {
  IntMatrix beta_star;
  CokernelPresentation beta_vee;
};

/// beta* = beta^T and beta^vee = the quotient (Z^m)* -> coker beta*.
/// Throws NonFiniteCokernel when rank(beta) < rows(beta).
DualizedMap dualize(const IntMatrix& beta);

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

/// Row-style Hermite normal form of the row lattice of `a`: nonzero rows
/// only, pivots positive and strictly moving right, entries above a pivot in
/// [0, pivot). Canonical for the lattice spanned by the rows.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Row lattices of a and b (same column count) coincide.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Rational row spaces coincide.
bool same_row_space(const RatMatrix& a, const RatMatrix& b);

/// Solves X * b = a for X when the rows of a lie in the row space of b
/// and b has full row rank. Returns nullopt otherwise.
std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b);

/// Cokernel group of the presentation (only the group, no map).
FinAbGroup cokernel_group(const IntMatrix& a);

/// Characters w in Z^m that vanish on the subgroup of a diagonal group
/// described by exponent data: free columns exactly, torsion columns modulo
/// their order. `exponents` is m x (free + torsion.size()). Returns a
/// Hermite basis (rows) of the annihilator lattice.
IntMatrix annihilator_lattice(const IntMatrix& exponents, std::size_t free_rank,
                              const IntVector& torsion);

}  // namespace toristack
