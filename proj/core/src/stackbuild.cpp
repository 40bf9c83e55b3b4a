#include "toristack/stackbuild.hpp"

#include <algorithm>

namespace toristack {

StackyFan StackyFan::make(Fan fan, IntVector labels) {
  if (labels.size() != fan.ray_count())
    throw InvalidInput("got " + std::to_string(labels.size()) + " labels for " +
                       std::to_string(fan.ray_count()) + " rays");
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] < 1)
      throw InvalidInput("label " + std::to_string(j + 1) + " must be a positive integer, got " +
                         to_string(labels[j]));
  StackyFan sf;
  sf.beta = IntMatrix(fan.dim, fan.ray_count());
  for (std::size_t j = 0; j < fan.ray_count(); ++j) {
    if (fan.rays[j].size() != fan.dim)
      throw InvalidInput("ray " + std::to_string(j + 1) + " has the wrong length");
    for (std::size_t i = 0; i < fan.dim; ++i) sf.beta(i, j) = labels[j] * fan.rays[j][i];
  }
  sf.fan = std::move(fan);
  sf.labels = std::move(labels);
  return sf;
}

StackyFan StackyFan::with_trivial_labels() const {
  return make(fan, IntVector(fan.ray_count(), 1));
}

ValidationReport validate_stacky_fan(const StackyFan& sf, FanValidationOptions options) {
  ValidationReport report = validate_fan(sf.fan, options);
  bool labels_ok = sf.labels.size() == sf.ray_count();
  for (std::size_t j = 0; labels_ok && j < sf.labels.size(); ++j)
    if (sf.labels[j] < 1) labels_ok = false;
  if (labels_ok)
    report.pass("labels");
  else
    report.fail("labels", "labels must be positive integers, one per ray");
  if (sf.beta.rows() == sf.dim() && sf.beta.cols() == sf.ray_count() && rank(sf.beta) == sf.dim())
    report.pass("finite_cokernel");
  else
    report.fail("finite_cokernel", "beta does not have full rank; N / im(beta) is infinite");
  return report;
}

std::string to_string(GroupFlavor f) { return f == GroupFlavor::algebraic ? "algebraic" : "compact"; }

bool same_data(const DiagGroupPresentation& a, const DiagGroupPresentation& b) {
  return a.ambient_rank == b.ambient_rank && a.free_rank == b.free_rank &&
         a.torsion == b.torsion && a.exponents == b.exponents;
}

IntMatrix annihilator(const DiagGroupPresentation& g) {
  return annihilator_lattice(g.exponents, g.free_rank, g.torsion);
}

bool is_injective(const DiagGroupPresentation& g) {
  // The restriction map Z^m -> characters of the group is E^T (free columns
  // exactly, torsion columns mod t_i); injectivity of the embedding is
  // surjectivity of this map, i.e. a trivial cokernel.
  const std::size_t s = g.torsion.size();
  const std::size_t k = g.free_rank + s;
  IntMatrix rel(k, g.ambient_rank + s);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < g.ambient_rank; ++j) rel(c, j) = g.exponents(j, c);
  for (std::size_t i = 0; i < s; ++i) rel(g.free_rank + i, g.ambient_rank + i) = g.torsion[i];
  return cokernel_group(rel).is_trivial();
}

DiagGroupPresentation canonical_presentation(const IntMatrix& annihilator_rows,
                                             std::size_t ambient_rank, GroupFlavor flavor) {
  const IntMatrix basis = hermite_normal_form(annihilator_rows);
  IntMatrix gens = basis.rows() == 0 ? IntMatrix(ambient_rank, 0) : basis.transpose();
  const auto cp = cokernel(gens);
  const std::size_t s = cp.group.torsion.size(), l = cp.group.free_rank;

  DiagGroupPresentation out;
  out.flavor = flavor;
  out.ambient_rank = ambient_rank;
  out.free_rank = l;
  out.torsion = cp.group.torsion;
  out.exponents = IntMatrix(ambient_rank, l + s);
  for (std::size_t j = 0; j < ambient_rank; ++j) {
    for (std::size_t k = 0; k < l; ++k) out.exponents(j, k) = cp.projection(s + k, j);
    for (std::size_t i = 0; i < s; ++i) out.exponents(j, l + i) = cp.projection(i, j);
  }
  return out;
}

DiagGroupPresentation build_H(const StackyFan& sf) {
  const auto dual = dualize(sf.beta);
  // The characters of (C*)^m trivial on H(beta) are exactly im(beta*), which is
  // the row lattice of beta.
  return canonical_presentation(dual.beta_star.transpose(), sf.ray_count(), GroupFlavor::algebraic);
}

DiagGroupPresentation kerbar_direct(const StackyFan& sf) {
  const std::size_t d = sf.dim(), m = sf.ray_count();
  const auto snf = smith_normal_form(sf.beta);
  if (snf.rank() < d)
    throw NonFiniteCokernel("beta has rank " + std::to_string(snf.rank()) + " < " +
                            std::to_string(d) + "; ker(beta-bar) is not a compact torus of rank m-d");

  // x = V y lies over N exactly when s_i y_i is integral for i < d, so the
  // columns V e_i / s_i (i < d, s_i > 1) and V e_k (k >= d) generate.
  std::vector<std::size_t> torsion_cols;
  DiagGroupPresentation out;
  out.flavor = GroupFlavor::compact;
  out.ambient_rank = m;
  out.free_rank = m - d;
  for (std::size_t i = 0; i < d; ++i)
    if (snf.invariant_factors[i] != 1) {
      torsion_cols.push_back(i);
      out.torsion.push_back(snf.invariant_factors[i]);
    }
  out.exponents = IntMatrix(m, out.free_rank + torsion_cols.size());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < out.free_rank; ++k) out.exponents(j, k) = snf.V(j, d + k);
    for (std::size_t t = 0; t < torsion_cols.size(); ++t)
      out.exponents(j, out.free_rank + t) = floor_mod(snf.V(j, torsion_cols[t]), out.torsion[t]);
  }
  return out;
}

DiagGroupPresentation build_kerbar(const StackyFan& sf) {
  const auto raw = kerbar_direct(sf);
  return canonical_presentation(annihilator(raw), raw.ambient_rank, GroupFlavor::compact);
}

FinAbGroup finite_extension(const StackyFan& sf) {
  // Characters of ker(beta-bar) modulo those pulled back along nbar:
  // Z^m / (im beta^T + im diag(n)).
  const std::size_t d = sf.dim(), m = sf.ray_count();
  IntMatrix rel(m, d + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < d; ++i) rel(j, i) = sf.beta(i, j);
    rel(j, d + j) = sf.labels[j];
  }
  return cokernel_group(rel);
}

IsotropyReport isotropy(const DiagGroupPresentation& g, const ZeroPattern& pattern) {
  // Characters of the stabiliser: characters of the group modulo the
  // restrictions of e_j for the coordinates that do not vanish.
  const std::size_t s = g.torsion.size(), k = g.free_rank + s;
  const auto keep = pattern.complement(g.ambient_rank);
  IntMatrix rel(k, s + keep.size());
  for (std::size_t i = 0; i < s; ++i) rel(g.free_rank + i, i) = g.torsion[i];
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t r = 0; r < k; ++r) rel(r, s + c) = g.exponents(keep[c], r);
  return {pattern, cokernel_group(rel), true};
}

IsotropyReport isotropy(const StackyFan& sf, const DiagGroupPresentation& g,
                        const ZeroPattern& pattern) {
  auto out = isotropy(g, pattern);
  out.admissible = is_admissible(sf.fan, pattern);
  return out;
}

FinAbGroup kernel_stabilizer(const StackyFan& sf, const ZeroPattern& pattern) {
  if (pattern.size() == 0) return FinAbGroup::trivial();
  return cokernel_group(sf.beta.select_columns(pattern.indices).transpose());
}

namespace {

void require_maximal(const StackyFan& sf, const std::vector<std::size_t>& cone) {
  if (std::find(sf.fan.max_cones.begin(), sf.fan.max_cones.end(), cone) == sf.fan.max_cones.end())
    throw NotMaximalCone(to_string(ZeroPattern(cone)) + " is not a maximal cone of the fan");
  if (cone.size() != sf.dim())
    throw NotMaximalCone(to_string(ZeroPattern(cone)) + " is not full-dimensional");
}

}  // namespace

LocalChart local_chart(const StackyFan& sf, const std::vector<std::size_t>& cone) {
  require_maximal(sf, cone);
  LocalChart out;
  out.cone = cone;
  out.beta_sigma = sf.beta.select_columns(cone);
  out.chart_group = cokernel_group(out.beta_sigma);
  out.order = abs(determinant(out.beta_sigma));
  return out;
}

ChartExtension chart_extension(const StackyFan& sf, const std::vector<std::size_t>& cone) {
  require_maximal(sf, cone);
  IntVector orders;
  for (auto j : cone) orders.push_back(sf.labels[j]);
  const IntMatrix b = sf.beta.select_columns(cone);
  const IntMatrix b0 = sf.fan.ray_matrix().select_columns(cone);
  return {FinAbGroup::from_orders(orders), cokernel_group(b.transpose()),
          cokernel_group(b0.transpose())};
}

}  // namespace toristack
