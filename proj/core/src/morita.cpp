#include "toristack/morita.hpp"

#include "toristack/parallel.hpp"

namespace toristack {

namespace {

RatMatrix rescaled(const RatMatrix& iota, const IntVector& labels) {
  RatMatrix out = iota;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= labels[j];
  return out;
}

}  // namespace

SplittingData check_splitting(const StackyFan& sf) {
  const auto h = build_H(sf);
  const auto kerbar = kerbar_direct(sf);
  SplittingData out;
  out.free_rank = h.free_rank;
  out.torsion = h.torsion;
  out.positive_exponents = IntMatrix(h.ambient_rank, h.free_rank);
  for (std::size_t j = 0; j < h.ambient_rank; ++j)
    for (std::size_t k = 0; k < h.free_rank; ++k) out.positive_exponents(j, k) = h.exponents(j, k);
  out.compact = FinAbGroup::from_orders(kerbar.torsion, kerbar.free_rank);
  out.consistent = h.free_rank == sf.ray_count() - sf.dim() && out.compact.free_rank == h.free_rank &&
                   out.compact.torsion == h.torsion && is_injective(h);
  return out;
}

MuIndependence check_mu_independence(const StackyFan& sf, const std::optional<RatVector>& eta) {
  const StackyFan trivial = sf.with_trivial_labels();
  const RatMatrix iota = to_rational(integer_kernel(sf.beta).transpose());
  const RatMatrix iota0 = to_rational(integer_kernel(trivial.beta).transpose());
  const RatMatrix scaled = rescaled(iota, sf.labels);

  MuIndependence out;
  out.kernel_rows_match = same_row_space(scaled, iota0);
  // im beta* = D im beta_0*: the rows of beta are the rows of beta_0 times D.
  out.image_matches = same_row_space(to_rational(sf.beta), rescaled(to_rational(trivial.beta), sf.labels));
  if (auto a = solve_left(scaled, iota0)) out.transition = *a;
  if (eta) {
    const auto md = moment_data(sf, *eta);
    const auto md0 = moment_data(trivial, *eta);
    out.level_matches = out.transition.rows() == md.xi.size() && out.transition * md0.xi == md.xi;
  }
  out.independent = out.kernel_rows_match && out.image_matches &&
                    out.transition.rows() == iota.rows() && out.level_matches.value_or(true);
  return out;
}

Rational scaling_jacobian(const MomentData& md, const IntMatrix& positive_exponents,
                          const RatVector& r) {
  const std::size_t l = md.iota_star.rows(), m = md.ambient_rank();
  RatMatrix j(l, positive_exponents.cols());
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < positive_exponents.cols(); ++b) {
      Rational s = 0;
      for (std::size_t k = 0; k < m; ++k) s += md.iota_star(a, k) * 2 * r[k] * positive_exponents(k, b);
      j(a, b) = s;
    }
  if (j.rows() != j.cols()) return 0;
  // Rational determinant by elimination.
  Rational det = 1;
  const std::size_t n = j.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && j(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      j.swap_rows(p, c);
      det = -det;
    }
    det *= j(c, c);
    for (std::size_t row = c + 1; row < n; ++row)
      if (j(row, c) != 0) j.add_row_multiple(row, c, -j(row, c) / j(c, c));
  }
  return det;
}

M1Result check_M1_prime(const StackyFan& sf, const MomentData& md, std::size_t jobs) {
  const auto split = check_splitting(sf);
  const auto patterns = admissible_patterns(sf.fan);
  auto rows = parallel_map(patterns.size(), jobs, [&](std::size_t i) -> std::optional<JacobianEvidence> {
    const auto strict = strict_level_set_feasibility(md, patterns[i]);
    JacobianEvidence e;
    e.pattern = patterns[i];
    if (!strict.feasible) {
      // A feasible stratum without interior points breaks the check; an
      // empty one is not part of the level set.
      if (!level_set_feasibility(md, patterns[i]).feasible) return std::nullopt;
      return e;
    }
    e.witness = strict.witness;
    e.determinant = scaling_jacobian(md, split.positive_exponents, e.witness);
    e.nonsingular = e.determinant != 0;
    return e;
  });
  M1Result out;
  out.holds = split.consistent;
  for (auto& r : rows)
    if (r) {
      out.holds = out.holds && r->nonsingular;
      out.evidence.push_back(std::move(*r));
    }
  if (out.evidence.empty()) out.holds = false;
  return out;
}

M2Result check_M2(const StackyFan& sf, const MomentData& md, std::size_t jobs) {
  const auto patterns = admissible_patterns(sf.fan);
  M2Result out;
  out.evidence = parallel_map(patterns.size(), jobs, [&](std::size_t i) {
    return strict_level_set_feasibility(md, patterns[i]);
  });
  out.holds = true;
  for (const auto& r : out.evidence)
    if (!r.feasible) {
      out.holds = false;
      out.failing = r.pattern;
      break;
    }
  return out;
}

std::vector<IsotropyRow> isotropy_table(const StackyFan& sf, std::size_t jobs) {
  const auto h = build_H(sf);
  const auto kerbar = build_kerbar(sf);
  const auto patterns = admissible_patterns(sf.fan);
  return parallel_map(patterns.size(), jobs, [&](std::size_t i) {
    IsotropyRow row;
    row.pattern = patterns[i];
    row.symplectic = isotropy(kerbar, patterns[i]).group;
    row.complex = isotropy(h, patterns[i]).group;
    row.direct = kernel_stabilizer(sf, patterns[i]);
    row.match = row.symplectic == row.complex && row.complex == row.direct;
    return row;
  });
}

MoritaCertificate morita_certificate(const StackyFan& sf, const RatVector& eta, CertifyOptions options) {
  const std::size_t jobs = options.jobs;
  MoritaCertificate c;
  c.stacky_fan = sf;
  c.moment = moment_data(sf, eta);
  c.H = build_H(sf);
  c.kerbar = build_kerbar(sf);
  c.presentations_agree = same_data(c.H, c.kerbar);
  c.splitting = check_splitting(sf);
  c.mu_independence = check_mu_independence(sf, eta);
  c.regular_value = check_regular_value(c.moment, sf.fan, jobs);
  c.level_in_V = level_set_in_Cm(c.moment, sf.fan, jobs);
  c.m1_prime = check_M1_prime(sf, c.moment, jobs);
  c.m2 = check_M2(sf, c.moment, jobs);
  c.isotropy = isotropy_table(sf, jobs);
  c.isotropy_match = true;
  for (const auto& row : c.isotropy) c.isotropy_match = c.isotropy_match && row.match;
  c.verdict = c.presentations_agree && c.splitting.consistent && c.mu_independence.independent &&
              c.regular_value.regular && c.level_in_V.holds && c.m1_prime.holds && c.m2.holds &&
              c.isotropy_match;
  return c;
}

MoritaCertificate morita_certificate(const LabelledPolytope& p, CertifyOptions options) {
  return morita_certificate(normal_fan(p), p.eta(), options);
}

std::vector<std::string> reverify(const MoritaCertificate& c) {
  std::vector<std::string> problems;
  const auto& md = c.moment;
  const auto& sf = c.stacky_fan;
  const std::size_t m = sf.ray_count();

  if (md.iota_star.cols() != m || md.iota_star * to_rational(sf.beta).transpose() !=
                                      RatMatrix(md.iota_star.rows(), sf.dim()))
    problems.push_back("iota* does not annihilate beta^T");
  if (rank(md.iota_star) != m - sf.dim()) problems.push_back("iota* does not have rank m-d");
  if (!md.level_point.empty() && md.iota_star * md.level_point != md.xi)
    problems.push_back("xi differs from iota* applied to the level point");

  for (const auto& p : c.regular_value.feasible_patterns) {
    if (!level_set_feasibility(md, p).feasible)
      problems.push_back("pattern " + to_string(p) + " recorded as feasible is not");
    if (rank(md.iota_star.select_columns(p.complement(m))) != md.iota_star.rows() && c.regular_value.regular)
      problems.push_back("rank deficiency at " + to_string(p) + " contradicts regularity");
  }
  for (const auto& r : c.level_in_V.evidence) {
    if (!reverify(md, r)) problems.push_back("inclusion evidence at " + to_string(r.pattern) + " fails");
    if (is_admissible(sf.fan, r.pattern))
      problems.push_back("inclusion evidence at admissible pattern " + to_string(r.pattern));
  }
  for (const auto& e : c.m1_prime.evidence) {
    if (e.witness.empty()) continue;
    FeasibilityResult w{e.pattern, true, true, e.witness, {}};
    if (!reverify(md, w)) problems.push_back("(M1') witness at " + to_string(e.pattern) + " fails");
    if (scaling_jacobian(md, c.splitting.positive_exponents, e.witness) != e.determinant)
      problems.push_back("(M1') determinant at " + to_string(e.pattern) + " does not recompute");
    if ((e.determinant != 0) != e.nonsingular)
      problems.push_back("(M1') flag at " + to_string(e.pattern) + " is inconsistent");
  }
  for (const auto& r : c.m2.evidence)
    if (!r.strict || !reverify(md, r)) problems.push_back("(M2) evidence at " + to_string(r.pattern) + " fails");

  const auto& mu = c.mu_independence;
  if (mu.transition.rows() > 0) {
    const RatMatrix iota0 = to_rational(integer_kernel(sf.with_trivial_labels().beta).transpose());
    if (mu.transition * iota0 != rescaled(md.iota_star, sf.labels))
      problems.push_back("transition matrix does not relate the rescaled moment maps");
  }

  bool iso = true;
  for (const auto& row : c.isotropy) {
    if (kernel_stabilizer(sf, row.pattern) != row.direct)
      problems.push_back("stabiliser at " + to_string(row.pattern) + " does not recompute");
    if (row.match != (row.symplectic == row.complex && row.complex == row.direct))
      problems.push_back("isotropy flag at " + to_string(row.pattern) + " is inconsistent");
    iso = iso && row.match;
  }
  const bool verdict = c.presentations_agree && c.splitting.consistent && c.mu_independence.independent &&
                       c.regular_value.regular && c.level_in_V.holds && c.m1_prime.holds && c.m2.holds &&
                       iso && c.isotropy_match == iso;
  if (verdict != c.verdict) problems.push_back("verdict is not the conjunction of the checks");
  return problems;
}

}  // namespace toristack
