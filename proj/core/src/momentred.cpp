#include "toristack/momentred.hpp"

#include "toristack/parallel.hpp"

#include <algorithm>

namespace toristack {

namespace {

RatMatrix iota_star_of(const StackyFan& sf) {
  return to_rational(integer_kernel(sf.beta).transpose());
}

RatMatrix columns_off(const MomentData& md, const std::vector<std::size_t>& keep) {
  return md.iota_star.select_columns(keep);
}

RatVector embed(const RatVector& r, const std::vector<std::size_t>& keep, std::size_t m) {
  RatVector out(m, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) out[keep[k]] = r[k];
  return out;
}

FeasibilityResult solve(const MomentData& md, const ZeroPattern& pattern, bool strict) {
  const auto keep = pattern.complement(md.ambient_rank());
  const RatMatrix a = columns_off(md, keep);
  const auto outcome = strict ? solve_strictly_positive(a, md.xi) : solve_nonnegative(a, md.xi);
  FeasibilityResult out;
  out.pattern = pattern;
  out.strict = strict;
  out.feasible = outcome.feasible;
  if (outcome.feasible)
    out.witness = embed(outcome.witness, keep, md.ambient_rank());
  else
    out.certificate = outcome.farkas;
  return out;
}

}  // namespace

MomentData moment_data(const StackyFan& sf, const RatVector& eta) {
  if (eta.size() != sf.ray_count())
    throw InvalidInput("got " + std::to_string(eta.size()) + " offsets for " +
                       std::to_string(sf.ray_count()) + " rays");
  MomentData md;
  md.iota_star = iota_star_of(sf);
  md.level_point.resize(eta.size());
  for (std::size_t j = 0; j < eta.size(); ++j) md.level_point[j] = sf.labels[j] * eta[j];
  md.xi = md.iota_star * md.level_point;
  return md;
}

MomentData moment_data(const LabelledPolytope& p) { return moment_data(normal_fan(p), p.eta()); }

MomentData moment_data_at(const StackyFan& sf, RatVector xi) {
  MomentData md;
  md.iota_star = iota_star_of(sf);
  if (xi.size() != md.iota_star.rows())
    throw InvalidInput("level value must have " + std::to_string(md.iota_star.rows()) + " entries");
  md.xi = std::move(xi);
  return md;
}

FeasibilityResult level_set_feasibility(const MomentData& md, const ZeroPattern& pattern) {
  return solve(md, pattern, false);
}

FeasibilityResult strict_level_set_feasibility(const MomentData& md, const ZeroPattern& pattern) {
  return solve(md, pattern, true);
}

bool reverify(const MomentData& md, const FeasibilityResult& result) {
  const std::size_t m = md.ambient_rank();
  const auto keep = result.pattern.complement(m);
  const RatMatrix a = columns_off(md, keep);
  if (result.feasible) {
    if (result.witness.size() != m) return false;
    for (auto j : result.pattern.indices)
      if (result.witness[j] != 0) return false;
    RatVector r;
    for (auto j : keep) r.push_back(result.witness[j]);
    return verify_witness(a, md.xi, r, result.strict);
  }
  return result.strict ? verify_strict_farkas(a, md.xi, result.certificate)
                       : verify_farkas(a, md.xi, result.certificate);
}

std::vector<ZeroPattern> feasible_patterns(const MomentData& md, std::size_t jobs) {
  const std::size_t m = md.ambient_rank();
  std::vector<ZeroPattern> out;
  std::vector<ZeroPattern> frontier;
  if (level_set_feasibility(md, ZeroPattern{}).feasible) frontier.push_back(ZeroPattern{});
  while (!frontier.empty()) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<ZeroPattern> candidates;
    for (const auto& p : frontier)
      for (std::size_t j = p.size() == 0 ? 0 : p.indices.back() + 1; j < m; ++j) {
        auto idx = p.indices;
        idx.push_back(j);
        candidates.emplace_back(std::move(idx));
      }
    const auto ok = parallel_map(candidates.size(), jobs, [&](std::size_t i) {
      return level_set_feasibility(md, candidates[i]).feasible;
    });
    frontier.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (ok[i]) frontier.push_back(std::move(candidates[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RegularValueResult check_regular_value(const MomentData& md, const Fan& /*fan*/, std::size_t jobs) {
  RegularValueResult out;
  out.feasible_patterns = feasible_patterns(md, jobs);
  const std::size_t l = md.iota_star.rows();
  out.regular = true;
  for (const auto& p : out.feasible_patterns)
    if (rank(columns_off(md, p.complement(md.ambient_rank()))) != l) {
      out.regular = false;
      out.offending = p;
      break;
    }
  return out;
}

InclusionResult level_set_in_Cm(const MomentData& md, const Fan& fan, std::size_t jobs) {
  const auto minimal = minimal_inadmissible_patterns(fan);
  InclusionResult out;
  out.evidence = parallel_map(minimal.size(), jobs, [&](std::size_t i) {
    return level_set_feasibility(md, minimal[i]);
  });
  out.holds = true;
  for (const auto& r : out.evidence)
    if (r.feasible) {
      out.holds = false;
      out.violating = r.pattern;
      break;
    }
  return out;
}

}  // namespace toristack
