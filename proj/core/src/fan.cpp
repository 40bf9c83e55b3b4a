#include "toristack/fan.hpp"

#include "toristack/exactalg.hpp"
#include "toristack/feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toristack {

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_columns(rays, dim); }

ZeroPattern::ZeroPattern(std::vector<std::size_t> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool ZeroPattern::contains(std::size_t j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

bool ZeroPattern::subset_of(const std::vector<std::size_t>& sorted) const {
  return std::includes(sorted.begin(), sorted.end(), indices.begin(), indices.end());
}

std::vector<std::size_t> ZeroPattern::complement(std::size_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m; ++j)
    if (!contains(j)) out.push_back(j);
  return out;
}

std::strong_ordering operator<=>(const ZeroPattern& a, const ZeroPattern& b) {
  if (auto c = a.indices.size() <=> b.indices.size(); c != 0) return c;
  return a.indices <=> b.indices;
}

std::string to_string(const ZeroPattern& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < p.indices.size(); ++k) os << (k ? "," : "") << p.indices[k] + 1;
  os << '}';
  return os.str();
}

namespace {

std::string cone_name(const std::vector<std::size_t>& cone) { return to_string(ZeroPattern(cone)); }

// Two simplicial cones meet in their common face iff no point of the
// intersection has positive weight on a ray outside the shared set.
bool meet_in_common_face(const Fan& fan, const std::vector<std::size_t>& s,
                         const std::vector<std::size_t>& t) {
  const std::size_t d = fan.dim;
  const std::size_t n = s.size() + t.size();
  RatMatrix a(d + 1, n);
  RatVector b(d + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) a(i, k) = Rational(fan.rays[s[k]][i]);
    if (!std::binary_search(t.begin(), t.end(), s[k])) a(d, k) = 1;
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) a(i, s.size() + k) = Rational(-fan.rays[t[k]][i]);
    if (!std::binary_search(s.begin(), s.end(), t[k])) a(d, s.size() + k) = 1;
  }
  b[d] = 1;
  return !solve_nonnegative(a, b).feasible;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan, FanValidationOptions options) {
  ValidationReport report;
  const std::size_t d = fan.dim, m = fan.ray_count();

  bool structural = true;
  if (d == 0) {
    report.fail("dimension", "fan dimension must be positive");
    return report;
  }
  for (std::size_t j = 0; j < m; ++j)
    if (fan.rays[j].size() != d) {
      report.fail("dimension", "ray " + std::to_string(j + 1) + " has " +
                                   std::to_string(fan.rays[j].size()) + " entries, expected " +
                                   std::to_string(d));
      structural = false;
    }
  if (structural) report.pass("dimension");

  bool primitive = true;
  for (std::size_t j = 0; j < m && structural; ++j) {
    const Integer g = gcd(fan.rays[j]);
    if (g != 1) {
      report.fail("primitive", "ray " + std::to_string(j + 1) +
                                   (g == 0 ? " is zero" : " is not primitive (gcd " + to_string(g) + ")"));
      primitive = false;
    }
  }
  if (structural && primitive) report.pass("primitive");

  bool distinct = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (fan.rays[i] == fan.rays[j]) {
        report.fail("distinct", "rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " coincide");
        distinct = false;
      }
  if (distinct) report.pass("distinct");

  bool cones_ok = true;
  if (fan.max_cones.empty()) {
    report.fail("cones", "no maximal cones");
    cones_ok = false;
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& cone : fan.max_cones) {
    if (cone.empty() || !std::is_sorted(cone.begin(), cone.end()) ||
        std::adjacent_find(cone.begin(), cone.end()) != cone.end() || cone.back() >= m) {
      report.fail("cones", "maximal cone " + cone_name(cone) + " has invalid ray indices");
      cones_ok = false;
      continue;
    }
    if (cone.size() > d) {
      report.fail("cones", "maximal cone " + cone_name(cone) + " has more than d rays");
      cones_ok = false;
    }
    if (!seen.insert(cone).second) {
      report.fail("cones", "maximal cone " + cone_name(cone) + " is listed twice");
      cones_ok = false;
    }
  }
  for (const auto& s : fan.max_cones)
    for (const auto& t : fan.max_cones)
      if (&s != &t && s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        report.fail("cones", "cone " + cone_name(s) + " is a face of " + cone_name(t));
        cones_ok = false;
      }
  if (cones_ok) report.pass("cones");
  if (!structural || !cones_ok) return report;

  bool simplicial = true;
  for (const auto& cone : fan.max_cones) {
    std::vector<IntVector> cols;
    for (auto j : cone) cols.push_back(fan.rays[j]);
    if (rank(IntMatrix::from_columns(cols, d)) != cone.size()) {
      report.fail("simplicial", "rays of cone " + cone_name(cone) + " are linearly dependent");
      simplicial = false;
    }
  }
  if (simplicial) report.pass("simplicial");

  std::vector<bool> used(m, false);
  for (const auto& cone : fan.max_cones)
    for (auto j : cone) used[j] = true;
  bool all_used = true;
  for (std::size_t j = 0; j < m; ++j)
    if (!used[j]) {
      report.fail("rays_used", "ray " + std::to_string(j + 1) + " lies in no maximal cone");
      all_used = false;
    }
  if (all_used) report.pass("rays_used");

  if (rank(fan.ray_matrix()) == d)
    report.pass("spanning");
  else
    report.fail("spanning", "rays do not span Q^d (torus factors)");

  if (!simplicial) return report;

  bool proper = true;
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b)
      if (!meet_in_common_face(fan, fan.max_cones[a], fan.max_cones[b])) {
        report.fail("intersections", "cones " + cone_name(fan.max_cones[a]) + " and " +
                                         cone_name(fan.max_cones[b]) +
                                         " do not meet in a common face");
        proper = false;
      }
  if (proper) report.pass("intersections");

  if (d > 3) {
    if (options.assert_complete)
      report.pass("complete", "asserted by user (not checked for d >= 4)");
    else
      report.fail("complete", "completeness is not decided for d >= 4; assert it explicitly");
    return report;
  }

  bool complete = true;
  for (const auto& cone : fan.max_cones)
    if (cone.size() != d) {
      report.fail("complete", "maximal cone " + cone_name(cone) + " is not full-dimensional");
      complete = false;
    }
  if (complete) {
    // Every wall (codimension-one face) must separate exactly two cones and
    // the cones must be connected through walls.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> walls;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
      const auto& cone = fan.max_cones[c];
      for (std::size_t drop = 0; drop < cone.size(); ++drop) {
        std::vector<std::size_t> wall;
        for (std::size_t k = 0; k < cone.size(); ++k)
          if (k != drop) wall.push_back(cone[k]);
        walls[wall].push_back(c);
      }
    }
    std::vector<std::vector<std::size_t>> adjacent(fan.max_cones.size());
    for (const auto& [wall, cones] : walls) {
      if (cones.size() != 2) {
        report.fail("complete", "wall " + cone_name(wall) + " lies in " +
                                    std::to_string(cones.size()) + " maximal cone(s), expected 2");
        complete = false;
        continue;
      }
      adjacent[cones[0]].push_back(cones[1]);
      adjacent[cones[1]].push_back(cones[0]);
    }
    std::vector<bool> reached(fan.max_cones.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      for (auto n : adjacent[c])
        if (!reached[n]) {
          reached[n] = true;
          stack.push_back(n);
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
      report.fail("complete", "maximal cones are not connected through walls");
      complete = false;
    }
  }
  if (complete) report.pass("complete");
  return report;
}

bool is_admissible(const Fan& fan, const ZeroPattern& pattern) {
  return std::any_of(fan.max_cones.begin(), fan.max_cones.end(),
                     [&](const auto& cone) { return pattern.subset_of(cone); });
}

std::vector<ZeroPattern> admissible_patterns(const Fan& fan) {
  if (fan.ray_count() > kMaxEnumeratedRays)
    throw TooManyRays("pattern enumeration is limited to " + std::to_string(kMaxEnumeratedRays) +
                      " rays, got " + std::to_string(fan.ray_count()));
  std::set<ZeroPattern> patterns;
  for (const auto& cone : fan.max_cones) {
    const std::size_t k = cone.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) idx.push_back(cone[b]);
      patterns.insert(ZeroPattern(std::move(idx)));
    }
  }
  return {patterns.begin(), patterns.end()};
}

std::vector<ZeroPattern> minimal_inadmissible_patterns(const Fan& fan) {
  const auto admissible = admissible_patterns(fan);
  const std::set<ZeroPattern> faces(admissible.begin(), admissible.end());
  std::set<ZeroPattern> out;
  for (const auto& p : admissible)
    for (std::size_t j = 0; j < fan.ray_count(); ++j) {
      if (p.contains(j)) continue;
      auto idx = p.indices;
      idx.push_back(j);
      ZeroPattern q(std::move(idx));
      if (faces.count(q)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < q.size() && minimal; ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < q.size(); ++k)
          if (k != drop) sub.push_back(q.indices[k]);
        minimal = faces.count(ZeroPattern(std::move(sub))) > 0;
      }
      if (minimal) out.insert(std::move(q));
    }
  return {out.begin(), out.end()};
}

}  // namespace toristack
