#include "toristack/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace toristack {

IntMatrix LabelledPolytope::normal_matrix() const {
  IntMatrix out(dim, facets.size());
  for (std::size_t j = 0; j < facets.size(); ++j)
    for (std::size_t i = 0; i < dim && i < facets[j].half_space.u.size(); ++i)
      out(i, j) = facets[j].half_space.u[i];
  return out;
}

RatVector LabelledPolytope::eta() const {
  RatVector out;
  for (const auto& f : facets) out.push_back(f.half_space.eta);
  return out;
}

IntVector LabelledPolytope::labels() const {
  IntVector out;
  for (const auto& f : facets) out.push_back(f.label);
  return out;
}

namespace {

Rational pairing(const RatVector& x, const IntVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * u[i];
  return s;
}

// Unique solution of the square system A x = c, or nullopt when singular.
std::optional<RatVector> solve_square(RatMatrix a, RatVector c) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      a.swap_rows(piv, col);
      std::swap(c[piv], c[col]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      a.add_row_multiple(r, col, -f);
      c[r] -= f * c[col];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = c[i] / a(i, i);
  return x;
}

template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

struct Halfspaces {
  std::size_t dim;
  std::vector<IntVector> u;
  RatVector eta;
};

Halfspaces halfspaces_of(const LabelledPolytope& p, std::size_t skip = SIZE_MAX) {
  Halfspaces h{p.dim, {}, {}};
  for (std::size_t j = 0; j < p.facets.size(); ++j) {
    if (j == skip) continue;
    h.u.push_back(p.facets[j].half_space.u);
    h.eta.push_back(p.facets[j].half_space.eta);
  }
  return h;
}

// Vertices by brute force over d-subsets; correct for pointed polyhedra.
std::vector<Vertex> raw_vertices(const Halfspaces& h) {
  const std::size_t d = h.dim, m = h.u.size();
  std::set<RatVector> points;
  for_each_subset(m, d, [&](const std::vector<std::size_t>& idx) {
    RatMatrix a(d, d);
    RatVector c(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t i = 0; i < d; ++i) a(r, i) = Rational(h.u[idx[r]][i]);
      c[r] = -h.eta[idx[r]];
    }
    auto x = solve_square(std::move(a), std::move(c));
    if (!x) return;
    for (std::size_t j = 0; j < m; ++j)
      if (pairing(*x, h.u[j]) < -h.eta[j]) return;
    points.insert(*x);
  });
  std::vector<Vertex> out;
  for (const auto& x : points) {
    Vertex v{x, {}};
    for (std::size_t j = 0; j < m; ++j)
      if (pairing(x, h.u[j]) == -h.eta[j]) v.active_facets.push_back(j);
    out.push_back(std::move(v));
  }
  return out;
}

// The recession cone { v : <v, u_j> >= 0 } is zero iff the normals have full
// rank and no extreme ray exists; extreme rays are cut out by d-1
// independent tight normals.
bool bounded(const Halfspaces& h) {
  const std::size_t d = h.dim, m = h.u.size();
  if (m == 0) return false;
  if (rank(IntMatrix::from_columns(h.u, d)) < d) return false;
  if (d == 1) return true;
  bool ray_found = false;
  for_each_subset(m, d - 1, [&](const std::vector<std::size_t>& idx) {
    if (ray_found) return;
    std::vector<IntVector> rows;
    for (auto j : idx) rows.push_back(h.u[j]);
    const IntMatrix a = IntMatrix::from_rows(rows, d);
    if (rank(a) != d - 1) return;
    const IntMatrix k = integer_kernel(a);
    for (int sign : {1, -1}) {
      bool ok = true;
      for (std::size_t j = 0; j < m && ok; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < d; ++i) s += k(i, 0) * h.u[j][i];
        if (sign * s < 0) ok = false;
      }
      if (ok) ray_found = true;
    }
  });
  return !ray_found;
}

std::size_t affine_rank(const std::vector<RatVector>& pts, std::size_t d) {
  if (pts.empty()) return 0;
  RatMatrix a(pts.size() - 1, d);
  for (std::size_t k = 1; k < pts.size(); ++k)
    for (std::size_t i = 0; i < d; ++i) a(k - 1, i) = pts[k][i] - pts[0][i];
  return pts.size() == 1 ? 0 : rank(a);
}

std::vector<RatVector> points_of(const std::vector<Vertex>& vs) {
  std::vector<RatVector> out;
  for (const auto& v : vs) out.push_back(v.point);
  return out;
}

}  // namespace

ValidationReport validate_polytope(const LabelledPolytope& p) {
  ValidationReport report;
  const std::size_t d = p.dim, m = p.facets.size();
  bool shape = d > 0;
  if (d == 0) report.fail("dimension", "dimension must be positive");
  for (std::size_t j = 0; j < m && d > 0; ++j)
    if (p.facets[j].half_space.u.size() != d) {
      report.fail("dimension", "normal " + std::to_string(j + 1) + " has " +
                                   std::to_string(p.facets[j].half_space.u.size()) +
                                   " entries, expected " + std::to_string(d));
      shape = false;
    }
  if (shape) report.pass("dimension");

  bool labels_ok = true;
  for (std::size_t j = 0; j < m; ++j)
    if (p.facets[j].label < 1) {
      report.fail("labels", "label of facet " + std::to_string(j + 1) + " must be >= 1, got " +
                                to_string(p.facets[j].label));
      labels_ok = false;
    }
  if (labels_ok) report.pass("labels");
  if (!shape) return report;

  bool primitive = true;
  for (std::size_t j = 0; j < m; ++j) {
    const Integer g = gcd(p.facets[j].half_space.u);
    if (g != 1) {
      report.fail("primitive", "normal " + std::to_string(j + 1) +
                                   (g == 0 ? " is zero" : " is not primitive (gcd " + to_string(g) + ")"));
      primitive = false;
    }
  }
  if (primitive) report.pass("primitive");

  const auto h = halfspaces_of(p);
  if (!bounded(h)) {
    report.fail("bounded", "the normals do not positively span Q^d; the polyhedron is unbounded");
    return report;
  }
  report.pass("bounded");

  const auto verts = raw_vertices(h);
  if (verts.empty() || affine_rank(points_of(verts), d) < d) {
    report.fail("full_dimensional", verts.empty() ? "the polytope is empty"
                                                  : "the polytope has empty interior");
    return report;
  }
  report.pass("full_dimensional");

  bool irredundant = true;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<RatVector> on_facet;
    for (const auto& v : verts)
      if (std::binary_search(v.active_facets.begin(), v.active_facets.end(), k))
        on_facet.push_back(v.point);
    bool facet = !on_facet.empty() && affine_rank(on_facet, d) == d - 1;
    for (std::size_t j = 0; j < k && facet; ++j)
      if (p.facets[j].half_space == p.facets[k].half_space) facet = false;
    if (facet) {
      const auto rest = halfspaces_of(p, k);
      if (bounded(rest) && points_of(raw_vertices(rest)) == points_of(verts)) facet = false;
    }
    if (!facet) {
      report.fail("irredundant", "half-space " + std::to_string(k + 1) + " does not define a facet");
      irredundant = false;
    }
  }
  if (irredundant) report.pass("irredundant");
  return report;
}

std::vector<Vertex> enumerate_vertices(const LabelledPolytope& p) {
  if (p.dim == 0) throw DegeneratePolytope("dimension must be positive");
  for (const auto& f : p.facets)
    if (f.half_space.u.size() != p.dim) throw DegeneratePolytope("normal of wrong length");
  const auto h = halfspaces_of(p);
  if (!bounded(h)) throw DegeneratePolytope("the polyhedron is unbounded");
  auto verts = raw_vertices(h);
  if (verts.empty()) throw DegeneratePolytope("the polytope is empty");
  if (affine_rank(points_of(verts), p.dim) < p.dim)
    throw DegeneratePolytope("the polytope has empty interior");
  return verts;
}

SmoothnessReport is_smooth(const LabelledPolytope& p) {
  SmoothnessReport out;
  const IntMatrix normals = p.normal_matrix();
  for (const auto& v : enumerate_vertices(p)) {
    bool ok = v.active_facets.size() == p.dim;
    if (ok) ok = abs(determinant(normals.select_columns(v.active_facets))) == 1;
    if (!ok) {
      out.smooth = false;
      out.offending.push_back(v);
    }
  }
  return out;
}

StackyFan normal_fan(const LabelledPolytope& p) {
  Fan fan;
  fan.dim = p.dim;
  for (const auto& f : p.facets) fan.rays.push_back(f.half_space.u);
  for (const auto& v : enumerate_vertices(p)) {
    if (v.active_facets.size() > p.dim) {
      std::string pt;
      for (std::size_t i = 0; i < v.point.size(); ++i) pt += (i ? "," : "") + to_string(v.point[i]);
      throw NonSimpleVertex("vertex (" + pt + ") lies on " + std::to_string(v.active_facets.size()) +
                            " facets; the normal fan is not simplicial");
    }
    fan.max_cones.push_back(v.active_facets);
  }
  std::sort(fan.max_cones.begin(), fan.max_cones.end());
  return StackyFan::make(std::move(fan), p.labels());
}

LabelledPolytope translated(const LabelledPolytope& p, const RatVector& c) {
  LabelledPolytope out = p;
  for (auto& f : out.facets) f.half_space.eta -= pairing(c, f.half_space.u);
  return out;
}

LabelledPolytope permuted(const LabelledPolytope& p, const std::vector<std::size_t>& perm) {
  LabelledPolytope out;
  out.dim = p.dim;
  for (auto k : perm) out.facets.push_back(p.facets.at(k));
  return out;
}

}  // namespace toristack
