#include "toristack/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace toristack {

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(),
                    [](const Integer& d) { return d != 0; }));
}

FinAbGroup FinAbGroup::cyclic(const Integer& n) { return from_orders({n}); }

FinAbGroup FinAbGroup::from_orders(const IntVector& orders, std::size_t extra_free) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  FinAbGroup g = cokernel_group(diag);
  g.free_rank += extra_free;
  return g;
}

Integer FinAbGroup::order() const {
  if (free_rank != 0) return 0;
  return torsion_order();
}

Integer FinAbGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string to_string(const FinAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : g.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  for (std::size_t i = 0; i < g.free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  return os.str();
}

namespace {

// Locates the nonzero entry of smallest absolute value in the trailing
// submatrix starting at (t, t).
bool find_min_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      const Integer& x = s(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!found || ax < best) {
        best = std::move(ax);
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  const std::size_t n = std::min(r, c);

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_pivot(s, t, pi, pj)) break;
    for (;;) {
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_min_pivot(s, t, pi, pj);
        continue;
      }

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) {
        find_min_pivot(s, t, pi, pj);
        continue;
      }
      break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(s), std::move(v), {}};
  out.invariant_factors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.invariant_factors.push_back(out.S(i, i));
  return out;
}

FinAbGroup cokernel_group(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  FinAbGroup g;
  for (const auto& d : snf.invariant_factors) {
    if (d == 0)
      ++g.free_rank;
    else if (d != 1)
      g.torsion.push_back(d);
  }
  g.free_rank += a.rows() - snf.invariant_factors.size();
  return g;
}

CokernelPresentation cokernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const std::size_t r = a.rows();
  std::vector<std::size_t> torsion_rows, free_rows;
  IntVector orders;
  for (std::size_t i = 0; i < r; ++i) {
    const Integer d = i < snf.invariant_factors.size() ? snf.invariant_factors[i] : Integer(0);
    if (d == 0)
      free_rows.push_back(i);
    else if (d != 1) {
      torsion_rows.push_back(i);
      orders.push_back(d);
    }
  }

  CokernelPresentation out;
  out.group.torsion = orders;
  out.group.free_rank = free_rows.size();

  IntMatrix free_block = hermite_normal_form(snf.U.select_rows(free_rows));
  out.projection = IntMatrix(torsion_rows.size() + free_rows.size(), r);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    for (std::size_t j = 0; j < r; ++j)
      out.projection(k, j) = floor_mod(snf.U(torsion_rows[k], j), orders[k]);
  for (std::size_t k = 0; k < free_rows.size(); ++k)
    for (std::size_t j = 0; j < r; ++j)
      out.projection(torsion_rows.size() + k, j) = free_block(k, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const std::size_t rk = snf.rank();
  std::vector<std::size_t> idx;
  for (std::size_t j = rk; j < a.cols(); ++j) idx.push_back(j);
  IntMatrix basis_rows = snf.V.select_columns(idx).transpose();
  return hermite_normal_form(basis_rows).transpose();
}

DualizedMap dualize(const IntMatrix& beta) {
  if (rank(beta) < beta.rows())
    throw NonFiniteCokernel("beta has rank " + std::to_string(rank(beta)) + " < " +
                            std::to_string(beta.rows()) +
                            "; the cokernel is infinite (the fan has torus factors)");
  DualizedMap out;
  out.beta_star = beta.transpose();
  out.beta_vee = cokernel(out.beta_star);
  return out;
}

Integer determinant(const IntMatrix& a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t p = rk;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rk, p);
    for (std::size_t i = rk + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rk, col);
      m.add_row_multiple(i, rk, -f);
    }
    ++rk;
  }
  return rk;
}

std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t r = h.rows(), c = h.cols();
  std::size_t p = 0;
  for (std::size_t col = 0; col < c && p < r; ++col) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (h(i, col) != 0 && (best == r || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == r) break;
      h.swap_rows(p, best);
      bool done = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(p, col);
        h.add_row_multiple(i, p, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(p, col) == 0) continue;
    if (h(p, col) < 0) h.negate_row(p);
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = floor_div(h(i, col), h(p, col));
      h.add_row_multiple(i, p, -q);
    }
    ++p;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p; ++i) keep.push_back(i);
  return h.select_rows(keep);
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hermite_normal_form(a) == hermite_normal_form(b);
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(a.vstack(b));
}

std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) return std::nullopt;
  const std::size_t k = b.rows();
  // Pick k pivot columns of b by elimination on a copy.
  RatMatrix m = b;
  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < k; ++col) {
    std::size_t p = rk;
    while (p < k && m(p, col) == 0) ++p;
    if (p == k) continue;
    m.swap_rows(rk, p);
    for (std::size_t i = rk + 1; i < k; ++i) {
      if (m(i, col) == 0) continue;
      m.add_row_multiple(i, rk, -(m(i, col) / m(rk, col)));
    }
    pivots.push_back(col);
    ++rk;
  }
  if (rk < k) return std::nullopt;

  // Invert the k x k block b[:, pivots] by Gauss-Jordan.
  RatMatrix block = b.select_columns(pivots);
  RatMatrix inv = RatMatrix::identity(k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = col;
    while (block(p, col) == 0) ++p;
    block.swap_rows(col, p);
    inv.swap_rows(col, p);
    const Rational piv = block(col, col);
    for (std::size_t j = 0; j < k; ++j) {
      block(col, j) /= piv;
      inv(col, j) /= piv;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || block(i, col) == 0) continue;
      const Rational f = block(i, col);
      block.add_row_multiple(i, col, -f);
      inv.add_row_multiple(i, col, -f);
    }
  }
  RatMatrix x = a.select_columns(pivots) * inv;
  if (!(x * b == a)) return std::nullopt;
  return x;
}

IntMatrix annihilator_lattice(const IntMatrix& exponents, std::size_t free_rank,
                              const IntVector& torsion) {
  const std::size_t m = exponents.rows();
  const std::size_t s = torsion.size();
  assert(exponents.cols() == free_rank + s);
  IntMatrix system(free_rank + s, m + s);
  for (std::size_t g = 0; g < free_rank + s; ++g)
    for (std::size_t j = 0; j < m; ++j) system(g, j) = exponents(j, g);
  for (std::size_t i = 0; i < s; ++i) system(free_rank + i, m + i) = -torsion[i];
  IntMatrix kernel = integer_kernel(system);
  std::vector<std::size_t> w_rows;
  for (std::size_t j = 0; j < m; ++j) w_rows.push_back(j);
  return hermite_normal_form(kernel.select_rows(w_rows).transpose());
}

}  // namespace toristack
