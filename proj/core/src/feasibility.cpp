#include "toristack/feasibility.hpp"

#include <algorithm>
#include <set>

namespace toristack {

namespace {

// An affine form coef.r + constant together with its provenance:
//   coef.r + constant == sum_i y_i (a_i.r - b_i) + sum_j lambda_j r_j
// identically in r. Equalities carry lambda = 0.
struct Row {
  RatVector coef;
  Rational constant;
  RatVector y;
  RatVector lambda;

  void axpy(const Rational& f, const Row& o) {
    if (f == 0) return;
    for (std::size_t j = 0; j < coef.size(); ++j) coef[j] += f * o.coef[j];
    constant += f * o.constant;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += f * o.y[i];
    for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] += f * o.lambda[j];
  }
  void scale(const Rational& f) {
    for (auto& x : coef) x *= f;
    constant *= f;
    for (auto& x : y) x *= f;
    for (auto& x : lambda) x *= f;
  }
  bool coef_zero() const {
    return std::all_of(coef.begin(), coef.end(), [](const Rational& x) { return x == 0; });
  }
  std::size_t support() const {
    return static_cast<std::size_t>(
        std::count_if(lambda.begin(), lambda.end(), [](const Rational& x) { return x != 0; }));
  }
};

RatVector negated(RatVector v) {
  for (auto& x : v) x = -x;
  return v;
}

FeasibilityOutcome infeasible(RatVector farkas) {
  FeasibilityOutcome out;
  out.feasible = false;
  out.farkas = std::move(farkas);
  return out;
}

// Positive rescaling so that the first nonzero entry has absolute value 1.
void normalise(Row& r) {
  for (const auto& x : r.coef)
    if (x != 0) {
      r.scale(Rational(1) / (x < 0 ? Rational(-x) : x));
      return;
    }
  if (r.constant != 0) r.scale(Rational(1) / (r.constant < 0 ? Rational(-r.constant) : r.constant));
}

}  // namespace

FeasibilityOutcome solve_nonnegative(const RatMatrix& a, const RatVector& b) {
  const std::size_t k = a.rows(), n = a.cols();
  assert(b.size() == k);

  std::vector<Row> eqs(k);
  for (std::size_t i = 0; i < k; ++i) {
    eqs[i].coef = a.row(i);
    eqs[i].constant = -b[i];
    eqs[i].y.assign(k, 0);
    eqs[i].y[i] = 1;
    eqs[i].lambda.assign(n, 0);
  }
  std::vector<Row> ineqs(n);
  for (std::size_t j = 0; j < n; ++j) {
    ineqs[j].coef.assign(n, 0);
    ineqs[j].coef[j] = 1;
    ineqs[j].y.assign(k, 0);
    ineqs[j].lambda.assign(n, 0);
    ineqs[j].lambda[j] = 1;
  }

  // Gaussian substitution of the equalities.
  std::vector<bool> eliminated(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (variable, equation)
  for (std::size_t e = 0; e < k; ++e) {
    std::size_t v = 0;
    while (v < n && (eliminated[v] || eqs[e].coef[v] == 0)) ++v;
    if (v == n) {
      const Rational& c = eqs[e].constant;
      if (c != 0) return infeasible(c > 0 ? eqs[e].y : negated(eqs[e].y));
      continue;
    }
    eqs[e].scale(Rational(1) / eqs[e].coef[v]);
    for (std::size_t f = 0; f < k; ++f)
      if (f != e && eqs[f].coef[v] != 0) eqs[f].axpy(-eqs[f].coef[v], eqs[e]);
    for (auto& g : ineqs)
      if (g.coef[v] != 0) g.axpy(-g.coef[v], eqs[e]);
    eliminated[v] = true;
    pivots.emplace_back(v, e);
  }

  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n; ++v)
    if (!eliminated[v]) free_vars.push_back(v);

  // Splits off constant rows; returns a Farkas vector on contradiction.
  auto sift = [&](std::vector<Row>& rows) -> std::optional<RatVector> {
    std::vector<Row> kept;
    std::set<std::pair<RatVector, Rational>> seen;
    for (auto& r : rows) {
      if (r.coef_zero()) {
        if (r.constant < 0) return negated(r.y);
        continue;
      }
      normalise(r);
      if (seen.emplace(r.coef, r.constant).second) kept.push_back(std::move(r));
    }
    rows = std::move(kept);
    return std::nullopt;
  };

  std::vector<Row> current = std::move(ineqs);
  if (auto y = sift(current)) return infeasible(std::move(*y));

  std::vector<std::vector<Row>> stages;
  for (std::size_t s = 0; s < free_vars.size(); ++s) {
    const std::size_t v = free_vars[s];
    stages.push_back(current);
    std::vector<Row> next, pos, neg;
    for (auto& r : current) {
      if (r.coef[v] > 0)
        pos.push_back(r);
      else if (r.coef[v] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row c = p;
        c.scale(-q.coef[v]);
        c.axpy(p.coef[v], q);
        c.coef[v] = 0;
        // Chernikov/Kohler: after s+1 eliminations a row built from more
        // than s+2 original inequalities is implied by the others.
        if (c.support() > s + 2) continue;
        next.push_back(std::move(c));
      }
    current = std::move(next);
    if (auto y = sift(current)) return infeasible(std::move(*y));
  }

  RatVector r(n, 0);
  for (std::size_t s = free_vars.size(); s-- > 0;) {
    const std::size_t v = free_vars[s];
    std::optional<Rational> lo, hi;
    for (const auto& row : stages[s]) {
      if (row.coef[v] == 0) continue;
      Rational rest = row.constant;
      for (std::size_t j = 0; j < n; ++j)
        if (j != v && row.coef[j] != 0) rest += row.coef[j] * r[j];
      const Rational bound = -rest / row.coef[v];
      if (row.coef[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo)
      r[v] = *lo;
    else if (hi)
      r[v] = std::min(*hi, Rational(0));
    else
      r[v] = 0;
  }
  for (const auto& [v, e] : pivots) {
    Rational value = -eqs[e].constant;
    for (std::size_t j = 0; j < n; ++j)
      if (j != v) value -= eqs[e].coef[j] * r[j];
    r[v] = value;
  }

  FeasibilityOutcome out;
  out.feasible = true;
  out.witness = std::move(r);
  assert(verify_witness(a, b, out.witness, false));
  return out;
}

FeasibilityOutcome solve_strictly_positive(const RatMatrix& a, const RatVector& b) {
  const std::size_t k = a.rows(), n = a.cols();
  RatMatrix lifted(k, n + 1);
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      lifted(i, j) = a(i, j);
      row_sum += a(i, j);
    }
    lifted(i, n) = -b[i];
    rhs[i] = b[i] - row_sum;
  }
  auto lifted_out = solve_nonnegative(lifted, rhs);
  if (!lifted_out.feasible) return lifted_out;

  const Rational t = 1 + lifted_out.witness[n];
  FeasibilityOutcome out;
  out.feasible = true;
  out.witness.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.witness[j] = (1 + lifted_out.witness[j]) / t;
  assert(verify_witness(a, b, out.witness, true));
  return out;
}

bool verify_witness(const RatMatrix& a, const RatVector& b, const RatVector& r, bool strict) {
  if (r.size() != a.cols() || b.size() != a.rows()) return false;
  for (const auto& x : r)
    if (x < 0 || (strict && x == 0)) return false;
  return a * r == b;
}

namespace {
RatVector left_multiply(const RatVector& y, const RatMatrix& a) {
  RatVector out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += y[i] * a(i, j);
  return out;
}
Rational dot(const RatVector& x, const RatVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
}  // namespace

bool verify_farkas(const RatMatrix& a, const RatVector& b, const RatVector& y) {
  if (y.size() != a.rows() || b.size() != a.rows()) return false;
  for (const auto& x : left_multiply(y, a))
    if (x < 0) return false;
  return dot(y, b) < 0;
}

bool verify_strict_farkas(const RatMatrix& a, const RatVector& b, const RatVector& y) {
  if (y.size() != a.rows() || b.size() != a.rows()) return false;
  Rational total = 0;
  for (const auto& x : left_multiply(y, a)) {
    if (x < 0) return false;
    total += x;
  }
  const Rational yb = dot(y, b);
  return yb <= 0 && yb < total;
}

}  // namespace toristack
