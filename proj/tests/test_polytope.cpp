#include <toristack/polytope.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace toristack;

namespace {

LabelledPolytope make(std::size_t d, std::vector<std::pair<IntVector, Rational>> hs, IntVector labels = {}) {
  LabelledPolytope p;
  p.dim = d;
  for (std::size_t j = 0; j < hs.size(); ++j)
    p.facets.push_back({{hs[j].first, hs[j].second}, labels.empty() ? Integer(1) : labels[j]});
  return p;
}

LabelledPolytope simplex() { return make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}}); }
LabelledPolytope wp112() { return make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -2}, 2}}); }
LabelledPolytope interval() { return make(1, {{{1}, 0}, {{-1}, 1}}); }
LabelledPolytope square() { return make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}}); }

std::vector<RatVector> points(const std::vector<Vertex>& vs) {
  std::vector<RatVector> out;
  for (const auto& v : vs) out.push_back(v.point);
  return out;
}

RatVector pt(long long a, long long b) { return {Rational(a), Rational(b)}; }

}  // namespace

TEST(Polytope, SimplexVerticesAndFan) {
  const auto p = simplex();
  EXPECT_TRUE(validate_polytope(p).ok());
  const auto vs = enumerate_vertices(p);
  EXPECT_EQ(points(vs), (std::vector<RatVector>{pt(0, 0), pt(0, 1), pt(1, 0)}));
  EXPECT_EQ(vs[0].active_facets, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(is_smooth(p).smooth);
  const auto sf = normal_fan(p);
  EXPECT_EQ(sf.fan.max_cones, (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(sf.beta, (IntMatrix{{1, 0, -1}, {0, 1, -1}}));
}

TEST(Polytope, WeightedProjectiveLineIsNotSmooth) {
  const auto p = wp112();
  EXPECT_TRUE(validate_polytope(p).ok());
  EXPECT_EQ(points(enumerate_vertices(p)), (std::vector<RatVector>{pt(0, 0), pt(0, 1), pt(2, 0)}));
  const auto s = is_smooth(p);
  EXPECT_FALSE(s.smooth);
  ASSERT_EQ(s.offending.size(), 1u);
  EXPECT_EQ(s.offending[0].point, pt(0, 1));
}

TEST(Polytope, IntervalAndSquare) {
  EXPECT_TRUE(validate_polytope(interval()).ok());
  EXPECT_EQ(enumerate_vertices(interval()).size(), 2u);
  EXPECT_TRUE(normal_fan(interval()).fan.max_cones == (std::vector<std::vector<std::size_t>>{{0}, {1}}));
  EXPECT_TRUE(validate_polytope(square()).ok());
  EXPECT_EQ(points(enumerate_vertices(square())),
            (std::vector<RatVector>{pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)}));
  EXPECT_TRUE(is_smooth(square()).smooth);
}

TEST(Polytope, RationalOffsets) {
  const auto p = make(2, {{{1, 0}, Rational(1, 2)}, {{0, 1}, 0}, {{-1, -1}, Rational(1, 3)}});
  ASSERT_TRUE(validate_polytope(p).ok());
  const auto vs = enumerate_vertices(p);
  ASSERT_EQ(vs.size(), 3u);
  EXPECT_EQ(vs[0].point, (RatVector{Rational(-1, 2), Rational(0)}));
}

TEST(Polytope, ValidationFailures) {
  EXPECT_FALSE(validate_polytope(make(2, {{{2, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}})).passed("primitive"));
  EXPECT_FALSE(validate_polytope(make(2, {{{1, 0}, 0}, {{0, 1}, 0}})).passed("bounded"));
  EXPECT_FALSE(validate_polytope(make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 0}})).passed("full_dimensional"));
  EXPECT_FALSE(validate_polytope(make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -1}})).ok());
  EXPECT_FALSE(validate_polytope(make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}, {{-1, 0}, 5}})).passed("irredundant"));
  EXPECT_FALSE(validate_polytope(make(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}}, {1, 0, 1})).passed("labels"));
  EXPECT_FALSE(validate_polytope(make(2, {{{1, 0, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}})).passed("dimension"));
  EXPECT_THROW(enumerate_vertices(make(2, {{{1, 0}, 0}, {{0, 1}, 0}})), DegeneratePolytope);
}

TEST(Polytope, NonSimpleVertexIsReported) {
  // Square pyramid: the apex has four active facets.
  const auto pyramid = make(3, {{{0, 0, 1}, 0}, {{1, 0, -1}, 1}, {{-1, 0, -1}, 1}, {{0, 1, -1}, 1},
                                {{0, -1, -1}, 1}});
  ASSERT_TRUE(validate_polytope(pyramid).ok());
  EXPECT_THROW(normal_fan(pyramid), NonSimpleVertex);
}

TEST(Polytope, VerticesMatchConvexHull) {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 200; ++it) {
    const auto rp = oracle::random_polygon(rng, 4, 3 + rng() % 6);
    ASSERT_TRUE(validate_polytope(rp.polytope).ok()) << it;
    EXPECT_EQ(points(enumerate_vertices(rp.polytope)), rp.hull) << it;
  }
}

TEST(Polytope, TranslationMovesVertices) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const auto rp = oracle::random_polygon(rng, 3, 6);
    const RatVector c{Rational(static_cast<long long>(rng() % 7) - 3, 1 + rng() % 3),
                      Rational(static_cast<long long>(rng() % 7) - 3, 1 + rng() % 3)};
    const auto moved = translated(rp.polytope, c);
    auto expected = rp.hull;
    for (auto& v : expected)
      for (std::size_t i = 0; i < 2; ++i) v[i] += c[i];
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(points(enumerate_vertices(moved)), expected);
    EXPECT_EQ(normal_fan(moved).fan, normal_fan(rp.polytope).fan);
  }
}

TEST(Polytope, PermutationRelabelsFacets) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 50; ++it) {
    auto p = oracle::random_polygon(rng, 3, 7).polytope;
    for (auto& f : p.facets) f.label = 1 + rng() % 3;
    std::vector<std::size_t> perm(p.facet_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto q = permuted(p, perm);
    for (std::size_t k = 0; k < perm.size(); ++k) EXPECT_EQ(q.facets[k], p.facets[perm[k]]);
    EXPECT_EQ(points(enumerate_vertices(q)), points(enumerate_vertices(p)));
    const auto vq = enumerate_vertices(q), vp = enumerate_vertices(p);
    for (std::size_t i = 0; i < vp.size(); ++i) {
      std::vector<std::size_t> mapped;
      for (auto k : vq[i].active_facets) mapped.push_back(perm[k]);
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(mapped, vp[i].active_facets);
    }
  }
}
