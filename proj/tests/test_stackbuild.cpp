#include <toristack/stackbuild.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace toristack;

namespace {

Fan p2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {0, 2}, {1, 2}};
  return f;
}

Fan wp112_fan() {
  Fan f = p2_fan();
  f.rays[2] = {-1, -2};
  return f;
}

Fan line_fan() {
  Fan f;
  f.dim = 1;
  f.rays = {{1}, {-1}};
  f.max_cones = {{0}, {1}};
  return f;
}

DiagGroupPresentation presentation(std::size_t free, IntVector torsion, const IntMatrix& exponents) {
  DiagGroupPresentation g;
  g.ambient_rank = exponents.rows();
  g.free_rank = free;
  g.torsion = std::move(torsion);
  g.exponents = exponents;
  return g;
}

StackyFan random_stacky_fan(std::mt19937_64& rng, std::size_t d, std::size_t max_rays, int max_label) {
  auto f = oracle::random_complete_fan(rng, d, max_rays);
  IntVector labels;
  for (std::size_t j = 0; j < f.ray_count(); ++j) labels.push_back(1 + static_cast<int>(rng() % max_label));
  return StackyFan::make(std::move(f), labels);
}

std::vector<ZeroPattern> every_pattern(std::size_t m) {
  std::vector<ZeroPattern> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1) idx.push_back(j);
    out.emplace_back(idx);
  }
  return out;
}

}  // namespace

TEST(StackyFan, BetaAndValidation) {
  const auto sf = StackyFan::make(p2_fan(), {1, 1, 2});
  EXPECT_EQ(sf.beta, (IntMatrix{{1, 0, -2}, {0, 1, -2}}));
  EXPECT_TRUE(validate_stacky_fan(sf).ok());
  EXPECT_EQ(sf.with_trivial_labels().beta, p2_fan().ray_matrix());
  EXPECT_THROW(StackyFan::make(p2_fan(), {1, 1}), InvalidInput);
  EXPECT_THROW(StackyFan::make(p2_fan(), {1, 0, 1}), InvalidInput);
}

TEST(Groups, ProjectivePlaneLabels112) {
  const auto sf = StackyFan::make(p2_fan(), {1, 1, 2});
  const auto h = build_H(sf);
  EXPECT_EQ(h.group(), (FinAbGroup{1, {}}));
  EXPECT_EQ(annihilator(h), annihilator(presentation(1, {}, IntMatrix{{2}, {2}, {1}})));
  EXPECT_TRUE(is_injective(h));
  EXPECT_TRUE(same_data(h, build_kerbar(sf)));
  EXPECT_EQ(build_kerbar(sf).flavor, GroupFlavor::compact);
}

TEST(Groups, ProjectivePlaneLabels222) {
  const auto sf = StackyFan::make(p2_fan(), {2, 2, 2});
  const auto h = build_H(sf);
  EXPECT_EQ(to_string(h.group()), "Z/2 + Z/2 + Z");
  // (a, b, t) -> ((-1)^a t, (-1)^b t, t)
  const auto expected = presentation(1, {2, 2}, IntMatrix{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}});
  EXPECT_EQ(annihilator(h), annihilator(expected));
  EXPECT_EQ(canonical_presentation(annihilator(expected), 3, GroupFlavor::algebraic), h);
  EXPECT_TRUE(is_injective(h));
  EXPECT_TRUE(same_data(h, build_kerbar(sf)));
}

TEST(Groups, WeightedProjectiveLine) {
  const auto sf = StackyFan::make(wp112_fan(), {1, 1, 1});
  const auto h = build_H(sf);
  EXPECT_EQ(h.group(), (FinAbGroup{1, {}}));
  EXPECT_EQ(annihilator(h), annihilator(presentation(1, {}, IntMatrix{{1}, {2}, {1}})));
}

TEST(Groups, Conehead) {
  for (long long k = 1; k <= 6; ++k) {
    const auto sf = StackyFan::make(line_fan(), {k, 1});
    const auto h = build_H(sf);
    IntMatrix e(2, 1);
    e(0, 0) = 1;
    e(1, 0) = k;
    EXPECT_EQ(annihilator(h), annihilator(presentation(1, {}, e))) << k;
    EXPECT_TRUE(same_data(h, build_kerbar(sf)));
    EXPECT_EQ(isotropy(sf, h, ZeroPattern({0})).group, FinAbGroup::from_orders({Integer(k)}));
    EXPECT_TRUE(isotropy(sf, h, ZeroPattern({1})).group.is_trivial());
  }
}

TEST(Groups, AnnihilatorDistinguishesSubgroups) {
  const auto a = presentation(1, {}, IntMatrix{{1}, {1}});
  const auto b = presentation(1, {}, IntMatrix{{1}, {2}});
  const auto c = presentation(1, {}, IntMatrix{{-1}, {-1}});
  EXPECT_NE(annihilator(a), annihilator(b));
  EXPECT_EQ(annihilator(a), annihilator(c));
  EXPECT_FALSE(is_injective(presentation(1, {}, IntMatrix{{2}, {2}})));
}

TEST(Isotropy, ProjectivePlaneTables) {
  const auto sf112 = StackyFan::make(p2_fan(), {1, 1, 2});
  const auto h112 = build_H(sf112);
  for (const auto& p : every_pattern(3)) {
    const auto iso = isotropy(sf112, h112, p);
    EXPECT_EQ(iso.admissible, p.size() < 3);
    if (!iso.admissible) continue;
    const bool two = p.contains(2);
    EXPECT_EQ(iso.group, two ? FinAbGroup::cyclic(2) : FinAbGroup::trivial()) << to_string(p);
  }
  const auto sf222 = StackyFan::make(p2_fan(), {2, 2, 2});
  const auto h222 = build_H(sf222);
  for (const auto& p : every_pattern(3)) {
    if (p.size() == 3) continue;
    const auto g = isotropy(sf222, h222, p).group;
    EXPECT_EQ(g, FinAbGroup::from_orders(IntVector(p.size(), 2))) << to_string(p);
  }
  const auto wp = StackyFan::make(wp112_fan(), {1, 1, 1});
  const auto hwp = build_H(wp);
  for (const auto& p : every_pattern(3)) {
    if (p.size() == 3) continue;
    const bool special = p == ZeroPattern({0, 2});
    EXPECT_EQ(isotropy(wp, hwp, p).group, special ? FinAbGroup::cyclic(2) : FinAbGroup::trivial())
        << to_string(p);
  }
}

TEST(Isotropy, BothSidesAgreeWithDirectStabilizer) {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 60; ++it) {
    const auto sf = random_stacky_fan(rng, 1 + it % 3, 7, 3);
    const auto h = build_H(sf);
    const auto k = build_kerbar(sf);
    for (const auto& p : admissible_patterns(sf.fan)) {
      const auto direct = kernel_stabilizer(sf, p);
      EXPECT_EQ(isotropy(sf, h, p).group, direct);
      EXPECT_EQ(isotropy(sf, k, p).group, direct);
    }
  }
}

TEST(Charts, MatchEnumeratedStabilizer) {
  std::mt19937_64 rng(67);
  for (int it = 0; it < 60; ++it) {
    const auto sf = random_stacky_fan(rng, 1 + it % 3, 7, 3);
    const auto h = build_H(sf);
    for (const auto& cone : sf.fan.max_cones) {
      const auto chart = local_chart(sf, cone);
      EXPECT_EQ(chart.order, chart.chart_group.order());
      EXPECT_EQ(isotropy(sf, h, ZeroPattern(cone)).group, chart.chart_group);
      if (chart.order <= 200)
        EXPECT_EQ(oracle::group_torsion_counts(chart.chart_group, 12),
                  oracle::cone_stabilizer_torsion_counts(chart.beta_sigma, 12));
      const auto ext = chart_extension(sf, cone);
      EXPECT_TRUE(ext.multiplicative());
      EXPECT_EQ(ext.stacky, chart.chart_group);
    }
  }
}

TEST(Charts, WeightedProjectiveLineCone) {
  const auto sf = StackyFan::make(wp112_fan(), {1, 1, 1});
  const auto chart = local_chart(sf, {0, 2});
  EXPECT_EQ(chart.order, 2);
  EXPECT_EQ(chart.chart_group, FinAbGroup::cyclic(2));
  EXPECT_THROW(local_chart(sf, {0}), NotMaximalCone);
  EXPECT_THROW(local_chart(sf, {0, 1, 2}), NotMaximalCone);
}

TEST(Gamma, MatchesEnumeration) {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 60; ++it) {
    const auto sf = random_stacky_fan(rng, 1 + it % 3, 6, 3);
    Integer prod = 1;
    for (const auto& n : sf.labels) prod *= n;
    if (prod > 5000) continue;
    EXPECT_EQ(oracle::group_torsion_counts(finite_extension(sf), 12),
              oracle::gamma_torsion_counts(sf.beta, sf.labels, 12));
  }
}

TEST(Gamma, ProjectivePlaneLabels) {
  EXPECT_EQ(finite_extension(StackyFan::make(p2_fan(), {1, 1, 2})), FinAbGroup::cyclic(2));
  EXPECT_EQ(finite_extension(StackyFan::make(p2_fan(), {2, 2, 2})), FinAbGroup::from_orders({2, 2, 2}));
  EXPECT_TRUE(finite_extension(StackyFan::make(wp112_fan(), {1, 1, 1})).is_trivial());
}

TEST(Groups, KerbarEqualsHOnRandomFans) {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 100; ++it) {
    const auto sf = random_stacky_fan(rng, 1 + it % 3, 8, 4);
    const auto h = build_H(sf);
    const auto k = build_kerbar(sf);
    EXPECT_TRUE(same_data(h, k)) << it;
    EXPECT_EQ(annihilator(kerbar_direct(sf)), annihilator(h)) << it;
    EXPECT_TRUE(is_injective(h));
    EXPECT_EQ(h.group().free_rank, sf.ray_count() - sf.dim());
  }
}
