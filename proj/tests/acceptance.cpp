// One PASS/FAIL line per acceptance criterion; exits 1 when any fails.

#include <toristack/report.hpp>

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

using namespace toristack;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

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

LabelledPolytope fixture(const std::string& name) { return parse_input(*fixture_text(name)).polytope; }

const std::vector<std::string> kCertified = {"p2_labels_1_1_2", "p2_labels_2_2_2", "wp112", "conehead_1",
                                             "conehead_2", "conehead_3", "conehead_5"};

std::vector<std::string> all_fixtures() {
  auto out = kCertified;
  out.push_back("interval_unlabelled");
  return out;
}

DiagGroupPresentation presentation(std::size_t free, IntVector torsion, const IntMatrix& exponents) {
  DiagGroupPresentation g;
  g.ambient_rank = exponents.rows();
  g.free_rank = free;
  g.torsion = std::move(torsion);
  g.exponents = exponents;
  return g;
}

bool unimodular(const IntMatrix& a) { return abs(determinant(a)) == 1; }

void smith_factors() {
  const std::vector<std::pair<IntMatrix, IntVector>> cases = {
      {p2_fan().ray_matrix().transpose(), {1, 1}},
      {StackyFan::make(p2_fan(), {2, 2, 2}).beta.transpose(), {2, 2}},
      {wp112_fan().ray_matrix().transpose(), {1, 1}},
  };
  for (const auto& [a, factors] : cases) {
    const auto s = smith_normal_form(a);
    require(s.invariant_factors == factors, "invariant factors");
    require(s.U * a * s.V == s.S, "U A V != S");
    require(unimodular(s.U) && unimodular(s.V), "U or V not unimodular");
  }
}

void cokernel_groups() {
  require(cokernel_group(p2_fan().ray_matrix().transpose()) == FinAbGroup{1, {}}, "coker beta_1*");
  require(cokernel_group(StackyFan::make(p2_fan(), {2, 2, 2}).beta.transpose()) == FinAbGroup{1, {2, 2}},
          "coker beta_2*");
  require(cokernel_group(wp112_fan().ray_matrix().transpose()) == FinAbGroup{1, {}}, "coker beta* of P(1,1,2)");
}

std::vector<FinAbGroup> table(const StackyFan& sf, const DiagGroupPresentation& g) {
  std::vector<FinAbGroup> out;
  for (const auto& p : admissible_patterns(sf.fan)) out.push_back(isotropy(g, p).group);
  return out;
}

void check_embedding(const StackyFan& sf, const DiagGroupPresentation& expected, const std::string& label) {
  const auto h = build_H(sf);
  require(annihilator(h) == annihilator(expected), label + ": different subgroup");
  require(canonical_presentation(annihilator(expected), h.ambient_rank, GroupFlavor::algebraic) == h,
          label + ": canonical forms differ");
  require(table(sf, h) == table(sf, expected), label + ": isotropy tables differ");
}

void group_embeddings() {
  check_embedding(StackyFan::make(p2_fan(), {1, 1, 2}), presentation(1, {}, IntMatrix{{2}, {2}, {1}}),
                  "P2 (1,1,2)");
  check_embedding(StackyFan::make(p2_fan(), {2, 2, 2}),
                  presentation(1, {2, 2}, IntMatrix{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}), "P2 (2,2,2)");
  check_embedding(StackyFan::make(wp112_fan(), {1, 1, 1}), presentation(1, {}, IntMatrix{{1}, {2}, {1}}),
                  "P(1,1,2)");
  for (long long k = 1; k <= 8; ++k) {
    IntMatrix e(2, 1);
    e(0, 0) = 1;
    e(1, 0) = k;
    check_embedding(StackyFan::make(line_fan(), {k, 1}), presentation(1, {}, e),
                    "conehead k=" + std::to_string(k));
  }
}

void expect_table(const StackyFan& sf, const std::function<FinAbGroup(const ZeroPattern&)>& expected,
                  const std::string& label) {
  const auto h = build_H(sf);
  const auto k = build_kerbar(sf);
  for (const auto& p : admissible_patterns(sf.fan)) {
    const auto want = expected(p);
    require(isotropy(h, p).group == want, label + " complex side at " + to_string(p));
    require(isotropy(k, p).group == want, label + " symplectic side at " + to_string(p));
  }
}

void isotropy_groups() {
  const auto z2 = FinAbGroup::cyclic(2);
  expect_table(StackyFan::make(wp112_fan(), {1, 1, 1}),
               [&](const ZeroPattern& p) { return p == ZeroPattern({0, 2}) ? z2 : FinAbGroup::trivial(); },
               "P(1,1,2)");
  for (long long k = 1; k <= 8; ++k)
    expect_table(StackyFan::make(line_fan(), {k, 1}),
                 [&](const ZeroPattern& p) {
                   return p == ZeroPattern({0}) ? FinAbGroup::from_orders({Integer(k)}) : FinAbGroup::trivial();
                 },
                 "conehead");
  expect_table(StackyFan::make(p2_fan(), {1, 1, 2}),
               [&](const ZeroPattern& p) { return p.contains(2) ? z2 : FinAbGroup::trivial(); }, "P2 (1,1,2)");
  const auto trivial = [](const ZeroPattern&) { return FinAbGroup::trivial(); };
  expect_table(StackyFan::make(p2_fan(), {1, 1, 1}), trivial, "P2");
  expect_table(StackyFan::make(line_fan(), {1, 1}), trivial, "interval");
  Fan square;
  square.dim = 2;
  square.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  square.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  expect_table(StackyFan::make(square, {1, 1, 1, 1}), trivial, "P1 x P1");
}

void gamma_groups() {
  std::ostringstream seen;
  bool ok = true;
  for (const IntVector& labels : {IntVector{1, 1, 2}, IntVector{2, 2, 2}}) {
    const auto g = finite_extension(StackyFan::make(p2_fan(), labels));
    seen << " labels (" << labels[0] << "," << labels[1] << "," << labels[2] << "): " << to_string(g) << ";";
    ok = ok && g == FinAbGroup::cyclic(2);
  }
  require(ok, "Gamma is not Z/2 for every labelling;" + seen.str());
}

void local_charts() {
  const auto sf = StackyFan::make(wp112_fan(), {1, 1, 1});
  const auto chart = local_chart(sf, {0, 2});
  require(chart.order == 2 && chart.chart_group == FinAbGroup::cyclic(2), "chart at {1,3}");
  for (const auto& name : all_fixtures()) {
    const auto fan = normal_fan(fixture(name));
    for (const auto& cone : fan.fan.max_cones) {
      const auto ext = chart_extension(fan, cone);
      Integer prod = 1;
      for (auto j : cone) prod *= fan.labels[j];
      require(ext.cyclic_part.order() == prod, name + ": cyclic part");
      require(ext.multiplicative(), name + ": |H(beta_sigma)| != prod n_j |H(beta_sigma,0)|");
    }
  }
}

StackyFan random_stacky_fan(std::mt19937_64& rng, std::size_t d, std::size_t max_rays, int max_label) {
  auto f = oracle::random_complete_fan(rng, d, max_rays);
  IntVector labels;
  for (std::size_t j = 0; j < f.ray_count(); ++j) labels.push_back(1 + static_cast<int>(rng() % max_label));
  return StackyFan::make(std::move(f), labels);
}

void kerbar_matches_H() {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 100; ++it) {
    const auto sf = random_stacky_fan(rng, 1 + it % 3, 8, 4);
    require(sf.ray_count() <= 8 && validate_stacky_fan(sf).ok(), "generator produced an invalid fan");
    const auto h = build_H(sf);
    const auto k = build_kerbar(sf);
    require(h.free_rank == k.free_rank && h.torsion == k.torsion && h.exponents == k.exponents,
            "sample " + std::to_string(it) + " differs");
  }
}

void mu_independence() {
  for (const auto& name : all_fixtures()) {
    const auto p = fixture(name);
    require(check_mu_independence(normal_fan(p), p.eta()).independent, name);
  }
  std::mt19937_64 rng(77);
  const std::vector<LabelledPolytope> bases = {fixture("p2_labels_1_1_2"), fixture("wp112"),
                                               fixture("interval_unlabelled")};
  for (int it = 0; it < 60; ++it) {
    auto p = bases[it % bases.size()];
    for (auto& f : p.facets) f.label = 1 + rng() % 5;
    require(check_mu_independence(normal_fan(p), p.eta()).independent, "random labels");
  }
}

LabelledPolytope random_translate(std::mt19937_64& rng, const LabelledPolytope& p) {
  RatVector c;
  for (std::size_t i = 0; i < p.dim; ++i)
    c.emplace_back(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 4));
  return translated(p, c);
}

LabelledPolytope random_permute(std::mt19937_64& rng, const LabelledPolytope& p) {
  std::vector<std::size_t> perm(p.facet_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(p, perm);
}

std::vector<MoritaCertificate> emitted;

void verdicts() {
  for (const auto& name : kCertified) {
    emitted.push_back(morita_certificate(fixture(name)));
    require(emitted.back().verdict, name);
  }
  std::mt19937_64 rng(99);
  for (int it = 0; it < 60; ++it) {
    const auto& name = kCertified[it % kCertified.size()];
    const auto base = fixture(name);
    emitted.push_back(morita_certificate(random_translate(rng, base)));
    require(emitted.back().verdict, name + " translated");
    emitted.push_back(morita_certificate(random_permute(rng, base), {2}));
    require(emitted.back().verdict, name + " permuted");
    emitted.push_back(morita_certificate(random_permute(rng, random_translate(rng, base))));
    require(emitted.back().verdict, name + " translated and permuted");
  }
}

void oracle_equivalence() {
  std::mt19937_64 rng(123);
  int matrices = 0;
  while (matrices < 200) {
    const std::size_t r = 1 + rng() % 3, c = r + rng() % 3;
    const auto a = oracle::random_matrix(rng, r, c, -4, 4);
    if (rank(a) < r) continue;
    std::uint64_t order = 0;
    try {
      order = oracle::quotient_order(a);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (order > 1000) continue;
    require(cokernel_group(a).order() == order, "cokernel order");
    ++matrices;
  }
  for (int it = 0; it < 60; ++it) {
    const auto sf = random_stacky_fan(rng, 1 + it % 3, 6, 3);
    const auto h = build_H(sf);
    const auto k = build_kerbar(sf);
    for (const auto& cone : sf.fan.max_cones) {
      const auto chart = local_chart(sf, cone);
      require(isotropy(h, ZeroPattern(cone)).group == chart.chart_group, "complex isotropy vs chart");
      require(isotropy(k, ZeroPattern(cone)).group == chart.chart_group, "symplectic isotropy vs chart");
      if (chart.order <= 200)
        require(oracle::group_torsion_counts(chart.chart_group, 12) ==
                    oracle::cone_stabilizer_torsion_counts(chart.beta_sigma, 12),
                "chart vs enumerated stabiliser");
    }
  }
}

void evidence_reverifies() {
  if (emitted.empty()) verdicts();
  for (const auto& c : emitted) {
    const auto problems = reverify(c);
    require(problems.empty(), problems.empty() ? "" : problems.front());
    for (const auto& r : c.level_in_V.evidence) require(reverify(c.moment, r), "inclusion evidence");
    for (const auto& r : c.m2.evidence) require(reverify(c.moment, r), "strict evidence");
  }
  for (const auto& name : all_fixtures()) {
    const auto report = run_command(Subcommand::certify, parse_input(*fixture_text(name)));
    const auto back = verify_report(parse_report(render_json(report)));
    require(back.reverification.empty() && back.passed, name + " after a JSON round trip");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)()>> criteria = {
      {"smith normal form of the example matrices", smith_factors},
      {"cokernel groups of the example duals", cokernel_groups},
      {"group embeddings of the examples", group_embeddings},
      {"isotropy groups of the examples", isotropy_groups},
      {"finite extension Gamma is Z/2 for both P2 labellings", gamma_groups},
      {"local charts and order multiplicativity", local_charts},
      {"ker(beta-bar) equals H(beta) on 100 random stacky fans", kerbar_matches_H},
      {"moment map independence of the labels", mu_independence},
      {"verdicts on fixtures, translations and permutations", verdicts},
      {"oracle equivalence for cokernels and charts", oracle_equivalence},
      {"feasibility evidence re-verifies", evidence_reverifies},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    try {
      check();
      std::cout << "PASS " << name << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
