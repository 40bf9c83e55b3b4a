#include "toristack/report.hpp"

#include <sstream>

namespace toristack {

namespace {

constexpr std::pair<Subcommand, const char*> kCommands[] = {
    {Subcommand::validate, "validate"}, {Subcommand::fan, "fan"},     {Subcommand::groups, "groups"},
    {Subcommand::charts, "charts"},     {Subcommand::isotropy, "isotropy"}, {Subcommand::moment, "moment"},
    {Subcommand::certify, "certify"},
};

template <class V>
std::string tuple(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string cone_text(const std::vector<std::size_t>& c) { return to_string(ZeroPattern(c)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

template <class T>
std::string columns_text(const Matrix<T>& a) {
  std::string s;
  for (std::size_t j = 0; j < a.cols(); ++j) s += (j ? " " : "") + tuple(a.col(j));
  return s.empty() ? "-" : s;
}

template <class T>
std::string rows_text(const Matrix<T>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.rows(); ++i) s += (i ? " " : "") + tuple(a.row(i));
  return s.empty() ? "-" : s;
}

void merge(ValidationReport& into, const ValidationReport& from, const std::string& prefix) {
  for (auto d : from.items) {
    d.check = prefix + d.check;
    into.items.push_back(std::move(d));
  }
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view s) {
  for (const auto& [c, name] : kCommands)
    if (s == name) return c;
  return std::nullopt;
}

std::string to_string(Subcommand c) {
  for (const auto& [k, name] : kCommands)
    if (k == c) return name;
  return "?";
}

Report run_command(Subcommand command, const InputDocument& doc, const RunOptions& options) {
  const bool needs_level = command == Subcommand::moment || command == Subcommand::certify;
  if (needs_level && doc.kind == InputKind::stacky_fan && !doc.eta)
    throw InvalidInput(to_string(command) + " needs facet offsets; add \"eta\" to the stacky fan");

  Report r;
  r.command = command;
  r.input = doc;
  std::optional<StackyFan> sf;
  RatVector eta;
  const FanValidationOptions fan_options{options.assert_complete};

  const std::size_t m = doc.kind == InputKind::polytope ? doc.polytope.facet_count() : doc.fan.ray_count();
  if (m > kMaxEnumeratedRays) {
    r.validation.fail("size", std::to_string(m) + " rays exceed the supported " +
                                  std::to_string(kMaxEnumeratedRays));
    return r;
  }

  if (doc.kind == InputKind::polytope) {
    r.validation = validate_polytope(doc.polytope);
    if (r.validation.ok()) {
      r.polytope = PolytopeStage{enumerate_vertices(doc.polytope), is_smooth(doc.polytope)};
      try {
        sf = normal_fan(doc.polytope);
        r.validation.pass("simple");
        merge(r.validation, validate_stacky_fan(*sf, fan_options), "normal_fan.");
      } catch (const NonSimpleVertex& e) {
        r.validation.fail("simple", e.what());
      }
    }
    eta = doc.polytope.eta();
  } else {
    r.validation = validate_fan(doc.fan, fan_options);
    bool labels_ok = doc.labels.size() == m;
    for (const auto& n : doc.labels) labels_ok = labels_ok && n >= 1;
    if (labels_ok)
      r.validation.pass("labels");
    else
      r.validation.fail("labels", "labels must be positive integers, one per ray");
    if (r.validation.ok()) sf = StackyFan::make(doc.fan, doc.labels);
    if (doc.eta) eta = *doc.eta;
  }
  if (!r.validation.ok() || !sf) return r;

  switch (command) {
    case Subcommand::validate:
      r.passed = true;
      break;
    case Subcommand::fan:
      r.stacky_fan = sf;
      r.passed = true;
      break;
    case Subcommand::groups: {
      GroupsStage g;
      g.H = build_H(*sf);
      g.kerbar = build_kerbar(*sf);
      g.presentations_agree = same_data(g.H, g.kerbar);
      g.splitting = check_splitting(*sf);
      g.gamma = finite_extension(*sf);
      g.mu_independence = check_mu_independence(*sf, eta.empty() ? std::nullopt : std::optional(eta));
      r.passed = g.presentations_agree && g.splitting.consistent && g.mu_independence.independent;
      r.groups = std::move(g);
      break;
    }
    case Subcommand::charts: {
      std::vector<ChartRow> rows;
      r.passed = true;
      for (const auto& cone : sf->fan.max_cones) {
        ChartRow row{local_chart(*sf, cone), chart_extension(*sf, cone)};
        r.passed = r.passed && row.extension.multiplicative() && row.chart.chart_group.order() == row.chart.order;
        rows.push_back(std::move(row));
      }
      r.charts = std::move(rows);
      break;
    }
    case Subcommand::isotropy:
      r.isotropy = isotropy_table(*sf, options.jobs);
      r.passed = true;
      for (const auto& row : *r.isotropy) r.passed = r.passed && row.match;
      break;
    case Subcommand::moment: {
      MomentStage s;
      s.data = moment_data(*sf, eta);
      s.regular_value = check_regular_value(s.data, sf->fan, options.jobs);
      s.inclusion = level_set_in_Cm(s.data, sf->fan, options.jobs);
      r.passed = s.regular_value.regular && s.inclusion.holds;
      r.moment = std::move(s);
      break;
    }
    case Subcommand::certify:
      r.certificate = morita_certificate(*sf, eta, CertifyOptions{options.jobs});
      r.reverification = reverify(*r.certificate);
      r.passed = r.certificate->verdict && r.reverification.empty();
      break;
  }
  return r;
}

Report verify_report(Report r) {
  if (!r.certificate) throw InvalidInput("the report carries no certificate");
  r.reverification = reverify(*r.certificate);
  const auto& c = *r.certificate;
  try {
    StackyFan expected;
    RatVector eta;
    if (r.input.kind == InputKind::polytope) {
      expected = normal_fan(r.input.polytope);
      eta = r.input.polytope.eta();
    } else {
      expected = StackyFan::make(r.input.fan, r.input.labels);
      if (r.input.eta) eta = *r.input.eta;
    }
    if (!(expected == c.stacky_fan)) r.reverification.push_back("certificate fan differs from the input");
    if (!eta.empty() && moment_data(expected, eta) != c.moment)
      r.reverification.push_back("certificate moment data differs from the input");
    if (build_H(expected) != c.H) r.reverification.push_back("H(beta) does not recompute");
    if (build_kerbar(expected) != c.kerbar) r.reverification.push_back("ker(beta-bar) does not recompute");
  } catch (const Error& e) {
    r.reverification.push_back(std::string("input does not rebuild: ") + e.what());
  }
  r.passed = c.verdict && r.reverification.empty();
  return r;
}

int exit_code(const Report& r) { return r.passed ? 0 : 1; }

namespace {

void render_group(std::ostream& os, const std::string& name, const DiagGroupPresentation& g) {
  os << "  " << name << " = " << to_string(g.group()) << " (" << to_string(g.flavor) << ")\n";
  os << "    exponent columns: " << columns_text(g.exponents) << "\n";
}

void render_feasibility(std::ostream& os, const FeasibilityResult& f) {
  os << "    " << to_string(f.pattern) << ": " << (f.feasible ? "feasible, r = " + tuple(f.witness)
                                                              : "infeasible, y = " + tuple(f.certificate))
     << "\n";
}

void render_isotropy(std::ostream& os, const std::vector<IsotropyRow>& rows) {
  os << "isotropy (pattern: symplectic | complex | direct)\n";
  for (const auto& row : rows)
    os << "  " << to_string(row.pattern) << ": " << to_string(row.symplectic) << " | "
       << to_string(row.complex) << " | " << to_string(row.direct) << (row.match ? "" : "  MISMATCH") << "\n";
}

void render_moment(std::ostream& os, const MomentData& md) {
  os << "  iota* rows: " << rows_text(md.iota_star) << "\n";
  os << "  xi = " << tuple(md.xi) << "\n";
  if (!md.level_point.empty()) os << "  level point n*eta = " << tuple(md.level_point) << "\n";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  const auto& in = r.input;
  os << "command: " << to_string(r.command) << "\n";
  os << "input: " << (in.kind == InputKind::polytope ? "labelled polytope" : "stacky fan");
  if (!in.name.empty()) os << " " << in.name;
  os << ", d = " << (in.kind == InputKind::polytope ? in.polytope.dim : in.fan.dim) << "\n";

  os << "validation: " << pass_fail(r.validation.ok()) << "\n";
  for (const auto& d : r.validation.items)
    if (!d.passed || !d.message.empty())
      os << "  " << d.check << ": " << pass_fail(d.passed) << (d.message.empty() ? "" : " (" + d.message + ")")
         << "\n";

  if (r.polytope) {
    os << "vertices:\n";
    for (const auto& v : r.polytope->vertices)
      os << "  " << tuple(v.point) << " on facets " << cone_text(v.active_facets) << "\n";
    os << "smooth: " << yes_no(r.polytope->smoothness.smooth);
    for (const auto& v : r.polytope->smoothness.offending) os << " " << tuple(v.point);
    os << "\n";
  }
  if (r.stacky_fan) {
    const auto& sf = *r.stacky_fan;
    os << "fan:\n  rays:";
    for (const auto& u : sf.fan.rays) os << " " << tuple(u);
    os << "\n  labels: " << tuple(sf.labels) << "\n  maximal cones:";
    for (const auto& c : sf.fan.max_cones) os << " " << cone_text(c);
    os << "\n  beta columns: " << columns_text(sf.beta) << "\n";
  }
  if (r.groups) {
    const auto& g = *r.groups;
    os << "groups:\n";
    render_group(os, "H(beta)", g.H);
    render_group(os, "ker(beta-bar)", g.kerbar);
    os << "  presentations agree: " << yes_no(g.presentations_agree) << "\n";
    os << "  splitting: free rank " << g.splitting.free_rank << ", torsion " << tuple(g.splitting.torsion)
       << ", consistent " << yes_no(g.splitting.consistent) << "\n";
    os << "  Gamma = " << to_string(g.gamma) << "\n";
    os << "  moment map independent of labels: " << yes_no(g.mu_independence.independent) << "\n";
  }
  if (r.charts) {
    os << "charts:\n";
    for (const auto& row : *r.charts)
      os << "  " << cone_text(row.chart.cone) << ": N(sigma) = " << to_string(row.chart.chart_group)
         << ", order " << to_string(row.chart.order) << "; H(beta_sigma) = " << to_string(row.extension.stacky)
         << ", cyclic part " << to_string(row.extension.cyclic_part) << ", classical "
         << to_string(row.extension.classical) << ", multiplicative " << yes_no(row.extension.multiplicative())
         << "\n";
  }
  if (r.isotropy) render_isotropy(os, *r.isotropy);
  if (r.moment) {
    const auto& s = *r.moment;
    os << "moment:\n";
    render_moment(os, s.data);
    os << "  regular value: " << yes_no(s.regular_value.regular);
    if (s.regular_value.offending) os << " (rank drops at " << to_string(*s.regular_value.offending) << ")";
    os << "\n  feasible patterns:";
    for (const auto& p : s.regular_value.feasible_patterns) os << " " << to_string(p);
    os << "\n  level set inside C^m_Sigma: " << yes_no(s.inclusion.holds) << "\n";
    for (const auto& f : s.inclusion.evidence) render_feasibility(os, f);
  }
  if (r.certificate) {
    const auto& c = *r.certificate;
    os << "certificate:\n";
    render_moment(os, c.moment);
    os << "  H(beta) = " << to_string(c.H.group()) << ", ker(beta-bar) = " << to_string(c.kerbar.group())
       << ", same presentation: " << pass_fail(c.presentations_agree) << "\n";
    os << "  splitting H = G x C_R: " << pass_fail(c.splitting.consistent) << "\n";
    os << "  moment map independent of labels: " << pass_fail(c.mu_independence.independent) << "\n";
    os << "  regular value: " << pass_fail(c.regular_value.regular) << "\n";
    os << "  level set inside C^m_Sigma: " << pass_fail(c.level_in_V.holds) << "\n";
    os << "  (M1'): " << pass_fail(c.m1_prime.holds) << "\n";
    for (const auto& e : c.m1_prime.evidence)
      os << "    " << to_string(e.pattern) << ": det J = " << to_string(e.determinant)
         << (e.witness.empty() ? " (no interior point)" : " at r = " + tuple(e.witness)) << "\n";
    os << "  (M2): " << pass_fail(c.m2.holds) << "\n";
    if (c.m2.failing) os << "    no level-set point with zero set " << to_string(*c.m2.failing) << "\n";
    os << "  isotropy match: " << pass_fail(c.isotropy_match) << "\n";
    render_isotropy(os, c.isotropy);
    os << "verdict: " << (c.verdict ? "true" : "false") << "\n";
  }
  for (const auto& p : r.reverification) os << "reverification problem: " << p << "\n";
  os << "result: " << (r.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace toristack
