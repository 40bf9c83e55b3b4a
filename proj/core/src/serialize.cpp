#include "json_io.hpp"

#include <algorithm>
#include <cctype>

namespace toristack {

ParseError::ParseError(const std::string& what, std::size_t l, std::size_t c)
    : InvalidInput("parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                   what),
      line(l),
      column(c) {}

SchemaError::SchemaError(const std::string& what, std::string p)
    : InvalidInput("schema error" + (p.empty() ? std::string() : " at " + p) + ": " + what),
      path(std::move(p)) {}

ExactnessError::ExactnessError(const std::string& literal, std::size_t l, std::size_t c)
    : InvalidInput("inexact number " + literal + " at line " + std::to_string(l) + ", column " +
                   std::to_string(c) + "; write rationals as \"p/q\" strings"),
      line(l),
      column(c) {}

namespace {

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x + 1);
  return out;
}

std::vector<std::size_t> zero_based(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const auto v = x.get<std::size_t>();
    if (v == 0) throw SchemaError("indices are 1-based", "");
    out.push_back(v - 1);
  }
  return out;
}

template <class T>
void get_opt(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null())
    out = j.at(key).get<T>();
  else
    out.reset();
}

}  // namespace

void to_json(json& j, const FinAbGroup& g) {
  j = {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", to_string(g)}};
}
void from_json(const json& j, FinAbGroup& g) {
  g.free_rank = j.at("free_rank").get<std::size_t>();
  g.torsion = j.at("torsion").get<IntVector>();
}

void to_json(json& j, const ZeroPattern& p) { j = one_based(p.indices); }
void from_json(const json& j, ZeroPattern& p) { p = ZeroPattern(zero_based(j)); }

void to_json(json& j, const Diagnostic& d) {
  j = {{"check", d.check}, {"passed", d.passed}, {"message", d.message}};
}
void from_json(const json& j, Diagnostic& d) {
  d.check = j.at("check").get<std::string>();
  d.passed = j.at("passed").get<bool>();
  d.message = j.at("message").get<std::string>();
}

void to_json(json& j, const ValidationReport& r) { j = {{"ok", r.ok()}, {"items", r.items}}; }
void from_json(const json& j, ValidationReport& r) { r.items = j.at("items").get<std::vector<Diagnostic>>(); }

void to_json(json& j, const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.max_cones) cones.push_back(one_based(c));
  j = {{"dim", f.dim}, {"rays", f.rays}, {"max_cones", cones}};
}
void from_json(const json& j, Fan& f) {
  f.dim = j.at("dim").get<std::size_t>();
  f.rays = j.at("rays").get<std::vector<IntVector>>();
  f.max_cones.clear();
  for (const auto& c : j.at("max_cones")) f.max_cones.push_back(zero_based(c));
}

void to_json(json& j, const StackyFan& sf) {
  j = {{"fan", sf.fan}, {"labels", sf.labels}, {"beta", sf.beta}};
}
void from_json(const json& j, StackyFan& sf) {
  sf.fan = j.at("fan").get<Fan>();
  sf.labels = j.at("labels").get<IntVector>();
  sf.beta = j.at("beta").get<IntMatrix>();
}

void to_json(json& j, const DiagGroupPresentation& g) {
  j = {{"flavor", to_string(g.flavor)}, {"group", g.group()},       {"ambient_rank", g.ambient_rank},
       {"free_rank", g.free_rank},      {"torsion", g.torsion},     {"exponents", g.exponents}};
}
void from_json(const json& j, DiagGroupPresentation& g) {
  const auto flavor = j.at("flavor").get<std::string>();
  if (flavor != "algebraic" && flavor != "compact") throw SchemaError("unknown group flavor", "");
  g.flavor = flavor == "algebraic" ? GroupFlavor::algebraic : GroupFlavor::compact;
  g.ambient_rank = j.at("ambient_rank").get<std::size_t>();
  g.free_rank = j.at("free_rank").get<std::size_t>();
  g.torsion = j.at("torsion").get<IntVector>();
  g.exponents = j.at("exponents").get<IntMatrix>();
}

void to_json(json& j, const LocalChart& c) {
  j = {{"cone", one_based(c.cone)},
       {"beta_sigma", c.beta_sigma},
       {"group", c.chart_group},
       {"order", c.order}};
}
void from_json(const json& j, LocalChart& c) {
  c.cone = zero_based(j.at("cone"));
  c.beta_sigma = j.at("beta_sigma").get<IntMatrix>();
  c.chart_group = j.at("group").get<FinAbGroup>();
  c.order = j.at("order").get<Integer>();
}

void to_json(json& j, const ChartExtension& c) {
  j = {{"cyclic_part", c.cyclic_part},
       {"stacky", c.stacky},
       {"classical", c.classical},
       {"multiplicative", c.multiplicative()}};
}
void from_json(const json& j, ChartExtension& c) {
  c.cyclic_part = j.at("cyclic_part").get<FinAbGroup>();
  c.stacky = j.at("stacky").get<FinAbGroup>();
  c.classical = j.at("classical").get<FinAbGroup>();
}

void to_json(json& j, const Vertex& v) {
  j = {{"point", v.point}, {"active_facets", one_based(v.active_facets)}};
}
void from_json(const json& j, Vertex& v) {
  v.point = j.at("point").get<RatVector>();
  v.active_facets = zero_based(j.at("active_facets"));
}

void to_json(json& j, const SmoothnessReport& s) {
  j = {{"smooth", s.smooth}, {"offending", s.offending}};
}
void from_json(const json& j, SmoothnessReport& s) {
  s.smooth = j.at("smooth").get<bool>();
  s.offending = j.at("offending").get<std::vector<Vertex>>();
}

void to_json(json& j, const MomentData& md) {
  j = {{"iota_star", md.iota_star}, {"xi", md.xi}, {"level_point", md.level_point}};
}
void from_json(const json& j, MomentData& md) {
  md.iota_star = j.at("iota_star").get<RatMatrix>();
  md.xi = j.at("xi").get<RatVector>();
  md.level_point = j.at("level_point").get<RatVector>();
}

void to_json(json& j, const FeasibilityResult& r) {
  j = {{"pattern", r.pattern},
       {"feasible", r.feasible},
       {"strict", r.strict},
       {"witness", r.witness},
       {"certificate", r.certificate}};
}
void from_json(const json& j, FeasibilityResult& r) {
  r.pattern = j.at("pattern").get<ZeroPattern>();
  r.feasible = j.at("feasible").get<bool>();
  r.strict = j.at("strict").get<bool>();
  r.witness = j.at("witness").get<RatVector>();
  r.certificate = j.at("certificate").get<RatVector>();
}

void to_json(json& j, const RegularValueResult& r) {
  j = {{"regular", r.regular}, {"offending", r.offending}, {"feasible_patterns", r.feasible_patterns}};
}
void from_json(const json& j, RegularValueResult& r) {
  r.regular = j.at("regular").get<bool>();
  get_opt(j, "offending", r.offending);
  r.feasible_patterns = j.at("feasible_patterns").get<std::vector<ZeroPattern>>();
}

void to_json(json& j, const InclusionResult& r) {
  j = {{"holds", r.holds}, {"violating", r.violating}, {"evidence", r.evidence}};
}
void from_json(const json& j, InclusionResult& r) {
  r.holds = j.at("holds").get<bool>();
  get_opt(j, "violating", r.violating);
  r.evidence = j.at("evidence").get<std::vector<FeasibilityResult>>();
}

void to_json(json& j, const SplittingData& s) {
  j = {{"free_rank", s.free_rank},
       {"torsion", s.torsion},
       {"positive_exponents", s.positive_exponents},
       {"compact", s.compact},
       {"consistent", s.consistent}};
}
void from_json(const json& j, SplittingData& s) {
  s.free_rank = j.at("free_rank").get<std::size_t>();
  s.torsion = j.at("torsion").get<IntVector>();
  s.positive_exponents = j.at("positive_exponents").get<IntMatrix>();
  s.compact = j.at("compact").get<FinAbGroup>();
  s.consistent = j.at("consistent").get<bool>();
}

void to_json(json& j, const MuIndependence& m) {
  j = {{"independent", m.independent},
       {"kernel_rows_match", m.kernel_rows_match},
       {"image_matches", m.image_matches},
       {"level_matches", m.level_matches},
       {"transition", m.transition}};
}
void from_json(const json& j, MuIndependence& m) {
  m.independent = j.at("independent").get<bool>();
  m.kernel_rows_match = j.at("kernel_rows_match").get<bool>();
  m.image_matches = j.at("image_matches").get<bool>();
  get_opt(j, "level_matches", m.level_matches);
  m.transition = j.at("transition").get<RatMatrix>();
}

void to_json(json& j, const JacobianEvidence& e) {
  j = {{"pattern", e.pattern},
       {"witness", e.witness},
       {"determinant", e.determinant},
       {"nonsingular", e.nonsingular}};
}
void from_json(const json& j, JacobianEvidence& e) {
  e.pattern = j.at("pattern").get<ZeroPattern>();
  e.witness = j.at("witness").get<RatVector>();
  e.determinant = j.at("determinant").get<Rational>();
  e.nonsingular = j.at("nonsingular").get<bool>();
}

void to_json(json& j, const M1Result& r) { j = {{"holds", r.holds}, {"evidence", r.evidence}}; }
void from_json(const json& j, M1Result& r) {
  r.holds = j.at("holds").get<bool>();
  r.evidence = j.at("evidence").get<std::vector<JacobianEvidence>>();
}

void to_json(json& j, const M2Result& r) {
  j = {{"holds", r.holds}, {"failing", r.failing}, {"evidence", r.evidence}};
}
void from_json(const json& j, M2Result& r) {
  r.holds = j.at("holds").get<bool>();
  get_opt(j, "failing", r.failing);
  r.evidence = j.at("evidence").get<std::vector<FeasibilityResult>>();
}

void to_json(json& j, const IsotropyRow& r) {
  j = {{"pattern", r.pattern},
       {"symplectic", r.symplectic},
       {"complex", r.complex},
       {"direct", r.direct},
       {"match", r.match}};
}
void from_json(const json& j, IsotropyRow& r) {
  r.pattern = j.at("pattern").get<ZeroPattern>();
  r.symplectic = j.at("symplectic").get<FinAbGroup>();
  r.complex = j.at("complex").get<FinAbGroup>();
  r.direct = j.at("direct").get<FinAbGroup>();
  r.match = j.at("match").get<bool>();
}

void to_json(json& j, const MoritaCertificate& c) {
  j = json::object();
  j["verdict"] = c.verdict;
  j["stacky_fan"] = c.stacky_fan;
  j["moment"] = c.moment;
  j["H"] = c.H;
  j["kerbar"] = c.kerbar;
  j["presentations_agree"] = c.presentations_agree;
  j["splitting"] = c.splitting;
  j["mu_independence"] = c.mu_independence;
  j["regular_value"] = c.regular_value;
  j["level_in_V"] = c.level_in_V;
  j["m1_prime"] = c.m1_prime;
  j["m2"] = c.m2;
  j["isotropy"] = c.isotropy;
  j["isotropy_match"] = c.isotropy_match;
}
void from_json(const json& j, MoritaCertificate& c) {
  c.verdict = j.at("verdict").get<bool>();
  c.stacky_fan = j.at("stacky_fan").get<StackyFan>();
  c.moment = j.at("moment").get<MomentData>();
  c.H = j.at("H").get<DiagGroupPresentation>();
  c.kerbar = j.at("kerbar").get<DiagGroupPresentation>();
  c.presentations_agree = j.at("presentations_agree").get<bool>();
  c.splitting = j.at("splitting").get<SplittingData>();
  c.mu_independence = j.at("mu_independence").get<MuIndependence>();
  c.regular_value = j.at("regular_value").get<RegularValueResult>();
  c.level_in_V = j.at("level_in_V").get<InclusionResult>();
  c.m1_prime = j.at("m1_prime").get<M1Result>();
  c.m2 = j.at("m2").get<M2Result>();
  c.isotropy = j.at("isotropy").get<std::vector<IsotropyRow>>();
  c.isotropy_match = j.at("isotropy_match").get<bool>();
}

void to_json(json& j, const PolytopeStage& s) {
  j = {{"vertices", s.vertices}, {"smoothness", s.smoothness}};
}
void from_json(const json& j, PolytopeStage& s) {
  s.vertices = j.at("vertices").get<std::vector<Vertex>>();
  s.smoothness = j.at("smoothness").get<SmoothnessReport>();
}

void to_json(json& j, const GroupsStage& s) {
  j = {{"H", s.H},
       {"kerbar", s.kerbar},
       {"presentations_agree", s.presentations_agree},
       {"splitting", s.splitting},
       {"gamma", s.gamma},
       {"mu_independence", s.mu_independence}};
}
void from_json(const json& j, GroupsStage& s) {
  s.H = j.at("H").get<DiagGroupPresentation>();
  s.kerbar = j.at("kerbar").get<DiagGroupPresentation>();
  s.presentations_agree = j.at("presentations_agree").get<bool>();
  s.splitting = j.at("splitting").get<SplittingData>();
  s.gamma = j.at("gamma").get<FinAbGroup>();
  s.mu_independence = j.at("mu_independence").get<MuIndependence>();
}

void to_json(json& j, const ChartRow& r) { j = {{"chart", r.chart}, {"extension", r.extension}}; }
void from_json(const json& j, ChartRow& r) {
  r.chart = j.at("chart").get<LocalChart>();
  r.extension = j.at("extension").get<ChartExtension>();
}

void to_json(json& j, const MomentStage& s) {
  j = {{"data", s.data}, {"regular_value", s.regular_value}, {"inclusion", s.inclusion}};
}
void from_json(const json& j, MomentStage& s) {
  s.data = j.at("data").get<MomentData>();
  s.regular_value = j.at("regular_value").get<RegularValueResult>();
  s.inclusion = j.at("inclusion").get<InclusionResult>();
}

void to_json(json& j, const InputDocument& d) {
  j = json::object();
  j["kind"] = d.kind == InputKind::polytope ? "polytope" : "stacky_fan";
  if (!d.name.empty()) j["name"] = d.name;
  if (d.kind == InputKind::polytope) {
    j["dim"] = d.polytope.dim;
    json facets = json::array();
    for (const auto& f : d.polytope.facets)
      facets.push_back({{"normal", f.half_space.u}, {"eta", f.half_space.eta}, {"label", f.label}});
    j["facets"] = std::move(facets);
  } else {
    j["dim"] = d.fan.dim;
    j["rays"] = d.fan.rays;
    json cones = json::array();
    for (const auto& c : d.fan.max_cones) cones.push_back(one_based(c));
    j["max_cones"] = std::move(cones);
    j["labels"] = d.labels;
    if (d.eta) j["eta"] = *d.eta;
  }
}

void to_json(json& j, const Report& r) {
  j = json::object();
  j["command"] = to_string(r.command);
  j["passed"] = r.passed;
  j["input"] = r.input;
  j["validation"] = r.validation;
  if (r.polytope) j["polytope"] = *r.polytope;
  if (r.stacky_fan) j["stacky_fan"] = *r.stacky_fan;
  if (r.groups) j["groups"] = *r.groups;
  if (r.charts) j["charts"] = *r.charts;
  if (r.isotropy) j["isotropy"] = *r.isotropy;
  if (r.moment) j["moment"] = *r.moment;
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.certificate || !r.reverification.empty()) j["reverification"] = r.reverification;
}

void from_json(const json& j, Report& r) {
  const auto cmd = parse_subcommand(j.at("command").get<std::string>());
  if (!cmd) throw SchemaError("unknown command", "/command");
  r.command = *cmd;
  r.passed = j.at("passed").get<bool>();
  r.input = input_from_json(j.at("input"));
  r.validation = j.at("validation").get<ValidationReport>();
  get_opt(j, "polytope", r.polytope);
  get_opt(j, "stacky_fan", r.stacky_fan);
  get_opt(j, "groups", r.groups);
  get_opt(j, "charts", r.charts);
  get_opt(j, "isotropy", r.isotropy);
  get_opt(j, "moment", r.moment);
  get_opt(j, "certificate", r.certificate);
  r.reverification = j.contains("reverification") ? j.at("reverification").get<std::vector<std::string>>()
                                                  : std::vector<std::string>{};
}

namespace {

// Strict readers for input documents. Each reports the JSON pointer of the
// value it rejects.

void expect_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional) {
  if (!j.is_object()) throw SchemaError("expected an object", path.empty() ? "/" : path);
  for (const char* k : required)
    if (!j.contains(k)) throw SchemaError(std::string("missing field \"") + k + "\"", path.empty() ? "/" : path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return it.key() == k; }) ||
                       std::any_of(optional.begin(), optional.end(), [&](const char* k) { return it.key() == k; });
    if (!known) throw SchemaError("unexpected field \"" + it.key() + "\"", path + "/" + it.key());
  }
}

Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<Integer>();
  if (j.is_string())
    if (auto v = parse_integer(j.get<std::string>())) return *v;
  throw SchemaError("expected an integer", path);
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (auto v = parse_rational(s)) return *v;
    if (s.find_first_of(".eE") != std::string::npos)
      throw SchemaError("\"" + s + "\" is not exact; write rationals as \"p/q\"", path);
  }
  throw SchemaError("expected an exact rational \"p/q\"", path);
}

std::size_t read_size(const json& j, const std::string& path) {
  const Integer v = read_integer(j, path);
  if (v < 0 || v > 1000000) throw SchemaError("expected a non-negative count", path);
  return static_cast<std::size_t>(v);
}

const json& read_array(const json& j, const std::string& path, std::optional<std::size_t> arity = {}) {
  if (!j.is_array()) throw SchemaError("expected an array", path);
  if (arity && j.size() != *arity)
    throw SchemaError("expected " + std::to_string(*arity) + " entries, got " + std::to_string(j.size()), path);
  return j;
}

IntVector read_int_vector(const json& j, const std::string& path, std::optional<std::size_t> arity = {}) {
  IntVector out;
  const auto& a = read_array(j, path, arity);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_integer(a[i], path + "/" + std::to_string(i)));
  return out;
}

}  // namespace

InputDocument input_from_json(const json& j) {
  if (j.is_null() || (j.is_object() && j.empty())) throw SchemaError("empty document", "/");
  if (!j.is_object()) throw SchemaError("expected an object", "/");
  if (!j.contains("kind")) throw SchemaError("missing field \"kind\"", "/");
  if (!j.at("kind").is_string()) throw SchemaError("expected a string", "/kind");
  const auto kind = j.at("kind").get<std::string>();
  InputDocument doc;
  if (kind == "polytope") {
    expect_keys(j, "", {"kind", "dim", "facets"}, {"name"});
    doc.kind = InputKind::polytope;
    doc.polytope.dim = read_size(j.at("dim"), "/dim");
    const auto& facets = read_array(j.at("facets"), "/facets");
    for (std::size_t k = 0; k < facets.size(); ++k) {
      const std::string path = "/facets/" + std::to_string(k);
      expect_keys(facets[k], path, {"normal", "eta"}, {"label"});
      LabelledFacet f;
      f.half_space.u = read_int_vector(facets[k].at("normal"), path + "/normal", doc.polytope.dim);
      f.half_space.eta = read_rational(facets[k].at("eta"), path + "/eta");
      f.label = facets[k].contains("label") ? read_integer(facets[k].at("label"), path + "/label") : Integer(1);
      doc.polytope.facets.push_back(std::move(f));
    }
  } else if (kind == "stacky_fan") {
    expect_keys(j, "", {"kind", "dim", "rays", "max_cones"}, {"name", "labels", "eta"});
    doc.kind = InputKind::stacky_fan;
    doc.fan.dim = read_size(j.at("dim"), "/dim");
    const auto& rays = read_array(j.at("rays"), "/rays");
    for (std::size_t k = 0; k < rays.size(); ++k)
      doc.fan.rays.push_back(read_int_vector(rays[k], "/rays/" + std::to_string(k), doc.fan.dim));
    const std::size_t m = doc.fan.rays.size();
    const auto& cones = read_array(j.at("max_cones"), "/max_cones");
    for (std::size_t k = 0; k < cones.size(); ++k) {
      const std::string path = "/max_cones/" + std::to_string(k);
      std::vector<std::size_t> cone;
      const auto idx = read_int_vector(cones[k], path);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 1 || idx[t] > m)
          throw SchemaError("ray index " + to_string(idx[t]) + " out of range 1.." + std::to_string(m),
                            path + "/" + std::to_string(t));
        cone.push_back(static_cast<std::size_t>(idx[t]) - 1);
      }
      std::sort(cone.begin(), cone.end());
      doc.fan.max_cones.push_back(std::move(cone));
    }
    doc.labels = j.contains("labels") ? read_int_vector(j.at("labels"), "/labels", m) : IntVector(m, 1);
    if (j.contains("eta")) {
      const auto& eta = read_array(j.at("eta"), "/eta", m);
      RatVector v;
      for (std::size_t k = 0; k < m; ++k) v.push_back(read_rational(eta[k], "/eta/" + std::to_string(k)));
      doc.eta = std::move(v);
    }
  } else {
    throw SchemaError("kind must be \"polytope\" or \"stacky_fan\"", "/kind");
  }
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw SchemaError("expected a string", "/name");
    doc.name = j.at("name").get<std::string>();
  }
  return doc;
}

json parse_exact_json(std::string_view text) {
  // Reject float literals (and integers beyond int64) before nlohmann turns
  // them into doubles.
  std::size_t line = 1, col = 1;
  bool in_string = false, escaped = false, any = false;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (in_string) {
      if (escaped)
        escaped = false;
      else if (c == '\\')
        escaped = true;
      else if (c == '"')
        in_string = false;
    } else if (c == '"') {
      in_string = true;
      any = true;
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      any = true;
      std::size_t k = i;
      while (k < text.size() && (std::isdigit(static_cast<unsigned char>(text[k])) || text[k] == '-' ||
                                 text[k] == '+' || text[k] == '.' || text[k] == 'e' || text[k] == 'E'))
        ++k;
      const std::string tok(text.substr(i, k - i));
      if (tok.find_first_of(".eE") != std::string::npos) throw ExactnessError(tok, line, col);
      if (auto v = parse_integer(tok); v && !to_int64(*v)) throw ExactnessError(tok, line, col);
      col += k - i;
      i = k;
      continue;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      any = true;
    }
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  if (!any) throw SchemaError("empty document", "/");
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t l = 1, c = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++l;
        c = 1;
      } else {
        ++c;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(what, l, c);
  }
}

InputDocument parse_input(std::string_view text) { return input_from_json(parse_exact_json(text)); }

std::string emit_input(const InputDocument& doc) {
  json j = doc;
  return j.dump(2) + "\n";
}

std::string render_json(const Report& r) {
  json j = r;
  return j.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  const json j = parse_exact_json(text);
  try {
    return j.get<Report>();
  } catch (const json::exception& e) {
    throw SchemaError(e.what(), "/");
  }
}

}  // namespace toristack
