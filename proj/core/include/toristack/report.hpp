#pragma once

// Input documents, pipeline stages and their reports. The machine format is
// strict JSON with exact numbers (see docs/format.md).

#include "toristack/morita.hpp"

#include <string>
#include <string_view>

namespace toristack {

/// Malformed syntax, at a 1-based line and column.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line, column;
};

/// Missing or unexpected field, wrong arity or type. `path` is a JSON
/// pointer to the offending value.
class SchemaError : public InvalidInput {
 public:
  SchemaError(const std::string& what, std::string path);
  std::string path;
};

/// A floating-point literal where an exact number is required.
class ExactnessError : public InvalidInput {
 public:
  ExactnessError(const std::string& literal, std::size_t line, std::size_t column);
  std::size_t line, column;
};

enum class InputKind { polytope, stacky_fan };

struct InputDocument {
  InputKind kind = InputKind::polytope;
  std::string name;
  /// kind == polytope.
  LabelledPolytope polytope;
  /// kind == stacky_fan. Labels are not checked here.
  Fan fan;
  IntVector labels;
  std::optional<RatVector> eta;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

InputDocument parse_input(std::string_view text);
std::string emit_input(const InputDocument& doc);

enum class Subcommand { validate, fan, groups, charts, isotropy, moment, certify };

std::optional<Subcommand> parse_subcommand(std::string_view s);
std::string to_string(Subcommand c);

struct PolytopeStage {
  std::vector<Vertex> vertices;
  SmoothnessReport smoothness;

  friend bool operator==(const PolytopeStage&, const PolytopeStage&) = default;
};

struct GroupsStage {
  DiagGroupPresentation H;
  DiagGroupPresentation kerbar;
  bool presentations_agree = false;
  SplittingData splitting;
  FinAbGroup gamma;
  MuIndependence mu_independence;

  friend bool operator==(const GroupsStage&, const GroupsStage&) = default;
};

struct ChartRow {
  LocalChart chart;
  ChartExtension extension;

  friend bool operator==(const ChartRow&, const ChartRow&) = default;
};

struct MomentStage {
  MomentData data;
  RegularValueResult regular_value;
  InclusionResult inclusion;
};

struct Report {
  Subcommand command = Subcommand::validate;
  InputDocument input;
  ValidationReport validation;
  std::optional<PolytopeStage> polytope;
  std::optional<StackyFan> stacky_fan;
  std::optional<GroupsStage> groups;
  std::optional<std::vector<ChartRow>> charts;
  std::optional<std::vector<IsotropyRow>> isotropy;
  std::optional<MomentStage> moment;
  std::optional<MoritaCertificate> certificate;
  /// Problems found when re-checking the certificate evidence.
  std::vector<std::string> reverification;
  bool passed = false;
};

struct RunOptions {
  std::size_t jobs = 1;
  bool assert_complete = false;
};

/// Runs validation and then the requested stage. Throws InvalidInput when the
/// stage needs data the document does not carry (moment and certify need
/// offsets).
Report run_command(Subcommand command, const InputDocument& doc, const RunOptions& options = {});

int exit_code(const Report& r);

std::string render_json(const Report& r);
std::string render_text(const Report& r);
/// Inverse of render_json.
Report parse_report(std::string_view text);

/// Re-checks the certificate carried by a report.
Report verify_report(Report r);

/// Bundled examples: p2_labels_1_1_2, p2_labels_2_2_2, wp112,
/// interval_unlabelled and conehead_<k> for k >= 1.
std::optional<std::string> fixture_text(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace toristack
