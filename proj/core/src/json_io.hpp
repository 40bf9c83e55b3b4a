#pragma once

// nlohmann::json conversions for the library types. Integers that fit in
// int64 are JSON numbers, larger ones decimal strings; rationals are always
// strings "p" or "p/q".

#include "toristack/report.hpp"

#include <nlohmann/json.hpp>

namespace nlohmann {

template <>
struct adl_serializer<toristack::Integer> {
  template <class J>
  static void to_json(J& j, const toristack::Integer& a) {
    if (auto v = toristack::to_int64(a))
      j = *v;
    else
      j = toristack::to_string(a);
  }
  template <class J>
  static void from_json(const J& j, toristack::Integer& a) {
    if (j.is_number_integer()) {
      a = j.is_number_unsigned() ? toristack::Integer(j.template get<std::uint64_t>())
                                 : toristack::Integer(j.template get<std::int64_t>());
      return;
    }
    if (j.is_string())
      if (auto v = toristack::parse_integer(j.template get<std::string>())) {
        a = *v;
        return;
      }
    throw toristack::SchemaError("expected an integer", "");
  }
};

template <>
struct adl_serializer<toristack::Rational> {
  template <class J>
  static void to_json(J& j, const toristack::Rational& q) { j = toristack::to_string(q); }
  template <class J>
  static void from_json(const J& j, toristack::Rational& q) {
    if (j.is_number_integer()) {
      q = toristack::Rational(j.template get<toristack::Integer>());
      return;
    }
    if (j.is_string())
      if (auto v = toristack::parse_rational(j.template get<std::string>())) {
        q = *v;
        return;
      }
    throw toristack::SchemaError("expected an exact rational \"p/q\"", "");
  }
};

template <class T>
struct adl_serializer<toristack::Matrix<T>> {
  template <class J>
  static void to_json(J& j, const toristack::Matrix<T>& a) {
    j = J::object();
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    J data = J::array();
    for (std::size_t i = 0; i < a.rows(); ++i) data.push_back(a.row(i));
    j["data"] = std::move(data);
  }
  template <class J>
  static void from_json(const J& j, toristack::Matrix<T>& a) {
    const auto rows = j.at("rows").template get<std::size_t>(), cols = j.at("cols").template get<std::size_t>();
    a = toristack::Matrix<T>(rows, cols);
    const auto& data = j.at("data");
    if (data.size() != rows) throw toristack::SchemaError("matrix row count mismatch", "");
    for (std::size_t i = 0; i < rows; ++i) {
      if (data[i].size() != cols) throw toristack::SchemaError("matrix column count mismatch", "");
      for (std::size_t k = 0; k < cols; ++k) a(i, k) = data[i][k].template get<T>();
    }
  }
};

template <class T>
struct adl_serializer<std::optional<T>> {
  template <class J>
  static void to_json(J& j, const std::optional<T>& v) {
    if (v)
      j = *v;
    else
      j = nullptr;
  }
  template <class J>
  static void from_json(const J& j, std::optional<T>& v) {
    if (j.is_null())
      v.reset();
    else
      v = j.template get<T>();
  }
};

}  // namespace nlohmann

namespace toristack {

using json = nlohmann::ordered_json;

void to_json(json& j, const FinAbGroup& g);
void from_json(const json& j, FinAbGroup& g);
void to_json(json& j, const ZeroPattern& p);
void from_json(const json& j, ZeroPattern& p);
void to_json(json& j, const Diagnostic& d);
void from_json(const json& j, Diagnostic& d);
void to_json(json& j, const ValidationReport& r);
void from_json(const json& j, ValidationReport& r);
void to_json(json& j, const Fan& f);
void from_json(const json& j, Fan& f);
void to_json(json& j, const StackyFan& sf);
void from_json(const json& j, StackyFan& sf);
void to_json(json& j, const DiagGroupPresentation& g);
void from_json(const json& j, DiagGroupPresentation& g);
void to_json(json& j, const LocalChart& c);
void from_json(const json& j, LocalChart& c);
void to_json(json& j, const ChartExtension& c);
void from_json(const json& j, ChartExtension& c);
void to_json(json& j, const Vertex& v);
void from_json(const json& j, Vertex& v);
void to_json(json& j, const SmoothnessReport& s);
void from_json(const json& j, SmoothnessReport& s);
void to_json(json& j, const MomentData& md);
void from_json(const json& j, MomentData& md);
void to_json(json& j, const FeasibilityResult& r);
void from_json(const json& j, FeasibilityResult& r);
void to_json(json& j, const RegularValueResult& r);
void from_json(const json& j, RegularValueResult& r);
void to_json(json& j, const InclusionResult& r);
void from_json(const json& j, InclusionResult& r);
void to_json(json& j, const SplittingData& s);
void from_json(const json& j, SplittingData& s);
void to_json(json& j, const MuIndependence& m);
void from_json(const json& j, MuIndependence& m);
void to_json(json& j, const JacobianEvidence& e);
void from_json(const json& j, JacobianEvidence& e);
void to_json(json& j, const M1Result& r);
void from_json(const json& j, M1Result& r);
void to_json(json& j, const M2Result& r);
void from_json(const json& j, M2Result& r);
void to_json(json& j, const IsotropyRow& r);
void from_json(const json& j, IsotropyRow& r);
void to_json(json& j, const MoritaCertificate& c);
void from_json(const json& j, MoritaCertificate& c);
void to_json(json& j, const PolytopeStage& s);
void from_json(const json& j, PolytopeStage& s);
void to_json(json& j, const GroupsStage& s);
void from_json(const json& j, GroupsStage& s);
void to_json(json& j, const ChartRow& r);
void from_json(const json& j, ChartRow& r);
void to_json(json& j, const MomentStage& s);
void from_json(const json& j, MomentStage& s);
void to_json(json& j, const InputDocument& d);
void to_json(json& j, const Report& r);
void from_json(const json& j, Report& r);

/// Strict reader for input documents (schema errors carry a JSON pointer).
InputDocument input_from_json(const json& j);

/// Parses text into JSON after rejecting float literals; errors carry the
/// line and column.
json parse_exact_json(std::string_view text);

}  // namespace toristack
