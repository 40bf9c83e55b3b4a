#include "toristack/report.hpp"

#include <charconv>

namespace toristack {

namespace {

constexpr const char* kP2_112 = R"({
  "kind": "polytope",
  "name": "p2_labels_1_1_2",
  "dim": 2,
  "facets": [
    {"normal": [1, 0], "eta": "0", "label": 1},
    {"normal": [0, 1], "eta": "0", "label": 1},
    {"normal": [-1, -1], "eta": "1", "label": 2}
  ]
}
)";

constexpr const char* kP2_222 = R"({
  "kind": "polytope",
  "name": "p2_labels_2_2_2",
  "dim": 2,
  "facets": [
    {"normal": [1, 0], "eta": "0", "label": 2},
    {"normal": [0, 1], "eta": "0", "label": 2},
    {"normal": [-1, -1], "eta": "1", "label": 2}
  ]
}
)";

constexpr const char* kWp112 = R"({
  "kind": "polytope",
  "name": "wp112",
  "dim": 2,
  "facets": [
    {"normal": [1, 0], "eta": "0", "label": 1},
    {"normal": [0, 1], "eta": "0", "label": 1},
    {"normal": [-1, -2], "eta": "2", "label": 1}
  ]
}
)";

constexpr const char* kInterval = R"({
  "kind": "polytope",
  "name": "interval_unlabelled",
  "dim": 1,
  "facets": [
    {"normal": [1], "eta": "0", "label": 1},
    {"normal": [-1], "eta": "1", "label": 1}
  ]
}
)";

std::string conehead(const std::string& k) {
  return R"({
  "kind": "polytope",
  "name": "conehead_)" +
         k + R"(",
  "dim": 1,
  "facets": [
    {"normal": [1], "eta": "0", "label": )" +
         k + R"(},
    {"normal": [-1], "eta": "1", "label": 1}
  ]
}
)";
}

}  // namespace

std::optional<std::string> fixture_text(std::string_view name) {
  if (name == "p2_labels_1_1_2") return kP2_112;
  if (name == "p2_labels_2_2_2") return kP2_222;
  if (name == "wp112") return kWp112;
  if (name == "interval_unlabelled") return kInterval;
  constexpr std::string_view prefix = "conehead_";
  if (name.starts_with(prefix)) {
    const auto digits = name.substr(prefix.size());
    unsigned long k = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && end == digits.data() + digits.size() && k >= 1 && digits[0] != '0')
      return conehead(std::string(digits));
  }
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  return {"p2_labels_1_1_2", "p2_labels_2_2_2", "wp112", "conehead_<k>", "interval_unlabelled"};
}

}  // namespace toristack
