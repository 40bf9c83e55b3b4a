#pragma once

// Simplicial fans as combinatorial objects and the zero-pattern
// combinatorics of the irrelevant locus.

#include "toristack/matrix.hpp"
#include "toristack/validation.hpp"

#include <compare>
#include <string>
#include <vector>

namespace toristack {

/// Largest ray count handled by the exhaustive pattern enumerations.
inline constexpr std::size_t kMaxEnumeratedRays = 30;

struct Fan {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  /// Sorted, 0-based ray indices per maximal cone.
  std::vector<std::vector<std::size_t>> max_cones;

  std::size_t ray_count() const { return rays.size(); }
  /// d x m matrix whose columns are the rays.
  IntMatrix ray_matrix() const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// The coordinates that vanish, sorted, 0-based.
struct ZeroPattern {
  std::vector<std::size_t> indices;

  ZeroPattern() = default;
  explicit ZeroPattern(std::vector<std::size_t> idx);

  bool contains(std::size_t j) const;
  bool subset_of(const std::vector<std::size_t>& sorted) const;
  std::size_t size() const { return indices.size(); }
  /// Indices in [0, m) not in the pattern.
  std::vector<std::size_t> complement(std::size_t m) const;

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
  /// Size first, then lexicographic.
  friend std::strong_ordering operator<=>(const ZeroPattern& a, const ZeroPattern& b);
};

/// 1-based rendering, e.g. "{1,3}".
std::string to_string(const ZeroPattern& p);

struct FanValidationOptions {
  /// Completeness is only decided for d <= 3; above that the caller may
  /// assert it and the assertion is recorded in the report.
  bool assert_complete = false;
};

ValidationReport validate_fan(const Fan& fan, FanValidationOptions options = {});

/// True iff some maximal cone contains every index of the pattern.
bool is_admissible(const Fan& fan, const ZeroPattern& pattern);

/// All admissible patterns, without duplicates, ordered by size then
/// lexicographically. Throws TooManyRays above kMaxEnumeratedRays.
std::vector<ZeroPattern> admissible_patterns(const Fan& fan);

/// Inadmissible patterns all of whose proper subsets are admissible (the
/// minimal non-faces); every inadmissible pattern contains one of them.
std::vector<ZeroPattern> minimal_inadmissible_patterns(const Fan& fan);

}  // namespace toristack
