#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toristack {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Error hierarchy. Every pipeline failure that is not a plain check result is
// reported through one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonFiniteCokernel : public Error {
 public:
  using Error::Error;
};
class DegeneratePolytope : public Error {
 public:
  using Error::Error;
};
class NonSimpleVertex : public Error {
 public:
  using Error::Error;
};
class TooManyRays : public Error {
 public:
  using Error::Error;
};
class NotMaximalCone : public Error {
 public:
  using Error::Error;
};
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Floor division and the matching non-negative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const IntVector& v);

Rational to_rational(const Integer& a);
Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
bool is_integral(const Rational& q);

std::string to_string(const Integer& a);
/// "p" for integral values, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& q);

/// Strict decimal integer: optional sign followed by digits.
std::optional<Integer> parse_integer(std::string_view s);
/// Integer or "p/q" with q != 0. Decimal points and exponents are rejected.
std::optional<Rational> parse_rational(std::string_view s);

/// int64 view when the value fits.
std::optional<long long> to_int64(const Integer& a);

RatVector to_rational(const IntVector& v);

}  // namespace toristack
