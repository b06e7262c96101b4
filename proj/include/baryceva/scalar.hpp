#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "baryceva/errors.hpp"

namespace baryceva {

/// Exact arbitrary-precision rational, the number type of every
/// verification path. Values are kept in lowest terms with a positive
/// denominator; all arithmetic is exact and division by zero throws.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "num/den" or a plain integer ("-3/16", "7"). Decimal notation is
/// rejected so no precision is lost silently. Throws MalformedRational.
Scalar parse_scalar(std::string_view text);

/// Canonical form: "num/den", with "/1" omitted for integral values.
/// Round-trips through parse_scalar bit-exactly.
std::string format_scalar(const Scalar& value);

/// Exact conversion; every finite double is a rational.
Scalar scalar_from_double(double x);

double to_double(const Scalar& x);

/// Exact square root when the argument is the square of a rational,
/// std::nullopt otherwise (including all negative arguments).
std::optional<Scalar> exact_sqrt(const Scalar& x);

}  // namespace baryceva
