#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qaoadepth {

/// Exact coefficient type used throughout the algebra. Arbitrary precision,
/// so squaring penalty terms never overflows.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Parses "7", "-3/4", "0.125" or "1e-3" exactly. Throws Error(invalid_input).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Smallest integer >= value.
BigInt ceil(const Rational& value);

/// Smallest k with 2^k - 1 >= value, for integral value >= 0.
std::uint32_t bits_for_range(const BigInt& value);

/// Returns the value if it fits in a signed 64-bit integer.
std::optional<std::int64_t> to_int64(const BigInt& value);

}  // namespace qaoadepth
