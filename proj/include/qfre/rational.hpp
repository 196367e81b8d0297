#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfre {

// Exact rational arithmetic everywhere; floating point only at the very
// edge of report rendering. Arbitrary precision so that composed costs and
// randomized property tests never overflow.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Round-half-up to the nearest integer. The reported tables round 201.19
// down to 201 and 341,791.67 up to 341,792; half-up reproduces both.
// Requires x >= 0.
inline BigInt round_half_up(const Rational& x) {
    if (x < 0) throw std::domain_error("round_half_up: negative value");
    const BigInt n = numerator(x);
    const BigInt d = denominator(x);
    return (2 * n + d) / (2 * d);
}

inline std::int64_t round_to_i64(const Rational& x) {
    return static_cast<std::int64_t>(round_half_up(x));
}

inline BigInt ceil_rational(const Rational& x) {
    const BigInt n = numerator(x);
    const BigInt d = denominator(x);
    BigInt q = n / d;
    if (q * d < n) ++q;
    return q;
}

// Canonical textual form: "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

// Parses "p/q", plain integers, and exact decimals ("9.19" -> 919/100).
// A trailing exponent ("1e5") is accepted for rate-style constants.
std::optional<Rational> parse_rational(std::string_view text);

// Throwing variant for config ingestion.
Rational parse_rational_or_throw(std::string_view text, std::string_view what);

}  // namespace qfre
