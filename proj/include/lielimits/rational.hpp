#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lielimits {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "3", "-2", "7/4". Result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Throws InternalError when the value is not an integer or does not fit.
std::int64_t to_int64(const Rational& q, const char* what);
std::int64_t to_int64(const Integer& z, const char* what);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lielimits
