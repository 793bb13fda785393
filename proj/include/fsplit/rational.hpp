#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fsplit {

using rational = mpq_class;

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const rational& r);
// Accepts "a", "-a", "a/b"; ASCII hyphen or U+2212 for the sign.
rational parse_rational(std::string_view text);
std::int64_t ceil_int(const rational& r);
std::int64_t floor_int(const rational& r);
std::int64_t to_int64(const mpz_class& z);

}  // namespace fsplit
