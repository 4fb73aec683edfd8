#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symring {

// All coefficient arithmetic in the library is exact. Rational is GMP's
// canonical arbitrary-precision rational; no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders "NUM/DEN", omitting "/DEN" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// gmpxx has no long long constructor; cast through long, which is 64-bit
/// on every platform we build for.
static_assert(sizeof(long) >= 8);
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

/// Parses "NUM" or "NUM/DEN" (optional sign). Throws Error on garbage
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace symring
