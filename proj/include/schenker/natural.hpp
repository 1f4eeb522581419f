#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace schenker {

// Arbitrary-precision integers.  Natural is used where the value is
// conceptually nonnegative (indices, moduli, valuations); Integer marks the
// few places where a signed intermediate is part of the contract (e.g.
// exponents that may be negative).  Both are the same GMP-backed type.
using Natural = mpz_class;
using Integer = mpz_class;

// Parses a nonnegative decimal string.  Throws std::invalid_argument on
// malformed input or a leading minus sign.
Natural natural_from_decimal(const std::string& text);

std::string to_decimal(const Natural& x);

bool fits_u64(const Natural& x);

// Requires fits_u64(x).
std::uint64_t to_u64(const Natural& x);

Natural pow_natural(const Natural& base, unsigned long exp);

} // namespace schenker
