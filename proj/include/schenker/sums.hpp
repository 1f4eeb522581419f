#pragma once

#include <cstdint>

#include "schenker/arith.hpp"
#include "schenker/natural.hpp"

namespace schenker {

// Largest index accepted by schenker_exact unless the caller raises the cap.
inline constexpr std::uint64_t default_exact_cap = 5000;

// a_n = sum_{j=0}^{n} (n!/j!) * n^j computed exactly.  Requires n >= 1;
// throws CapExceeded above the cap.
Natural schenker_exact(std::uint64_t n, std::uint64_t cap = default_exact_cap);

// a_n mod m without forming a_n.  Every term with j >= m contains a product
// of m consecutive integers and vanishes, so only min(n, m-1)+1 terms are
// summed; the running falling factorial is dropped as soon as it hits zero.
// Requires n >= 1, m >= 2.
Residue schenker_mod(const Natural& n, const Natural& m);

// The characteristic polynomial sum f_d(x) = sum_{j=0}^{d-1} x^{d-j-2} *
// prod_{i<j}(x - i) evaluated in Z/dZ.  Requires d >= 2 and gcd(x, d) = 1
// (negative powers of x appear for j near d); throws NonInvertible otherwise.
Residue f_eval(const Natural& d, const Natural& x);

// Derivative of the level-p^2 characteristic sum at n, reduced mod p.  Only
// the residue of n mod p matters.  Requires an odd prime p and gcd(n, p) = 1.
Residue f_prime_mod_p(std::uint64_t p, const Natural& n);

// The lifting discriminant q = a_{n+p} - a_n (n+p)^{n+2} n^{p-n-2} in Z/p^2.
// Its vanishing decides how solutions of p^k | a_x propagate upward.
struct QValue {
    Natural n;
    std::uint64_t p;
    Residue residue; // modulus p^2
};

// Requires p prime and gcd(n, p) = 1.
QValue q_value(const Natural& n, std::uint64_t p);

namespace detail {

// Word-sized fast path for a_n mod m; same contract as schenker_mod.
std::uint64_t schenker_mod_u64(std::uint64_t n, std::uint64_t m);

} // namespace detail

} // namespace schenker
