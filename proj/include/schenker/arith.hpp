#pragma once

#include <cstdint>
#include <vector>

#include "schenker/errors.hpp"
#include "schenker/natural.hpp"

namespace schenker {

// An element of Z/mZ.  The stored value is always canonical (0 <= value < m)
// and the modulus is at least 2.  Arithmetic between residues with different
// moduli is a programming error and throws std::invalid_argument.
class Residue {
public:
    Residue(Natural value, Natural modulus);

    const Natural& value() const { return value_; }
    const Natural& modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue operator-() const;

    // Convenience forwards to mod_pow / mod_inv below.
    Residue pow(const Integer& exp) const;
    Residue inverse() const;

    bool operator==(const Residue& rhs) const {
        return value_ == rhs.value_ && modulus_ == rhs.modulus_;
    }
    bool operator!=(const Residue& rhs) const { return !(*this == rhs); }

private:
    void require_same_modulus(const Residue& rhs) const;

    Natural value_;
    Natural modulus_;
};

// base^exp in Z/mZ.  Negative exponents are resolved through the inverse of
// the base and therefore throw NonInvertible when gcd(base, m) != 1.
Residue mod_pow(const Residue& base, const Integer& exp);

// Multiplicative inverse; throws NonInvertible when gcd(a, m) != 1.
Residue mod_inv(const Residue& a);

// Outcome of a p-adic valuation query.  Exact carries the valuation itself,
// AtLeast carries a certified lower bound (the query gave up at a cap), and
// Infinite is the valuation of zero.
class ValuationResult {
public:
    enum class Kind { Exact, AtLeast, Infinite };

    static ValuationResult exact(Natural v);
    static ValuationResult at_least(Natural bound);
    static ValuationResult infinite();

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }

    // Exact: the valuation.  AtLeast: the certified bound.  Throws
    // std::logic_error for Infinite.
    const Natural& value() const;

    bool operator==(const ValuationResult& rhs) const {
        return kind_ == rhs.kind_ && value_ == rhs.value_;
    }
    bool operator!=(const ValuationResult& rhs) const { return !(*this == rhs); }

private:
    ValuationResult(Kind kind, Natural value);

    Kind kind_;
    Natural value_; // zero for Infinite
};

// v_p(x) for an integer x.  Returns Infinite for x == 0; otherwise the exact
// multiplicity of p in |x|.  Requires p >= 2.
ValuationResult valuation_int(const Integer& x, std::uint64_t p);

// Sum of the digits of n written in the given base (base >= 2, n >= 0).
Natural digit_sum(const Natural& n, std::uint64_t base);

// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Deterministic primality test over the full 64-bit range.
bool is_prime(std::uint64_t n);

// A prime power p^k with its modulus precomputed.  Validates that p is prime
// and k >= 1.
struct PrimePower {
    PrimePower(std::uint64_t p, unsigned k);

    std::uint64_t p;
    unsigned k;
    Natural modulus;
};

namespace detail {

// Word-sized modular kernels used by the hot scan paths.  Moduli may occupy
// the full 64-bit range; products go through 128-bit intermediates.
std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, const Natural& exp, std::uint64_t m);

// Throws NonInvertible when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

} // namespace detail

} // namespace schenker
