#include "schenker/arith.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schenker {

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(Natural value, Natural modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
    if (modulus_ < 2)
        throw std::invalid_argument("Residue: modulus must be >= 2");
    // mpz_mod yields the canonical representative even for negative input.
    mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
}

void Residue::require_same_modulus(const Residue& rhs) const {
    if (modulus_ != rhs.modulus_)
        throw std::invalid_argument("Residue: mixed moduli " + modulus_.get_str() +
                                    " and " + rhs.modulus_.get_str());
}

Residue Residue::operator+(const Residue& rhs) const {
    require_same_modulus(rhs);
    return Residue(value_ + rhs.value_, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
    require_same_modulus(rhs);
    return Residue(value_ - rhs.value_, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
    require_same_modulus(rhs);
    return Residue(value_ * rhs.value_, modulus_);
}

Residue Residue::operator-() const {
    return Residue(-value_, modulus_);
}

Residue Residue::pow(const Integer& exp) const {
    return mod_pow(*this, exp);
}

Residue Residue::inverse() const {
    return mod_inv(*this);
}

Residue mod_pow(const Residue& base, const Integer& exp) {
    Natural r;
    if (exp >= 0) {
        mpz_powm(r.get_mpz_t(), base.value().get_mpz_t(), exp.get_mpz_t(),
                 base.modulus().get_mpz_t());
    } else {
        Residue inv = mod_inv(base);
        Integer e = -exp;
        mpz_powm(r.get_mpz_t(), inv.value().get_mpz_t(), e.get_mpz_t(),
                 base.modulus().get_mpz_t());
    }
    return Residue(std::move(r), base.modulus());
}

Residue mod_inv(const Residue& a) {
    Natural r;
    if (mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), a.modulus().get_mpz_t()) == 0)
        throw NonInvertible("mod_inv: " + a.value().get_str() +
                            " is not invertible mod " + a.modulus().get_str());
    return Residue(std::move(r), a.modulus());
}

// ---------------------------------------------------------------------------
// ValuationResult

ValuationResult::ValuationResult(Kind kind, Natural value)
    : kind_(kind), value_(std::move(value)) {}

ValuationResult ValuationResult::exact(Natural v) {
    if (v < 0)
        throw std::invalid_argument("ValuationResult: negative valuation");
    return ValuationResult(Kind::Exact, std::move(v));
}

ValuationResult ValuationResult::at_least(Natural bound) {
    if (bound < 0)
        throw std::invalid_argument("ValuationResult: negative bound");
    return ValuationResult(Kind::AtLeast, std::move(bound));
}

ValuationResult ValuationResult::infinite() {
    return ValuationResult(Kind::Infinite, 0);
}

const Natural& ValuationResult::value() const {
    if (kind_ == Kind::Infinite)
        throw std::logic_error("ValuationResult: infinite valuation has no value");
    return value_;
}

// ---------------------------------------------------------------------------
// Integer utilities

ValuationResult valuation_int(const Integer& x, std::uint64_t p) {
    if (p < 2)
        throw std::invalid_argument("valuation_int: p must be >= 2");
    if (x == 0)
        return ValuationResult::infinite();
    Natural ax;
    mpz_abs(ax.get_mpz_t(), x.get_mpz_t());
    Natural pz(static_cast<unsigned long>(p));
    Natural reduced;
    mp_bitcnt_t count =
        mpz_remove(reduced.get_mpz_t(), ax.get_mpz_t(), pz.get_mpz_t());
    return ValuationResult::exact(Natural(static_cast<unsigned long>(count)));
}

Natural digit_sum(const Natural& n, std::uint64_t base) {
    if (base < 2)
        throw std::invalid_argument("digit_sum: base must be >= 2");
    if (n < 0)
        throw std::invalid_argument("digit_sum: negative argument");
    if (fits_u64(n)) {
        std::uint64_t v = to_u64(n);
        std::uint64_t s = 0;
        while (v != 0) {
            s += v % base;
            v /= base;
        }
        return Natural(static_cast<unsigned long>(s));
    }
    Natural v = n;
    std::uint64_t s = 0; // bounded by (base-1) * number of digits
    while (v != 0) {
        s += mpz_tdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(base));
    }
    return Natural(static_cast<unsigned long>(s));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i])
            continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i])
            primes.push_back(i);
    return primes;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    // Deterministic Miller-Rabin for the full 64-bit range (Sinclair's base set).
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                            1795265022ull}) {
        std::uint64_t x = detail::powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

PrimePower::PrimePower(std::uint64_t p_, unsigned k_) : p(p_), k(k_) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimePower: " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw std::invalid_argument("PrimePower: exponent must be >= 1");
    modulus = pow_natural(Natural(static_cast<unsigned long>(p)), k);
}

// ---------------------------------------------------------------------------
// Word-sized kernels

namespace detail {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    std::uint64_t b = base % m;
    while (exp != 0) {
        if (exp & 1)
            result = mulmod(result, b, m);
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t powmod(std::uint64_t base, const Natural& exp, std::uint64_t m) {
    if (exp < 0)
        throw std::invalid_argument("powmod: negative exponent");
    std::uint64_t result = 1 % m;
    std::uint64_t b = base % m;
    // square-and-multiply over the bits of exp, most significant first
    std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(exp.get_mpz_t(), i))
            result = mulmod(result, b, m);
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid with signed 128-bit coefficients
    __int128 t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        __int128 tmp_t = t - static_cast<__int128>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1)
        throw NonInvertible("invmod: " + std::to_string(a) +
                            " is not invertible mod " + std::to_string(m));
    if (t < 0)
        t += m;
    return static_cast<std::uint64_t>(t);
}

} // namespace detail

} // namespace schenker
