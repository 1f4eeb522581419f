#include "schenker/sums.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace schenker {

namespace detail {

std::uint64_t schenker_mod_u64(std::uint64_t n, std::uint64_t m) {
    if (n < 1)
        throw std::invalid_argument("schenker_mod: n must be >= 1");
    if (m < 2)
        throw std::invalid_argument("schenker_mod: modulus must be >= 2");
    std::uint64_t b = n % m;
    // n ≡ 0: every kept term has exponent n-j >= 1 and vanishes.
    if (b == 0)
        return 0;
    std::uint64_t jmax = std::min(n, m - 1);
    bool coprime = std::gcd(b, m) == 1;
    // power tracks n^{n-j}; with an invertible base it is updated by one
    // modular multiplication per term instead of a fresh exponentiation.
    std::uint64_t power = powmod(b, n, m);
    std::uint64_t binv = coprime ? invmod(b, m) : 0;
    std::uint64_t acc = 0;
    std::uint64_t falling = 1; // prod_{i<j} (n - i) mod m
    for (std::uint64_t j = 0;; ++j) {
        acc = addmod(acc, mulmod(power, falling, m), m);
        if (j == jmax)
            break;
        // next falling factor is (n - j) ≡ b - j; note j < jmax <= m - 1
        std::uint64_t factor = b >= j ? b - j : m - (j - b);
        falling = mulmod(falling, factor, m);
        if (falling == 0)
            break; // every later term keeps this zero factor
        if (coprime)
            power = mulmod(power, binv, m);
        else
            power = powmod(b, n - (j + 1), m);
    }
    return acc;
}

namespace {

// Arbitrary-precision variant of the same loop.  The term count is capped by
// min(n, m-1); anything beyond 2^64 terms is not computable in practice.
Residue schenker_mod_general(const Natural& n, const Natural& m) {
    Natural b = n % m;
    if (b == 0)
        return Residue(0, m);
    Natural jmax_z = n < m - 1 ? n : Natural(m - 1);
    if (!fits_u64(jmax_z))
        throw std::length_error("schenker_mod: term count exceeds 2^64");
    std::uint64_t jmax = to_u64(jmax_z);
    Natural g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    bool coprime = g == 1;
    Natural power;
    mpz_powm(power.get_mpz_t(), b.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    Natural binv;
    if (coprime)
        mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    Natural acc = 0;
    Natural falling = 1;
    for (std::uint64_t j = 0;; ++j) {
        acc = (acc + power * falling) % m;
        if (j == jmax)
            break;
        Natural factor = (b - j) % m;
        if (factor < 0)
            factor += m;
        falling = falling * factor % m;
        if (falling == 0)
            break;
        if (coprime) {
            power = power * binv % m;
        } else {
            Natural e = n - (j + 1);
            mpz_powm(power.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
        }
    }
    return Residue(std::move(acc), m);
}

} // namespace

} // namespace detail

Natural schenker_exact(std::uint64_t n, std::uint64_t cap) {
    if (n < 1)
        throw std::invalid_argument("schenker_exact: n must be >= 1");
    if (n > cap)
        throw CapExceeded("schenker_exact: n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    // Walk j = 0..n with power = n^{n-j} (one exact division per step) and
    // falling = n (n-1) ... (n-j+1).
    Natural power;
    mpz_ui_pow_ui(power.get_mpz_t(), n, n);
    Natural falling = 1;
    Natural acc = 0;
    for (std::uint64_t j = 0;; ++j) {
        acc += power * falling;
        if (j == n)
            break;
        falling *= static_cast<unsigned long>(n - j);
        mpz_divexact_ui(power.get_mpz_t(), power.get_mpz_t(), n);
    }
    return acc;
}

Residue schenker_mod(const Natural& n, const Natural& m) {
    if (n < 1)
        throw std::invalid_argument("schenker_mod: n must be >= 1");
    if (m < 2)
        throw std::invalid_argument("schenker_mod: modulus must be >= 2");
    if (fits_u64(n) && fits_u64(m))
        return Residue(Natural(static_cast<unsigned long>(
                           detail::schenker_mod_u64(to_u64(n), to_u64(m)))),
                       m);
    return detail::schenker_mod_general(n, m);
}

Residue f_eval(const Natural& d, const Natural& x) {
    if (d < 2)
        throw std::invalid_argument("f_eval: d must be >= 2");
    Residue base(x, d);
    Residue binv = base.inverse(); // throws NonInvertible when gcd(x, d) != 1
    // power tracks x^{d-j-2} starting at x^{d-2}
    Residue power = base.pow(Integer(d) - 2);
    Residue acc(0, d);
    Residue falling(1, d);
    std::uint64_t last = to_u64(d - 1); // highest term index j
    for (std::uint64_t j = 0;; ++j) {
        acc = acc + power * falling;
        if (j == last)
            break;
        falling = falling * Residue(x - j, d);
        if (falling.is_zero())
            break;
        power = power * binv;
    }
    return acc;
}

Residue f_prime_mod_p(std::uint64_t p, const Natural& n) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("f_prime_mod_p: p must be an odd prime");
    std::uint64_t b = to_u64(n % p);
    if (b == 0)
        throw NonInvertible("f_prime_mod_p: n is divisible by p");
    std::uint64_t binv = detail::invmod(b, p);
    // Term j of the derivative (taken at level p^2 and reduced mod p) is
    //   -(j+2) n^{-(j+2)} F_j + n^{-(j+1)} S_j
    // where F_j = prod_{i<j}(n-i) and S_j = F_j * sum_{i<j} 1/(n-i), both mod
    // p.  The products are maintained with a zero-multiplicity counter so a
    // single vanished factor still leaves S_j reconstructible.
    std::uint64_t acc = 0;
    std::uint64_t ipow = detail::mulmod(binv, binv, p); // n^{-(j+2)}
    unsigned zero_count = 0;     // zero factors absorbed so far
    std::uint64_t nonzero = 1;   // product of the nonzero factors
    std::uint64_t invsum = 0;    // sum of inverses of the nonzero factors
    for (std::uint64_t j = 0; j < 2 * p; ++j) {
        std::uint64_t f_j = zero_count == 0 ? nonzero : 0;
        std::uint64_t s_j;
        if (zero_count == 0)
            s_j = detail::mulmod(nonzero, invsum, p);
        else if (zero_count == 1)
            s_j = nonzero; // the one term whose vanished factor is struck out
        else
            s_j = 0;
        std::uint64_t r = (j + 2) % p;
        std::uint64_t coeff = r == 0 ? 0 : p - r; // -(j+2) mod p
        std::uint64_t term = detail::mulmod(detail::mulmod(coeff, ipow, p), f_j, p);
        term = detail::addmod(term, detail::mulmod(detail::mulmod(ipow, b, p), s_j, p), p);
        acc = detail::addmod(acc, term, p);
        // extend the products by the factor (n - j) mod p
        std::uint64_t jm = j % p;
        std::uint64_t factor = b >= jm ? b - jm : p - (jm - b);
        if (factor == 0) {
            ++zero_count;
        } else {
            nonzero = detail::mulmod(nonzero, factor, p);
            invsum = detail::addmod(invsum, detail::invmod(factor, p), p);
        }
        ipow = detail::mulmod(ipow, binv, p);
    }
    return Residue(Natural(static_cast<unsigned long>(acc)),
                   Natural(static_cast<unsigned long>(p)));
}

QValue q_value(const Natural& n, std::uint64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("q_value: p must be prime");
    if (n < 1)
        throw std::invalid_argument("q_value: n must be >= 1");
    if (n % p == 0)
        throw NonInvertible("q_value: n must be coprime to p");
    Natural m = Natural(static_cast<unsigned long>(p));
    m *= static_cast<unsigned long>(p);
    Residue a_np = schenker_mod(n + p, m);
    Residue a_n = schenker_mod(n, m);
    Residue base_np(n + p, m);
    Residue base_n(n, m);
    Integer e = Integer(static_cast<unsigned long>(p)) - n - 2;
    Residue shifted = a_n * base_np.pow(Integer(n) + 2) * base_n.pow(e);
    return QValue{n, p, a_np - shifted};
}

} // namespace schenker
