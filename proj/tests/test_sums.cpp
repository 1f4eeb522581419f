#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "schenker/arith.hpp"
#include "schenker/natural.hpp"
#include "schenker/sums.hpp"

using namespace schenker;

TEST_SUITE("exact sums") {
    TEST_CASE("known values") {
        const std::pair<std::uint64_t, const char*> table[] = {
            {1, "2"},
            {2, "10"},
            {3, "78"},
            {4, "824"},
            {5, "10970"},
            {6, "176112"},
            {7, "3309110"},
            {10, "46602156800"},
            {16, "105224992014096760832"},
            {25, "617548599479290339545462424041031250"},
        };
        for (const auto& [n, want] : table) {
            CAPTURE(n);
            CHECK(to_decimal(schenker_exact(n)) == want);
        }
    }

    TEST_CASE("definition cross-check via factorial form") {
        // a_n = sum_j (n!/j!) n^j, built the slow direct way.
        for (unsigned long n = 1; n <= 30; ++n) {
            Natural fac;
            mpz_fac_ui(fac.get_mpz_t(), n); // n!
            Natural acc = 0;
            Natural jfac = 1;
            for (unsigned long j = 0; j <= n; ++j) {
                if (j > 0)
                    jfac *= j;
                acc += fac / jfac * pow_natural(Natural(n), j);
            }
            CAPTURE(n);
            CHECK(schenker_exact(n) == acc);
        }
    }

    TEST_CASE("cap is enforced") {
        CHECK_THROWS_AS(schenker_exact(11, 10), CapExceeded);
        CHECK(schenker_exact(10, 10) == Natural("46602156800"));
        CHECK_THROWS_AS(schenker_exact(0), std::invalid_argument);
    }
}

TEST_SUITE("modular sums") {
    TEST_CASE("known residues") {
        CHECK(schenker_mod(25, 1369).value() == 851);
        CHECK(schenker_mod(1, 7).value() == 2);
        CHECK(schenker_mod(7, 25).value() == 10);
        CHECK(schenker_mod(62, 1369).value() == 740);
        CHECK(schenker_mod(12, 625).value() == 125);
        CHECK(schenker_mod(7, 5).value() == 0);
        CHECK(schenker_mod(7, 125).value() == 110);
    }

    TEST_CASE("agrees with exact sums across a dense grid") {
        for (unsigned long n = 1; n <= 40; ++n) {
            Natural exact = schenker_exact(n);
            for (unsigned long m = 2; m <= 120; ++m) {
                if (schenker_mod(n, m).value() != exact % m) {
                    CAPTURE(n);
                    CAPTURE(m);
                    REQUIRE(schenker_mod(n, m).value() == exact % m);
                }
            }
        }
    }

    TEST_CASE("modulus beyond 64 bits takes the arbitrary-precision path") {
        Natural huge = pow_natural(Natural(2), 80);
        CHECK(schenker_mod(7, huge).value() == 3309110); // a_7 < 2^80
        Natural m = pow_natural(Natural(10), 20) + 39;
        CHECK(schenker_mod(16, m).value() == schenker_exact(16) % m);
        CHECK(schenker_mod(40, m).value() == schenker_exact(40) % m);
    }

    TEST_CASE("index beyond 64 bits: divisibility reduces mod p") {
        // For an odd prime p, p | a_n depends on n mod p only (the residue
        // itself does not reduce), so a 30-digit index must agree with its
        // reduction about divisibility.
        Natural n = pow_natural(Natural(10), 30) + 123;
        for (unsigned long p : {101, 97, 5, 13}) {
            Natural r = n % p;
            CAPTURE(p);
            CHECK(schenker_mod(n, p).is_zero() == schenker_mod(r, p).is_zero());
        }
    }

    TEST_CASE("index beyond 64 bits: factors through the characteristic sum") {
        // a_n ≡ n^{n-d+2} f_d(n) (mod d) holds for any index size, which
        // cross-checks the arbitrary-precision path against independent code.
        Natural n = pow_natural(Natural(10), 30) + 123;
        for (unsigned long d : {7, 97, 101, 143}) {
            Natural g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), Natural(d).get_mpz_t());
            REQUIRE(g == 1);
            Residue lhs = schenker_mod(n, d);
            Residue rhs = mod_pow(Residue(n, d), Integer(n) - Integer(d) + 2) *
                          f_eval(Natural(d), n);
            CAPTURE(d);
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("a_n is always divisible by n") {
        for (unsigned long n = 2; n <= 200; ++n)
            CHECK(schenker_mod(n, n).is_zero());
    }

    TEST_CASE("input validation") {
        CHECK_THROWS_AS(schenker_mod(0, 7), std::invalid_argument);
        CHECK_THROWS_AS(schenker_mod(3, 1), std::invalid_argument);
        CHECK_THROWS_AS(schenker_mod(3, 0), std::invalid_argument);
    }
}

TEST_SUITE("characteristic sums") {
    TEST_CASE("known values of f_d") {
        CHECK(f_eval(5, 2).value() == 0);
        CHECK(f_eval(5, 1).value() == 2);
        CHECK(f_eval(2, 1).value() == 0);
        CHECK_THROWS_AS(f_eval(10, 5), NonInvertible);
        CHECK_THROWS_AS(f_eval(1, 1), std::invalid_argument);
    }

    TEST_CASE("a_n factors through f_d on coprime pairs") {
        for (unsigned long d = 2; d <= 60; ++d) {
            for (unsigned long n = 1; n <= 60; ++n) {
                if (std::gcd(n, d) != 1)
                    continue;
                Residue lhs = schenker_mod(n, d);
                Residue rhs =
                    mod_pow(Residue(Natural(n), Natural(d)), Integer(n) - Integer(d) + 2) *
                    f_eval(d, n);
                if (lhs != rhs) {
                    CAPTURE(d);
                    CAPTURE(n);
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }

    TEST_CASE("known derivative values") {
        CHECK(f_prime_mod_p(5, 2).value() == 3);
        CHECK(f_prime_mod_p(37, 25).value() == 0);
        CHECK(f_prime_mod_p(13, 3).value() == 12);
        CHECK_THROWS_AS(f_prime_mod_p(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(f_prime_mod_p(9, 2), std::invalid_argument);
        CHECK_THROWS_AS(f_prime_mod_p(5, 10), NonInvertible);
    }

    TEST_CASE("derivative depends only on the residue of n") {
        for (unsigned long n : {2, 7, 12, 10002}) {
            CHECK(f_prime_mod_p(5, n) == f_prime_mod_p(5, n % 5));
        }
    }
}

TEST_SUITE("lifting discriminants") {
    TEST_CASE("known values") {
        CHECK(q_value(1, 2).residue == Residue(Natural(0), Natural(4)));
        CHECK(q_value(2, 5).residue == Residue(Natural(15), Natural(25)));
        CHECK(q_value(3, 13).residue == Residue(Natural(52), Natural(169)));
        CHECK(q_value(25, 37).residue == Residue(Natural(0), Natural(1369)));
    }

    TEST_CASE("matches the integer formula when the exponent is nonnegative") {
        // For n <= p - 2 the discriminant is a plain integer:
        // a_{n+p} - a_n (n+p)^{n+2} n^{p-n-2}.
        for (std::uint64_t p : primes_up_to(37)) {
            for (unsigned long n = 1; n + 2 <= p; ++n) {
                Natural integer_q =
                    schenker_exact(n + p) -
                    schenker_exact(n) * pow_natural(Natural(n + p), n + 2) *
                        pow_natural(Natural(n), p - n - 2);
                Residue want(integer_q, Natural((unsigned long)(p * p)));
                CAPTURE(p);
                CAPTURE(n);
                REQUIRE(q_value(n, p).residue == want);
            }
        }
    }

    TEST_CASE("links to the derivative of the characteristic sum") {
        // q ≡ p (n+p)^{n+2} f'(n) (mod p^2) for odd p.
        for (std::uint64_t p : {3, 5, 7, 11, 13}) {
            Natural p2((unsigned long)(p * p));
            for (unsigned long n = 1; n <= 3 * p; ++n) {
                if (n % p == 0)
                    continue;
                Residue lhs = q_value(n, p).residue;
                Residue rhs = Residue(Natural((unsigned long)p), p2) *
                              mod_pow(Residue(Natural(n + p), p2), Integer(n) + 2) *
                              Residue(f_prime_mod_p(p, n).value(), p2);
                CAPTURE(p);
                CAPTURE(n);
                REQUIRE(lhs == rhs);
            }
        }
    }

    TEST_CASE("input validation") {
        CHECK_THROWS_AS(q_value(5, 5), NonInvertible);
        CHECK_THROWS_AS(q_value(1, 6), std::invalid_argument);
        CHECK_THROWS_AS(q_value(0, 5), std::invalid_argument);
    }
}

TEST_SUITE("structural congruences") {
    TEST_CASE("residues at nested prime powers are compatible") {
        for (std::uint64_t p : primes_up_to(37)) {
            for (unsigned long n = 1; n <= 100; ++n) {
                Natural pk = 1;
                Residue prev(Natural(0), Natural(2)); // replaced at k = 1
                for (unsigned k = 1; k <= 4; ++k) {
                    pk *= (unsigned long)p;
                    Residue cur = schenker_mod(n, pk);
                    if (k > 1) {
                        Natural down = cur.value() % prev.modulus();
                        if (down != prev.value()) {
                            CAPTURE(p);
                            CAPTURE(n);
                            CAPTURE(k);
                            REQUIRE(down == prev.value());
                        }
                    }
                    prev = cur;
                }
            }
        }
    }

    TEST_CASE("divisibility by an odd prime is periodic in the index") {
        // For odd p and p ∤ n: p | a_n exactly when p | a_{n mod p}.
        // Residue equality would be stronger and is false (a_5 = 10970 ≡ 2
        // but a_2 = 10 ≡ 1 mod 3); the divisibility form is what makes
        // root residues meaningful.
        for (std::uint64_t p : primes_up_to(100)) {
            if (p == 2)
                continue;
            for (unsigned long n = 1; n <= 5 * p; ++n) {
                if (n % p == 0)
                    continue;
                bool full = schenker_mod(n, p).is_zero();
                bool reduced = schenker_mod(n % p, p).is_zero();
                if (full != reduced) {
                    CAPTURE(p);
                    CAPTURE(n);
                    REQUIRE(full == reduced);
                }
            }
        }
    }

    TEST_CASE("exact index-shift relation modulo an odd prime") {
        // The sharp form behind the periodic divisibility: for odd p not
        // dividing n, a_{n+p} ≡ n · a_n (mod p), so a_{r+kp} ≡ r^k · a_r.
        for (std::uint64_t p : primes_up_to(97)) {
            if (p == 2)
                continue;
            for (unsigned long n = 1; n <= 3 * p; ++n) {
                if (n % p == 0)
                    continue;
                Residue expected = Residue(Natural(n), Natural(p)) * schenker_mod(n, p);
                if (schenker_mod(n + p, p) != expected) {
                    CAPTURE(p);
                    CAPTURE(n);
                    REQUIRE(schenker_mod(n + p, p) == expected);
                }
            }
        }
        // Iterated form on a 30-digit index n = r + kp.
        Natural big = pow_natural(Natural(10), 30) + 123;
        for (unsigned long p : {101ul, 97ul, 13ul}) {
            Natural r = big % p;
            REQUIRE(r != 0);
            Natural k = (big - r) / p;
            Residue jump = mod_pow(Residue(r, p), Integer(k));
            CAPTURE(p);
            CHECK(schenker_mod(big, p) == jump * schenker_mod(r, p));
        }
    }
}
