#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "schenker/arith.hpp"
#include "schenker/natural.hpp"
#include "schenker/sums.hpp"
#include "schenker/valuation.hpp"

using namespace schenker;

TEST_SUITE("2-adic closed form") {
    TEST_CASE("known values") {
        CHECK(v2_closed_form(1) == 1);
        CHECK(v2_closed_form(2) == 1);
        CHECK(v2_closed_form(4) == 3);
        CHECK_THROWS_AS(v2_closed_form(0), std::invalid_argument);
    }

    TEST_CASE("matches exact valuations up to 64") {
        // frozen first 16 values: odd n give 1, even n give n - s_2(n)
        const unsigned long first16[] = {1, 1, 1, 3, 1, 4, 1, 7,
                                         1, 8, 1, 10, 1, 11, 1, 15};
        for (unsigned long n = 1; n <= 16; ++n)
            CHECK(v2_closed_form(n) == first16[n - 1]);
        for (unsigned long n = 1; n <= 64; ++n) {
            CAPTURE(n);
            CHECK(valuation_int(schenker_exact(n), 2) ==
                  ValuationResult::exact(v2_closed_form(n)));
        }
    }
}

TEST_SUITE("valuation at multiples of p") {
    TEST_CASE("known values") {
        CHECK(vp_multiple(3, 3) == 1);
        CHECK(vp_multiple(5, 5) == 1);
        CHECK(vp_multiple(5, 25) == 6);
        CHECK_THROWS_AS(vp_multiple(5, 7), NotMultiple);
        CHECK_THROWS_AS(vp_multiple(4, 8), std::invalid_argument);
    }

    TEST_CASE("matches exact valuations") {
        for (std::uint64_t p : {3, 5, 7}) {
            for (unsigned long m = 1; m <= 20; ++m) {
                unsigned long n = p * m;
                CAPTURE(p);
                CAPTURE(n);
                CHECK(valuation_int(schenker_exact(n), p) ==
                      ValuationResult::exact(vp_multiple(p, n)));
            }
        }
    }
}

TEST_SUITE("general valuation") {
    TEST_CASE("dispatch cases") {
        CHECK(vp_general(5, 7, 10) == ValuationResult::exact(1));
        CHECK(vp_general(37, 25, 10) == ValuationResult::exact(1));
        CHECK(vp_general(3, 4, 10) == ValuationResult::exact(0));
        CHECK(vp_general(2, 6, 10) == ValuationResult::exact(4));
        CHECK(vp_general(5, 10, 10) == ValuationResult::exact(2)); // 5 | n branch
        CHECK(vp_general(5, 12, 30) == ValuationResult::exact(3));
        CHECK(vp_general(13, 29, 10) == ValuationResult::exact(2));
        CHECK_THROWS_AS(vp_general(6, 3, 10), std::invalid_argument);
        CHECK_THROWS_AS(vp_general(5, 0, 10), std::invalid_argument);
        CHECK_THROWS_AS(vp_general(5, 3, 0), std::invalid_argument);
    }

    TEST_CASE("the cap turns deep answers into lower bounds") {
        // v_5(a_2) = 1, so a cap of 1 cannot resolve it exactly.
        CHECK(vp_general(5, 2, 1) == ValuationResult::at_least(1));
        CHECK(vp_general(5, 2, 2) == ValuationResult::exact(1));
        // v_5(a_12) = 3
        CHECK(vp_general(5, 12, 3) == ValuationResult::at_least(3));
        CHECK(vp_general(5, 12, 4) == ValuationResult::exact(3));
    }

    TEST_CASE("agrees with exact valuations on a dense grid") {
        for (std::uint64_t p : primes_up_to(50)) {
            for (unsigned long n = 1; n <= 120; ++n) {
                ValuationResult got = vp_general(p, n, 30);
                ValuationResult want = valuation_int(schenker_exact(n), p);
                if (!(got == want)) {
                    CAPTURE(p);
                    CAPTURE(n);
                    REQUIRE(got == want);
                }
            }
        }
    }
}

TEST_SUITE("37-adic closed form") {
    TEST_CASE("piecewise values") {
        CHECK(v37_closed_form(25) == 1);
        CHECK(v37_closed_form(37) == 1);
        CHECK(v37_closed_form(74) == 2);
        CHECK(v37_closed_form(3) == 0);
        CHECK(v37_closed_form(26) == 0);
        CHECK(v37_closed_form(25 + 37) == 1);
        CHECK_THROWS_AS(v37_closed_form(0), std::invalid_argument);
    }

    TEST_CASE("matches the general valuation up to 500") {
        for (unsigned long n = 1; n <= 500; ++n) {
            ValuationResult v = vp_general(37, n, 10);
            CAPTURE(n);
            REQUIRE(v.is_exact());
            CHECK(v.value() == v37_closed_form(n));
        }
    }
}

TEST_SUITE("root residues") {
    TEST_CASE("known root sets") {
        using V = std::vector<std::uint64_t>;
        CHECK(root_residues(2) == V{1});
        CHECK(root_residues(3) == V{});
        CHECK(root_residues(5) == V{2});
        CHECK(root_residues(7) == V{});
        CHECK(root_residues(13) == V{3});
        CHECK(root_residues(23) == V{18});
        CHECK(root_residues(31) == V{18});
        CHECK(root_residues(37) == V{25});
        CHECK(root_residues(41) == V{7, 18});
        CHECK(root_residues(43) == V{37});
        CHECK(root_residues(47) == V{17});
        CHECK(root_residues(179) == V{13, 16, 63});
        CHECK(root_residues(593) == V{37, 113, 367, 408, 423});
        CHECK(root_residues(557) == V{133, 408});
        CHECK(root_residues(857) == V{53, 156});
        CHECK(root_residues(1069) == V{525});
        CHECK(root_residues(1213) == V{});
        CHECK(root_residues(1217) == V{256});
        CHECK(root_residues(1229) == V{});
        CHECK_THROWS_AS(root_residues(6), std::invalid_argument);
    }

    TEST_CASE("roots really divide the exact sums") {
        for (std::uint64_t p : {557, 857, 1069, 1217}) {
            for (std::uint64_t r : root_residues(p)) {
                CAPTURE(p);
                CAPTURE(r);
                CHECK(schenker_exact(r) % (unsigned long)p == 0);
            }
        }
    }

    TEST_CASE("non-roots really do not divide") {
        // exhaustive complement check for two primes
        for (std::uint64_t p : {13, 41}) {
            std::vector<std::uint64_t> roots = root_residues(p);
            std::size_t idx = 0;
            for (std::uint64_t r = 1; r < p; ++r) {
                bool is_root = idx < roots.size() && roots[idx] == r;
                if (is_root)
                    ++idx;
                CAPTURE(p);
                CAPTURE(r);
                CHECK((schenker_exact(r) % (unsigned long)p == 0) == is_root);
            }
        }
    }
}
