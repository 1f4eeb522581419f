#include "schenker/valuation.hpp"

#include <stdexcept>
#include <string>

#include "schenker/sums.hpp"

namespace schenker {

Natural v2_closed_form(const Natural& n) {
    if (n < 1)
        throw std::invalid_argument("v2_closed_form: n must be >= 1");
    if (mpz_odd_p(n.get_mpz_t()))
        return 1;
    return n - digit_sum(n, 2);
}

Natural vp_multiple(std::uint64_t p, const Natural& n) {
    if (!is_prime(p))
        throw std::invalid_argument("vp_multiple: p must be prime");
    if (n < 1)
        throw std::invalid_argument("vp_multiple: n must be >= 1");
    if (n % p != 0)
        throw NotMultiple("vp_multiple: " + std::to_string(p) + " does not divide " +
                          n.get_str());
    // v_p(a_n) coincides with v_p(n!) = (n - s_p(n)) / (p - 1) here.
    Natural num = n - digit_sum(n, p);
    Natural q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p - 1));
    return q;
}

ValuationResult vp_general(std::uint64_t p, const Natural& n, unsigned cap) {
    if (!is_prime(p))
        throw std::invalid_argument("vp_general: p must be prime");
    if (n < 1)
        throw std::invalid_argument("vp_general: n must be >= 1");
    if (cap < 1)
        throw std::invalid_argument("vp_general: cap must be >= 1");
    if (p == 2)
        return ValuationResult::exact(v2_closed_form(n));
    if (n % p == 0)
        return ValuationResult::exact(vp_multiple(p, n));
    // Whether p divides a_n depends on n mod p only (the residue itself
    // does not reduce), so probing level 1 at n mod p is enough.
    Natural r = n % p;
    if (!schenker_mod(r, Natural(static_cast<unsigned long>(p))).is_zero())
        return ValuationResult::exact(0);
    Natural pk(static_cast<unsigned long>(p));
    for (unsigned k = 2; k <= cap; ++k) {
        pk *= static_cast<unsigned long>(p);
        if (!schenker_mod(n, pk).is_zero())
            return ValuationResult::exact(k - 1);
    }
    return ValuationResult::at_least(cap);
}

Natural v37_closed_form(const Natural& n) {
    if (n < 1)
        throw std::invalid_argument("v37_closed_form: n must be >= 1");
    Natural r = n % 37;
    if (r == 0)
        return vp_multiple(37, n);
    if (r == 25)
        return 1;
    return 0;
}

std::vector<std::uint64_t> root_residues(std::uint64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("root_residues: p must be prime");
    std::vector<std::uint64_t> roots;
    for (std::uint64_t r = 1; r < p; ++r)
        if (detail::schenker_mod_u64(r, p) == 0)
            roots.push_back(r);
    return roots;
}

} // namespace schenker
