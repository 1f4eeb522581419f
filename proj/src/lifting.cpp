#include "schenker/lifting.hpp"

#include <stdexcept>
#include <string>

#include "schenker/sums.hpp"

namespace schenker {

namespace {

// Shared validation: p prime, gcd(n_k, p) = 1, p^k | a_{n_k}.  Returns p^k.
Natural check_level(std::uint64_t p, unsigned k, const Natural& n_k) {
    if (!is_prime(p))
        throw std::invalid_argument("lifting: p must be prime");
    if (k < 1)
        throw std::invalid_argument("lifting: level must be >= 1");
    if (n_k < 1)
        throw std::invalid_argument("lifting: index must be >= 1");
    if (n_k % p == 0)
        throw PreconditionFailed("lifting: index " + n_k.get_str() +
                                 " is divisible by p = " + std::to_string(p));
    Natural pk = pow_natural(Natural(static_cast<unsigned long>(p)), k);
    if (!schenker_mod(n_k, pk).is_zero())
        throw PreconditionFailed("lifting: " + pk.get_str() + " does not divide the sum at " +
                                 n_k.get_str());
    return pk;
}

} // namespace

LiftOutcome classify_lift(std::uint64_t p, unsigned k, const Natural& n_k) {
    Natural pk = check_level(p, k, n_k);
    Natural pk1 = pk * static_cast<unsigned long>(p);
    QValue q = q_value(n_k, p);
    if (!q.residue.is_zero()) {
        // Nonvanishing discriminant: exactly one of the p extensions solves
        // the next level; locate it.
        for (std::uint64_t m = 0; m < p; ++m) {
            Natural cand = n_k + pk * static_cast<unsigned long>(m);
            if (schenker_mod(cand, pk1).is_zero())
                return LiftOutcome{LiftKind::UniqueLift, Residue(cand, pk1)};
        }
        // Unreachable when the discriminant criterion holds.
        throw std::logic_error("classify_lift: no successor found despite nonzero discriminant");
    }
    if (schenker_mod(n_k, pk1).is_zero())
        return LiftOutcome{LiftKind::AllLift, std::nullopt};
    return LiftOutcome{LiftKind::NoneLift, std::nullopt};
}

unsigned brute_force_lift_count(std::uint64_t p, unsigned k, const Natural& n_k) {
    Natural pk = check_level(p, k, n_k);
    Natural pk1 = pk * static_cast<unsigned long>(p);
    unsigned count = 0;
    for (std::uint64_t m = 0; m < p; ++m) {
        Natural cand = n_k + pk * static_cast<unsigned long>(m);
        if (schenker_mod(cand, pk1).is_zero())
            ++count;
    }
    return count;
}

LiftChain lift_chain(std::uint64_t p, const Natural& n_1, unsigned max_level) {
    if (max_level < 1)
        throw std::invalid_argument("lift_chain: max_level must be >= 1");
    // check_level validates primality and the level-1 divisibility.
    check_level(p, 1, n_1);
    Natural pz(static_cast<unsigned long>(p));
    LiftChain chain{p, {}, ChainStatus::Completed};
    Natural cur = n_1 % pz; // canonical representative of the level-1 class
    chain.entries.push_back(ChainEntry{1, Residue(cur, pz)});
    for (unsigned k = 1; k < max_level; ++k) {
        LiftOutcome out = classify_lift(p, k, cur);
        if (out.kind == LiftKind::UniqueLift) {
            cur = out.next->value();
            chain.entries.push_back(ChainEntry{k + 1, *out.next});
        } else {
            chain.status = out.kind == LiftKind::NoneLift ? ChainStatus::StoppedNone
                                                          : ChainStatus::StoppedAll;
            break;
        }
    }
    return chain;
}

} // namespace schenker
