#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schenker/arith.hpp"
#include "schenker/natural.hpp"

namespace schenker {

// How a level-k solution of p^k | a_n behaves one level up.  Exactly one of
// the p candidates n + m*p^k solves p^{k+1} | a_x (UniqueLift), all of them
// do (AllLift), or none do (NoneLift).
enum class LiftKind { UniqueLift, AllLift, NoneLift };

struct LiftOutcome {
    LiftKind kind;
    // The unique successor mod p^{k+1}; present only for UniqueLift.
    std::optional<Residue> next;
};

// Classifies how n_k lifts from level k to level k+1 using a single
// discriminant evaluation, without scanning the p candidates for the
// decision itself (the successor of a UniqueLift is then located by a scan).
// Requires p prime, gcd(n_k, p) = 1 and p^k | a_{n_k}; violations of the
// latter two throw PreconditionFailed.
LiftOutcome classify_lift(std::uint64_t p, unsigned k, const Natural& n_k);

// Independent oracle: counts the candidates n_k + m*p^k, 0 <= m < p, whose
// sum is divisible by p^{k+1}.  Same preconditions as classify_lift.
unsigned brute_force_lift_count(std::uint64_t p, unsigned k, const Natural& n_k);

enum class ChainStatus {
    Completed,   // reached the requested level
    StoppedNone, // some level admitted no lift
    StoppedAll,  // some level lifted wholesale; no single successor to follow
};

struct ChainEntry {
    unsigned level;  // k
    Residue n;       // solution mod p^k
    bool operator==(const ChainEntry& rhs) const {
        return level == rhs.level && n == rhs.n;
    }
};

struct LiftChain {
    std::uint64_t p;
    std::vector<ChainEntry> entries;
    ChainStatus status;
};

// Follows unique lifts from a level-1 solution (a residue r with p | a_r)
// up to max_level, stopping early when the discriminant vanishes.  Requires
// p prime, max_level >= 1, gcd(n_1, p) = 1 and p | a_{n_1}.
LiftChain lift_chain(std::uint64_t p, const Natural& n_1, unsigned max_level);

} // namespace schenker
