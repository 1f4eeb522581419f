#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schenker {

// Everything the survey records about one prime: the roots r in {1..p-1}
// with p | a_r, and which of those roots have a vanishing lifting
// discriminant (the "anomalous" ones, where the unique-lift mechanism
// breaks down).
struct PrimeProfile {
    std::uint64_t p = 0;
    std::uint64_t lambda = 0;                   // number of roots
    std::vector<std::uint64_t> roots;           // ascending
    std::vector<std::uint64_t> anomalous_roots; // ascending subset of roots
    bool is_schenker = false;                   // lambda > 0

    bool operator==(const PrimeProfile&) const = default;
};

struct SurveyReport {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<PrimeProfile> profiles;          // ascending by p
    std::map<std::uint64_t, std::uint64_t> lambda_histogram;

    bool operator==(const SurveyReport&) const = default;
};

// Profile of a single prime.  Requires p prime.
PrimeProfile profile_prime(std::uint64_t p);

// Profiles every prime in [lo, hi] (requires 2 <= lo <= hi) using the given
// number of worker threads (at least one).  The result is identical for any
// worker count.  When cache_path is nonempty, previously computed profiles
// are read from that file (one JSON object per line) and newly computed ones
// are appended to it in ascending order of p.
SurveyReport scan_range(std::uint64_t lo, std::uint64_t hi, unsigned workers,
                        const std::string& cache_path = {});

// Parses a profile cache file.  Unreadable lines (e.g. a torn final line
// after an interrupted run) are skipped.  A missing file yields an empty
// list.
std::vector<PrimeProfile> load_profile_cache(const std::string& path);

// How many of the first n primes (2, 3, 5, ...) have at least one root.
std::uint64_t count_schenker_among_first(std::uint64_t n);

// All (p, r) pairs with p <= hi prime, r a root of p, and vanishing
// discriminant q_{r,p}.  Requires hi >= 2.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
anomaly_scan(std::uint64_t hi, unsigned workers = 1);

} // namespace schenker
