#include "schenker/survey.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "schenker/arith.hpp"
#include "schenker/sums.hpp"
#include "schenker/valuation.hpp"

namespace schenker {

namespace {

nlohmann::json profile_to_json(const PrimeProfile& pr) {
    return nlohmann::json{{"p", pr.p},
                          {"lambda", pr.lambda},
                          {"roots", pr.roots},
                          {"anomalous_roots", pr.anomalous_roots}};
}

bool profile_from_json(const nlohmann::json& j, PrimeProfile& pr) {
    if (!j.is_object() || !j.contains("p") || !j.contains("lambda") ||
        !j.contains("roots") || !j.contains("anomalous_roots"))
        return false;
    pr.p = j.at("p").get<std::uint64_t>();
    pr.lambda = j.at("lambda").get<std::uint64_t>();
    pr.roots = j.at("roots").get<std::vector<std::uint64_t>>();
    pr.anomalous_roots = j.at("anomalous_roots").get<std::vector<std::uint64_t>>();
    pr.is_schenker = pr.lambda > 0;
    return pr.lambda == pr.roots.size();
}

} // namespace

PrimeProfile profile_prime(std::uint64_t p) {
    PrimeProfile pr;
    pr.p = p;
    pr.roots = root_residues(p); // validates primality
    pr.lambda = pr.roots.size();
    pr.is_schenker = !pr.roots.empty();
    for (std::uint64_t r : pr.roots) {
        // A vanishing discriminant marks the root as anomalous: its class
        // does not propagate upward through unique lifts.
        if (q_value(Natural(static_cast<unsigned long>(r)), p).residue.is_zero())
            pr.anomalous_roots.push_back(r);
    }
    return pr;
}

std::vector<PrimeProfile> load_profile_cache(const std::string& path) {
    std::vector<PrimeProfile> profiles;
    std::ifstream in(path);
    if (!in)
        return profiles;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        PrimeProfile pr;
        if (!j.is_discarded() && profile_from_json(j, pr))
            profiles.push_back(std::move(pr));
    }
    return profiles;
}

SurveyReport scan_range(std::uint64_t lo, std::uint64_t hi, unsigned workers,
                        const std::string& cache_path) {
    if (lo < 2 || lo > hi)
        throw std::invalid_argument("scan_range: need 2 <= lo <= hi");
    if (workers < 1)
        workers = 1;

    std::vector<std::uint64_t> primes = primes_up_to(hi);
    primes.erase(std::remove_if(primes.begin(), primes.end(),
                                [lo](std::uint64_t p) { return p < lo; }),
                 primes.end());

    std::unordered_map<std::uint64_t, const PrimeProfile*> cached;
    std::vector<PrimeProfile> cache_entries;
    if (!cache_path.empty()) {
        cache_entries = load_profile_cache(cache_path);
        for (const PrimeProfile& pr : cache_entries)
            cached.emplace(pr.p, &pr); // first occurrence wins; duplicates agree
    }

    const std::size_t total = primes.size();
    std::vector<PrimeProfile> out(total);
    std::vector<char> ready(total, 0);
    std::vector<char> from_cache(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        auto it = cached.find(primes[i]);
        if (it != cached.end()) {
            out[i] = *it->second;
            from_cache[i] = 1;
            ready[i] = 1;
        }
    }

    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    bool failed = false;

    auto work = [&] {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= total)
                    return;
                if (from_cache[i])
                    continue;
                PrimeProfile pr = profile_prime(primes[i]);
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (failed)
                        return;
                    out[i] = std::move(pr);
                    ready[i] = 1;
                }
                cv.notify_one();
            }
        } catch (...) {
            {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error)
                    first_error = std::current_exception();
                failed = true;
            }
            cv.notify_one();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);

    // The calling thread is the merger: it appends freshly computed profiles
    // to the cache strictly in ascending order of p, so an interrupted run
    // leaves a clean prefix behind.
    {
        std::ofstream cache_out;
        if (!cache_path.empty()) {
            // If the previous run was interrupted mid-write, start appending
            // on a fresh line so later records stay parseable.
            bool needs_newline = false;
            std::error_code ec;
            auto file_size = std::filesystem::file_size(cache_path, ec);
            if (!ec && file_size > 0) {
                std::ifstream probe(cache_path, std::ios::binary);
                probe.seekg(-1, std::ios::end);
                char last = '\n';
                if (probe.get(last))
                    needs_newline = last != '\n';
            }
            cache_out.open(cache_path, std::ios::app);
            if (!cache_out) {
                std::lock_guard<std::mutex> lock(mu);
                failed = true;
                first_error = std::make_exception_ptr(std::runtime_error(
                    "scan_range: cannot open cache file " + cache_path));
            } else if (needs_newline) {
                cache_out << '\n';
            }
        }
        std::size_t w = 0;
        std::unique_lock<std::mutex> lock(mu);
        while (w < total && !failed) {
            cv.wait(lock, [&] { return failed || ready[w]; });
            while (w < total && ready[w]) {
                if (!from_cache[w] && cache_out) {
                    cache_out << profile_to_json(out[w]).dump() << '\n';
                    cache_out.flush();
                }
                ++w;
            }
        }
    }

    for (std::thread& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);

    SurveyReport report;
    report.lo = lo;
    report.hi = hi;
    report.profiles = std::move(out);
    for (const PrimeProfile& pr : report.profiles)
        ++report.lambda_histogram[pr.lambda];
    return report;
}

std::uint64_t count_schenker_among_first(std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("count_schenker_among_first: n must be >= 1");
    // Upper bound for the n-th prime: n (ln n + ln ln n) for n >= 6.
    std::uint64_t bound = 13;
    if (n >= 6) {
        double x = static_cast<double>(n);
        bound = static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
    }
    std::vector<std::uint64_t> primes = primes_up_to(bound);
    while (primes.size() < n) {
        bound *= 2;
        primes = primes_up_to(bound);
    }
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (!root_residues(primes[i]).empty())
            ++count;
    return count;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> anomaly_scan(std::uint64_t hi,
                                                                  unsigned workers) {
    SurveyReport report = scan_range(2, hi, workers);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;
    for (const PrimeProfile& pr : report.profiles)
        for (std::uint64_t r : pr.anomalous_roots)
            hits.emplace_back(pr.p, r);
    return hits;
}

} // namespace schenker
