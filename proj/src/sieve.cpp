#include "binomdiv/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace binomdiv::ratio {

namespace {

// Segmented Eratosthenes: base primes to sqrt(limit), then fixed-size windows.
std::vector<i64> sieve_to(i64 limit) {
    std::vector<i64> primes;
    if (limit < 2) return primes;

    i64 root = static_cast<i64>(std::sqrt(static_cast<double>(limit))) + 2;
    while (root * root > limit + 1) --root;

    std::vector<bool> small(static_cast<std::size_t>(root) + 1, true);
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i) {
        if (!small[static_cast<std::size_t>(i)]) continue;
        base.push_back(i);
        for (i64 j = i * i; j <= root; j += i) small[static_cast<std::size_t>(j)] = false;
    }
    for (i64 p : base)
        if (p <= limit) primes.push_back(p);

    constexpr i64 kSegment = 1 << 16;
    std::vector<bool> window;
    for (i64 lo = root + 1; lo <= limit; lo += kSegment) {
        i64 hi = std::min(lo + kSegment - 1, limit);
        window.assign(static_cast<std::size_t>(hi - lo + 1), true);
        for (i64 p : base) {
            if (p * p > hi) break;
            i64 start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (i64 j = start; j <= hi; j += p) window[static_cast<std::size_t>(j - lo)] = false;
        }
        for (i64 v = lo; v <= hi; ++v)
            if (window[static_cast<std::size_t>(v - lo)]) primes.push_back(v);
    }
    return primes;
}

struct Cache {
    std::mutex mutex;
    std::shared_ptr<const std::vector<i64>> primes = std::make_shared<const std::vector<i64>>();
    i64 limit = 1;
};

Cache& cache() {
    static Cache c;
    return c;
}

} // namespace

std::shared_ptr<const std::vector<i64>> primes_up_to(i64 limit) {
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    if (limit > c.limit) {
        i64 target = std::max(limit, c.limit * 2);
        c.primes = std::make_shared<const std::vector<i64>>(sieve_to(target));
        c.limit = target;
    }
    return c.primes;
}

} // namespace binomdiv::ratio
