#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace typelattice::prime_sets {

// Growable prime sieve shared by the whole session. Exact integers only;
// the cache behaves as append-only and is protected by a mutex, so the
// free functions below are safe to call concurrently.
class Sieve {
public:
    static Sieve& instance() {
        static Sieve sieve;
        return sieve;
    }

    // p_j in increasing order, zero-indexed: nth_prime(0) == 2.
    std::uint64_t nth_prime(std::size_t j) {
        std::lock_guard lock(mutex_);
        while (primes_.size() <= j) extend();
        return primes_[j];
    }

    bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        std::lock_guard lock(mutex_);
        cover(n);
        return std::binary_search(primes_.begin(), primes_.end(), n);
    }

    // Index j with p_j == p; rejects non-primes.
    std::size_t prime_index(std::uint64_t p) {
        std::lock_guard lock(mutex_);
        cover(p);
        auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
        if (it == primes_.end() || *it != p)
            throw std::invalid_argument("not a prime: " + std::to_string(p));
        return static_cast<std::size_t>(it - primes_.begin());
    }

    Sieve(const Sieve&) = delete;
    Sieve& operator=(const Sieve&) = delete;

private:
    Sieve() { cover(1 << 12); }

    void extend() { cover(limit_ * 2); }

    // Re-sieve so that every prime < new limit is cached.
    void cover(std::uint64_t n) {
        if (n < limit_) return;
        std::uint64_t new_limit = limit_ ? limit_ : 16;
        while (new_limit <= n) new_limit *= 2;
        std::vector<bool> composite(new_limit, false);
        primes_.clear();
        for (std::uint64_t i = 2; i < new_limit; ++i) {
            if (composite[i]) continue;
            primes_.push_back(i);
            for (std::uint64_t m = i * i; m < new_limit; m += i) composite[m] = true;
        }
        limit_ = new_limit;
    }

    std::mutex mutex_;
    std::vector<std::uint64_t> primes_;
    std::uint64_t limit_ = 0;
};

inline std::uint64_t nth_prime(std::size_t j) { return Sieve::instance().nth_prime(j); }
inline bool is_prime(std::uint64_t n) { return Sieve::instance().is_prime(n); }
inline std::size_t prime_index(std::uint64_t p) { return Sieve::instance().prime_index(p); }

} // namespace typelattice::prime_sets
