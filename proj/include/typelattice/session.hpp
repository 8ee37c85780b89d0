#pragma once

#include <cstdint>
#include <stdexcept>

namespace typelattice::cli {

// Per-invocation configuration shared by the CLI commands and the
// self-test suites. With a fixed seed, all outputs are reproducible
// byte for byte in json mode.
struct SessionConfig {
    std::uint32_t modulus = 16;
    std::uint32_t m_max = 8;
    std::uint32_t k_max = 8;
    std::uint32_t prime_count = 40;
    bool json = false;
    std::uint64_t seed = 0;

    void validate() const {
        if (modulus == 0) throw std::invalid_argument("modulus must be at least 1");
        if (m_max == 0 || k_max == 0 || prime_count == 0)
            throw std::invalid_argument("verification budgets must be at least 1");
    }
};

} // namespace typelattice::cli
