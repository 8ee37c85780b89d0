#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace typelattice::type_lattice {

// Entry of a characteristic at one prime: a natural number or infinity.
// Totally ordered with every finite value below infinity.
class ExtendedNat {
public:
    static constexpr ExtendedNat finite(std::uint32_t n) {
        if (n == kInf) throw std::invalid_argument("finite value out of range");
        return ExtendedNat(n);
    }

    static constexpr ExtendedNat infinity() { return ExtendedNat(kInf); }

    [[nodiscard]] constexpr bool is_finite() const { return raw_ != kInf; }
    [[nodiscard]] constexpr bool is_infinite() const { return raw_ == kInf; }

    [[nodiscard]] constexpr std::uint32_t value() const {
        if (raw_ == kInf) throw std::domain_error("value() of infinity");
        return raw_;
    }

    friend constexpr auto operator<=>(ExtendedNat, ExtendedNat) = default;

    friend std::string to_string(ExtendedNat v) {
        return v.is_finite() ? std::to_string(v.raw_) : std::string("inf");
    }

    friend std::ostream& operator<<(std::ostream& os, ExtendedNat v) {
        return os << to_string(v);
    }

private:
    constexpr explicit ExtendedNat(std::uint32_t raw) : raw_(raw) {}

    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t raw_;
};

constexpr ExtendedNat max(ExtendedNat a, ExtendedNat b) { return a < b ? b : a; }
constexpr ExtendedNat min(ExtendedNat a, ExtendedNat b) { return a < b ? a : b; }

} // namespace typelattice::type_lattice
