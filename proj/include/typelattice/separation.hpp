#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ext_oracle.hpp"
#include "type_lattice.hpp"

namespace typelattice::separation {

using prime_sets::SymbolicPrimeSet;
using type_lattice::ExtendedNat;
using type_lattice::TypeRep;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Floor of the square root, exact.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

// The three ways a strict inequality of types can manifest:
//   InfJump    — some prime has a finite entry below an infinite one;
//   ZeroBase   — infinitely many primes have entry 0 below a finite nonzero one;
//   BothFinite — infinitely many primes have entries 0 < t < r < inf.
// Every strict pair (after representative normalization) falls into at
// least one of these.
enum class StrictCase { InfJump, ZeroBase, BothFinite };

inline const char* to_label(StrictCase c) {
    switch (c) {
        case StrictCase::InfJump: return "InfJump";
        case StrictCase::ZeroBase: return "ZeroBase";
        case StrictCase::BothFinite: return "BothFinite";
    }
    throw std::logic_error("unknown strict case");
}

// Symbolic descriptor of the infinite-rank separating group for the
// BothFinite case: inside the product of the localizations Z_(p) over p in
// P, the subgroup of tuples (g_p) admitting m, k with m*g_p an integer and
// |m*g_p| <= k*p^{t_exp}. It separates the constant types with exponents
// t_exp and r_exp on P. Never materialized beyond finite truncations; its
// separating power is certified arithmetically by verify_non_surjectivity.
class GSpec {
public:
    GSpec(SymbolicPrimeSet P, std::uint32_t t_exp, std::uint32_t r_exp)
        : P_(std::move(P)), t_exp_(t_exp), r_exp_(r_exp) {
        if (t_exp_ == 0 || t_exp_ >= r_exp_)
            throw std::invalid_argument("exponents must satisfy 0 < t < r");
        if (!P_.is_infinite())
            throw std::invalid_argument("carrier prime set must be infinite");
    }

    [[nodiscard]] const SymbolicPrimeSet& carrier() const { return P_; }
    [[nodiscard]] std::uint32_t t_exp() const { return t_exp_; }
    [[nodiscard]] std::uint32_t r_exp() const { return r_exp_; }

private:
    SymbolicPrimeSet P_;
    std::uint32_t t_exp_;
    std::uint32_t r_exp_;
};

// A separating group for a strict pair tau < rho: something whose Ext
// vanishes against tau's group but not against rho's. Rank-1 witnesses
// carry their type; the BothFinite case needs the infinite-rank GSpec.
class Witness {
public:
    static Witness rank_one(TypeRep x) { return Witness(std::move(x)); }
    static Witness infinite_rank(GSpec g) { return Witness(std::move(g)); }

    [[nodiscard]] bool is_rank_one() const { return std::holds_alternative<TypeRep>(v_); }
    [[nodiscard]] const TypeRep& rank_one_type() const { return std::get<TypeRep>(v_); }
    [[nodiscard]] const GSpec& spec() const { return std::get<GSpec>(v_); }

private:
    explicit Witness(std::variant<TypeRep, GSpec> v) : v_(std::move(v)) {}
    std::variant<TypeRep, GSpec> v_;
};

// Which separation cases hold for the strict pair tau < rho, in the fixed
// order InfJump, ZeroBase, BothFinite. The inputs are normalized
// internally (the cases are invariant under representative adjustment, so
// pre-normalized inputs classify identically).
inline std::vector<StrictCase> classify(const TypeRep& tau, const TypeRep& rho) {
    if (!strictly_less(tau, rho))
        throw std::invalid_argument("classification requires a strictly smaller first type");
    auto [low, high] = normalize_pair(tau, rho);
    bool inf_jump = false;
    bool zero_base = false;
    bool both_finite = false;
    for (const auto& cell : refine(low, high)) {
        const ExtendedNat t = cell.left;
        const ExtendedNat r = cell.right;
        if (t.is_finite() && r.is_infinite()) inf_jump = true;
        if (cell.set.is_infinite() && r.is_finite() && t < r) {
            if (t.value() == 0 && r.value() > 0) zero_base = true;
            if (t.value() > 0) both_finite = true;
        }
    }
    std::vector<StrictCase> cases;
    if (inf_jump) cases.push_back(StrictCase::InfJump);
    if (zero_base) cases.push_back(StrictCase::ZeroBase);
    if (both_finite) cases.push_back(StrictCase::BothFinite);
    if (cases.empty()) throw std::logic_error("strict pair admits no separation case");
    return cases;
}

// Construct the canonical separating witness for tau < rho, preferring the
// cases in the order InfJump, ZeroBase, BothFinite, and within a case the
// least witness prime / first qualifying refinement cell:
//   InfJump q:    the localization type, 0 at q and inf elsewhere;
//   ZeroBase P:   the type with entry 1 on P and inf elsewhere;
//   BothFinite P: GSpec(P, t, r) on a cell where the pair is constant (t, r).
inline Witness witness(const TypeRep& tau, const TypeRep& rho) {
    if (!strictly_less(tau, rho))
        throw std::invalid_argument("witness construction requires a strictly smaller first type");
    auto [low, high] = normalize_pair(tau, rho);
    const auto cells = refine(low, high);
    const auto ix = low.indexing();

    SymbolicPrimeSet jump = SymbolicPrimeSet::empty(ix);
    for (const auto& cell : cells)
        if (cell.left.is_finite() && cell.right.is_infinite()) jump = jump.unite(cell.set);
    if (!jump.is_empty()) {
        const std::uint64_t q = jump.least_prime();
        auto x = TypeRep::constant(ix, ExtendedNat::infinity())
                     .with(SymbolicPrimeSet::of_primes(ix, {q}), ExtendedNat::finite(0));
        return Witness::rank_one(std::move(x));
    }

    for (const auto& cell : cells) {
        if (!cell.set.is_infinite() || !cell.right.is_finite()) continue;
        if (cell.left.value() == 0 && cell.right.value() > 0) {
            auto x = TypeRep::constant(ix, ExtendedNat::infinity())
                         .with(cell.set, ExtendedNat::finite(1));
            return Witness::rank_one(std::move(x));
        }
    }

    for (const auto& cell : cells) {
        if (!cell.set.is_infinite() || !cell.right.is_finite()) continue;
        if (cell.left.value() > 0 && cell.left < cell.right)
            return Witness::infinite_rank(GSpec(cell.set, cell.left.value(), cell.right.value()));
    }

    throw std::logic_error("strict pair admits no separating witness");
}

// Does x separate tau from rho, i.e. lie in tau's cotorsion class but not
// in rho's?
inline bool verify_rank1_witness(const TypeRep& tau, const TypeRep& rho, const TypeRep& x) {
    return ext_oracle::ext_vanishes_rank1(tau, x) && !ext_oracle::ext_vanishes_rank1(rho, x);
}

// The marker element's coordinate at p for exponent t: the floor of
// p^{t+1/2}, computed exactly as isqrt(p^{2t+1}). Since p^{t+1/2} is
// irrational, the result lies strictly inside (p^{t+1/2}-1, p^{t+1/2}).
inline BigInt choose_np(std::uint64_t p, std::uint32_t t) {
    if (t == 0) throw std::invalid_argument("exponent must be at least 1");
    return isqrt(boost::multiprecision::pow(BigInt(p), 2 * t + 1));
}

// Is (g_p) — truncated to the first primes of spec's carrier — certified a
// member at parameters (m, k): m*g_p integral and |m*g_p| <= k*p^{t_exp}
// for every listed coordinate? Coordinates must be p-local rationals.
inline bool gspec_membership_check(const std::vector<BigRat>& g, std::uint32_t m,
                                   std::uint32_t k, const GSpec& spec) {
    if (m == 0 || k == 0) throw std::invalid_argument("parameters m, k must be positive");
    const auto primes = spec.carrier().first_primes(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const BigInt p(primes[i]);
        if (boost::multiprecision::denominator(g[i]) % p == 0)
            throw std::invalid_argument("coordinate at prime " + std::to_string(primes[i]) +
                                        " is not p-local (denominator divisible by p)");
        const BigRat scaled = g[i] * m;
        if (boost::multiprecision::denominator(scaled) != 1) return false;
        const BigInt bound = BigInt(k) * boost::multiprecision::pow(p, spec.t_exp());
        if (boost::multiprecision::abs(boost::multiprecision::numerator(scaled)) > bound)
            return false;
    }
    return true;
}

struct NumericCheckRecord {
    std::uint64_t p;
    BigInt n_p;
    // (m, k) pairs violating either inequality; empty means the prime passes.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

struct NumericCheckReport {
    std::uint32_t m_max;
    std::uint32_t k_max;
    std::uint32_t prime_count;
    std::uint32_t t_exp;
    std::uint32_t r_exp;
    std::vector<NumericCheckRecord> records; // ordered by prime
    bool verdict;                            // true iff every record passes
};

// Certify that the marker tuple (n_p) escapes the image of spec's group
// under every tested parameter pair: over the first prime_count primes p of
// the carrier with 2*max(m_max, k_max) < isqrt(p), and all 1 <= m <= m_max,
// 1 <= k <= k_max, both exact inequalities hold:
//   (i)  m*n_p > k*p^{t_exp}          (no in-range coordinate hits n_p), and
//   (ii) m*n_p + k*p^{t_exp} < p^{r_exp}   (nor any congruent residue).
// Failures are reported per (p, m, k), never thrown.
inline NumericCheckReport verify_non_surjectivity(const GSpec& spec, std::uint32_t m_max,
                                                  std::uint32_t k_max,
                                                  std::uint32_t prime_count) {
    if (m_max == 0 || k_max == 0 || prime_count == 0)
        throw std::invalid_argument("verification budgets must be positive");
    NumericCheckReport report{m_max, k_max, prime_count,
                              spec.t_exp(), spec.r_exp(), {}, true};

    const BigInt threshold = 2 * BigInt(std::max(m_max, k_max));
    std::vector<std::uint64_t> primes;
    for (std::size_t j = 0; primes.size() < prime_count; ++j) {
        const std::uint64_t p = prime_sets::nth_prime(j);
        if (spec.carrier().member(p) && threshold < isqrt(BigInt(p))) primes.push_back(p);
    }

    for (const std::uint64_t p : primes) {
        NumericCheckRecord record{p, choose_np(p, spec.t_exp()), {}};
        const BigInt pt = boost::multiprecision::pow(BigInt(p), spec.t_exp());
        const BigInt pr = boost::multiprecision::pow(BigInt(p), spec.r_exp());
        for (std::uint32_t m = 1; m <= m_max; ++m)
            for (std::uint32_t k = 1; k <= k_max; ++k) {
                const BigInt lhs = m * record.n_p;
                const BigInt rhs = k * pt;
                if (!(lhs > rhs && lhs + rhs < pr)) record.failures.emplace_back(m, k);
            }
        if (!record.passed()) report.verdict = false;
        report.records.push_back(std::move(record));
    }
    return report;
}

} // namespace typelattice::separation
