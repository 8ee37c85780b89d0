#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ext_oracle.hpp"
#include "separation.hpp"
#include "type_lattice.hpp"

namespace typelattice::gen {

using prime_sets::PrimeIndexing;
using prime_sets::SymbolicPrimeSet;
using type_lattice::ExtendedNat;
using type_lattice::TypeRep;

// Deterministic random source. Draws reduce the raw engine output modulo
// the bound, because the standard distributions are implementation-defined
// and would break cross-run byte stability of seeded reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty draw range");
        return engine_() % bound;
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

inline ExtendedNat random_value(Rng& rng, std::uint32_t max_finite = 4) {
    if (rng.below(4) == 0) return ExtendedNat::infinity();
    return ExtendedNat::finite(static_cast<std::uint32_t>(rng.below(max_finite + 1)));
}

// A symbolic set assembled from a random cell mask and a few explicit
// corrections among small primes.
inline SymbolicPrimeSet random_set(Rng& rng, PrimeIndexing ix) {
    std::vector<std::uint32_t> indices;
    for (std::uint32_t i = 0; i < ix.modulus(); ++i)
        if (rng.coin()) indices.push_back(i);
    SymbolicPrimeSet s = SymbolicPrimeSet::cells(ix, indices);
    for (std::uint64_t corrections = rng.below(3); corrections > 0; --corrections) {
        const std::uint64_t p = prime_sets::nth_prime(rng.below(30));
        const auto single = SymbolicPrimeSet::of_primes(ix, {p});
        s = rng.coin() ? s.unite(single) : s.difference(single);
    }
    return s;
}

// A type with at most `layers + 1` distinct values (so at most that many
// pieces after normalization).
inline TypeRep random_type(Rng& rng, PrimeIndexing ix, std::uint32_t layers = 3) {
    TypeRep t = TypeRep::constant(ix, random_value(rng));
    for (std::uint64_t i = rng.below(layers + 1); i > 0; --i)
        t = t.with(random_set(rng, ix), random_value(rng));
    return t;
}

// A pair with leq(first, second): meet the second with a random type, then
// optionally raise finitely many entries of the first (absorbed by
// equivalence, so order is preserved).
inline std::pair<TypeRep, TypeRep> random_leq_pair(Rng& rng, PrimeIndexing ix) {
    TypeRep high = random_type(rng, ix);
    TypeRep low = meet(random_type(rng, ix), high);
    if (rng.coin()) {
        const std::uint64_t p = prime_sets::nth_prime(rng.below(20));
        low = low.with(SymbolicPrimeSet::of_primes(ix, {p}),
                       ExtendedNat::finite(static_cast<std::uint32_t>(rng.below(9))));
    }
    return {std::move(low), std::move(high)};
}

inline std::pair<TypeRep, TypeRep> random_strict_pair(Rng& rng, PrimeIndexing ix) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto [low, high] = random_leq_pair(rng, ix);
        if (strictly_less(low, high)) return {std::move(low), std::move(high)};
    }
    return {TypeRep::constant(ix, ExtendedNat::finite(0)),
            TypeRep::constant(ix, ExtendedNat::infinity())};
}

// A strict pair whose only separation case is BothFinite: entries satisfy
// 0 < t_p < r_p < inf on an infinite set, the pair is equal wherever it is
// not strictly increasing, and any entries breaking the pattern are
// confined to finitely many primes with t_p = 0 < r_p (allowed, since only
// infinitely many such primes would raise the ZeroBase case).
inline std::pair<TypeRep, TypeRep> random_pure_both_finite_pair(Rng& rng, PrimeIndexing ix) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto positive = [&] {
            return ExtendedNat::finite(static_cast<std::uint32_t>(1 + rng.below(3)));
        };
        TypeRep low = TypeRep::constant(ix, positive());
        for (std::uint64_t i = rng.below(3); i > 0; --i)
            low = low.with(random_set(rng, ix), positive());

        TypeRep high = low;
        for (const auto& piece : low.pieces()) {
            const auto bumped = ExtendedNat::finite(
                piece.value.value() + 1 + static_cast<std::uint32_t>(rng.below(2)));
            high = high.with(piece.set, bumped);
        }

        // Optionally freeze a region to identical values (finite or inf).
        if (rng.coin()) {
            const auto frozen = random_value(rng);
            const auto region = random_set(rng, ix);
            low = low.with(region, frozen);
            high = high.with(region, frozen);
        }
        // Optionally add finitely many zero-based exceptional primes.
        if (rng.coin()) {
            const std::uint64_t p = prime_sets::nth_prime(rng.below(20));
            const auto single = SymbolicPrimeSet::of_primes(ix, {p});
            low = low.with(single, ExtendedNat::finite(0));
            high = high.with(single, positive());
        }

        if (!strictly_less(low, high)) continue;
        const auto cases = separation::classify(low, high);
        if (cases.size() == 1 && cases.front() == separation::StrictCase::BothFinite)
            return {std::move(low), std::move(high)};
    }
    return {TypeRep::constant(ix, ExtendedNat::finite(1)),
            TypeRep::constant(ix, ExtendedNat::finite(2))};
}

inline ext_oracle::CompletelyDecomposable random_cd(Rng& rng, PrimeIndexing ix,
                                                    std::uint32_t max_rank = 5) {
    std::vector<TypeRep> summands;
    for (std::uint64_t i = rng.below(max_rank + 1); i > 0; --i)
        summands.push_back(random_type(rng, ix));
    return ext_oracle::CompletelyDecomposable(std::move(summands));
}

} // namespace typelattice::gen
