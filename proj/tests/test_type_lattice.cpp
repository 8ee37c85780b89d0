#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "typelattice/type_lattice.hpp"

using typelattice::prime_sets::nth_prime;
using typelattice::prime_sets::PrimeIndexing;
using typelattice::prime_sets::SymbolicPrimeSet;
using typelattice::type_lattice::equivalent;
using typelattice::type_lattice::ExtendedNat;
using typelattice::type_lattice::join;
using typelattice::type_lattice::leq;
using typelattice::type_lattice::meet;
using typelattice::type_lattice::normalize_pair;
using typelattice::type_lattice::refine;
using typelattice::type_lattice::strictly_less;
using typelattice::type_lattice::TypeRep;

namespace {

ExtendedNat fin(std::uint32_t n) { return ExtendedNat::finite(n); }
ExtendedNat inf() { return ExtendedNat::infinity(); }

constexpr std::size_t kProbes = 200;

} // namespace

TEST_CASE("constant types evaluate constantly", "[type_lattice]") {
    const PrimeIndexing ix(16);
    const auto t = TypeRep::constant(ix, fin(3));
    for (std::size_t j = 0; j < kProbes; ++j) CHECK(t.value_at(nth_prime(j)) == fin(3));
    const auto q = TypeRep::constant(ix, inf());
    for (std::size_t j = 0; j < kProbes; ++j) CHECK(q.value_at(nth_prime(j)).is_infinite());
}

TEST_CASE("overrides apply in order, later ones winning", "[type_lattice]") {
    const PrimeIndexing ix(16);
    const auto t = TypeRep::constant(ix, fin(0))
                       .with(SymbolicPrimeSet::cell(ix, 0), fin(2))
                       .with(SymbolicPrimeSet::of_primes(ix, {2}), fin(7));
    CHECK(t.value_at(2) == fin(7));  // prime index 0: cell override then prime override
    CHECK(t.value_at(59) == fin(2)); // prime index 16: cell 0 only
    CHECK(t.value_at(3) == fin(0));  // prime index 1: untouched
    for (std::size_t j = 0; j < kProbes; ++j) {
        const std::uint64_t p = nth_prime(j);
        const ExtendedNat expected = p == 2 ? fin(7) : (j % 16 == 0 ? fin(2) : fin(0));
        CAPTURE(p);
        CHECK(t.value_at(p) == expected);
    }
}

TEST_CASE("representation is canonical per pointwise function", "[type_lattice]") {
    const PrimeIndexing ix(16);
    const auto base = TypeRep::constant(ix, fin(1));
    CHECK(base.with(SymbolicPrimeSet::cell(ix, 0), fin(2))
              .with(SymbolicPrimeSet::cell(ix, 0), fin(1)) == base);
    CHECK(base.with(SymbolicPrimeSet::empty(ix), fin(9)) == base);
    // Same function assembled piecewise in two different orders.
    const auto a = base.with(SymbolicPrimeSet::cell(ix, 3), inf())
                       .with(SymbolicPrimeSet::of_primes(ix, {5}), fin(4));
    const auto b = base.with(SymbolicPrimeSet::of_primes(ix, {5}), fin(4))
                       .with(SymbolicPrimeSet::cell(ix, 3).difference(
                                 SymbolicPrimeSet::of_primes(ix, {5})),
                             inf());
    // 5 has index 2, outside cell 3, so both describe the same function.
    CHECK(a == b);
}

TEST_CASE("refinement partitions the primes with matching side values", "[type_lattice]") {
    const PrimeIndexing ix(8);
    const auto a = TypeRep::constant(ix, fin(0))
                       .with(SymbolicPrimeSet::cells(ix, {1, 2}), fin(3))
                       .with(SymbolicPrimeSet::of_primes(ix, {13}), inf());
    const auto b = TypeRep::constant(ix, fin(1)).with(SymbolicPrimeSet::cell(ix, 2), inf());
    const auto cells = refine(a, b);
    REQUIRE_FALSE(cells.empty());
    for (std::size_t j = 0; j < kProbes; ++j) {
        const std::uint64_t p = nth_prime(j);
        std::size_t hits = 0;
        for (const auto& c : cells) {
            if (!c.set.member(p)) continue;
            ++hits;
            CHECK(c.left == a.value_at(p));
            CHECK(c.right == b.value_at(p));
        }
        CAPTURE(p);
        CHECK(hits == 1);
    }
}

TEST_CASE("equivalence ignores finitely many finite differences", "[type_lattice]") {
    const PrimeIndexing ix(16);
    const auto t = TypeRep::constant(ix, fin(1)).with(SymbolicPrimeSet::cell(ix, 5), inf());

    CHECK(equivalent(t, t));
    const auto tweaked = t.with(SymbolicPrimeSet::of_primes(ix, {2, 7}), fin(9));
    CHECK(equivalent(t, tweaked));
    CHECK(equivalent(tweaked, t));
    CHECK(leq(t, tweaked));
    CHECK(leq(tweaked, t));

    // An infinite value may not move, even at a single prime.
    const auto raised_to_inf = t.with(SymbolicPrimeSet::of_primes(ix, {2}), inf());
    CHECK_FALSE(equivalent(t, raised_to_inf));
    const auto lowered_from_inf =
        t.with(SymbolicPrimeSet::of_primes(ix, {13}), fin(0)); // 13 has index 5, inside cell 5
    CHECK_FALSE(equivalent(t, lowered_from_inf));

    // Infinitely many differences are never equivalent.
    CHECK_FALSE(equivalent(TypeRep::constant(ix, fin(0)), TypeRep::constant(ix, fin(1))));
}

TEST_CASE("order allows finite excess at finitely many primes only", "[type_lattice]") {
    const PrimeIndexing ix(16);
    const auto zero = TypeRep::constant(ix, fin(0));
    const auto one = TypeRep::constant(ix, fin(1));
    const auto top = TypeRep::constant(ix, inf());

    CHECK(leq(zero, one));
    CHECK_FALSE(leq(one, zero)); // excess on all primes
    CHECK(strictly_less(zero, one));
    CHECK(leq(zero, top));
    CHECK(leq(one, top));
    CHECK_FALSE(leq(top, one));

    // Finite excess at finitely many primes is absorbed by equivalence.
    const auto bumped = zero.with(SymbolicPrimeSet::of_primes(ix, {3, 11}), fin(5));
    CHECK(leq(bumped, zero));
    CHECK_FALSE(strictly_less(bumped, zero));

    // An infinite entry above a finite one blocks the order even at one prime.
    const auto spike = zero.with(SymbolicPrimeSet::of_primes(ix, {3}), inf());
    CHECK_FALSE(leq(spike, zero));
    CHECK(leq(zero, spike));
    CHECK(strictly_less(zero, spike));

    // Incomparable pair: each exceeds the other on an infinite set.
    const auto left = zero.with(SymbolicPrimeSet::cell(ix, 0), fin(1));
    const auto right = zero.with(SymbolicPrimeSet::cell(ix, 1), fin(1));
    CHECK_FALSE(leq(left, right));
    CHECK_FALSE(leq(right, left));
}

TEST_CASE("join and meet are pointwise max and min", "[type_lattice]") {
    const PrimeIndexing ix(8);
    const auto a = TypeRep::constant(ix, fin(1))
                       .with(SymbolicPrimeSet::cell(ix, 2), inf())
                       .with(SymbolicPrimeSet::of_primes(ix, {3}), fin(0));
    const auto b = TypeRep::constant(ix, fin(2))
                       .with(SymbolicPrimeSet::cells(ix, {2, 3}), fin(0))
                       .with(SymbolicPrimeSet::of_primes(ix, {7}), inf());
    const auto jo = join(a, b);
    const auto me = meet(a, b);
    for (std::size_t j = 0; j < kProbes; ++j) {
        const std::uint64_t p = nth_prime(j);
        CAPTURE(p);
        CHECK(jo.value_at(p) == typelattice::type_lattice::max(a.value_at(p), b.value_at(p)));
        CHECK(me.value_at(p) == typelattice::type_lattice::min(a.value_at(p), b.value_at(p)));
    }
    // Lattice laws hold structurally thanks to canonical representations.
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    CHECK(leq(me, a));
    CHECK(leq(me, b));
    CHECK(leq(a, jo));
    CHECK(leq(b, jo));
}

TEST_CASE("normalize_pair lowers the left type onto the right within its class",
          "[type_lattice]") {
    const PrimeIndexing ix(16);
    const auto low = TypeRep::constant(ix, fin(1)).with(SymbolicPrimeSet::of_primes(ix, {5, 7}),
                                                        fin(9));
    const auto high = TypeRep::constant(ix, fin(2));
    REQUIRE(leq(low, high));

    const auto [a, b] = normalize_pair(low, high);
    CHECK(equivalent(a, low));
    CHECK(b == high);
    for (std::size_t j = 0; j < kProbes; ++j) {
        const std::uint64_t p = nth_prime(j);
        CAPTURE(p);
        CHECK(a.value_at(p) <= b.value_at(p));
    }

    CHECK_THROWS_AS(normalize_pair(high, low), std::invalid_argument);
}

TEST_CASE("mixed indexings and non-primes are rejected", "[type_lattice]") {
    const PrimeIndexing ix(16);
    const PrimeIndexing other(8);
    const auto t = TypeRep::constant(ix, fin(0));
    CHECK_THROWS_AS(t.with(SymbolicPrimeSet::universe(other), fin(1)), std::invalid_argument);
    CHECK_THROWS_AS(join(t, TypeRep::constant(other, fin(0))), std::invalid_argument);
    CHECK_THROWS_AS(t.value_at(6), std::invalid_argument);
}
