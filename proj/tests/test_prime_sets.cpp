#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "typelattice/prime_sets.hpp"

using typelattice::prime_sets::nth_prime;
using typelattice::prime_sets::PrimeIndexing;
using typelattice::prime_sets::SymbolicPrimeSet;

namespace {

// A symbolic set paired with an independently written membership predicate.
// The predicate re-derives membership from first principles (prime index
// arithmetic and explicit exception lists), never through the class under test.
struct Modeled {
    SymbolicPrimeSet set;
    std::function<bool(std::uint64_t)> ref;
};

std::vector<Modeled> modeled_sets(PrimeIndexing ix) {
    const std::uint32_t k = ix.modulus();
    const std::uint32_t c1 = 1 % k;
    const std::uint32_t c2 = 2 % k;
    auto index_of = [](std::uint64_t p) { return typelattice::prime_sets::prime_index(p); };

    std::vector<Modeled> out;
    out.push_back({SymbolicPrimeSet::empty(ix), [](std::uint64_t) { return false; }});
    out.push_back({SymbolicPrimeSet::universe(ix), [](std::uint64_t) { return true; }});
    out.push_back({SymbolicPrimeSet::cell(ix, 0),
                   [=](std::uint64_t p) { return index_of(p) % k == 0; }});
    out.push_back({SymbolicPrimeSet::cells(ix, {c1, c2}),
                   [=](std::uint64_t p) { return index_of(p) % k == c1 || index_of(p) % k == c2; }});
    out.push_back({SymbolicPrimeSet::of_primes(ix, {2, 3, 5}),
                   [](std::uint64_t p) { return p == 2 || p == 3 || p == 5; }});
    out.push_back({SymbolicPrimeSet::universe(ix).difference(SymbolicPrimeSet::of_primes(ix, {2, 11})),
                   [](std::uint64_t p) { return p != 2 && p != 11; }});
    out.push_back({SymbolicPrimeSet::cell(ix, c1).unite(SymbolicPrimeSet::of_primes(ix, {2})),
                   [=](std::uint64_t p) { return index_of(p) % k == c1 || p == 2; }});
    out.push_back({SymbolicPrimeSet::cell(ix, 0).difference(SymbolicPrimeSet::of_primes(ix, {2})),
                   [=](std::uint64_t p) { return index_of(p) % k == 0 && p != 2; }});
    return out;
}

constexpr std::size_t kProbes = 300;

void check_membership(const Modeled& m) {
    for (std::size_t j = 0; j < kProbes; ++j) {
        const std::uint64_t p = nth_prime(j);
        CAPTURE(p);
        CHECK(m.set.member(p) == m.ref(p));
    }
}

} // namespace

TEST_CASE("constructed sets have the modeled memberships", "[prime_sets]") {
    for (const auto& m : modeled_sets(PrimeIndexing(4))) check_membership(m);
    for (const auto& m : modeled_sets(PrimeIndexing(16))) check_membership(m);
    for (const auto& m : modeled_sets(PrimeIndexing(1))) check_membership(m);
}

TEST_CASE("cell membership follows prime index residues", "[prime_sets]") {
    const PrimeIndexing ix(4);
    const auto c0 = SymbolicPrimeSet::cell(ix, 0);
    // 2 has index 0, 3 has index 1, 23 has index 8.
    CHECK(c0.member(2));
    CHECK_FALSE(c0.member(3));
    CHECK(c0.member(23));
    CHECK(c0.first_primes(4) == std::vector<std::uint64_t>{2, 11, 23, 41});
    CHECK(c0.least_prime() == 2);
    CHECK(SymbolicPrimeSet::cell(ix, 1).least_prime() == 3);
}

TEST_CASE("boolean operations match pointwise boolean logic", "[prime_sets]") {
    const PrimeIndexing ix(8);
    const auto sets = modeled_sets(ix);
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            const auto u = a.set.unite(b.set);
            const auto n = a.set.intersect(b.set);
            const auto d = a.set.difference(b.set);
            for (std::size_t j = 0; j < kProbes; ++j) {
                const std::uint64_t p = nth_prime(j);
                CAPTURE(p);
                CHECK(u.member(p) == (a.ref(p) || b.ref(p)));
                CHECK(n.member(p) == (a.ref(p) && b.ref(p)));
                CHECK(d.member(p) == (a.ref(p) && !b.ref(p)));
            }
        }
        const auto c = a.set.complement();
        for (std::size_t j = 0; j < kProbes; ++j) {
            const std::uint64_t p = nth_prime(j);
            CAPTURE(p);
            CHECK(c.member(p) == !a.ref(p));
        }
    }
}

TEST_CASE("equal denotations compare equal regardless of construction route", "[prime_sets]") {
    const PrimeIndexing ix(16);
    const auto u = SymbolicPrimeSet::universe(ix);
    const auto five = SymbolicPrimeSet::of_primes(ix, {5});

    CHECK(SymbolicPrimeSet::cell(ix, 0).unite(SymbolicPrimeSet::cell(ix, 1)) ==
          SymbolicPrimeSet::cells(ix, {0, 1}));
    CHECK(u.difference(five).unite(five) == u);
    CHECK(SymbolicPrimeSet::cell(ix, 3)
              .difference(SymbolicPrimeSet::of_primes(ix, {7}))
              .unite(SymbolicPrimeSet::of_primes(ix, {7})) == SymbolicPrimeSet::cell(ix, 3));
    CHECK(u.complement() == SymbolicPrimeSet::empty(ix));
    CHECK(SymbolicPrimeSet::empty(ix).complement() == u);
    CHECK(SymbolicPrimeSet::of_primes(ix, {3, 2, 3}) == SymbolicPrimeSet::of_primes(ix, {2, 3}));
    // De Morgan, structurally.
    const auto a = SymbolicPrimeSet::cells(ix, {0, 5}).unite(SymbolicPrimeSet::of_primes(ix, {3}));
    const auto b = SymbolicPrimeSet::cell(ix, 5).difference(SymbolicPrimeSet::of_primes(ix, {13}));
    CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
    CHECK(a.intersect(b).complement() == a.complement().unite(b.complement()));
    CHECK(a.complement().complement() == a);
}

TEST_CASE("finiteness classification", "[prime_sets]") {
    const PrimeIndexing ix(16);
    const auto finite = SymbolicPrimeSet::of_primes(ix, {7, 3});
    const auto infinite = SymbolicPrimeSet::cell(ix, 2);
    const auto cofinite = SymbolicPrimeSet::universe(ix).difference(finite);

    CHECK(finite.is_finite());
    CHECK_FALSE(finite.is_infinite());
    CHECK(finite.finite_elements() == std::vector<std::uint64_t>{3, 7});
    CHECK(finite.least_prime() == 3);

    CHECK(infinite.is_infinite());
    CHECK_FALSE(infinite.is_finite());
    CHECK_FALSE(infinite.is_cofinite());
    CHECK_THROWS_AS(infinite.finite_elements(), std::domain_error);

    CHECK(cofinite.is_cofinite());
    CHECK(cofinite.is_infinite());
    CHECK(SymbolicPrimeSet::universe(ix).is_cofinite());
    CHECK_FALSE(finite.is_cofinite());

    CHECK(SymbolicPrimeSet::empty(ix).is_empty());
    CHECK(SymbolicPrimeSet::empty(ix).is_finite());
    CHECK_FALSE(finite.is_empty());
    CHECK_THROWS_AS(SymbolicPrimeSet::empty(ix).least_prime(), std::domain_error);
}

TEST_CASE("first_primes walks the set in increasing order", "[prime_sets]") {
    const PrimeIndexing ix(16);
    const auto evens = SymbolicPrimeSet::cells(ix, {0, 2, 4, 6, 8, 10, 12, 14});
    const auto firsts = evens.first_primes(5);
    REQUIRE(firsts.size() == 5);
    // Indices 0, 2, 4, 6, 8 are the primes 2, 5, 11, 17, 23.
    CHECK(firsts == std::vector<std::uint64_t>{2, 5, 11, 17, 23});
    for (const std::uint64_t p : firsts) CHECK(evens.member(p));

    CHECK(SymbolicPrimeSet::of_primes(ix, {5, 2}).first_primes(10) ==
          std::vector<std::uint64_t>{2, 5});
    CHECK(SymbolicPrimeSet::empty(ix).first_primes(3).empty());
}

TEST_CASE("invalid inputs are rejected", "[prime_sets]") {
    const PrimeIndexing ix(4);
    CHECK_THROWS_AS(SymbolicPrimeSet::of_primes(ix, {4}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPrimeSet::of_primes(ix, {2, 9}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPrimeSet::cell(ix, 4), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPrimeSet::cells(ix, {0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPrimeSet::universe(ix).member(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeIndexing(0), std::invalid_argument);

    const PrimeIndexing other(8);
    CHECK_THROWS_AS(SymbolicPrimeSet::empty(ix).unite(SymbolicPrimeSet::empty(other)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPrimeSet::universe(ix).intersect(SymbolicPrimeSet::universe(other)),
                    std::invalid_argument);
}
