#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "typelattice/ext_oracle.hpp"
#include "typelattice/generators.hpp"

using typelattice::ext_oracle::CompletelyDecomposable;
using typelattice::ext_oracle::ComponentKind;
using typelattice::ext_oracle::ext_class;
using typelattice::ext_oracle::ext_vanishes_cd;
using typelattice::ext_oracle::ext_vanishes_rank1;
using typelattice::ext_oracle::ExtClass;
using typelattice::ext_oracle::quotient_shape;
using typelattice::ext_oracle::RankOneGroup;
using typelattice::ext_oracle::vanishes_via_shape;
using typelattice::prime_sets::PrimeIndexing;
using typelattice::prime_sets::SymbolicPrimeSet;
using typelattice::type_lattice::ExtendedNat;
using typelattice::type_lattice::TypeRep;

namespace {

ExtendedNat fin(std::uint32_t n) { return ExtendedNat::finite(n); }
ExtendedNat inf() { return ExtendedNat::infinity(); }

const PrimeIndexing kIx(16);

bool vanishes_both_routes(const TypeRep& T, const TypeRep& X) {
    const bool direct = ext_vanishes_rank1(T, X);
    const bool shaped = vanishes_via_shape(quotient_shape(X, T));
    REQUIRE(direct == shaped);
    return direct;
}

} // namespace

TEST_CASE("a free cogenerator never obstructs", "[ext_oracle]") {
    const auto z = TypeRep::constant(kIx, fin(0)); // the type of the integers
    CHECK(vanishes_both_routes(z, TypeRep::constant(kIx, fin(0))));
    CHECK(vanishes_both_routes(z, TypeRep::constant(kIx, fin(3))));
    CHECK(vanishes_both_routes(z, TypeRep::constant(kIx, inf())));
    CHECK(vanishes_both_routes(z, z.with(SymbolicPrimeSet::cells(kIx, {0, 7}), inf())));
}

TEST_CASE("a divisible cogenerator obstructs any finite entry", "[ext_oracle]") {
    const auto q = TypeRep::constant(kIx, inf()); // the type of the rationals
    CHECK(vanishes_both_routes(q, q));
    CHECK_FALSE(vanishes_both_routes(q, TypeRep::constant(kIx, fin(5))));
    // A single finite entry under an infinite one already forces Continuum.
    CHECK_FALSE(vanishes_both_routes(q, q.with(SymbolicPrimeSet::of_primes(kIx, {2}), fin(5))));
}

TEST_CASE("finite positive entries tolerate finitely many finite arguments", "[ext_oracle]") {
    const auto one = TypeRep::constant(kIx, fin(1));
    CHECK(vanishes_both_routes(one, TypeRep::constant(kIx, inf())));
    CHECK_FALSE(vanishes_both_routes(one, TypeRep::constant(kIx, fin(0))));
    const auto mostly_divisible =
        TypeRep::constant(kIx, inf()).with(SymbolicPrimeSet::of_primes(kIx, {2, 3}), fin(4));
    CHECK(vanishes_both_routes(one, mostly_divisible));
    const auto half_divisible =
        TypeRep::constant(kIx, inf()).with(SymbolicPrimeSet::cell(kIx, 3), fin(4));
    CHECK_FALSE(vanishes_both_routes(one, half_divisible));
}

TEST_CASE("zero entries in the cogenerator never obstruct", "[ext_oracle]") {
    const auto t = TypeRep::constant(kIx, inf()).with(SymbolicPrimeSet::cell(kIx, 0), fin(0));
    // Finite entries inside cell 0 sit under zero, not under infinity.
    const auto x = TypeRep::constant(kIx, inf()).with(SymbolicPrimeSet::of_primes(kIx, {2}), fin(1));
    CHECK(vanishes_both_routes(t, x)); // 2 lies in cell 0 where t is zero
    const auto y = TypeRep::constant(kIx, inf()).with(SymbolicPrimeSet::of_primes(kIx, {3}), fin(1));
    CHECK_FALSE(vanishes_both_routes(t, y)); // 3 lies outside cell 0 where t is infinite
    CHECK_FALSE(vanishes_both_routes(t, TypeRep::constant(kIx, fin(5))));
}

TEST_CASE("the quotient shape names the obstruction kinds", "[ext_oracle]") {
    const auto tau = TypeRep::constant(kIx, fin(1));
    const auto x = TypeRep::constant(kIx, fin(2));
    const auto shape = quotient_shape(x, tau);
    REQUIRE(shape.components.size() == 1);
    CHECK(shape.components[0].kind == ComponentKind::Cyclic);
    CHECK(shape.components[0].exponent == 1);
    CHECK(shape.components[0].primes.is_infinite());
    CHECK_FALSE(vanishes_via_shape(shape));

    const auto padic = quotient_shape(TypeRep::constant(kIx, fin(3)),
                                      TypeRep::constant(kIx, inf()));
    REQUIRE(padic.components.size() == 1);
    CHECK(padic.components[0].kind == ComponentKind::Padic);
    CHECK_FALSE(vanishes_via_shape(padic));

    const auto trivial = quotient_shape(TypeRep::constant(kIx, inf()),
                                        TypeRep::constant(kIx, fin(1)));
    for (const auto& c : trivial.components) CHECK(c.kind == ComponentKind::Trivial);
    CHECK(vanishes_via_shape(trivial));

    // A finite Cyclic carrier is harmless, an infinite one is not.
    const auto tweaked = TypeRep::constant(kIx, inf())
                             .with(SymbolicPrimeSet::of_primes(kIx, {5, 13}), fin(2));
    const auto small = quotient_shape(tweaked, tau);
    bool saw_finite_cyclic = false;
    for (const auto& c : small.components)
        if (c.kind == ComponentKind::Cyclic) {
            CHECK(c.primes.is_finite());
            saw_finite_cyclic = true;
        }
    CHECK(saw_finite_cyclic);
    CHECK(vanishes_via_shape(small));
}

TEST_CASE("the two routes agree on deterministic random pairs", "[ext_oracle]") {
    typelattice::gen::Rng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const PrimeIndexing ix(static_cast<std::uint32_t>(1 + rng.below(8)));
        const auto T = typelattice::gen::random_type(rng, ix);
        const auto X = typelattice::gen::random_type(rng, ix);
        CAPTURE(trial);
        CHECK(ext_vanishes_rank1(T, X) ==
              vanishes_via_shape(quotient_shape(X, T)));
    }
}

TEST_CASE("vanishing is monotone the right way round", "[ext_oracle]") {
    typelattice::gen::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [small_t, big_t] = typelattice::gen::random_leq_pair(rng, kIx);
        const auto [small_x, big_x] = typelattice::gen::random_leq_pair(rng, kIx);
        CAPTURE(trial);
        // Shrinking the cogenerator and growing the argument both preserve vanishing.
        if (ext_vanishes_rank1(big_t, small_x)) {
            CHECK(ext_vanishes_rank1(small_t, small_x));
            CHECK(ext_vanishes_rank1(big_t, big_x));
        }
    }
}

TEST_CASE("vanishing is a class invariant", "[ext_oracle]") {
    const auto t = TypeRep::constant(kIx, fin(1));
    const auto t2 = t.with(SymbolicPrimeSet::of_primes(kIx, {2, 19}), fin(8));
    REQUIRE(typelattice::type_lattice::equivalent(t, t2));

    const auto divisible = TypeRep::constant(kIx, inf());
    CHECK(ext_vanishes_rank1(t, divisible));
    CHECK(ext_vanishes_rank1(t2, divisible)); // same class, same answer

    const auto x = TypeRep::constant(kIx, fin(5));
    const auto x2 = x.with(SymbolicPrimeSet::of_primes(kIx, {3}), fin(0));
    REQUIRE(typelattice::type_lattice::equivalent(x, x2));
    CHECK(ext_vanishes_rank1(t, x) == ext_vanishes_rank1(t2, x2));
    CHECK(ext_vanishes_rank1(t, x2) == ext_vanishes_rank1(t2, x));
}

TEST_CASE("ext_class mirrors the boolean answer", "[ext_oracle]") {
    const auto one = TypeRep::constant(kIx, fin(1));
    CHECK(ext_class(one, TypeRep::constant(kIx, inf())) == ExtClass::Zero);
    CHECK(ext_class(one, TypeRep::constant(kIx, fin(0))) == ExtClass::Continuum);
}

TEST_CASE("groups carry their data", "[ext_oracle]") {
    const auto t = TypeRep::constant(kIx, fin(2));
    CHECK(RankOneGroup(t).type() == t);
    const CompletelyDecomposable cd({t, TypeRep::constant(kIx, inf())});
    CHECK(cd.rank() == 2);
    CHECK(cd.summands()[0] == t);
}

TEST_CASE("decomposable vanishing quantifies over all summand pairs", "[ext_oracle]") {
    const auto one = TypeRep::constant(kIx, fin(1));
    const auto top = TypeRep::constant(kIx, inf());
    const auto zero = TypeRep::constant(kIx, fin(0));

    CHECK(ext_vanishes_cd(CompletelyDecomposable({one, top}), CompletelyDecomposable({top})));
    CHECK_FALSE(
        ext_vanishes_cd(CompletelyDecomposable({one, top}), CompletelyDecomposable({top, zero})));
    CHECK(ext_vanishes_cd(CompletelyDecomposable(), CompletelyDecomposable({zero})));
    CHECK(ext_vanishes_cd(CompletelyDecomposable({one}), CompletelyDecomposable()));

    // Rank-1 versus rank-1 reduces to the scalar criterion.
    CHECK(ext_vanishes_cd(CompletelyDecomposable({one}), CompletelyDecomposable({top})) ==
          ext_vanishes_rank1(one, top));
}
