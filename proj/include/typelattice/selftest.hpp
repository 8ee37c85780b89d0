#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dsl.hpp"
#include "errors.hpp"
#include "ext_oracle.hpp"
#include "generators.hpp"
#include "poset_embed.hpp"
#include "separation.hpp"
#include "session.hpp"
#include "type_lattice.hpp"

namespace typelattice::cli {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages; // first few failure descriptions

    [[nodiscard]] bool passed() const { return failures == 0; }
};

struct SelftestReport {
    SessionConfig config;
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool all_passed() const {
        return std::all_of(suites.begin(), suites.end(),
                           [](const SuiteResult& s) { return s.passed(); });
    }
};

namespace detail {

using gen::Rng;
using prime_sets::PrimeIndexing;
using prime_sets::SymbolicPrimeSet;
using type_lattice::ExtendedNat;
using type_lattice::TypeRep;

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& message) {
        ++result_.checks;
        if (ok) return;
        ++result_.failures;
        if (result_.messages.size() < 8) result_.messages.push_back(message);
    }

    [[nodiscard]] SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

inline ExtendedNat fin(std::uint32_t n) { return ExtendedNat::finite(n); }
inline ExtendedNat inf() { return ExtendedNat::infinity(); }

// --- prime_sets ------------------------------------------------------------

inline SuiteResult suite_set_boolean_algebra(const SessionConfig& cfg, Rng& rng) {
    Checker c("prime-set-boolean-algebra");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = gen::random_set(rng, ix);
        const auto b = gen::random_set(rng, ix);
        const auto d = gen::random_set(rng, ix);
        c.check(a.unite(b).intersect(d) == a.intersect(d).unite(b.intersect(d)),
                "distributivity failed structurally");
        c.check(a.unite(b).complement() == a.complement().intersect(b.complement()),
                "De Morgan (union) failed");
        c.check(a.intersect(b).complement() == a.complement().unite(b.complement()),
                "De Morgan (intersection) failed");
        c.check(a.complement().complement() == a, "complement is not involutive");
        // Membership-level spot check on a random probe among the first 500.
        const std::uint64_t p = prime_sets::nth_prime(rng.below(500));
        c.check(a.unite(b).member(p) == (a.member(p) || b.member(p)),
                "union membership mismatch at prime " + std::to_string(p));
        c.check(a.intersect(b).member(p) == (a.member(p) && b.member(p)),
                "intersection membership mismatch at prime " + std::to_string(p));
        c.check(a.complement().member(p) == !a.member(p),
                "complement membership mismatch at prime " + std::to_string(p));
    }
    return c.take();
}

inline SuiteResult suite_set_finiteness(const SessionConfig& cfg, Rng& rng) {
    Checker c("prime-set-finiteness-bruteforce");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = gen::random_set(rng, ix);
        const std::size_t corrections = s.plus().size() + s.minus().size();
        const std::size_t probes = 10 * cfg.modulus * (corrections + 1);
        std::vector<std::uint64_t> members;
        for (std::size_t j = 0; j < probes; ++j) {
            const std::uint64_t p = prime_sets::nth_prime(j);
            if (s.member(p)) members.push_back(p);
        }
        if (s.is_finite()) {
            const std::uint64_t last_probe = prime_sets::nth_prime(probes - 1);
            std::vector<std::uint64_t> expected;
            for (auto p : s.finite_elements())
                if (p <= last_probe) expected.push_back(p);
            c.check(members == expected, "finite set disagrees with brute-force members");
        } else {
            const std::size_t window = cfg.modulus * (s.minus().size() + 1);
            const bool tail_member =
                std::any_of(members.begin(), members.end(), [&](std::uint64_t p) {
                    return p >= prime_sets::nth_prime(probes - window);
                });
            c.check(tail_member, "infinite set shows no member in the probe tail");
        }
    }
    return c.take();
}

inline SuiteResult suite_cells_partition(const SessionConfig& cfg, Rng&) {
    Checker c("prime-cells-partition");
    const PrimeIndexing ix(cfg.modulus);
    for (std::uint32_t i = 0; i < cfg.modulus; ++i)
        for (std::uint32_t j = i + 1; j < cfg.modulus; ++j)
            c.check(SymbolicPrimeSet::cell(ix, i).intersect(SymbolicPrimeSet::cell(ix, j)).is_empty(),
                    "cells " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
    for (std::size_t j = 0; j < 200; ++j) {
        const std::uint64_t p = prime_sets::nth_prime(j);
        std::size_t containing = 0;
        for (std::uint32_t i = 0; i < cfg.modulus; ++i)
            if (SymbolicPrimeSet::cell(ix, i).member(p)) ++containing;
        c.check(containing == 1,
                "prime " + std::to_string(p) + " lies in " + std::to_string(containing) + " cells");
    }
    return c.take();
}

// --- type_lattice ----------------------------------------------------------

// A type equivalent to t: change finitely many of its finite entries to
// other finite values. Infinite entries must stay put — moving one in
// either direction leaves the equivalence class.
inline TypeRep finite_tweak(Rng& rng, const TypeRep& t) {
    TypeRep out = t;
    for (std::uint64_t i = 1 + rng.below(2); i > 0; --i) {
        const std::uint64_t p = prime_sets::nth_prime(rng.below(25));
        const auto value = fin(static_cast<std::uint32_t>(rng.below(7)));
        if (out.value_at(p).is_finite())
            out = out.with(SymbolicPrimeSet::of_primes(t.indexing(), {p}), value);
    }
    return out;
}

inline SuiteResult suite_equivalence_relation(const SessionConfig& cfg, Rng& rng) {
    Checker c("type-equivalence-relation");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 80; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto u = gen::random_type(rng, ix);
        c.check(equivalent(t, t), "equivalence is not reflexive");
        c.check(equivalent(t, u) == equivalent(u, t), "equivalence is not symmetric");
        const auto t1 = finite_tweak(rng, t);
        const auto t2 = finite_tweak(rng, t1);
        c.check(equivalent(t, t1) && equivalent(t1, t2) && equivalent(t, t2),
                "equivalence is not transitive along finite tweaks");
        // An infinite disagreement on finite values breaks equivalence.
        const auto cell0 = SymbolicPrimeSet::cell(ix, 0);
        const auto low = t.with(cell0, fin(0));
        const auto high = t.with(cell0, fin(1));
        c.check(!equivalent(low, high), "types differing on an infinite cell compare equivalent");
    }
    return c.take();
}

inline SuiteResult suite_order_laws(const SessionConfig& cfg, Rng& rng) {
    Checker c("type-order-laws");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 80; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto u = gen::random_type(rng, ix);
        const auto v = gen::random_type(rng, ix);
        c.check(leq(t, t), "leq is not reflexive");
        const auto a = meet(t, u);
        const auto b = join(u, v);
        c.check(!leq(a, u) || !leq(u, b) || leq(a, b), "leq is not transitive");
        c.check((leq(t, u) && leq(u, t)) == equivalent(t, u),
                "mutual leq disagrees with equivalence");
        c.check(leq(finite_tweak(rng, t), t), "a finite upward tweak broke leq");
    }
    return c.take();
}

inline SuiteResult suite_lattice_laws(const SessionConfig& cfg, Rng& rng) {
    Checker c("type-lattice-laws");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 80; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto u = gen::random_type(rng, ix);
        const auto v = gen::random_type(rng, ix);
        c.check(join(t, u) == join(u, t) && meet(t, u) == meet(u, t), "commutativity failed");
        c.check(join(t, join(u, v)) == join(join(t, u), v), "join associativity failed");
        c.check(meet(t, meet(u, v)) == meet(meet(t, u), v), "meet associativity failed");
        c.check(join(t, t) == t && meet(t, t) == t, "idempotence failed");
        c.check(equivalent(join(t, meet(t, u)), t) && equivalent(meet(t, join(t, u)), t),
                "absorption failed");
        c.check(leq(t, join(t, u)) && leq(meet(t, u), t), "join/meet are not bounds");
    }
    return c.take();
}

inline SuiteResult suite_lattice_bounds(const SessionConfig& cfg, Rng& rng) {
    Checker c("type-lattice-bounds");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 80; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto u = gen::random_type(rng, ix);
        // Any upper bound of both dominates the join; dually for the meet.
        const auto upper = finite_tweak(rng, join(join(t, u), gen::random_type(rng, ix)));
        c.check(leq(t, upper) && leq(u, upper), "constructed upper bound is not one");
        c.check(leq(join(t, u), upper), "join exceeds an upper bound");
        const auto lower = finite_tweak(rng, meet(meet(t, u), gen::random_type(rng, ix)));
        c.check(leq(lower, t) && leq(lower, u), "constructed lower bound is not one");
        c.check(leq(lower, meet(t, u)), "meet lies below a lower bound");
    }
    return c.take();
}

inline SuiteResult suite_pointwise_join_meet(const SessionConfig& cfg, Rng& rng) {
    Checker c("type-pointwise-join-meet");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto u = gen::random_type(rng, ix);
        const auto sup = join(t, u);
        const auto infm = meet(t, u);
        bool ok = true;
        for (std::size_t j = 0; j < 200 && ok; ++j) {
            const std::uint64_t p = prime_sets::nth_prime(j);
            ok = sup.value_at(p) == max(t.value_at(p), u.value_at(p)) &&
                 infm.value_at(p) == min(t.value_at(p), u.value_at(p));
        }
        c.check(ok, "pointwise max/min disagrees with join/meet");
    }
    return c.take();
}

// --- ext_oracle ------------------------------------------------------------

inline SuiteResult suite_oracle_routes(const SessionConfig& cfg, Rng& rng) {
    Checker c("ext-oracle-route-agreement");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 300; ++trial) {
        const auto T = gen::random_type(rng, ix);
        const auto X = gen::random_type(rng, ix);
        const bool direct = ext_oracle::ext_vanishes_rank1(T, X);
        const bool shaped = ext_oracle::vanishes_via_shape(ext_oracle::quotient_shape(X, T));
        c.check(direct == shaped, "criterion route and shape route disagree");
    }
    return c.take();
}

inline SuiteResult suite_oracle_monotone(const SessionConfig& cfg, Rng& rng) {
    Checker c("ext-oracle-monotonicity");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 150; ++trial) {
        const auto [low, high] = gen::random_leq_pair(rng, ix);
        const auto X = gen::random_type(rng, ix);
        if (ext_oracle::ext_vanishes_rank1(high, X))
            c.check(ext_oracle::ext_vanishes_rank1(low, X),
                    "vanishing against the larger type failed to descend");
        const auto [xlow, xhigh] = gen::random_leq_pair(rng, ix);
        const auto T = gen::random_type(rng, ix);
        if (ext_oracle::ext_vanishes_rank1(T, xlow))
            c.check(ext_oracle::ext_vanishes_rank1(T, xhigh),
                    "vanishing failed to ascend in the second argument");
    }
    return c.take();
}

inline SuiteResult suite_oracle_well_defined(const SessionConfig& cfg, Rng& rng) {
    Checker c("ext-oracle-class-invariance");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 150; ++trial) {
        const auto T = gen::random_type(rng, ix);
        const auto X = gen::random_type(rng, ix);
        const auto T2 = finite_tweak(rng, T);
        const auto X2 = finite_tweak(rng, X);
        c.check(ext_oracle::ext_vanishes_rank1(T, X) == ext_oracle::ext_vanishes_rank1(T2, X),
                "answer changed under first-argument equivalence");
        c.check(ext_oracle::ext_vanishes_rank1(T, X) == ext_oracle::ext_vanishes_rank1(T, X2),
                "answer changed under second-argument equivalence");
    }
    return c.take();
}

inline SuiteResult suite_oracle_join_meet(const SessionConfig& cfg, Rng& rng) {
    Checker c("ext-oracle-join-meet-laws");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 150; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto u = gen::random_type(rng, ix);
        const auto X = gen::random_type(rng, ix);
        const bool vt = ext_oracle::ext_vanishes_rank1(t, X);
        const bool vu = ext_oracle::ext_vanishes_rank1(u, X);
        c.check(ext_oracle::ext_vanishes_rank1(join(t, u), X) == (vt && vu),
                "join law failed");
        if (vt || vu)
            c.check(ext_oracle::ext_vanishes_rank1(meet(t, u), X),
                    "meet direction failed");
    }
    return c.take();
}

inline SuiteResult suite_oracle_cd(const SessionConfig& cfg, Rng& rng) {
    Checker c("ext-oracle-decomposable");
    const PrimeIndexing ix(cfg.modulus);
    const auto z = TypeRep::constant(ix, fin(0));
    const auto q = TypeRep::constant(ix, inf());
    using ext_oracle::CompletelyDecomposable;
    c.check(!ext_oracle::ext_vanishes_cd(CompletelyDecomposable({q}),
                                         CompletelyDecomposable({z, q})),
            "the rational-vs-integer summand pair went unnoticed");
    c.check(ext_oracle::ext_vanishes_cd(CompletelyDecomposable({z, z}),
                                        CompletelyDecomposable(gen::random_cd(rng, ix).summands())),
            "a free first argument failed to vanish");
    c.check(ext_oracle::ext_vanishes_cd(CompletelyDecomposable(), gen::random_cd(rng, ix)),
            "the zero group is not vacuously compatible");
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = gen::random_type(rng, ix);
        const auto x = gen::random_type(rng, ix);
        c.check(ext_oracle::ext_vanishes_cd(CompletelyDecomposable({t}),
                                            CompletelyDecomposable({x})) ==
                    ext_oracle::ext_vanishes_rank1(t, x),
                "singleton sums disagree with the rank-1 oracle");
    }
    return c.take();
}

// --- separation ------------------------------------------------------------

inline SuiteResult suite_separation_witness(const SessionConfig& cfg, Rng& rng) {
    Checker c("separation-trichotomy-witness");
    const PrimeIndexing ix(cfg.modulus);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [low, high] = gen::random_strict_pair(rng, ix);
        const auto cases = separation::classify(low, high);
        c.check(!cases.empty(), "classification returned no case");
        const auto w = separation::witness(low, high);
        if (w.is_rank_one()) {
            c.check(separation::verify_rank1_witness(low, high, w.rank_one_type()),
                    "rank-1 witness failed verification");
        } else {
            const auto report = separation::verify_non_surjectivity(w.spec(), cfg.m_max,
                                                                    cfg.k_max, cfg.prime_count);
            c.check(report.verdict, "infinite-rank witness failed arithmetic verification");
        }
    }
    return c.take();
}

inline SuiteResult suite_separation_shadow(const SessionConfig& cfg, Rng& rng) {
    Checker c("separation-shadow-consistency");
    const PrimeIndexing ix(cfg.modulus);
    using ext_oracle::CompletelyDecomposable;
    for (int trial = 0; trial < 100; ++trial) {
        const auto [low, high] = gen::random_pure_both_finite_pair(rng, ix);
        const auto G = gen::random_cd(rng, ix);
        c.check(ext_oracle::ext_vanishes_cd(CompletelyDecomposable({low}), G) ==
                    ext_oracle::ext_vanishes_cd(CompletelyDecomposable({high}), G),
                "pure BothFinite pair distinguishes a decomposable group");
    }
    return c.take();
}

inline SuiteResult suite_marker_bracket(const SessionConfig&, Rng&) {
    Checker c("marker-coordinate-bracket");
    using separation::BigInt;
    for (std::size_t j = 0; j < 25; ++j) {
        const std::uint64_t p = prime_sets::nth_prime(j);
        for (std::uint32_t t = 1; t <= 4; ++t) {
            const BigInt n = separation::choose_np(p, t);
            const BigInt target = boost::multiprecision::pow(BigInt(p), 2 * t + 1);
            c.check(n * n <= target && target < (n + 1) * (n + 1),
                    "bracket failed at p=" + std::to_string(p) + ", t=" + std::to_string(t));
        }
    }
    return c.take();
}

inline SuiteResult suite_verification_scaling(const SessionConfig& cfg, Rng&) {
    Checker c("verification-threshold-scaling");
    const PrimeIndexing ix(cfg.modulus);
    const separation::GSpec spec(SymbolicPrimeSet::universe(ix), 1, 2);
    const auto small = separation::verify_non_surjectivity(spec, cfg.m_max, cfg.k_max, 10);
    const auto large = separation::verify_non_surjectivity(spec, cfg.m_max, cfg.k_max, 20);
    c.check(small.records.size() == 10 && large.records.size() == 20, "record counts are off");
    for (std::size_t i = 0; i < small.records.size(); ++i) {
        c.check(small.records[i].p == large.records[i].p &&
                    small.records[i].n_p == large.records[i].n_p &&
                    small.records[i].passed() == large.records[i].passed(),
                "a larger budget changed an earlier prime's outcome");
    }
    std::vector<separation::BigRat> zero(6, separation::BigRat(0));
    c.check(separation::gspec_membership_check(zero, 1, 1, spec), "zero tuple rejected");
    std::vector<separation::BigRat> boundary, beyond;
    for (auto p : spec.carrier().first_primes(6)) {
        boundary.emplace_back(p);
        beyond.emplace_back(separation::BigInt(p) + 1);
    }
    c.check(separation::gspec_membership_check(boundary, 1, 1, spec),
            "boundary tuple rejected");
    c.check(!separation::gspec_membership_check(beyond, 1, 1, spec),
            "out-of-bound tuple accepted");
    return c.take();
}

// --- poset_embed -----------------------------------------------------------

inline SuiteResult suite_powerset_embedding(const SessionConfig& cfg, Rng& rng) {
    Checker c("powerset-embedding-exhaustive");
    const PrimeIndexing ix(cfg.modulus);
    const std::uint32_t n_max = std::min<std::uint32_t>(6, cfg.modulus);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const auto e = poset_embed::powerset_embed(n, ix);
        const auto cube = poset_embed::FinitePoset::powerset(n);
        c.check(poset_embed::verify_embedding(e, cube),
                "subset-lattice embedding failed at n = " + std::to_string(n));
        const std::size_t size = std::size_t{1} << n;
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = a + 1; b < size; ++b)
                c.check(!equivalent(e.image(a), e.image(b)),
                        "distinct subsets mapped to equivalent types");
    }
    // Lattice compatibility of the assignment on random subset pairs.
    const auto e = poset_embed::powerset_embed(n_max, ix);
    const std::size_t size = std::size_t{1} << n_max;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t a = rng.below(size);
        const std::size_t b = rng.below(size);
        c.check(e.image(a | b) == join(e.image(a), e.image(b)),
                "union does not map to the join");
        c.check(e.image(a & b) == meet(e.image(a), e.image(b)),
                "intersection does not map to the meet");
    }
    return c.take();
}

inline SuiteResult suite_poset_embedding(const SessionConfig& cfg, Rng& rng) {
    Checker c("poset-embedding-downsets");
    const PrimeIndexing ix(cfg.modulus);
    const std::size_t n = std::min<std::size_t>(5, cfg.modulus);

    const auto chain = poset_embed::FinitePoset::chain(n);
    const auto chain_embedding = poset_embed::poset_embed(chain, ix);
    c.check(poset_embed::verify_embedding(chain_embedding, chain), "chain embedding failed");
    for (std::size_t i = 0; i + 1 < n; ++i)
        c.check(strictly_less(chain_embedding.image(i), chain_embedding.image(i + 1)),
                "chain images are not strictly increasing");

    const auto anti = poset_embed::FinitePoset::antichain(n);
    const auto anti_embedding = poset_embed::poset_embed(anti, ix);
    c.check(poset_embed::verify_embedding(anti_embedding, anti), "antichain embedding failed");
    const auto anti_report = poset_embed::cotorsion_image_report(anti_embedding, anti, cfg.m_max,
                                                                 cfg.k_max, cfg.prime_count);
    c.check(anti_report.separations.empty(), "antichain produced covering pairs");
    c.check(anti_report.incomparables.size() == n * (n - 1),
            "antichain incomparability records are off");
    for (const auto& rec : anti_report.incomparables)
        c.check(!rec.image_leq, "incomparable images compare leq");

    const auto chain_report = poset_embed::cotorsion_image_report(chain_embedding, chain,
                                                                  cfg.m_max, cfg.k_max,
                                                                  cfg.prime_count);
    c.check(chain_report.all_verified, "chain covering pairs failed witness verification");
    c.check(chain_report.separations.size() == (n > 0 ? n - 1 : 0),
            "chain covering pair count is off");

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.below(3) == 0) pairs.emplace_back(i, j);
        const auto poset = poset_embed::FinitePoset::from_pairs(n, pairs);
        const auto embedding = poset_embed::poset_embed(poset, ix);
        c.check(poset_embed::verify_embedding(embedding, poset), "random poset embedding failed");
        const auto report = poset_embed::cotorsion_image_report(embedding, poset, cfg.m_max,
                                                                cfg.k_max, cfg.prime_count);
        c.check(report.all_verified, "random poset report failed verification");
    }
    return c.take();
}

// --- cli -------------------------------------------------------------------

inline SuiteResult suite_dsl_roundtrip(const SessionConfig& cfg, Rng& rng) {
    Checker c("dsl-roundtrip");
    const PrimeIndexing ix(cfg.modulus);

    c.check(parse_type("{ default: inf }", ix) == TypeRep::constant(ix, inf()),
            "constant-inf literal parsed wrong");
    const auto z5 = TypeRep::constant(ix, inf())
                        .with(SymbolicPrimeSet::of_primes(ix, {5}), fin(0));
    c.check(parse_type("{ default: inf, primes {5}: 0 }", ix) == z5,
            "localization literal parsed wrong");
    if (cfg.modulus == 16) {
        const auto expected = TypeRep::constant(ix, inf())
                                  .with(SymbolicPrimeSet::cells(ix, {1, 3}), fin(1));
        c.check(parse_type("{ default: inf, mod 16 = 1, 3: 1 }", ix) == expected,
                "cell-selector literal parsed wrong");
    }

    for (int trial = 0; trial < 120; ++trial) {
        const auto t = gen::random_type(rng, ix);
        c.check(parse_type(render_type(t), ix) == t, "render/parse round trip failed");
    }

    const auto expect_error = [&](const std::string& text, const std::string& label) {
        try {
            parse_type(text, ix);
            c.check(false, "accepted bad input: " + label);
        } catch (const ParseError&) {
            c.check(true, "");
        }
    };
    expect_error("{ default: 1, default: 2 }", "duplicate default");
    expect_error("{ primes {7}: 1 }", "missing default");
    expect_error("{ default: 0, mod " + std::to_string(cfg.modulus + 1) + " = 0: 1 }",
                 "wrong modulus");
    expect_error("{ default: 0, mod " + std::to_string(cfg.modulus) + " = " +
                     std::to_string(cfg.modulus) + ": 1 }",
                 "cell index out of range");
    expect_error("{ default: 0, primes {4}: 1 }", "non-prime in prime list");
    expect_error("{ default: zzz }", "bad value");
    expect_error("{ default: 0 } trailing", "trailing input");
    try {
        parse_type("{ default: 0, mod 3 = 0: 1 }", PrimeIndexing(16));
        c.check(false, "accepted mismatched modulus");
    } catch (const ParseError& e) {
        c.check(std::string(e.what()).find("16") != std::string::npos,
                "modulus error does not name the session modulus");
    }
    return c.take();
}

} // namespace detail

inline SelftestReport run_selftest(const SessionConfig& cfg) {
    cfg.validate();
    SelftestReport report{cfg, {}};
    gen::Rng rng(cfg.seed);
    using Suite = SuiteResult (*)(const SessionConfig&, gen::Rng&);
    constexpr Suite suites[] = {
        detail::suite_set_boolean_algebra,
        detail::suite_set_finiteness,
        detail::suite_cells_partition,
        detail::suite_equivalence_relation,
        detail::suite_order_laws,
        detail::suite_lattice_laws,
        detail::suite_lattice_bounds,
        detail::suite_pointwise_join_meet,
        detail::suite_oracle_routes,
        detail::suite_oracle_monotone,
        detail::suite_oracle_well_defined,
        detail::suite_oracle_join_meet,
        detail::suite_oracle_cd,
        detail::suite_separation_witness,
        detail::suite_separation_shadow,
        detail::suite_marker_bracket,
        detail::suite_verification_scaling,
        detail::suite_powerset_embedding,
        detail::suite_poset_embedding,
        detail::suite_dsl_roundtrip,
    };
    for (const auto suite : suites) report.suites.push_back(suite(cfg, rng));
    return report;
}

// Byte-stable for a fixed configuration: keys are sorted, suite order is
// fixed, and nothing time- or address-dependent is emitted.
inline std::string selftest_json(const SelftestReport& report) {
    nlohmann::json j;
    j["schema"] = "typelattice/1";
    j["command"] = "selftest";
    j["config"] = {{"modulus", report.config.modulus},
                   {"m_max", report.config.m_max},
                   {"k_max", report.config.k_max},
                   {"prime_count", report.config.prime_count},
                   {"seed", report.config.seed}};
    j["suites"] = nlohmann::json::array();
    for (const auto& suite : report.suites)
        j["suites"].push_back({{"name", suite.name},
                               {"checks", suite.checks},
                               {"failures", suite.failures},
                               {"passed", suite.passed()},
                               {"messages", suite.messages}});
    j["all_passed"] = report.all_passed();
    return j.dump(2) + "\n";
}

inline std::string selftest_text(const SelftestReport& report) {
    std::string out;
    for (const auto& suite : report.suites) {
        out += suite.passed() ? "[PASS] " : "[FAIL] ";
        out += suite.name + " (" + std::to_string(suite.checks) + " checks";
        if (!suite.passed()) out += ", " + std::to_string(suite.failures) + " failed";
        out += ")\n";
        for (const auto& message : suite.messages) out += "       " + message + "\n";
    }
    out += report.all_passed() ? "all suites passed\n" : "some suites FAILED\n";
    return out;
}

} // namespace typelattice::cli
