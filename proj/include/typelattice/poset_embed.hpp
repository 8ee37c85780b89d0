#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "separation.hpp"
#include "type_lattice.hpp"

namespace typelattice::poset_embed {

using prime_sets::PrimeIndexing;
using prime_sets::SymbolicPrimeSet;
using type_lattice::ExtendedNat;
using type_lattice::TypeRep;

// A finite poset on elements 0..n-1. The relation is validated (or closed,
// for the pair-list constructor) to be reflexive, antisymmetric and
// transitive at construction; invalid input is rejected.
class FinitePoset {
public:
    static FinitePoset from_relation(std::vector<std::vector<bool>> rel) {
        FinitePoset p(std::move(rel));
        p.require_reflexive();
        p.require_transitive();
        p.require_antisymmetric();
        return p;
    }

    // Closes the listed pairs reflexively and transitively, then validates
    // antisymmetry. Accepts either a reduction or the full relation.
    static FinitePoset from_pairs(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& le_pairs) {
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
        for (const auto& [a, b] : le_pairs) {
            if (a >= n || b >= n)
                throw std::invalid_argument("relation pair (" + std::to_string(a) + ", " +
                                            std::to_string(b) + ") out of range for n = " +
                                            std::to_string(n));
            rel[a][b] = true;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (!rel[i][k]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k][j]) rel[i][j] = true;
            }
        FinitePoset p(std::move(rel));
        p.require_antisymmetric();
        return p;
    }

    static FinitePoset chain(std::size_t n) {
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) rel[i][j] = true;
        return FinitePoset(std::move(rel));
    }

    static FinitePoset antichain(std::size_t n) {
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
        return FinitePoset(std::move(rel));
    }

    // The subset lattice of {0..n-1}: element a is the subset with mask a.
    static FinitePoset powerset(std::uint32_t n) {
        if (n >= 20) throw std::invalid_argument("powerset poset too large");
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) rel[a][b] = (a & ~b) == 0;
        return FinitePoset(std::move(rel));
    }

    [[nodiscard]] std::size_t size() const { return rel_.size(); }
    [[nodiscard]] bool le(std::size_t a, std::size_t b) const { return rel_.at(a).at(b); }

    // Pairs a < b with nothing strictly between, in lexicographic order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        const std::size_t n = size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || !rel_[a][b]) continue;
                bool covering = true;
                for (std::size_t c = 0; c < n && covering; ++c)
                    if (c != a && c != b && rel_[a][c] && rel_[c][b]) covering = false;
                if (covering) covers.emplace_back(a, b);
            }
        return covers;
    }

private:
    explicit FinitePoset(std::vector<std::vector<bool>> rel) : rel_(std::move(rel)) {
        for (const auto& row : rel_)
            if (row.size() != rel_.size())
                throw std::invalid_argument("relation matrix must be square");
    }

    void require_reflexive() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (!rel_[i][i]) throw std::invalid_argument("relation is not reflexive");
    }

    void require_antisymmetric() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (rel_[i][j] && rel_[j][i])
                    throw std::invalid_argument("relation is not antisymmetric: " +
                                                std::to_string(i) + " and " + std::to_string(j) +
                                                " are mutually related");
    }

    void require_transitive() const {
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (!rel_[i][k]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (rel_[k][j] && !rel_[i][j])
                        throw std::invalid_argument("relation is not transitive");
            }
    }

    std::vector<std::vector<bool>> rel_;
};

// An assignment of a type to every poset element, meant to be both
// order-preserving and order-reflecting for leq (verify_embedding checks).
struct Embedding {
    std::vector<TypeRep> assignment;
    PrimeIndexing indexing;

    [[nodiscard]] const TypeRep& image(std::size_t i) const { return assignment.at(i); }
};

// Embed the subset lattice of {0..n-1}: subset X (element index = mask)
// maps to the type that is inf on the cells indexed by X and 0 elsewhere.
// Distinct subsets then differ by an infinite set of inf-vs-0 entries,
// which blocks leq in exactly the non-inclusion direction.
inline Embedding powerset_embed(std::uint32_t n, PrimeIndexing ix) {
    if (n == 0) throw std::invalid_argument("powerset embedding needs n >= 1");
    if (ix.modulus() < n)
        throw std::invalid_argument("indexing modulus " + std::to_string(ix.modulus()) +
                                    " is smaller than n = " + std::to_string(n));
    const TypeRep ground = TypeRep::constant(ix, ExtendedNat::finite(0));
    Embedding e{{}, ix};
    const std::size_t size = std::size_t{1} << n;
    e.assignment.reserve(size);
    for (std::size_t mask = 0; mask < size; ++mask) {
        std::vector<std::uint32_t> indices;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask >> i & 1) indices.push_back(i);
        e.assignment.push_back(
            ground.with(SymbolicPrimeSet::cells(ix, indices), ExtendedNat::infinity()));
    }
    return e;
}

// Embed an arbitrary finite poset by sending each element to its principal
// down-set and composing with the subset-lattice embedding. Down-sets give
// an order-embedding into the power set, so the composite preserves and
// reflects order.
inline Embedding poset_embed(const FinitePoset& P, PrimeIndexing ix) {
    const std::size_t n = P.size();
    if (ix.modulus() < n)
        throw std::invalid_argument("indexing modulus " + std::to_string(ix.modulus()) +
                                    " is smaller than the poset size " + std::to_string(n));
    const TypeRep ground = TypeRep::constant(ix, ExtendedNat::finite(0));
    Embedding e{{}, ix};
    e.assignment.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::uint32_t> down;
        for (std::size_t b = 0; b < n; ++b)
            if (P.le(b, a)) down.push_back(static_cast<std::uint32_t>(b));
        e.assignment.push_back(
            ground.with(SymbolicPrimeSet::cells(ix, down), ExtendedNat::infinity()));
    }
    return e;
}

// Exhaustive check over all ordered element pairs: a <= b in the poset iff
// leq holds between the images.
inline bool verify_embedding(const Embedding& e, const FinitePoset& P) {
    if (e.assignment.size() != P.size()) return false;
    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = 0; b < P.size(); ++b)
            if (P.le(a, b) != leq(e.image(a), e.image(b))) return false;
    return true;
}

// One covering pair's separation: the strict inequality of images, its
// case analysis, the constructed witness and the verification outcome.
struct SeparationRecord {
    std::size_t lower;
    std::size_t upper;
    std::vector<separation::StrictCase> cases;
    separation::Witness witness;
    bool verified;
    // Present exactly for infinite-rank witnesses.
    std::optional<separation::NumericCheckReport> numeric;
};

// For an incomparable ordered pair, the (necessarily false) leq between
// the images, recorded in both directions as separate rows.
struct IncomparabilityRecord {
    std::size_t a;
    std::size_t b;
    bool image_leq;
};

struct CotorsionImageReport {
    std::vector<SeparationRecord> separations;
    std::vector<IncomparabilityRecord> incomparables;
    bool all_verified; // every separation record verified
};

// Certify the image of the embedding as a faithfully ordered family of
// cotorsion classes: every covering pair gets a verified separating
// witness (the strictness transports through the order-reversing
// correspondence), and incomparable pairs are recorded as mutually
// non-leq. Verification failures are recorded, not thrown.
inline CotorsionImageReport cotorsion_image_report(const Embedding& e, const FinitePoset& P,
                                                   std::uint32_t m_max = 8,
                                                   std::uint32_t k_max = 8,
                                                   std::uint32_t prime_count = 40) {
    if (!verify_embedding(e, P))
        throw std::invalid_argument("embedding does not realize the poset");
    CotorsionImageReport report{{}, {}, true};

    for (const auto& [a, b] : P.covering_pairs()) {
        const TypeRep& low = e.image(a);
        const TypeRep& high = e.image(b);
        auto cases = separation::classify(low, high);
        auto w = separation::witness(low, high);
        bool verified = false;
        std::optional<separation::NumericCheckReport> numeric;
        if (w.is_rank_one()) {
            verified = separation::verify_rank1_witness(low, high, w.rank_one_type());
        } else {
            numeric = separation::verify_non_surjectivity(w.spec(), m_max, k_max, prime_count);
            verified = numeric->verdict;
        }
        if (!verified) report.all_verified = false;
        report.separations.push_back(
            {a, b, std::move(cases), std::move(w), verified, std::move(numeric)});
    }

    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = 0; b < P.size(); ++b) {
            if (a == b || P.le(a, b) || P.le(b, a)) continue;
            report.incomparables.push_back({a, b, leq(e.image(a), e.image(b))});
        }
    return report;
}

} // namespace typelattice::poset_embed
