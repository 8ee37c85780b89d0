#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "extended_nat.hpp"
#include "prime_sets.hpp"

namespace typelattice::type_lattice {

using prime_sets::PrimeIndexing;
using prime_sets::SymbolicPrimeSet;

struct TypePiece {
    SymbolicPrimeSet set;
    ExtendedNat value;

    friend bool operator==(const TypePiece&, const TypePiece&) = default;
};

// A type (characteristic): a piecewise-constant map primes -> ExtendedNat
// with finitely many pieces. The pieces are pairwise disjoint and cover all
// primes. Canonical form: one piece per attained value, sorted by value, so
// operator== is equality of the underlying functions. Equality of
// equivalence classes is the separate decision procedure `equivalent`.
class TypeRep {
public:
    static TypeRep constant(PrimeIndexing ix, ExtendedNat v) {
        return TypeRep(ix, {{SymbolicPrimeSet::universe(ix), v}});
    }

    // Same map except value v on s.
    [[nodiscard]] TypeRep with(const SymbolicPrimeSet& s, ExtendedNat v) const {
        if (s.indexing() != indexing_)
            throw std::invalid_argument("prime set uses a different indexing");
        std::vector<TypePiece> raw;
        raw.reserve(pieces_.size() + 1);
        for (const auto& piece : pieces_) raw.push_back({piece.set.difference(s), piece.value});
        raw.push_back({s, v});
        return TypeRep(indexing_, std::move(raw));
    }

    [[nodiscard]] const PrimeIndexing& indexing() const { return indexing_; }
    [[nodiscard]] const std::vector<TypePiece>& pieces() const { return pieces_; }

    [[nodiscard]] ExtendedNat value_at(std::uint64_t p) const {
        for (const auto& piece : pieces_)
            if (piece.set.member(p)) return piece.value;
        throw std::logic_error("type pieces failed to cover a prime"); // unreachable on a partition
    }

    friend bool operator==(const TypeRep&, const TypeRep&) = default;

private:
    TypeRep(PrimeIndexing ix, std::vector<TypePiece> raw)
        : indexing_(ix), pieces_(normalized(std::move(raw))) {}

    // Merge pieces carrying the same value, drop empty ones, sort by value.
    // Distinct values after merging make the order total, and unique
    // normalization of SymbolicPrimeSet makes the result canonical.
    static std::vector<TypePiece> normalized(std::vector<TypePiece> raw) {
        std::vector<TypePiece> merged;
        for (auto& piece : raw) {
            if (piece.set.is_empty()) continue;
            auto same = std::find_if(merged.begin(), merged.end(), [&](const TypePiece& q) {
                return q.value == piece.value;
            });
            if (same == merged.end())
                merged.push_back(std::move(piece));
            else
                same->set = same->set.unite(piece.set);
        }
        std::sort(merged.begin(), merged.end(), [](const TypePiece& a, const TypePiece& b) {
            return a.value < b.value;
        });
        return merged;
    }

    PrimeIndexing indexing_;
    std::vector<TypePiece> pieces_;

    friend std::vector<struct RefinedCell> refine(const TypeRep&, const TypeRep&);
    friend TypeRep pointwise(const TypeRep&, const TypeRep&, ExtendedNat (*)(ExtendedNat, ExtendedNat));
};

// One cell of the common refinement of two types: a set of primes on which
// both are constant.
struct RefinedCell {
    SymbolicPrimeSet set;
    ExtendedNat left;
    ExtendedNat right;
};

// Nonempty pairwise intersections of the two partitions, in the canonical
// order (left pieces outer, right pieces inner). Every decision procedure
// below walks this list, so its order fixes all downstream tie-breaking.
inline std::vector<RefinedCell> refine(const TypeRep& a, const TypeRep& b) {
    if (a.indexing() != b.indexing())
        throw std::invalid_argument("types use different indexings");
    std::vector<RefinedCell> cells;
    for (const auto& pa : a.pieces_)
        for (const auto& pb : b.pieces_) {
            SymbolicPrimeSet common = pa.set.intersect(pb.set);
            if (!common.is_empty()) cells.push_back({std::move(common), pa.value, pb.value});
        }
    return cells;
}

// True iff the two maps differ at only finitely many primes, all carrying
// finite values on both sides. This is equality of equivalence classes.
inline bool equivalent(const TypeRep& a, const TypeRep& b) {
    for (const auto& cell : refine(a, b)) {
        if (cell.left == cell.right) continue;
        if (cell.left.is_infinite() || cell.right.is_infinite()) return false;
        if (cell.set.is_infinite()) return false;
    }
    return true;
}

// Order on equivalence classes: a has a representative pointwise <= b, i.e.
// the primes where a exceeds b form a finite set with finite a-values.
inline bool leq(const TypeRep& a, const TypeRep& b) {
    for (const auto& cell : refine(a, b)) {
        if (cell.left <= cell.right) continue;
        if (cell.left.is_infinite()) return false;
        if (cell.set.is_infinite()) return false;
    }
    return true;
}

inline bool strictly_less(const TypeRep& a, const TypeRep& b) {
    return leq(a, b) && !leq(b, a);
}

inline TypeRep pointwise(const TypeRep& a, const TypeRep& b,
                         ExtendedNat (*op)(ExtendedNat, ExtendedNat)) {
    std::vector<TypePiece> raw;
    for (const auto& cell : refine(a, b)) raw.push_back({cell.set, op(cell.left, cell.right)});
    return TypeRep(a.indexing(), std::move(raw));
}

inline TypeRep join(const TypeRep& a, const TypeRep& b) { return pointwise(a, b, max); }
inline TypeRep meet(const TypeRep& a, const TypeRep& b) { return pointwise(a, b, min); }

// Replace a by the equivalent representative that is pointwise <= b: lower
// each of the finitely many excess entries to b's value there.
inline std::pair<TypeRep, TypeRep> normalize_pair(const TypeRep& a, const TypeRep& b) {
    if (!leq(a, b)) throw std::invalid_argument("normalize_pair requires leq");
    TypeRep lowered = a;
    for (const auto& cell : refine(a, b)) {
        if (cell.left <= cell.right) continue;
        // leq guarantees the cell is finite with finite left value.
        lowered = lowered.with(cell.set, cell.right);
    }
    return {std::move(lowered), b};
}

} // namespace typelattice::type_lattice
