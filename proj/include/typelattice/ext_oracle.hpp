#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "type_lattice.hpp"

namespace typelattice::ext_oracle {

using prime_sets::PrimeIndexing;
using prime_sets::SymbolicPrimeSet;
using type_lattice::ExtendedNat;
using type_lattice::TypeRep;

// A subgroup of the rationals, determined up to isomorphism by its type.
class RankOneGroup {
public:
    explicit RankOneGroup(TypeRep type) : type_(std::move(type)) {}
    [[nodiscard]] const TypeRep& type() const { return type_; }

    friend bool operator==(const RankOneGroup&, const RankOneGroup&) = default;

private:
    TypeRep type_;
};

// A finite direct sum of rank-1 groups; the empty sum is the zero group.
class CompletelyDecomposable {
public:
    CompletelyDecomposable() = default;
    explicit CompletelyDecomposable(std::vector<TypeRep> summands)
        : summands_(std::move(summands)) {}

    [[nodiscard]] const std::vector<TypeRep>& summands() const { return summands_; }
    [[nodiscard]] std::size_t rank() const { return summands_.size(); }

private:
    std::vector<TypeRep> summands_;
};

// Does Ext(T, X) = 0 for rank-1 groups with types T and X?
//
// The criterion, stated on characteristics: writing t_p for T's entry and
// x_p for X's, vanishing holds iff
//   (a) { p : 0 < t_p < inf  and  x_p < inf } is finite, and
//   (b) { p : t_p = inf      and  x_p < inf } is empty.
// Both sets are assembled symbolically, so "finite" is exact, never sampled.
inline bool ext_vanishes_rank1(const TypeRep& T, const TypeRep& X) {
    const PrimeIndexing ix = T.indexing();
    SymbolicPrimeSet finite_obstructions = SymbolicPrimeSet::empty(ix);
    SymbolicPrimeSet infinite_obstructions = SymbolicPrimeSet::empty(ix);
    for (const auto& cell : refine(T, X)) {
        const ExtendedNat t = cell.left;
        const ExtendedNat x = cell.right;
        if (x.is_infinite()) continue;
        if (t.is_infinite())
            infinite_obstructions = infinite_obstructions.unite(cell.set);
        else if (t.value() > 0)
            finite_obstructions = finite_obstructions.unite(cell.set);
    }
    return finite_obstructions.is_finite() && infinite_obstructions.is_empty();
}

// Per-prime structure of the cotorsion quotient X/X_tau, grouped by the
// prime sets on which the structure is constant:
//   - Cyclic:  X/p^{t_p}X is cyclic of order p^{t_p}  (0 < t_p < inf, x_p < inf)
//   - Padic:   a copy of the p-adic integers arises   (t_p = inf,     x_p < inf)
//   - Trivial: the component vanishes                 (otherwise)
enum class ComponentKind { Trivial, Cyclic, Padic };

struct ShapeComponent {
    SymbolicPrimeSet primes;
    ComponentKind kind;
    // Each cyclic component at p has order p^exponent; 0 for the other kinds.
    std::uint32_t exponent;
};

struct CotorsionQuotientShape {
    std::vector<ShapeComponent> components;
};

inline CotorsionQuotientShape quotient_shape(const TypeRep& X, const TypeRep& tau) {
    CotorsionQuotientShape shape;
    for (const auto& cell : refine(X, tau)) {
        const ExtendedNat x = cell.left;
        const ExtendedNat t = cell.right;
        ComponentKind kind = ComponentKind::Trivial;
        std::uint32_t exponent = 0;
        if (x.is_finite() && t.is_infinite()) {
            kind = ComponentKind::Padic;
        } else if (x.is_finite() && t.is_finite() && t.value() > 0) {
            kind = ComponentKind::Cyclic;
            exponent = t.value();
        }
        shape.components.push_back({cell.set, kind, exponent});
    }
    return shape;
}

// The quotient is cotorsion-negligible (forces no obstruction to vanishing)
// iff it contains no p-adic copy and only finitely many cyclic components.
inline bool vanishes_via_shape(const CotorsionQuotientShape& s) {
    for (const auto& component : s.components) {
        if (component.primes.is_empty()) continue;
        if (component.kind == ComponentKind::Padic) return false;
        if (component.kind == ComponentKind::Cyclic && component.primes.is_infinite())
            return false;
    }
    return true;
}

// Ext(T, X) between rank-1 groups is either zero or of continuum size;
// nothing finer is decidable at the level of types.
enum class ExtClass { Zero, Continuum };

inline ExtClass ext_class(const TypeRep& T, const TypeRep& X) {
    return ext_vanishes_rank1(T, X) ? ExtClass::Zero : ExtClass::Continuum;
}

// Ext is additive in both arguments over finite direct sums, so vanishing
// for completely decomposable groups is decided summand pair by summand
// pair. Vacuously true when either side is the zero group.
inline bool ext_vanishes_cd(const CompletelyDecomposable& T, const CompletelyDecomposable& X) {
    for (const auto& t : T.summands())
        for (const auto& x : X.summands())
            if (!ext_vanishes_rank1(t, x)) return false;
    return true;
}

} // namespace typelattice::ext_oracle
