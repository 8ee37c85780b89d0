#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primes.hpp"

namespace typelattice::prime_sets {

// Index-mod-k partition of the primes: cell(i) = { p_j : j ≡ i (mod k) }.
// All symbolic sets of one computation share a single indexing.
class PrimeIndexing {
public:
    explicit PrimeIndexing(std::uint32_t modulus) : modulus_(modulus) {
        if (modulus_ == 0) throw std::invalid_argument("indexing modulus must be >= 1");
    }

    [[nodiscard]] std::uint32_t modulus() const { return modulus_; }

    friend bool operator==(PrimeIndexing, PrimeIndexing) = default;

private:
    std::uint32_t modulus_;
};

// A set of primes of the form (⋃_{i∈cells} cell(i) ∪ plus) \ minus.
//
// Normal form: plus ∩ minus = ∅, every plus prime lies outside the cell
// region and every minus prime inside it. The algebra (union, intersection,
// complement) is closed on this representation, and membership, emptiness,
// finiteness and cofiniteness are all decidable. A normalized set is
// infinite exactly when its cell mask is nonempty.
class SymbolicPrimeSet {
public:
    static SymbolicPrimeSet empty(PrimeIndexing ix) {
        return SymbolicPrimeSet(ix, std::vector<bool>(ix.modulus(), false), {}, {});
    }

    static SymbolicPrimeSet universe(PrimeIndexing ix) {
        return SymbolicPrimeSet(ix, std::vector<bool>(ix.modulus(), true), {}, {});
    }

    static SymbolicPrimeSet cell(PrimeIndexing ix, std::uint32_t i) {
        return cells(ix, {i});
    }

    static SymbolicPrimeSet cells(PrimeIndexing ix, const std::vector<std::uint32_t>& indices) {
        std::vector<bool> mask(ix.modulus(), false);
        for (auto i : indices) {
            if (i >= ix.modulus())
                throw std::invalid_argument("cell index " + std::to_string(i) +
                                            " out of range for modulus " +
                                            std::to_string(ix.modulus()));
            mask[i] = true;
        }
        return SymbolicPrimeSet(ix, std::move(mask), {}, {});
    }

    static SymbolicPrimeSet of_primes(PrimeIndexing ix, std::vector<std::uint64_t> primes) {
        for (auto p : primes) prime_index(p); // rejects non-primes
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        SymbolicPrimeSet s = empty(ix);
        s.plus_ = std::move(primes);
        return s;
    }

    [[nodiscard]] const PrimeIndexing& indexing() const { return indexing_; }
    [[nodiscard]] const std::vector<bool>& cell_mask() const { return cells_; }
    [[nodiscard]] const std::vector<std::uint64_t>& plus() const { return plus_; }
    [[nodiscard]] const std::vector<std::uint64_t>& minus() const { return minus_; }

    // p must be prime under the library's primality check.
    [[nodiscard]] bool member(std::uint64_t p) const {
        const std::size_t j = prime_index(p);
        if (cells_[j % indexing_.modulus()]) return !contains(minus_, p);
        return contains(plus_, p);
    }

    [[nodiscard]] SymbolicPrimeSet unite(const SymbolicPrimeSet& o) const {
        return combine(o, [](bool a, bool b) { return a || b; });
    }

    [[nodiscard]] SymbolicPrimeSet intersect(const SymbolicPrimeSet& o) const {
        return combine(o, [](bool a, bool b) { return a && b; });
    }

    [[nodiscard]] SymbolicPrimeSet complement() const {
        std::vector<bool> mask(cells_);
        mask.flip();
        std::vector<std::uint64_t> exceptions = plus_;
        exceptions.insert(exceptions.end(), minus_.begin(), minus_.end());
        SymbolicPrimeSet result(indexing_, std::move(mask), {}, {});
        result.place_exceptions(exceptions, [this](std::uint64_t p) { return !member(p); });
        return result;
    }

    [[nodiscard]] SymbolicPrimeSet difference(const SymbolicPrimeSet& o) const {
        return intersect(o.complement());
    }

    [[nodiscard]] bool is_empty() const { return !has_cells() && plus_.empty(); }
    [[nodiscard]] bool is_finite() const { return !has_cells(); }
    [[nodiscard]] bool is_infinite() const { return has_cells(); }

    [[nodiscard]] bool is_cofinite() const {
        return std::all_of(cells_.begin(), cells_.end(), [](bool b) { return b; });
    }

    // Elements of a finite set, in increasing order.
    [[nodiscard]] const std::vector<std::uint64_t>& finite_elements() const {
        if (!is_finite()) throw std::domain_error("finite_elements() of an infinite set");
        return plus_;
    }

    [[nodiscard]] std::uint64_t least_prime() const {
        if (is_empty()) throw std::domain_error("least_prime() of the empty set");
        if (is_finite()) return plus_.front();
        for (std::size_t j = 0;; ++j) {
            const std::uint64_t p = nth_prime(j);
            if (member(p)) return p;
        }
    }

    // First n elements in increasing order (all of them if fewer exist).
    [[nodiscard]] std::vector<std::uint64_t> first_primes(std::size_t n) const {
        std::vector<std::uint64_t> out;
        if (is_finite()) {
            out.assign(plus_.begin(), plus_.begin() + std::min(n, plus_.size()));
            return out;
        }
        for (std::size_t j = 0; out.size() < n; ++j) {
            const std::uint64_t p = nth_prime(j);
            if (member(p)) out.push_back(p);
        }
        return out;
    }

    friend bool operator==(const SymbolicPrimeSet&, const SymbolicPrimeSet&) = default;

private:
    SymbolicPrimeSet(PrimeIndexing ix, std::vector<bool> mask,
                     std::vector<std::uint64_t> plus, std::vector<std::uint64_t> minus)
        : indexing_(ix), cells_(std::move(mask)), plus_(std::move(plus)), minus_(std::move(minus)) {}

    [[nodiscard]] bool has_cells() const {
        return std::any_of(cells_.begin(), cells_.end(), [](bool b) { return b; });
    }

    [[nodiscard]] bool in_cell_region(std::uint64_t p) const {
        return cells_[prime_index(p) % indexing_.modulus()];
    }

    static bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t p) {
        return std::binary_search(sorted.begin(), sorted.end(), p);
    }

    // Classify each candidate prime against the cell mask and record it in
    // plus/minus when its actual membership disagrees with the mask.
    template <typename MemberFn>
    void place_exceptions(std::vector<std::uint64_t> candidates, MemberFn actual_member) {
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (auto p : candidates) {
            const bool wanted = actual_member(p);
            const bool structural = in_cell_region(p);
            if (wanted && !structural) plus_.push_back(p);
            if (!wanted && structural) minus_.push_back(p);
        }
        std::sort(plus_.begin(), plus_.end());
        std::sort(minus_.begin(), minus_.end());
    }

    template <typename BoolOp>
    SymbolicPrimeSet combine(const SymbolicPrimeSet& o, BoolOp op) const {
        if (indexing_ != o.indexing_)
            throw std::invalid_argument("symbolic prime sets use different indexings");
        std::vector<bool> mask(indexing_.modulus());
        for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = op(cells_[i], o.cells_[i]);
        std::vector<std::uint64_t> exceptions;
        exceptions.reserve(plus_.size() + minus_.size() + o.plus_.size() + o.minus_.size());
        for (const auto* v : {&plus_, &minus_, &o.plus_, &o.minus_})
            exceptions.insert(exceptions.end(), v->begin(), v->end());
        SymbolicPrimeSet result(indexing_, std::move(mask), {}, {});
        result.place_exceptions(exceptions, [&](std::uint64_t p) {
            return op(member(p), o.member(p));
        });
        return result;
    }

    PrimeIndexing indexing_;
    std::vector<bool> cells_;
    std::vector<std::uint64_t> plus_;
    std::vector<std::uint64_t> minus_;
};

} // namespace typelattice::prime_sets
