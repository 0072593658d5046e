#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ordext/bit_matrix.hpp"
#include "ordext/element.hpp"

namespace ordext {

struct ForcedPair;

/// A finite partial order in strict form over an ordered ground sequence.
///
/// The relation is always irreflexive, antisymmetric and transitively
/// closed. Instances only come out of `validate`, `restrict` and
/// `extend_with_pair`, each of which establishes those invariants.
class Poset {
public:
    Poset() = default;

    const Ground& ground() const noexcept { return ground_; }
    std::size_t size() const noexcept { return ground_.size(); }

    /// Strict order by ground index.
    bool less(std::size_t i, std::size_t j) const { return less_.test(i, j); }
    /// Strict order by element; throws UnknownElement.
    bool less(const ElementId& x, const ElementId& y) const;

    const BitMatrix& matrix() const noexcept { return less_; }
    std::size_t pair_count() const { return less_.count(); }

    /// Pairs in ground-index order (row-major).
    std::vector<Pair> pairs() const;
    StrictRelation relation() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    Poset(Ground ground, BitMatrix less) : ground_(std::move(ground)), less_(std::move(less)) {}

    friend Poset validate(std::vector<ElementId>, std::span<const Pair>, bool);
    friend Poset restrict(const Poset&, std::span<const ElementId>);
    friend Poset extend_with_pair(const Poset&, const ForcedPair&);

    Ground ground_;
    BitMatrix less_;
};

/// Builds a Poset from raw input. With `auto_close` the relation is replaced
/// by its transitive closure; otherwise a non-closed relation is rejected.
///
/// Throws DuplicateElement, UnknownElement, AntisymmetryViolation (carrying a
/// shortest cycle) or NotClosed (carrying the first offending triple).
Poset validate(std::vector<ElementId> ground, std::span<const Pair> pairs, bool auto_close);

/// Smallest transitively closed superset of `pairs`.
/// Throws ClosureCreatesReflexivePair if the input contains a cycle.
StrictRelation transitive_closure(const StrictRelation& pairs);

/// Poset on `subset` carrying the induced relation. Subset order becomes the
/// new ground order.
Poset restrict(const Poset& poset, std::span<const ElementId> subset);

bool is_comparable(const Poset& poset, const ElementId& x, const ElementId& y);

/// Unordered incomparable pairs, each reported with the earlier ground
/// element first, in ground-index order.
std::vector<Pair> incomparable_pairs(const Poset& poset);

} // namespace ordext
