#pragma once

#include <cstddef>
#include <vector>

#include "ordext/element.hpp"

namespace ordext {

/// A total order given by a permutation of distinct elements. Position
/// defines the order: s_i < s_j iff i < j.
class LinearOrder {
public:
    LinearOrder() = default;

    const std::vector<ElementId>& sequence() const noexcept { return elements_.elements(); }
    const Ground& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// Throws UnknownElement.
    std::size_t position(const ElementId& x) const { return elements_.index_of(x); }
    bool contains(const ElementId& x) const { return elements_.contains(x); }
    bool precedes(const ElementId& x, const ElementId& y) const { return position(x) < position(y); }

    /// {(s_i, s_j) : i < j}
    StrictRelation induced_pairs() const;

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

private:
    explicit LinearOrder(Ground g) : elements_(std::move(g)) {}
    friend LinearOrder order_from_enumeration(std::vector<ElementId>);

    Ground elements_;
};

/// The total order in which each element precedes every later one.
/// Throws DuplicateElement.
LinearOrder order_from_enumeration(std::vector<ElementId> sequence);

} // namespace ordext
