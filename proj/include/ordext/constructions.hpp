#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordext/element.hpp"
#include "ordext/linear_order.hpp"
#include "ordext/tie_break.hpp"

namespace ordext {

/// Ordered blocks of elements. Disjointness and nonemptiness are checked by
/// the operations that consume a partition, against their ground.
struct Partition {
    std::vector<std::vector<ElementId>> blocks;
};

/// A one-one, onto map from a domain sequence to a codomain sequence.
class Bijection {
public:
    Bijection() = default;
    /// Throws NotBijective if a domain element is mapped twice or two domain
    /// elements share an image.
    explicit Bijection(std::vector<Pair> mapping);

    const std::vector<Pair>& mapping() const noexcept { return mapping_; }
    std::optional<ElementId> image(const ElementId& y) const;

    std::vector<ElementId> domain() const;
    std::vector<ElementId> codomain() const;

private:
    std::vector<Pair> mapping_;
    std::unordered_map<ElementId, std::size_t> by_domain_;
};

/// Ground arranged as A, then ground ∖ (A ∪ B), then B; each segment ordered
/// by `policy` ranks over the ground.
/// Throws EmptySubset, NotDisjoint, UnknownElement, DuplicateElement.
LinearOrder bipartition_order(const std::vector<ElementId>& ground, const std::vector<ElementId>& a,
                              const std::vector<ElementId>& b, const TieBreakPolicy& policy);

/// Each block occupies a contiguous interval, blocks in the given order,
/// leftover elements last.
/// Throws EmptyBlock, NotDisjoint, UnknownElement, DuplicateElement.
LinearOrder partition_block_order(const std::vector<ElementId>& ground, const Partition& partition,
                                  const TieBreakPolicy& policy);

/// y_σ(1), φ(y_σ(1)), y_σ(2), φ(y_σ(2)), ... where σ orders `y` by `policy`.
/// X is then strictly dense in Y.
/// Throws NotBijective, NotDisjoint, UnknownElement, DuplicateElement.
LinearOrder dense_interleave(const std::vector<ElementId>& y, const std::vector<ElementId>& x,
                             const Bijection& phi, const TieBreakPolicy& policy);

/// For every a before b in t2, some c in t1 with a < c < b (strict) or
/// a <= c <= b (non-strict). Throws UnknownElement.
bool is_dense(const std::vector<ElementId>& t1, const std::vector<ElementId>& t2, const LinearOrder& order,
              bool strict);

/// First consecutive pair of t2 (in order) lacking a witness, if any.
std::optional<Pair> density_gap(const std::vector<ElementId>& t1, const std::vector<ElementId>& t2,
                                const LinearOrder& order, bool strict);

} // namespace ordext
