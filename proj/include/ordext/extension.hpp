#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ordext/element.hpp"
#include "ordext/linear_order.hpp"
#include "ordext/poset.hpp"
#include "ordext/tie_break.hpp"

namespace ordext {

/// An ordered pair (first, second) that a linear extension must respect.
struct ForcedPair {
    ElementId first;
    ElementId second;

    friend bool operator==(const ForcedPair&, const ForcedPair&) = default;
};

/// Evidence produced by `szpilrajn`: the input relation, the total order built
/// from it, and the optional forced pair.
struct ExtensionCertificate {
    StrictRelation input_relation;
    LinearOrder output_order;
    std::optional<ForcedPair> forced;

    /// True iff every input pair (and the forced pair, if any) is a forward
    /// pair of output_order.
    bool holds() const;

    friend bool operator==(const ExtensionCertificate&, const ExtensionCertificate&) = default;
};

/// Minimal extension of `poset` in which pair.first < pair.second: the
/// transitive closure of relation ∪ {pair}. The endpoints must be
/// incomparable; throws NotIncomparable or UnknownElement.
Poset extend_with_pair(const Poset& poset, const ForcedPair& pair);

/// Source removal: repeatedly emit the lowest-ranked element whose
/// predecessors have all been emitted.
LinearOrder linear_extension(const Poset& poset, const TieBreakPolicy& policy);

/// extend_with_pair (when `forced` is set) followed by linear_extension.
ExtensionCertificate szpilrajn(const Poset& poset, const std::optional<ForcedPair>& forced,
                               const TieBreakPolicy& policy);

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultCountCap = 20;

struct Enumeration {
    std::vector<LinearOrder> orders;
    bool truncated = false;
};

/// All linear extensions, ordered lexicographically by the sequence of
/// ground indices. Stops after `limit` orders and sets `truncated` if more
/// exist.
Enumeration enumerate_linear_extensions(const Poset& poset, std::size_t limit = kDefaultEnumerationLimit);

/// Exact number of linear extensions by dynamic programming over downsets.
/// Throws CapExceeded if the ground is larger than `cap` (at most 64) and
/// CountOverflow if the count exceeds 2^64 - 1.
std::uint64_t count_linear_extensions(const Poset& poset, std::size_t cap = kDefaultCountCap);

} // namespace ordext
