#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordext/element.hpp"

namespace ordext {

/// SplitMix64. Part of the external contract: seeded outputs must be
/// reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Resolves every free choice (which minimal element next, how to order a
/// segment) by a preference rank over the ground sequence. Lower rank wins.
///
///  - input:  rank = position in the ground sequence
///  - lex:    rank = position after sorting tokens bytewise
///  - seeded: start from the identity over ground positions, then for
///            i = n-1 down to 1 swap p[i] with p[next() % (i+1)] using
///            SplitMix64(seed); rank of ground element p[r] is r
class TieBreakPolicy {
public:
    enum class Kind { InputOrder, Lexicographic, Seeded };

    static TieBreakPolicy input_order() { return TieBreakPolicy(Kind::InputOrder, 0); }
    static TieBreakPolicy lexicographic() { return TieBreakPolicy(Kind::Lexicographic, 0); }
    static TieBreakPolicy seeded(std::uint64_t seed) { return TieBreakPolicy(Kind::Seeded, seed); }

    /// Accepts "input", "lex" or "seed:<u64>". Throws std::invalid_argument.
    static TieBreakPolicy parse(std::string_view spec);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// rank[i] for ground element i; a permutation of 0..n-1.
    std::vector<std::size_t> ranks(const std::vector<ElementId>& ground) const;

    /// `elements` reordered by increasing rank.
    std::vector<ElementId> arrange(const std::vector<ElementId>& elements) const;

    std::string to_string() const;

    friend bool operator==(const TieBreakPolicy&, const TieBreakPolicy&) = default;

private:
    TieBreakPolicy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}

    Kind kind_;
    std::uint64_t seed_;
};

} // namespace ordext
