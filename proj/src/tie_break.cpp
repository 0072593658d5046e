#include "ordext/tie_break.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ordext {

TieBreakPolicy TieBreakPolicy::parse(std::string_view spec) {
    if (spec == "input") return input_order();
    if (spec == "lex") return lexicographic();
    constexpr std::string_view prefix = "seed:";
    if (spec.starts_with(prefix)) {
        std::string_view digits = spec.substr(prefix.size());
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) return seeded(seed);
    }
    throw std::invalid_argument("invalid tie-break policy '" + std::string(spec) +
                                "' (expected input, lex or seed:<u64>)");
}

std::vector<std::size_t> TieBreakPolicy::ranks(const std::vector<ElementId>& ground) const {
    const std::size_t n = ground.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    switch (kind_) {
    case Kind::InputOrder:
        break;
    case Kind::Lexicographic:
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return ground[a].token() < ground[b].token(); });
        break;
    case Kind::Seeded: {
        SplitMix64 rng(seed_);
        for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng.next() % (i + 1)]);
        break;
    }
    }
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
    return rank;
}

std::vector<ElementId> TieBreakPolicy::arrange(const std::vector<ElementId>& elements) const {
    auto rank = ranks(elements);
    std::vector<std::size_t> by_rank(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) by_rank[rank[i]] = i;
    std::vector<ElementId> out;
    out.reserve(elements.size());
    for (std::size_t i : by_rank) out.push_back(elements[i]);
    return out;
}

std::string TieBreakPolicy::to_string() const {
    switch (kind_) {
    case Kind::InputOrder:
        return "input";
    case Kind::Lexicographic:
        return "lex";
    case Kind::Seeded:
        return "seed:" + std::to_string(seed_);
    }
    return {};
}

} // namespace ordext
