#include "ordext/extension.hpp"

#include <functional>
#include <queue>
#include <unordered_map>

#include "ordext/errors.hpp"

namespace ordext {

bool ExtensionCertificate::holds() const {
    for (const auto& [x, y] : input_relation)
        if (!output_order.contains(x) || !output_order.contains(y) || !output_order.precedes(x, y)) return false;
    if (forced) {
        if (!output_order.contains(forced->first) || !output_order.contains(forced->second)) return false;
        if (!output_order.precedes(forced->first, forced->second)) return false;
    }
    return true;
}

Poset extend_with_pair(const Poset& poset, const ForcedPair& pair) {
    const std::size_t a = poset.ground().index_of(pair.first);
    const std::size_t b = poset.ground().index_of(pair.second);
    if (a == b) throw NotIncomparable(pair.first, pair.second, "same element");
    if (poset.less(a, b))
        throw NotIncomparable(pair.first, pair.second, pair.first.token() + " < " + pair.second.token() + " already holds");
    if (poset.less(b, a))
        throw NotIncomparable(pair.first, pair.second, pair.second.token() + " < " + pair.first.token() + " holds");

    // Closure of R ∪ {(a,b)} adds exactly (↓a) × (↑b), where ↓a and ↑b
    // include a and b themselves.
    const std::size_t n = poset.size();
    BitMatrix less = poset.matrix();
    std::vector<std::size_t> upper{b};
    less.for_each_in_row(b, [&](std::size_t v) { upper.push_back(v); });
    for (std::size_t u = 0; u < n; ++u) {
        if (u != a && !less.test(u, a)) continue;
        for (std::size_t v : upper) less.set(u, v);
    }
    return Poset(poset.ground(), std::move(less));
}

LinearOrder linear_extension(const Poset& poset, const TieBreakPolicy& policy) {
    const std::size_t n = poset.size();
    const auto rank = policy.ranks(poset.ground().elements());
    const auto& less = poset.matrix();

    std::vector<std::size_t> waiting(n, 0);
    for (std::size_t i = 0; i < n; ++i) less.for_each_in_row(i, [&](std::size_t j) { ++waiting[j]; });

    using Entry = std::pair<std::size_t, std::size_t>; // (rank, index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (waiting[i] == 0) ready.emplace(rank[i], i);

    std::vector<ElementId> sequence;
    sequence.reserve(n);
    while (!ready.empty()) {
        std::size_t v = ready.top().second;
        ready.pop();
        sequence.push_back(poset.ground()[v]);
        less.for_each_in_row(v, [&](std::size_t j) {
            if (--waiting[j] == 0) ready.emplace(rank[j], j);
        });
    }
    return order_from_enumeration(std::move(sequence));
}

ExtensionCertificate szpilrajn(const Poset& poset, const std::optional<ForcedPair>& forced,
                               const TieBreakPolicy& policy) {
    ExtensionCertificate cert;
    cert.input_relation = poset.relation();
    cert.forced = forced;
    if (forced) {
        cert.output_order = linear_extension(extend_with_pair(poset, *forced), policy);
    } else {
        cert.output_order = linear_extension(poset, policy);
    }
    return cert;
}

Enumeration enumerate_linear_extensions(const Poset& poset, std::size_t limit) {
    const std::size_t n = poset.size();
    const auto& less = poset.matrix();
    const auto& ground = poset.ground();

    std::vector<std::size_t> waiting(n, 0);
    for (std::size_t i = 0; i < n; ++i) less.for_each_in_row(i, [&](std::size_t j) { ++waiting[j]; });
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> prefix;
    prefix.reserve(n);

    Enumeration result;
    // Returns false once the limit is hit and another extension exists.
    std::function<bool()> descend = [&]() -> bool {
        if (prefix.size() == n) {
            if (result.orders.size() == limit) {
                result.truncated = true;
                return false;
            }
            std::vector<ElementId> seq;
            seq.reserve(n);
            for (std::size_t i : prefix) seq.push_back(ground[i]);
            result.orders.push_back(order_from_enumeration(std::move(seq)));
            return true;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v] || waiting[v] != 0) continue;
            placed[v] = true;
            prefix.push_back(v);
            less.for_each_in_row(v, [&](std::size_t j) { --waiting[j]; });
            bool more = descend();
            less.for_each_in_row(v, [&](std::size_t j) { ++waiting[j]; });
            prefix.pop_back();
            placed[v] = false;
            if (!more) return false;
        }
        return true;
    };
    descend();
    return result;
}

std::uint64_t count_linear_extensions(const Poset& poset, std::size_t cap) {
    const std::size_t n = poset.size();
    const std::size_t effective_cap = std::min<std::size_t>(cap, 64);
    if (n > effective_cap) throw CapExceeded(n, effective_cap);
    if (n == 0) return 1;

    const auto& less = poset.matrix();
    std::vector<std::uint64_t> preds(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        less.for_each_in_row(i, [&](std::size_t j) { preds[j] |= std::uint64_t{1} << i; });
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    // ways[D] = number of ways to finish the order once downset D is placed.
    std::unordered_map<std::uint64_t, std::uint64_t> ways;
    std::function<std::uint64_t(std::uint64_t)> finish = [&](std::uint64_t downset) -> std::uint64_t {
        if (downset == full) return 1;
        if (auto it = ways.find(downset); it != ways.end()) return it->second;
        std::uint64_t total = 0;
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if ((downset & bit) || (preds[v] & ~downset)) continue;
            if (__builtin_add_overflow(total, finish(downset | bit), &total)) throw CountOverflow();
        }
        ways.emplace(downset, total);
        return total;
    };
    return finish(0);
}

} // namespace ordext
