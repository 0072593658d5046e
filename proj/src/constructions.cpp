#include "ordext/constructions.hpp"

#include <algorithm>
#include <limits>

#include "ordext/errors.hpp"

namespace ordext {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

// Tags each ground index with the number of the set containing it, or kFree.
// Rejects unknown, repeated and shared elements.
std::vector<std::size_t> label_sets(const Ground& ground, const std::vector<const std::vector<ElementId>*>& sets) {
    std::vector<std::size_t> label(ground.size(), kFree);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        for (const auto& e : *sets[k]) {
            std::size_t i = ground.index_of(e);
            if (label[i] == k) throw DuplicateElement(e);
            if (label[i] != kFree) throw NotDisjoint(e);
            label[i] = k;
        }
    }
    return label;
}

} // namespace

Bijection::Bijection(std::vector<Pair> mapping) : mapping_(std::move(mapping)) {
    std::unordered_map<ElementId, std::size_t> by_image;
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
        const auto& [y, x] = mapping_[i];
        if (!by_domain_.emplace(y, i).second)
            throw NotBijective("not a function: '" + y.token() + "' is mapped twice");
        if (auto [it, fresh] = by_image.emplace(x, i); !fresh)
            throw NotBijective("not injective: '" + x.token() + "' is the image of both '" +
                               mapping_[it->second].first.token() + "' and '" + y.token() + "'");
    }
}

std::optional<ElementId> Bijection::image(const ElementId& y) const {
    auto it = by_domain_.find(y);
    if (it == by_domain_.end()) return std::nullopt;
    return mapping_[it->second].second;
}

std::vector<ElementId> Bijection::domain() const {
    std::vector<ElementId> out;
    for (const auto& p : mapping_) out.push_back(p.first);
    return out;
}

std::vector<ElementId> Bijection::codomain() const {
    std::vector<ElementId> out;
    for (const auto& p : mapping_) out.push_back(p.second);
    return out;
}

LinearOrder bipartition_order(const std::vector<ElementId>& ground_elements, const std::vector<ElementId>& a,
                              const std::vector<ElementId>& b, const TieBreakPolicy& policy) {
    Ground ground(ground_elements);
    if (a.empty()) throw EmptySubset("A");
    if (b.empty()) throw EmptySubset("B");
    const auto label = label_sets(ground, {&a, &b});
    const auto rank = policy.ranks(ground.elements());

    std::vector<std::size_t> order(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) order[rank[i]] = i;

    // A, then neither, then B.
    auto segment = [&](std::size_t i) { return label[i] == 0 ? 0 : label[i] == kFree ? 1 : 2; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return segment(x) < segment(y); });

    std::vector<ElementId> seq;
    seq.reserve(order.size());
    for (std::size_t i : order) seq.push_back(ground[i]);
    return order_from_enumeration(std::move(seq));
}

LinearOrder partition_block_order(const std::vector<ElementId>& ground_elements, const Partition& partition,
                                  const TieBreakPolicy& policy) {
    Ground ground(ground_elements);
    std::vector<const std::vector<ElementId>*> sets;
    for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
        if (partition.blocks[k].empty()) throw EmptyBlock(k);
        sets.push_back(&partition.blocks[k]);
    }
    const auto label = label_sets(ground, sets);
    const auto rank = policy.ranks(ground.elements());

    std::vector<std::size_t> order(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) order[rank[i]] = i;
    // kFree sorts after every block index, so the leftover is last.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return label[x] < label[y]; });

    std::vector<ElementId> seq;
    seq.reserve(order.size());
    for (std::size_t i : order) seq.push_back(ground[i]);
    return order_from_enumeration(std::move(seq));
}

LinearOrder dense_interleave(const std::vector<ElementId>& y, const std::vector<ElementId>& x, const Bijection& phi,
                             const TieBreakPolicy& policy) {
    Ground ys(y);
    Ground xs(x);
    for (const auto& e : xs)
        if (ys.contains(e)) throw NotDisjoint(e);

    for (const auto& [from, to] : phi.mapping()) {
        if (!ys.contains(from)) throw UnknownElement(from);
        if (!xs.contains(to)) throw NotBijective("not onto X: image '" + to.token() + "' is not an element of X");
    }
    for (const auto& e : ys)
        if (!phi.image(e)) throw NotBijective("not total: '" + e.token() + "' has no image");
    // Injective and total on Y, with image inside X; onto iff sizes match.
    if (xs.size() != ys.size()) {
        for (const auto& e : xs) {
            bool hit = std::any_of(phi.mapping().begin(), phi.mapping().end(),
                                   [&](const Pair& p) { return p.second == e; });
            if (!hit) throw NotBijective("not onto X: '" + e.token() + "' is not an image");
        }
    }

    std::vector<ElementId> seq;
    seq.reserve(2 * ys.size());
    for (const auto& e : policy.arrange(ys.elements())) {
        seq.push_back(e);
        seq.push_back(*phi.image(e));
    }
    return order_from_enumeration(std::move(seq));
}

std::optional<Pair> density_gap(const std::vector<ElementId>& t1, const std::vector<ElementId>& t2,
                                const LinearOrder& order, bool strict) {
    const std::size_t n = order.size();
    std::vector<bool> in_t1(n, false), in_t2(n, false);
    for (const auto& e : t1) in_t1[order.position(e)] = true;
    for (const auto& e : t2) in_t2[order.position(e)] = true;

    // t1_before[p] = number of t1 members at positions < p
    std::vector<std::size_t> t1_before(n + 1, 0);
    for (std::size_t p = 0; p < n; ++p) t1_before[p + 1] = t1_before[p] + (in_t1[p] ? 1 : 0);

    // Checking consecutive t2 members suffices: a witness for a consecutive
    // pair inside [a, b] is also a witness for (a, b).
    std::optional<std::size_t> prev;
    for (std::size_t p = 0; p < n; ++p) {
        if (!in_t2[p]) continue;
        if (prev) {
            const std::size_t lo = strict ? *prev + 1 : *prev;
            const std::size_t hi = strict ? p : p + 1; // half-open
            if (lo >= hi || t1_before[hi] == t1_before[lo])
                return Pair{order.sequence()[*prev], order.sequence()[p]};
        }
        prev = p;
    }
    return std::nullopt;
}

bool is_dense(const std::vector<ElementId>& t1, const std::vector<ElementId>& t2, const LinearOrder& order,
              bool strict) {
    return !density_gap(t1, t2, order, strict).has_value();
}

} // namespace ordext
