#include "ordext/poset.hpp"

#include <deque>
#include <limits>

#include "ordext/errors.hpp"

namespace ordext {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool has_cycle(const BitMatrix& edges) {
    const std::size_t n = edges.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) edges.for_each_in_row(i, [&](std::size_t j) { ++indegree[j]; });
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) stack.push_back(i);
    std::size_t removed = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++removed;
        edges.for_each_in_row(v, [&](std::size_t j) {
            if (--indegree[j] == 0) stack.push_back(j);
        });
    }
    return removed != n;
}

// Shortest cycle over all start vertices; ties go to the lowest start index.
// Returned closed: front() == back().
std::vector<std::size_t> shortest_cycle(const BitMatrix& edges) {
    const std::size_t n = edges.size();
    std::vector<std::size_t> best;
    std::vector<std::size_t> parent(n), dist(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (edges.test(s, s)) return {s, s};
        std::fill(dist.begin(), dist.end(), kNone);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        std::size_t closing = kNone;
        while (!queue.empty() && closing == kNone) {
            std::size_t v = queue.front();
            queue.pop_front();
            if (!best.empty() && dist[v] + 2 >= best.size()) break;
            edges.for_each_in_row(v, [&](std::size_t w) {
                if (closing != kNone) return;
                if (w == s) {
                    closing = v;
                } else if (dist[w] == kNone) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            });
        }
        if (closing == kNone) continue;
        std::vector<std::size_t> path;
        for (std::size_t v = closing; v != s; v = parent[v]) path.push_back(v);
        path.push_back(s);
        std::vector<std::size_t> cycle(path.rbegin(), path.rend());
        cycle.push_back(s);
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    }
    return best;
}

} // namespace

bool Poset::less(const ElementId& x, const ElementId& y) const {
    return less_.test(ground_.index_of(x), ground_.index_of(y));
}

std::vector<Pair> Poset::pairs() const {
    std::vector<Pair> out;
    out.reserve(pair_count());
    for (std::size_t i = 0; i < size(); ++i)
        less_.for_each_in_row(i, [&](std::size_t j) { out.emplace_back(ground_[i], ground_[j]); });
    return out;
}

StrictRelation Poset::relation() const {
    auto p = pairs();
    return StrictRelation(p.begin(), p.end());
}

Poset validate(std::vector<ElementId> ground_elements, std::span<const Pair> pairs, bool auto_close) {
    Ground ground(std::move(ground_elements));
    BitMatrix less(ground.size());
    for (const auto& [x, y] : pairs) less.set(ground.index_of(x), ground.index_of(y));

    if (has_cycle(less)) {
        std::vector<ElementId> witness;
        for (std::size_t i : shortest_cycle(less)) witness.push_back(ground[i]);
        throw AntisymmetryViolation(std::move(witness));
    }

    if (auto_close) {
        close_transitively(less);
    } else {
        for (std::size_t x = 0; x < ground.size(); ++x) {
            std::optional<NotClosed> failure;
            less.for_each_in_row(x, [&](std::size_t y) {
                if (failure) return;
                if (auto z = less.first_difference(y, x)) failure.emplace(ground[x], ground[y], ground[*z]);
            });
            if (failure) throw *failure;
        }
    }
    return Poset(std::move(ground), std::move(less));
}

StrictRelation transitive_closure(const StrictRelation& pairs) {
    // Index elements in token order; StrictRelation is already sorted.
    std::set<ElementId> elements;
    for (const auto& [x, y] : pairs) {
        elements.insert(x);
        elements.insert(y);
    }
    Ground ground(std::vector<ElementId>(elements.begin(), elements.end()));
    BitMatrix m(ground.size());
    for (const auto& [x, y] : pairs) m.set(ground.index_of(x), ground.index_of(y));
    close_transitively(m);

    StrictRelation out;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (m.test(i, i)) throw ClosureCreatesReflexivePair(ground[i]);
        m.for_each_in_row(i, [&](std::size_t j) { out.emplace_hint(out.end(), ground[i], ground[j]); });
    }
    return out;
}

Poset restrict(const Poset& poset, std::span<const ElementId> subset) {
    Ground ground(std::vector<ElementId>(subset.begin(), subset.end()));
    std::vector<std::size_t> source(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) source[i] = poset.ground().index_of(ground[i]);

    BitMatrix less(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i)
        for (std::size_t j = 0; j < ground.size(); ++j)
            if (poset.less(source[i], source[j])) less.set(i, j);
    return Poset(std::move(ground), std::move(less));
}

bool is_comparable(const Poset& poset, const ElementId& x, const ElementId& y) {
    std::size_t i = poset.ground().index_of(x);
    std::size_t j = poset.ground().index_of(y);
    return i == j || poset.less(i, j) || poset.less(j, i);
}

std::vector<Pair> incomparable_pairs(const Poset& poset) {
    std::vector<Pair> out;
    const auto& g = poset.ground();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!poset.less(i, j) && !poset.less(j, i)) out.emplace_back(g[i], g[j]);
    return out;
}

} // namespace ordext
