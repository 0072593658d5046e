#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ordext {

/// Opaque name of a ground-set member. Tokens are nonempty and contain no
/// whitespace and no '<'.
class ElementId {
public:
    explicit ElementId(std::string token);

    static bool is_valid_token(std::string_view token);

    const std::string& token() const noexcept { return token_; }

    friend auto operator<=>(const ElementId&, const ElementId&) = default;
    friend bool operator==(const ElementId&, const ElementId&) = default;

private:
    std::string token_;
};

std::ostream& operator<<(std::ostream& os, const ElementId& id);

using Pair = std::pair<ElementId, ElementId>;

/// Strict (irreflexive) pair relation. Reflexive pairs are implicit and never
/// stored.
using StrictRelation = std::set<Pair>;

} // namespace ordext

template <>
struct std::hash<ordext::ElementId> {
    std::size_t operator()(const ordext::ElementId& id) const noexcept {
        return std::hash<std::string>{}(id.token());
    }
};

namespace ordext {

/// Ordered sequence of distinct elements with a reverse index.
class Ground {
public:
    Ground() = default;
    /// Throws DuplicateElement on a repeated token.
    explicit Ground(std::vector<ElementId> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    const ElementId& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<ElementId>& elements() const noexcept { return elements_; }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool contains(const ElementId& id) const { return index_.contains(id); }
    std::optional<std::size_t> find(const ElementId& id) const;
    /// Throws UnknownElement.
    std::size_t index_of(const ElementId& id) const;

    friend bool operator==(const Ground& a, const Ground& b) { return a.elements_ == b.elements_; }

private:
    std::vector<ElementId> elements_;
    std::unordered_map<ElementId, std::size_t> index_;
};

} // namespace ordext
