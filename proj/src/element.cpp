#include "ordext/element.hpp"

#include <ostream>

#include "ordext/errors.hpp"

namespace ordext {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

} // namespace

ElementId::ElementId(std::string token) : token_(std::move(token)) {
    if (!is_valid_token(token_)) throw InvalidToken(token_);
}

bool ElementId::is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token)
        if (is_space(c) || c == '<') return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const ElementId& id) { return os << id.token(); }

Ground::Ground(std::vector<ElementId> elements) : elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (!index_.emplace(elements_[i], i).second) throw DuplicateElement(elements_[i]);
}

std::optional<std::size_t> Ground::find(const ElementId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Ground::index_of(const ElementId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownElement(id);
    return it->second;
}

} // namespace ordext
