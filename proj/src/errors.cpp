#include "ordext/errors.hpp"

namespace ordext {

namespace {

std::string join_cycle(const std::vector<ElementId>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += " -> ";
        s += cycle[i].token();
    }
    return s;
}

} // namespace

DuplicateElement::DuplicateElement(ElementId element)
    : OrderError("duplicate element '" + element.token() + "'"), element_(std::move(element)) {}

UnknownElement::UnknownElement(ElementId element)
    : OrderError("unknown element '" + element.token() + "'"), element_(std::move(element)) {}

AntisymmetryViolation::AntisymmetryViolation(std::vector<ElementId> cycle)
    : OrderError("relation has a cycle: " + join_cycle(cycle)), cycle_(std::move(cycle)) {}

NotClosed::NotClosed(ElementId x, ElementId y, ElementId z)
    : OrderError("relation is not transitively closed: " + x.token() + " < " + y.token() + " and " +
                 y.token() + " < " + z.token() + " but not " + x.token() + " < " + z.token()),
      x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

ClosureCreatesReflexivePair::ClosureCreatesReflexivePair(ElementId element)
    : OrderError("closure forces " + element.token() + " < " + element.token() + " (input has a cycle)"),
      element_(std::move(element)) {}

NotIncomparable::NotIncomparable(ElementId first, ElementId second, std::string detail)
    : OrderError("elements '" + first.token() + "' and '" + second.token() + "' are not incomparable" +
                 (detail.empty() ? std::string() : " (" + detail + ")")),
      first_(std::move(first)), second_(std::move(second)) {}

CapExceeded::CapExceeded(std::size_t size, std::size_t cap)
    : OrderError("ground size " + std::to_string(size) + " exceeds counting cap " + std::to_string(cap)),
      size_(size), cap_(cap) {}

CountOverflow::CountOverflow() : OrderError("number of linear extensions exceeds 2^64 - 1") {}

NotDisjoint::NotDisjoint(ElementId element)
    : OrderError("element '" + element.token() + "' occurs in more than one set"), element_(std::move(element)) {}

EmptySubset::EmptySubset(std::string which) : OrderError("subset " + which + " is empty") {}

EmptyBlock::EmptyBlock(std::size_t index)
    : OrderError("partition block " + std::to_string(index + 1) + " is empty"), index_(index) {}

InvalidToken::InvalidToken(const std::string& token)
    : std::invalid_argument("invalid element token '" + token + "'") {}

} // namespace ordext
