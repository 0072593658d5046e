#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordext/element.hpp"

namespace ordext {

/// Base of every domain error: the input is well formed but violates an
/// order-theoretic precondition. Each subclass carries a concrete witness.
class OrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateElement : public OrderError {
public:
    explicit DuplicateElement(ElementId element);
    const ElementId& element() const noexcept { return element_; }

private:
    ElementId element_;
};

class UnknownElement : public OrderError {
public:
    explicit UnknownElement(ElementId element);
    const ElementId& element() const noexcept { return element_; }

private:
    ElementId element_;
};

/// The relation contains a cycle. `cycle()` is closed: front() == back().
class AntisymmetryViolation : public OrderError {
public:
    explicit AntisymmetryViolation(std::vector<ElementId> cycle);
    const std::vector<ElementId>& cycle() const noexcept { return cycle_; }

private:
    std::vector<ElementId> cycle_;
};

/// x < y and y < z are present but x < z is not.
class NotClosed : public OrderError {
public:
    NotClosed(ElementId x, ElementId y, ElementId z);
    const ElementId& x() const noexcept { return x_; }
    const ElementId& y() const noexcept { return y_; }
    const ElementId& z() const noexcept { return z_; }

private:
    ElementId x_, y_, z_;
};

class ClosureCreatesReflexivePair : public OrderError {
public:
    explicit ClosureCreatesReflexivePair(ElementId element);
    const ElementId& element() const noexcept { return element_; }

private:
    ElementId element_;
};

class NotIncomparable : public OrderError {
public:
    NotIncomparable(ElementId first, ElementId second, std::string detail);
    const ElementId& first() const noexcept { return first_; }
    const ElementId& second() const noexcept { return second_; }

private:
    ElementId first_, second_;
};

class CapExceeded : public OrderError {
public:
    CapExceeded(std::size_t size, std::size_t cap);
    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_, cap_;
};

/// The number of linear extensions does not fit in 64 bits.
class CountOverflow : public OrderError {
public:
    CountOverflow();
};

class NotDisjoint : public OrderError {
public:
    explicit NotDisjoint(ElementId element);
    const ElementId& element() const noexcept { return element_; }

private:
    ElementId element_;
};

class EmptySubset : public OrderError {
public:
    explicit EmptySubset(std::string which);
};

class EmptyBlock : public OrderError {
public:
    explicit EmptyBlock(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NotBijective : public OrderError {
public:
    using OrderError::OrderError;
};

/// Malformed token (empty, whitespace, or '<'). Not a domain error.
class InvalidToken : public std::invalid_argument {
public:
    explicit InvalidToken(const std::string& token);
};

} // namespace ordext
