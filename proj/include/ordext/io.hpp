#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordext/constructions.hpp"
#include "ordext/element.hpp"

namespace ordext {

/// Malformed input file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parsed relation file: ground as declared in the header (if any), followed
/// by elements first seen in pairs, in order of appearance. Duplicates in the
/// header are kept so that validation can report them.
struct RelationFile {
    std::vector<ElementId> ground;
    std::vector<Pair> pairs;
};

/// Relation file format:
///
///     # comment
///     a            <- optional header, one element per line
///     b
///     ---          <- ends the header
///     a < b        <- one pair per line; spaces optional
///
/// Blank lines and lines starting with '#' are ignored everywhere.
RelationFile parse_relation(std::istream& in);

/// One token per line.
std::vector<ElementId> parse_subset(std::istream& in);

/// Blocks of tokens separated by `---` lines.
Partition parse_partition(std::istream& in);

/// One `y -> x` per line.
std::vector<Pair> parse_bijection(std::istream& in);

/// Header (ground), `---`, then one `x < y` per pair. Parses back to an
/// equal poset.
void write_relation(std::ostream& out, const std::vector<ElementId>& ground, const std::vector<Pair>& pairs);

} // namespace ordext
