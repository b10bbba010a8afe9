#pragma once

#include <string>
#include <string_view>

#include "symtern/core.hpp"

namespace symtern {

// Triple-table text format:
//
//   taxa: x y z u
//   symbols: a b
//   x y z a
//   ...
//
// one line per 3-subset, taxa in any order, '#' starts a comment. Layout
// problems throw ParseError (position = line number); content problems throw
// the errors of build_ternary.
TernaryMap read_triple_table(std::string_view text);

// Canonical output: sorted headers, triples in colex order of sorted indices.
std::string write_triple_table(const TernaryMap& map);

}  // namespace symtern
