#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symtern/core.hpp"
#include "symtern/tree.hpp"

namespace symtern::oracle {

// Default taxa "t1".."tn".
TaxonSet default_taxa(std::size_t n);

// First k symbols of "a", "b", "c", ...
std::vector<Symbol> default_symbols(std::size_t k);

/// All unrooted phylogenetic tree shapes on one taxa set, one per
/// isomorphism class, in a deterministic order.
struct TreeEnumeration {
  TaxonSet taxa;
  std::vector<Topology> topologies;

  std::size_t binary_count() const;
};

// Leaf-insertion enumeration; SizeError unless 3 <= n <= 7.
TreeEnumeration enumerate_trees(std::size_t n);
TreeEnumeration enumerate_trees(const TaxonSet& taxa);

// Calls fn for every discriminating coloring of the interior vertices with
// the given symbols; stops when fn returns false.
void for_each_coloring(const Topology& topology, const std::vector<Symbol>& symbols,
                       const std::function<bool(const ColoredTree&)>& fn);

std::vector<ColoredTree> enumerate_colorings(const Topology& topology,
                                             const std::vector<Symbol>& symbols);

// At most `cap` colorings, taken at an even stride over the full sequence.
std::vector<ColoredTree> sample_colorings(const Topology& topology,
                                          const std::vector<Symbol>& symbols, std::size_t cap);

// Exhaustive search over trees and discriminating colorings (with the symbols
// used by the map) for one whose encoding equals the map. SizeError for more
// than 6 taxa.
std::optional<ColoredTree> brute_force_reconstruct(const TernaryMap& map);

// Guided search for a 6-taxon map over two symbols satisfying Conditions
// (1)-(3) and (*) that generates two quartets on each of {a1,a2,b1,b2} and
// {a1,a2,c1,c2}. Candidates are constant on those two 4-sets first; the full
// space of 2^20 maps is searched only if that finds nothing.
std::optional<TernaryMap> find_fig6_like();

}  // namespace symtern::oracle
