#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtern/core.hpp"
#include "symtern/tree.hpp"

namespace symtern {

// The symbol m for which x and y are m-equivalent, if any. Needs x != y.
std::optional<SymbolId> m_equivalent(const TernaryMap& map, std::size_t x, std::size_t y);
std::optional<Symbol> m_equivalent(const TernaryMap& map, std::string_view x, std::string_view y);

struct EquivalenceClass {
  std::vector<std::size_t> members;  // sorted taxon indices
  std::optional<SymbolId> symbol;    // set for classes of size >= 2
};

/// Partition of the taxa under δ-equivalence, classes ordered by their
/// smallest member.
struct EquivalenceClasses {
  std::vector<EquivalenceClass> classes;

  std::vector<const EquivalenceClass*> nontrivial() const;
};

// Throws NotAMetricError when pairwise equivalence is not transitive.
EquivalenceClasses delta_equivalence_classes(const TernaryMap& map);

struct ContractionStep {
  std::vector<std::string> members;  // sorted
  std::string composite;             // "@k"
  Symbol symbol;
  // Absent when fewer than three taxa would remain.
  std::optional<TernaryMap> reduced;
};

// Replaces the class by one composite taxon. Every member must agree on all
// triples with two outside taxa, otherwise NotAMetricError.
ContractionStep contract_class(const TernaryMap& map, std::span<const std::string> members,
                               const Symbol& symbol, const std::string& composite);

struct Reconstruction {
  ColoredTree tree;
  std::vector<std::string> trace;  // "CONTRACT {..} -> @k COLOR m", then "FINAL ..."
};

// Bottom-up reconstruction by repeated pseudo-cherry contraction, certified
// by re-encoding. Throws NotAMetricError with a witness on failure.
Reconstruction reconstruct(const TernaryMap& map);
inline ColoredTree reconstruct_tree(const TernaryMap& map) { return reconstruct(map).tree; }

// Condition (*) holds, i.e. the map comes from a binary tree (given that it is
// a symbolic ternary metric).
bool check_binary(const TernaryMap& map);

}  // namespace symtern
