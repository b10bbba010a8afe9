#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symtern/core.hpp"
#include "symtern/quartets.hpp"

namespace symtern {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Shape of an unrooted phylogenetic tree: connected, acyclic, no vertex of
/// degree 2, degree-1 vertices labeled bijectively by taxa.
class Topology {
 public:
  // `leaf_names[v]` must be set exactly for the degree-1 vertices.
  // Throws ValidationError on any structural problem.
  Topology(std::vector<std::optional<std::string>> leaf_names, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool is_leaf(Vertex v) const { return adjacency_.at(v).size() == 1; }
  bool is_binary() const;

  const TaxonSet& taxa() const noexcept { return taxa_; }
  // Leaf vertex of the taxon with index i in taxa().
  Vertex leaf(std::size_t taxon) const { return leaf_of_taxon_.at(taxon); }
  Vertex leaf(std::string_view name) const { return leaf(taxa_.index(name)); }
  // Taxon index of a leaf vertex.
  std::size_t taxon_of(Vertex v) const;

  std::vector<Vertex> interior_vertices() const;
  std::vector<Edge> edges() const;  // each edge once, (min, max)

  // parent[v] on the tree rooted at `root`; parent[root] == root.
  std::vector<Vertex> parents_from(Vertex root) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  TaxonSet taxa_;
  std::vector<Vertex> leaf_of_taxon_;
  std::vector<std::size_t> taxon_of_vertex_;
};

/// Topology plus a symbolic dating map on the interior vertices.
class ColoredTree {
 public:
  // `colors[v]` is ignored for leaves and must be a non-empty symbol (not ⊙)
  // for interior vertices; otherwise ColorError.
  ColoredTree(Topology topology, std::vector<Symbol> colors);

  const Topology& topology() const noexcept { return topology_; }
  const TaxonSet& taxa() const noexcept { return topology_.taxa(); }
  // Empty for leaves.
  const Symbol& color(Vertex v) const { return colors_.at(v); }
  const std::vector<Symbol>& colors() const noexcept { return colors_; }

 private:
  Topology topology_;
  std::vector<Symbol> colors_;
};

// Convenience constructor: vertex labels are taxa for leaves and colors for
// interior vertices.
ColoredTree make_tree(const std::vector<std::string>& labels, const std::vector<Edge>& edges);

/// Answers median queries in O(n) each after O(n^2) preprocessing.
class MedianOracle {
 public:
  explicit MedianOracle(const Topology& topology);
  // Taxon indices; DomainError when any two coincide.
  Vertex median(std::size_t x, std::size_t y, std::size_t z) const;

 private:
  const Topology* topology_;
  std::vector<std::vector<Vertex>> parent_;  // per taxon root
  std::vector<std::vector<std::size_t>> depth_;
};

Vertex median(const Topology& tree, std::string_view x, std::string_view y, std::string_view z);
inline Vertex median(const ColoredTree& tree, std::string_view x, std::string_view y,
                     std::string_view z) {
  return median(tree.topology(), x, y, z);
}

// δ(x,y,z) = color of med(x,y,z). The alphabet is the set of colors in use.
TernaryMap encode(const ColoredTree& tree);

// All quartets ab|cd whose a-b and c-d paths are vertex-disjoint.
QuartetSystem displayed_quartets(const Topology& tree);

bool is_discriminating(const ColoredTree& tree);

// Sets of >= 2 leaves that are exactly the leaves adjacent to one interior
// vertex; each set sorted by taxon name, the list sorted.
std::vector<std::vector<std::string>> pseudo_cherries(const Topology& tree);

// Leaf-label preserving canonical strings (topology only / with colors).
std::string canonical_form(const Topology& tree);
std::string canonical_form(const ColoredTree& tree);

// Isomorphism fixing every leaf label and preserving interior colors.
// DomainError when the taxa sets differ.
bool trees_isomorphic(const ColoredTree& a, const ColoredTree& b);
bool topologies_isomorphic(const Topology& a, const Topology& b);

// Newick dialect: interior labels are colors, leaf labels are taxa, no branch
// lengths. The outermost group is the root; a root with two children is
// suppressed (its label dropped), a root with one child is dropped.
ColoredTree parse_newick(std::string_view text);
std::string write_newick(const ColoredTree& tree);

// Graphviz export.
std::string write_dot(const ColoredTree& tree);

}  // namespace symtern
