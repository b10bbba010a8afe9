#pragma once

// Shared test fixtures: the 5-taxon caterpillar with pseudo-cherries
// {x1,x2} and {z1,z2}, and one map per K5 coloring type on {u,w,x,y,z}.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symtern/symtern.hpp"

namespace fixtures {

using namespace symtern;

// Vertex ids: 0 = v1 (next to x1,x2), 1 = v2 (next to y), 2 = v3 (next to z1,z2).
inline constexpr Vertex kV1 = 0, kV2 = 1, kV3 = 2;

inline ColoredTree caterpillar(const std::string& c1, const std::string& c2,
                               const std::string& c3) {
  return make_tree({c1, c2, c3, "x1", "x2", "y", "z1", "z2"},
                   {{0, 3}, {0, 4}, {0, 1}, {1, 5}, {1, 2}, {2, 6}, {2, 7}});
}

inline ColoredTree star(const std::vector<std::string>& leaves, const std::string& color) {
  std::vector<std::string> labels{color};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    labels.push_back(leaves[i]);
    edges.emplace_back(0, i + 1);
  }
  return make_tree(labels, edges);
}

// Map on single-letter taxa from value groups; each triple is written as a
// three-letter string such as "xyz".
inline TernaryMap map_from_groups(const std::vector<std::string>& taxa,
                                  const std::vector<std::pair<std::string, std::vector<std::string>>>& groups) {
  std::vector<Symbol> symbols;
  std::vector<TripleEntry> entries;
  for (const auto& [sym, triples] : groups) {
    symbols.push_back(sym);
    for (const auto& t : triples) {
      entries.push_back({{std::string(1, t[0]), std::string(1, t[1]), std::string(1, t[2])}, sym});
    }
  }
  return build_ternary(TaxonSet(taxa), SymbolAlphabet(symbols), entries);
}

inline const std::vector<std::string> kFive{"u", "w", "x", "y", "z"};

// Two triangles and a 4-cycle: three values.
inline TernaryMap type1() {
  return map_from_groups(kFive, {{"a", {"yzu", "xyz", "wyz"}},
                                 {"b", {"wxz", "wxu", "wxy"}},
                                 {"c", {"xzu", "wzu", "xyu", "wyu"}}});
}

// Two 5-cycles x-y-z-u-w-x (value a on complements of its edges) and
// x-z-w-y-u-x (value b).
inline TernaryMap type2() {
  return map_from_groups(kFive, {{"a", {"zuw", "xuw", "xyw", "xyz", "yzu"}},
                                 {"b", {"yuw", "yzw", "xzw", "xzu", "xyu"}}});
}

inline TernaryMap type3() {
  return map_from_groups(kFive, {{"a", {"yzu", "xzu", "wzu", "xyw", "yuw", "yzw"}},
                                 {"b", {"xyz", "wxz", "xyu", "wxu"}}});
}

inline TernaryMap type4() {
  return map_from_groups(kFive, {{"a", {"wxz", "wxu", "wxy"}},
                                 {"b", {"yzu", "xyz", "xzu", "wzu", "wyz", "xyu", "wyu"}}});
}

inline TernaryMap type5() { return constant_map(TaxonSet(kFive), "a"); }

// Uniformly random map over k symbols.
inline TernaryMap random_map(const TaxonSet& taxa, std::size_t k, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(k) - 1);
  std::vector<SymbolId> values(choose(taxa.size(), 3));
  for (auto& v : values) v = static_cast<SymbolId>(pick(rng));
  return TernaryMap(taxa, SymbolAlphabet(oracle::default_symbols(k)), std::move(values));
}

inline std::vector<std::string> names(const TernaryMap& map, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(map.taxa().name(i));
  return out;
}

inline std::vector<std::string> quartet_lines(const QuartetSystem& q) {
  std::vector<std::string> out;
  for (const auto& m : q.members()) out.push_back(q.format(m));
  return out;
}

}  // namespace fixtures
