#include "symtern/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "symtern/checks.hpp"
#include "symtern/quartets.hpp"

namespace symtern::oracle {

TaxonSet default_taxa(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return TaxonSet(std::move(names));
}

std::vector<Symbol> default_symbols(std::size_t k) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  }
  return out;
}

std::size_t TreeEnumeration::binary_count() const {
  return static_cast<std::size_t>(std::count_if(topologies.begin(), topologies.end(),
                                                [](const Topology& t) { return t.is_binary(); }));
}

namespace {

struct Shape {
  std::vector<std::optional<std::string>> leaf_names;
  std::vector<Edge> edges;
};

Shape shape_of(const Topology& t) {
  Shape s;
  s.leaf_names.resize(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (t.is_leaf(v)) s.leaf_names[v] = t.taxa().name(t.taxon_of(v));
  s.edges = t.edges();
  return s;
}

}  // namespace

TreeEnumeration enumerate_trees(const TaxonSet& taxa) {
  const std::size_t n = taxa.size();
  if (n < 3 || n > 7) {
    throw SizeError("tree enumeration supports 3 to 7 taxa, got " + std::to_string(n));
  }
  const auto& names = taxa.names();
  std::vector<Topology> level;
  level.emplace_back(std::vector<std::optional<std::string>>{std::nullopt, names[0], names[1],
                                                             names[2]},
                     std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  for (std::size_t k = 3; k < n; ++k) {
    std::vector<Topology> next;
    std::unordered_set<std::string> seen;
    auto keep = [&](Shape s) {
      Topology t(std::move(s.leaf_names), s.edges);
      if (seen.insert(canonical_form(t)).second) next.push_back(std::move(t));
    };
    for (const auto& t : level) {
      const Shape base = shape_of(t);
      const Vertex fresh_leaf = base.leaf_names.size();
      // subdivide an edge and hang the new leaf from the new vertex
      for (std::size_t e = 0; e < base.edges.size(); ++e) {
        Shape s = base;
        const Vertex mid = fresh_leaf + 1;
        s.leaf_names.push_back(names[k]);
        s.leaf_names.push_back(std::nullopt);
        auto [u, v] = s.edges[e];
        s.edges[e] = {u, mid};
        s.edges.emplace_back(mid, v);
        s.edges.emplace_back(mid, fresh_leaf);
        keep(std::move(s));
      }
      // attach the new leaf to an interior vertex
      for (Vertex v : t.interior_vertices()) {
        Shape s = base;
        s.leaf_names.push_back(names[k]);
        s.edges.emplace_back(v, fresh_leaf);
        keep(std::move(s));
      }
    }
    level = std::move(next);
  }
  return {taxa, std::move(level)};
}

TreeEnumeration enumerate_trees(std::size_t n) {
  if (n < 3 || n > 7) {
    throw SizeError("tree enumeration supports 3 to 7 taxa, got " + std::to_string(n));
  }
  return enumerate_trees(default_taxa(n));
}

void for_each_coloring(const Topology& topology, const std::vector<Symbol>& symbols,
                       const std::function<bool(const ColoredTree&)>& fn) {
  if (symbols.empty()) throw SizeError("at least one symbol is needed");
  // interior vertices in BFS order so each one's interior parent comes first
  std::vector<Vertex> order;
  const auto interior = topology.interior_vertices();
  {
    std::vector<char> seen(topology.vertex_count(), 0);
    order.push_back(interior.front());
    seen[interior.front()] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex w : topology.neighbors(order[i]))
        if (!topology.is_leaf(w) && !seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<std::size_t> choice(topology.vertex_count(), symbols.size());
  std::vector<Symbol> colors(topology.vertex_count());
  bool stop = false;
  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      if (!fn(ColoredTree(topology, colors))) stop = true;
      return;
    }
    const Vertex v = order[pos];
    for (std::size_t c = 0; c < symbols.size() && !stop; ++c) {
      bool clash = false;
      for (Vertex w : topology.neighbors(v)) clash = clash || choice[w] == c;
      if (clash) continue;
      choice[v] = c;
      colors[v] = symbols[c];
      assign(pos + 1);
      choice[v] = symbols.size();
    }
  };
  assign(0);
}

std::vector<ColoredTree> enumerate_colorings(const Topology& topology,
                                             const std::vector<Symbol>& symbols) {
  std::vector<ColoredTree> out;
  for_each_coloring(topology, symbols, [&](const ColoredTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<ColoredTree> sample_colorings(const Topology& topology,
                                          const std::vector<Symbol>& symbols, std::size_t cap) {
  auto all = enumerate_colorings(topology, symbols);
  if (all.size() <= cap) return all;
  std::vector<ColoredTree> out;
  out.reserve(cap);
  for (std::size_t i = 0; i < cap; ++i) out.push_back(all[i * all.size() / cap]);
  return out;
}

std::optional<ColoredTree> brute_force_reconstruct(const TernaryMap& map) {
  const std::size_t n = map.size();
  if (n > 6) throw SizeError("brute-force reconstruction is limited to 6 taxa");
  std::vector<Symbol> used;
  for (SymbolId v : map.raw_values()) used.push_back(map.symbol(v));
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.size() > n - 2) return std::nullopt;  // more colors than interior vertices

  std::optional<ColoredTree> found;
  for (const auto& topo : enumerate_trees(map.taxa()).topologies) {
    for_each_coloring(topo, used, [&](const ColoredTree& t) {
      if (encode(t) == map) found = t;
      return !found;
    });
    if (found) break;
  }
  return found;
}

namespace {

bool two_quartets_on(const QuartetSystem& q, std::size_t a, std::size_t b, std::size_t c,
                     std::size_t d) {
  int count = q.contains(a, b, c, d) + q.contains(a, c, b, d) + q.contains(a, d, b, c);
  return count >= 2;
}

}  // namespace

std::optional<TernaryMap> find_fig6_like() {
  const TaxonSet taxa({"a1", "a2", "b1", "b2", "c1", "c2"});
  const SymbolAlphabet alphabet({"p", "q"});
  const std::size_t a1 = taxa.index("a1"), a2 = taxa.index("a2"), b1 = taxa.index("b1"),
                    b2 = taxa.index("b2"), c1 = taxa.index("c1"), c2 = taxa.index("c2");
  const std::array<std::size_t, 4> first{a1, a2, b1, b2};
  const std::array<std::size_t, 4> second{a1, a2, c1, c2};

  auto in_set = [](const std::array<std::size_t, 4>& s, std::size_t i, std::size_t j,
                   std::size_t k) {
    auto has = [&](std::size_t t) { return std::find(s.begin(), s.end(), t) != s.end(); };
    return has(i) && has(j) && has(k);
  };
  const std::size_t triples = choose(6, 3);
  std::vector<int> group(triples, -1);  // 0: first set, 1: second set, -1: free
  std::vector<std::size_t> free_slots;
  for (std::size_t k = 2; k < 6; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const std::size_t t = triple_index(i, j, k);
        if (in_set(first, i, j, k))
          group[t] = 0;
        else if (in_set(second, i, j, k))
          group[t] = 1;
        else
          free_slots.push_back(t);
      }

  auto accept = [&](std::vector<SymbolId> values) -> std::optional<TernaryMap> {
    TernaryMap map(taxa, alphabet, std::move(values));
    if (!check_condition3(map, true).empty()) return std::nullopt;
    if (!check_star(map, StarMode::Strict, true).empty()) return std::nullopt;
    const auto q = generate_quartets(map);
    if (!two_quartets_on(q, a1, a2, b1, b2) || !two_quartets_on(q, a1, a2, c1, c2))
      return std::nullopt;
    return map;
  };

  // Guided: constant on both named 4-sets. Symbol renaming lets the first be p.
  for (SymbolId second_value : {SymbolId{0}, SymbolId{1}}) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << free_slots.size()); ++bits) {
      std::vector<SymbolId> values(triples);
      for (std::size_t t = 0; t < triples; ++t) {
        if (group[t] == 0) values[t] = 0;
        if (group[t] == 1) values[t] = second_value;
      }
      for (std::size_t f = 0; f < free_slots.size(); ++f)
        values[free_slots[f]] = static_cast<SymbolId>((bits >> f) & 1);
      if (auto m = accept(std::move(values))) return m;
    }
  }
  // Unguided fallback over all two-symbol maps.
  for (std::size_t bits = 0; bits < (std::size_t{1} << triples); ++bits) {
    std::vector<SymbolId> values(triples);
    for (std::size_t t = 0; t < triples; ++t) values[t] = static_cast<SymbolId>((bits >> t) & 1);
    if (auto m = accept(std::move(values))) return m;
  }
  return std::nullopt;
}

}  // namespace symtern::oracle
