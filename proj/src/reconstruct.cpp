#include "symtern/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "symtern/checks.hpp"

namespace symtern {

std::optional<SymbolId> m_equivalent(const TernaryMap& map, std::size_t x, std::size_t y) {
  if (x == y) throw DomainError("m_equivalent needs two distinct taxa");
  const std::size_t n = map.size();
  std::vector<SymbolId> tried;
  for (std::size_t z = 0; z < n; ++z) {
    if (z == x || z == y) continue;
    const SymbolId m = map.at(x, y, z);
    if (std::find(tried.begin(), tried.end(), m) != tried.end()) continue;
    tried.push_back(m);
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if (u == x || u == y) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (v == x || v == y) continue;
        if ((map.at(x, u, v) == m) != (map.at(y, u, v) == m)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

std::optional<Symbol> m_equivalent(const TernaryMap& map, std::string_view x, std::string_view y) {
  auto m = m_equivalent(map, map.taxa().index(x), map.taxa().index(y));
  if (!m) return std::nullopt;
  return map.symbol(*m);
}

std::vector<const EquivalenceClass*> EquivalenceClasses::nontrivial() const {
  std::vector<const EquivalenceClass*> out;
  for (const auto& c : classes)
    if (c.members.size() >= 2) out.push_back(&c);
  return out;
}

EquivalenceClasses delta_equivalence_classes(const TernaryMap& map) {
  const std::size_t n = map.size();
  std::vector<std::vector<std::optional<SymbolId>>> rel(n, std::vector<std::optional<SymbolId>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) rel[x][y] = rel[y][x] = m_equivalent(map, x, y);

  auto witness = [&](std::size_t a, std::size_t b, std::size_t c) {
    return std::vector<std::string>{map.taxa().name(a), map.taxa().name(b), map.taxa().name(c)};
  };

  EquivalenceClasses out;
  std::vector<char> assigned(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    EquivalenceClass cls;
    cls.members.push_back(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!rel[x][y]) continue;
      if (assigned[y]) {
        throw NotAMetricError("delta-equivalence is not transitive",
                              {map.taxa().name(x), map.taxa().name(y)});
      }
      cls.members.push_back(y);
    }
    if (cls.members.size() >= 2) cls.symbol = rel[x][cls.members[1]];
    for (std::size_t y : cls.members) {
      assigned[y] = 1;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == y || z == x) continue;
        const bool inside = std::binary_search(cls.members.begin(), cls.members.end(), z);
        if (inside != rel[y][z].has_value() || (inside && rel[y][z] != cls.symbol)) {
          throw NotAMetricError("delta-equivalence is not transitive", witness(x, y, z));
        }
      }
      if (y != x && rel[x][y] != cls.symbol) {
        throw NotAMetricError("equivalent pairs disagree on their symbol",
                              witness(x, cls.members[1], y));
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

ContractionStep contract_class(const TernaryMap& map, std::span<const std::string> members,
                               const Symbol& symbol, const std::string& composite) {
  const auto& taxa = map.taxa();
  if (members.size() < 2) throw SizeError("only classes of two or more taxa are contracted");
  if (taxa.contains(composite)) throw DomainError("composite name '" + composite + "' is taken");
  if (!map.alphabet().contains(symbol)) throw AlphabetError("symbol '" + symbol + "' not in map");

  std::vector<std::size_t> inside;
  for (const auto& m : members) inside.push_back(taxa.index(m));
  std::sort(inside.begin(), inside.end());
  if (std::adjacent_find(inside.begin(), inside.end()) != inside.end()) {
    throw DomainError("class lists a taxon twice");
  }
  std::vector<std::size_t> outside;
  for (std::size_t t = 0; t < taxa.size(); ++t)
    if (!std::binary_search(inside.begin(), inside.end(), t)) outside.push_back(t);

  const std::size_t rep = inside.front();
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const SymbolId expected = map.at(rep, outside[i], outside[j]);
      for (std::size_t x : inside) {
        if (map.at(x, outside[i], outside[j]) != expected) {
          throw NotAMetricError("class is not contractible",
                                {taxa.name(rep), taxa.name(x), taxa.name(outside[i]),
                                 taxa.name(outside[j])});
        }
      }
    }
  }

  ContractionStep step;
  for (std::size_t x : inside) step.members.push_back(taxa.name(x));
  step.composite = composite;
  step.symbol = symbol;
  if (outside.size() + 1 >= 3) {
    std::vector<std::string> names{composite};
    for (std::size_t t : outside) names.push_back(taxa.name(t));
    TaxonSet reduced_taxa(names);
    // old index of each reduced taxon
    std::vector<std::size_t> origin(reduced_taxa.size());
    for (std::size_t r = 0; r < reduced_taxa.size(); ++r) {
      const auto& nm = reduced_taxa.name(r);
      origin[r] = nm == composite ? rep : taxa.index(nm);
    }
    const std::size_t k = reduced_taxa.size();
    std::vector<SymbolId> values(choose(k, 3));
    for (std::size_t c = 2; c < k; ++c)
      for (std::size_t b = 1; b < c; ++b)
        for (std::size_t a = 0; a < b; ++a)
          values[triple_index(a, b, c)] = map.at(origin[a], origin[b], origin[c]);
    step.reduced = TernaryMap(std::move(reduced_taxa), map.alphabet(), std::move(values));
  }
  return step;
}

namespace {

// Growing forest of reconstructed vertices. Each current taxon is a handle
// on one vertex: an original leaf or the vertex created when its class was
// contracted.
class Assembly {
 public:
  explicit Assembly(const TaxonSet& taxa) {
    for (const auto& name : taxa.names()) handle_[name] = add(name, true);
  }

  // New interior vertex colored `color` joined to the handles of `members`.
  // A member whose vertex already carries `color` is the same tree vertex
  // (adjacent vertices differ in a discriminating tree), so it is merged.
  std::size_t join(const std::vector<std::string>& members, const Symbol& color) {
    const std::size_t v = add(color, false);
    for (const auto& m : members) {
      const std::size_t w = handle_.at(m);
      edges_.push_back({v, w, !leaf_[w] && label_[w] == color});
    }
    return v;
  }

  void name(const std::string& composite, std::size_t v) { handle_[composite] = v; }

  ColoredTree build() const {
    const std::size_t n = label_.size();
    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const auto& e : edges_)
      if (e.merge) root[find(e.a)] = find(e.b);
    std::vector<std::size_t> id(n, n);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (find(v) == v) id[v] = next++;
    std::vector<std::optional<std::string>> leaf_names(next);
    std::vector<Symbol> colors(next);
    for (std::size_t v = 0; v < n; ++v) {
      if (find(v) != v) continue;
      if (leaf_[v])
        leaf_names[id[v]] = label_[v];
      else
        colors[id[v]] = label_[v];
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_)
      if (!e.merge) edges.emplace_back(id[find(e.a)], id[find(e.b)]);
    return ColoredTree(Topology(std::move(leaf_names), edges), std::move(colors));
  }

 private:
  struct Link {
    std::size_t a, b;
    bool merge;
  };

  std::size_t add(const std::string& label, bool leaf) {
    label_.push_back(label);
    leaf_.push_back(leaf);
    return label_.size() - 1;
  }

  std::vector<std::string> label_;
  std::vector<bool> leaf_;
  std::vector<Link> edges_;
  std::unordered_map<std::string, std::size_t> handle_;
};

std::string braces(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

}  // namespace

Reconstruction reconstruct(const TernaryMap& map) {
  for (const auto& name : map.taxa().names()) {
    if (name.front() == '@') {
      throw DomainError("taxon '" + name + "' uses the reserved '@' prefix");
    }
  }
  Assembly assembly(map.taxa());
  std::vector<std::string> trace;
  TernaryMap current = map;
  std::size_t step = 0;

  while (true) {
    const std::size_t n = current.size();
    const auto& names = current.taxa().names();
    if (n == 3) {
      const Symbol& color = current.symbol(current.at(0, 1, 2));
      assembly.join(names, color);
      trace.push_back("FINAL " + braces(names) + " COLOR " + color);
      break;
    }
    const auto classes = delta_equivalence_classes(current);
    const auto nontrivial = classes.nontrivial();
    if (nontrivial.empty()) throw NotAMetricError("no pseudo-cherry found", names);

    const EquivalenceClass& cls = *nontrivial.front();
    const Symbol& color = current.symbol(*cls.symbol);
    std::vector<std::string> members;
    for (std::size_t i : cls.members) members.push_back(names[i]);

    if (members.size() + 1 >= n) {
      // Star, or one class plus a single remaining taxon: one last vertex.
      std::vector<std::string> all = members;
      for (const auto& nm : names)
        if (!std::binary_search(members.begin(), members.end(), nm)) all.push_back(nm);
      assembly.join(all, color);
      trace.push_back("FINAL " + braces(all) + " COLOR " + color);
      break;
    }

    const std::string composite = "@" + std::to_string(step++);
    ContractionStep contraction = contract_class(current, members, color, composite);
    assembly.name(composite, assembly.join(members, color));
    trace.push_back("CONTRACT " + braces(members) + " -> " + composite + " COLOR " + color);
    current = std::move(*contraction.reduced);
  }

  ColoredTree tree = [&] {
    try {
      return assembly.build();
    } catch (const ValidationError& e) {
      throw NotAMetricError(std::string("reconstructed graph is not a phylogenetic tree: ") +
                                e.what(),
                            {});
    }
  }();
  const TernaryMap again = encode(tree);
  const std::size_t n = map.size();
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (map.symbol(map.at(i, j, k)) != again.symbol(again.at(i, j, k))) {
          throw NotAMetricError("re-encoding the reconstructed tree disagrees",
                                {map.taxa().name(i), map.taxa().name(j), map.taxa().name(k)});
        }
  return {std::move(tree), std::move(trace)};
}

bool check_binary(const TernaryMap& map) { return check_star(map).empty(); }

}  // namespace symtern
