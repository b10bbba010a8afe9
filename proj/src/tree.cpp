#include "symtern/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace symtern {

namespace {

TaxonSet collect_taxa(const std::vector<std::optional<std::string>>& leaf_names) {
  std::vector<std::string> names;
  for (const auto& n : leaf_names)
    if (n) names.push_back(*n);
  try {
    return TaxonSet(std::move(names));
  } catch (const Error& e) {
    throw ValidationError(std::string("invalid leaf set: ") + e.what());
  }
}

}  // namespace

Topology::Topology(std::vector<std::optional<std::string>> leaf_names,
                   const std::vector<Edge>& edges)
    : adjacency_(leaf_names.size()), taxa_(collect_taxa(leaf_names)) {
  const std::size_t n = leaf_names.size();
  if (edges.size() + 1 != n) {
    throw ValidationError("a tree on " + std::to_string(n) + " vertices needs " +
                          std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  }
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ValidationError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  // n-1 distinct edges plus connectivity makes it a tree
  std::vector<char> reached(n, 0);
  std::deque<Vertex> queue{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  if (count != n) throw ValidationError("graph is not connected");

  leaf_of_taxon_.assign(taxa_.size(), 0);
  taxon_of_vertex_.assign(n, taxa_.size());
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = adjacency_[v].size();
    if (d == 2) throw ValidationError("vertex " + std::to_string(v) + " has degree 2");
    if (d == 1 && !leaf_names[v]) {
      throw ValidationError("leaf vertex " + std::to_string(v) + " has no taxon");
    }
    if (d != 1 && leaf_names[v]) {
      throw ValidationError("taxon '" + *leaf_names[v] + "' is not on a leaf");
    }
    if (d == 1) {
      std::size_t t = taxa_.index(*leaf_names[v]);
      leaf_of_taxon_[t] = v;
      taxon_of_vertex_[v] = t;
    }
  }
}

bool Topology::is_binary() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& adj) { return adj.size() == 1 || adj.size() == 3; });
}

std::size_t Topology::taxon_of(Vertex v) const {
  if (!is_leaf(v)) throw DomainError("vertex " + std::to_string(v) + " is not a leaf");
  return taxon_of_vertex_[v];
}

std::vector<Vertex> Topology::interior_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (!is_leaf(v)) out.push_back(v);
  return out;
}

std::vector<Edge> Topology::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : adjacency_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::vector<Vertex> Topology::parents_from(Vertex root) const {
  std::vector<Vertex> parent(vertex_count(), vertex_count());
  parent[root] = root;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[v]) {
      if (parent[w] == vertex_count()) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

ColoredTree::ColoredTree(Topology topology, std::vector<Symbol> colors)
    : topology_(std::move(topology)), colors_(std::move(colors)) {
  if (colors_.size() != topology_.vertex_count()) {
    throw ValidationError("expected one color slot per vertex");
  }
  for (Vertex v = 0; v < colors_.size(); ++v) {
    if (topology_.is_leaf(v)) {
      colors_[v].clear();
    } else if (colors_[v].empty() || colors_[v] == kEmptySymbolText) {
      throw ColorError("interior vertex " + std::to_string(v) + " has no color");
    }
  }
}

ColoredTree make_tree(const std::vector<std::string>& labels, const std::vector<Edge>& edges) {
  std::vector<std::size_t> degree(labels.size(), 0);
  for (auto [u, v] : edges) {
    if (u < degree.size()) ++degree[u];
    if (v < degree.size()) ++degree[v];
  }
  std::vector<std::optional<std::string>> leaf_names(labels.size());
  std::vector<Symbol> colors(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (degree[v] == 1)
      leaf_names[v] = labels[v];
    else
      colors[v] = labels[v];
  }
  return ColoredTree(Topology(std::move(leaf_names), edges), std::move(colors));
}

MedianOracle::MedianOracle(const Topology& topology) : topology_(&topology) {
  const std::size_t n = topology.taxa().size();
  parent_.reserve(n);
  depth_.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    Vertex root = topology.leaf(t);
    auto parent = topology.parents_from(root);
    // depth of each vertex below the root leaf
    std::vector<std::size_t> depth(parent.size(), 0);
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : topology.neighbors(v)) {
        if (w != parent[v]) {
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        }
      }
    }
    parent_.push_back(std::move(parent));
    depth_.push_back(std::move(depth));
  }
}

Vertex MedianOracle::median(std::size_t x, std::size_t y, std::size_t z) const {
  if (x == y || y == z || x == z) throw DomainError("median needs three distinct taxa");
  const auto& parent = parent_.at(x);
  const auto& depth = depth_.at(x);
  Vertex a = topology_->leaf(y);
  Vertex b = topology_->leaf(z);
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

Vertex median(const Topology& tree, std::string_view x, std::string_view y, std::string_view z) {
  const auto& taxa = tree.taxa();
  return MedianOracle(tree).median(taxa.index(x), taxa.index(y), taxa.index(z));
}

TernaryMap encode(const ColoredTree& tree) {
  const auto& topo = tree.topology();
  std::vector<Symbol> used;
  for (Vertex v : topo.interior_vertices()) used.push_back(tree.color(v));
  SymbolAlphabet alphabet(std::move(used));

  std::vector<SymbolId> color_id(topo.vertex_count(), kEmptySymbol);
  for (Vertex v : topo.interior_vertices()) color_id[v] = *alphabet.find(tree.color(v));

  MedianOracle oracle(topo);
  const std::size_t n = topo.taxa().size();
  std::vector<SymbolId> values(choose(n, 3));
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        values[triple_index(i, j, k)] = color_id[oracle.median(i, j, k)];
  return TernaryMap(topo.taxa(), std::move(alphabet), std::move(values));
}

QuartetSystem displayed_quartets(const Topology& tree) {
  const std::size_t n = tree.taxa().size();
  std::vector<std::vector<Vertex>> parents;
  parents.reserve(n);
  for (std::size_t t = 0; t < n; ++t) parents.push_back(tree.parents_from(tree.leaf(t)));

  QuartetSystem out(tree.taxa());
  std::vector<char> on_path(tree.vertex_count(), 0);
  auto disjoint = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const auto& pa = parents[a];
    std::vector<Vertex> marked;
    for (Vertex v = tree.leaf(b);; v = pa[v]) {
      on_path[v] = 1;
      marked.push_back(v);
      if (v == pa[v]) break;
    }
    bool ok = true;
    const auto& pc = parents[c];
    for (Vertex v = tree.leaf(d);; v = pc[v]) {
      if (on_path[v]) {
        ok = false;
        break;
      }
      if (v == pc[v]) break;
    }
    for (Vertex v : marked) on_path[v] = 0;
    return ok;
  };
  for_each_subset(n, 4, [&](std::span<const std::size_t> s) {
    const std::size_t w = s[0], x = s[1], y = s[2], z = s[3];
    if (disjoint(w, x, y, z)) out.insert(Quartet(w, x, y, z));
    if (disjoint(w, y, x, z)) out.insert(Quartet(w, y, x, z));
    if (disjoint(w, z, x, y)) out.insert(Quartet(w, z, x, y));
    return true;
  });
  return out;
}

bool is_discriminating(const ColoredTree& tree) {
  const auto& topo = tree.topology();
  for (auto [u, v] : topo.edges()) {
    if (!topo.is_leaf(u) && !topo.is_leaf(v) && tree.color(u) == tree.color(v)) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> pseudo_cherries(const Topology& tree) {
  std::vector<std::vector<std::string>> out;
  for (Vertex v : tree.interior_vertices()) {
    std::vector<std::string> leaves;
    for (Vertex w : tree.neighbors(v))
      if (tree.is_leaf(w)) leaves.push_back(tree.taxa().name(tree.taxon_of(w)));
    if (leaves.size() >= 2) {
      std::sort(leaves.begin(), leaves.end());
      out.push_back(std::move(leaves));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string length_prefixed(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

std::string canonical_subtree(const Topology& topo, const std::vector<Symbol>* colors, Vertex v,
                              Vertex parent) {
  if (topo.is_leaf(v) && v != parent) {
    return "L" + length_prefixed(topo.taxa().name(topo.taxon_of(v)));
  }
  std::vector<std::string> parts;
  for (Vertex w : topo.neighbors(v))
    if (w != parent) parts.push_back(canonical_subtree(topo, colors, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p + ",";
  s += ")";
  if (colors) s += "C" + length_prefixed((*colors)[v]);
  return s;
}

std::string canonical_impl(const Topology& topo, const std::vector<Symbol>* colors) {
  // root at the leaf of the smallest taxon; its single neighbor starts the walk
  Vertex root = topo.leaf(std::size_t{0});
  Vertex first = topo.neighbors(root).front();
  return "L" + length_prefixed(topo.taxa().name(0)) + "-" +
         canonical_subtree(topo, colors, first, root);
}

}  // namespace

std::string canonical_form(const Topology& tree) { return canonical_impl(tree, nullptr); }

std::string canonical_form(const ColoredTree& tree) {
  return canonical_impl(tree.topology(), &tree.colors());
}

bool trees_isomorphic(const ColoredTree& a, const ColoredTree& b) {
  if (!(a.taxa() == b.taxa())) throw DomainError("trees are on different taxa sets");
  return canonical_form(a) == canonical_form(b);
}

bool topologies_isomorphic(const Topology& a, const Topology& b) {
  if (!(a.taxa() == b.taxa())) throw DomainError("trees are on different taxa sets");
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Newick

namespace {

constexpr std::string_view kSpecial = "()[]':;,";

bool needs_quotes(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return kSpecial.find(c) != std::string_view::npos || std::isspace(static_cast<unsigned char>(c));
  });
}

std::string quote(const std::string& s) {
  if (!needs_quotes(s)) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  struct Node {
    std::string label;
    bool group = false;
    std::size_t label_pos = 0;
    std::vector<std::size_t> children;
  };

  std::vector<Node> parse() {
    skip_ws();
    parse_node();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ';') fail("expected ';'");
    ++pos_;
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after ';'");
    return std::move(nodes_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t parse_node() {
    std::size_t id = nodes_.size();
    nodes_.emplace_back();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      nodes_[id].group = true;
      ++pos_;
      while (true) {
        std::size_t child = parse_node();
        nodes_[id].children.push_back(child);
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail(std::string("unexpected '") + text_[pos_] + "'");
      }
    }
    skip_ws();
    nodes_[id].label_pos = pos_;
    nodes_[id].label = parse_label();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ':') fail("branch lengths are not supported");
    if (pos_ < text_.size() && text_[pos_] == '[') fail("comments are not supported");
    if (!nodes_[id].group && nodes_[id].label.empty()) fail("missing leaf name");
    return id;
  }

  std::string parse_label() {
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted label");
        char c = text_[pos_++];
        if (c == '\'') {
          if (pos_ < text_.size() && text_[pos_] == '\'') {
            out += '\'';
            ++pos_;
            continue;
          }
          break;
        }
        out += c;
      }
      if (out.empty()) fail("empty quoted label");
      return out;
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (kSpecial.find(c) != std::string_view::npos || std::isspace(static_cast<unsigned char>(c)))
        break;
      out += c;
      ++pos_;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace

ColoredTree parse_newick(std::string_view text) {
  auto nodes = NewickParser(text).parse();
  const auto& root = nodes[0];
  if (!root.group) throw ValidationError("a tree needs at least 3 taxa");

  std::vector<Edge> edges;
  for (std::size_t v = 1; v < nodes.size(); ++v)
    for (std::size_t c : nodes[v].children) edges.emplace_back(v, c);

  // Node 0 is the root; it is kept only with three or more children.
  std::size_t first = 1;
  if (root.children.size() >= 3) {
    first = 0;
    for (std::size_t c : root.children) edges.emplace_back(0, c);
  } else if (root.children.size() == 2) {
    edges.emplace_back(root.children[0], root.children[1]);
  }

  for (std::size_t v = first; v < nodes.size(); ++v) {
    if (nodes[v].group && nodes[v].label.empty()) {
      throw ColorError("interior vertex at position " + std::to_string(nodes[v].label_pos) +
                       " has no color label");
    }
  }
  std::vector<std::size_t> degree(nodes.size(), 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  for (std::size_t v = first; v < nodes.size(); ++v) {
    if (nodes[v].group && degree[v] < 3) {
      throw ValidationError("interior vertex '" + nodes[v].label + "' has degree " +
                            std::to_string(degree[v]) +
                            (degree[v] == 2 ? " (degree-2 vertex)" : ""));
    }
  }

  std::vector<std::optional<std::string>> leaf_names(nodes.size() - first);
  std::vector<Symbol> colors(nodes.size() - first);
  for (std::size_t v = first; v < nodes.size(); ++v) {
    if (nodes[v].group)
      colors[v - first] = nodes[v].label;
    else
      leaf_names[v - first] = nodes[v].label;
  }
  for (auto& [u, v] : edges) {
    u -= first;
    v -= first;
  }
  return ColoredTree(Topology(std::move(leaf_names), edges), std::move(colors));
}

namespace {

// Smallest taxon index below v (away from parent), for ordering siblings.
std::size_t min_taxon(const Topology& topo, Vertex v, Vertex parent,
                      std::vector<std::size_t>& memo) {
  if (topo.is_leaf(v)) return memo[v] = topo.taxon_of(v);
  std::size_t best = topo.taxa().size();
  for (Vertex w : topo.neighbors(v))
    if (w != parent) best = std::min(best, min_taxon(topo, w, v, memo));
  return memo[v] = best;
}

std::string newick_subtree(const ColoredTree& tree, Vertex v, Vertex parent,
                           const std::vector<std::size_t>& memo) {
  const auto& topo = tree.topology();
  if (topo.is_leaf(v)) return quote(topo.taxa().name(topo.taxon_of(v)));
  std::vector<Vertex> children;
  for (Vertex w : topo.neighbors(v))
    if (w != parent) children.push_back(w);
  std::sort(children.begin(), children.end(),
            [&](Vertex a, Vertex b) { return memo[a] < memo[b]; });
  std::string s = "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ",";
    s += newick_subtree(tree, children[i], v, memo);
  }
  return s + ")" + quote(tree.color(v));
}

}  // namespace

std::string write_newick(const ColoredTree& tree) {
  const auto& topo = tree.topology();
  Vertex root = topo.neighbors(topo.leaf(std::size_t{0})).front();
  std::vector<std::size_t> memo(topo.vertex_count(), 0);
  min_taxon(topo, root, root, memo);
  return newick_subtree(tree, root, root, memo) + ";";
}

std::string write_dot(const ColoredTree& tree) {
  const auto& topo = tree.topology();
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string s = "graph tree {\n";
  for (Vertex v = 0; v < topo.vertex_count(); ++v) {
    s += "  v" + std::to_string(v) + " [label=\"";
    if (topo.is_leaf(v))
      s += escape(topo.taxa().name(topo.taxon_of(v))) + "\", shape=plaintext];\n";
    else
      s += escape(tree.color(v)) + "\", shape=circle];\n";
  }
  for (auto [u, v] : topo.edges()) {
    s += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  }
  return s + "}\n";
}

}  // namespace symtern
