#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace symtern;
using fixtures::caterpillar;

namespace {

// Vertices on the path between two leaves, by depth-first search over the
// raw adjacency lists.
std::set<Vertex> path_vertices(const Topology& t, Vertex from, Vertex to) {
  std::vector<Vertex> stack;
  std::function<bool(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    stack.push_back(v);
    if (v == to) return true;
    for (Vertex w : t.neighbors(v))
      if (w != parent && dfs(w, v)) return true;
    stack.pop_back();
    return false;
  };
  dfs(from, from);
  return {stack.begin(), stack.end()};
}

// Independent displayed-quartet oracle: all C(n,4)*3 candidates, literal
// path-disjointness.
std::vector<std::string> brute_force_displayed(const Topology& t) {
  std::vector<std::string> out;
  const auto& taxa = t.taxa();
  QuartetSystem q(taxa);
  for_each_subset(taxa.size(), 4, [&](std::span<const std::size_t> s) {
    const std::array<std::array<std::size_t, 4>, 3> pairings = {
        {{s[0], s[1], s[2], s[3]}, {s[0], s[2], s[1], s[3]}, {s[0], s[3], s[1], s[2]}}};
    for (const auto& [a, b, c, d] : pairings) {
      auto p1 = path_vertices(t, t.leaf(a), t.leaf(b));
      auto p2 = path_vertices(t, t.leaf(c), t.leaf(d));
      bool disjoint = std::none_of(p1.begin(), p1.end(), [&](Vertex v) { return p2.count(v); });
      if (disjoint) q.insert(Quartet(a, b, c, d));
    }
    return true;
  });
  return fixtures::quartet_lines(q);
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(make_tree({"a", "x", "y"}, {{0, 1}, {0, 2}}), ValidationError);  // 2 taxa
  CHECK_THROWS_AS(make_tree({"a", "b", "x", "y", "z"}, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}),
                  ValidationError);  // degree 2 at a: only edges to b and x
  CHECK_THROWS_AS(make_tree({"a", "x", "y", "z", "w"}, {{0, 1}, {0, 2}, {0, 3}}),
                  ValidationError);  // isolated vertex
  CHECK_THROWS_AS(make_tree({"a", "x", "x", "z"}, {{0, 1}, {0, 2}, {0, 3}}), ValidationError);
  CHECK_THROWS_AS(make_tree({"", "x", "y", "z"}, {{0, 1}, {0, 2}, {0, 3}}), ColorError);
  auto t = fixtures::star({"x", "y", "z"}, "a");
  CHECK(t.topology().is_binary());
  CHECK(t.taxa().size() == 3);
}

TEST_CASE("median") {
  SUBCASE("star on three taxa") {
    auto t = fixtures::star({"x", "y", "z"}, "a");
    CHECK(median(t, "x", "y", "z") == 0);
  }
  SUBCASE("caterpillar") {
    auto t = caterpillar("a", "b", "c");
    CHECK(median(t, "x1", "x2", "z1") == fixtures::kV1);
    CHECK(median(t, "x1", "y", "z1") == fixtures::kV2);
    CHECK(median(t, "z2", "y", "z1") == fixtures::kV3);
  }
  SUBCASE("repeated taxa are outside the domain") {
    auto t = caterpillar("a", "b", "c");
    CHECK_THROWS_AS(median(t, "x1", "x1", "y"), DomainError);
  }
  SUBCASE("permutation invariance over all 6-leaf topologies") {
    for (const auto& topo : oracle::enumerate_trees(6).topologies) {
      MedianOracle med(topo);
      for_each_subset(6, 3, [&](std::span<const std::size_t> s) {
        std::array<std::size_t, 3> p{s[0], s[1], s[2]};
        const Vertex m = med.median(p[0], p[1], p[2]);
        CHECK_FALSE(topo.is_leaf(m));
        while (std::next_permutation(p.begin(), p.end())) CHECK(med.median(p[0], p[1], p[2]) == m);
        // the median lies on all three pairwise paths
        for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
          CHECK(path_vertices(topo, topo.leaf(s[i]), topo.leaf(s[j])).count(m) == 1);
        }
        return true;
      });
    }
  }
}

TEST_CASE("encode") {
  SUBCASE("star gives a constant map") {
    auto map = encode(fixtures::star({"x", "y", "z", "u"}, "a"));
    CHECK(map == constant_map(TaxonSet({"x", "y", "z", "u"}), "a"));
  }
  SUBCASE("three-colored caterpillar") {
    auto map = encode(caterpillar("a", "b", "c"));
    CHECK(map.alphabet().symbols() == std::vector<std::string>{"a", "b", "c"});
    for (const char* z : {"y", "z1", "z2"}) CHECK(map.get("x1", "x2", z) == "a");
    for (const char* x : {"x1", "x2", "y"}) CHECK(map.get("z1", "z2", x) == "c");
    CHECK(map.get("x1", "y", "z1") == "b");
    CHECK(map.get("x1", "y", "z2") == "b");
    CHECK(map.get("x2", "y", "z1") == "b");
    CHECK(map.get("x2", "y", "z2") == "b");
    auto p = partition_profile(map, map.taxa().names());
    CHECK(p.distinct() == 3);
    CHECK_FALSE(p.is_partitioned(4, 6));
    CHECK_FALSE(p.is_partitioned(5, 5));
  }
  SUBCASE("outer vertices sharing a color give a 4-6 partition") {
    auto map = encode(caterpillar("a", "b", "a"));
    CHECK(partition_profile(map, map.taxa().names()).is_partitioned(4, 6));
  }
}

TEST_CASE("displayed_quartets") {
  SUBCASE("star displays nothing") {
    CHECK(displayed_quartets(fixtures::star({"a", "b", "c", "d", "e", "f"}, "m").topology())
              .empty());
  }
  SUBCASE("quartet tree") {
    auto t = make_tree({"m", "n", "x", "y", "z", "u"},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(fixtures::quartet_lines(displayed_quartets(t.topology())) ==
          std::vector<std::string>{"u z | x y"});
  }
  SUBCASE("caterpillar matches the path-disjointness oracle") {
    auto topo = caterpillar("a", "b", "c").topology();
    auto expected = brute_force_displayed(topo);
    // frozen from the oracle above
    CHECK(expected == std::vector<std::string>{"x1 x2 | y z1", "x1 x2 | y z2", "x1 x2 | z1 z2",
                                               "x1 y | z1 z2", "x2 y | z1 z2"});
    CHECK(fixtures::quartet_lines(displayed_quartets(topo)) == expected);
  }
  SUBCASE("agrees with the oracle on every 6-leaf topology; thin; binary ones complete") {
    for (const auto& topo : oracle::enumerate_trees(6).topologies) {
      auto q = displayed_quartets(topo);
      CHECK(fixtures::quartet_lines(q) == brute_force_displayed(topo));
      CHECK(is_thin(q));
      CHECK(is_complete(q) == topo.is_binary());
    }
  }
}

TEST_CASE("is_discriminating") {
  CHECK(is_discriminating(fixtures::star({"x", "y", "z", "u"}, "a")));
  CHECK_FALSE(is_discriminating(caterpillar("a", "a", "c")));
  CHECK(is_discriminating(caterpillar("a", "b", "a")));
}

TEST_CASE("pseudo_cherries") {
  CHECK(pseudo_cherries(caterpillar("a", "b", "c").topology()) ==
        std::vector<std::vector<std::string>>{{"x1", "x2"}, {"z1", "z2"}});
  CHECK(pseudo_cherries(fixtures::star({"x", "y", "z"}, "a").topology()) ==
        std::vector<std::vector<std::string>>{{"x", "y", "z"}});
}

TEST_CASE("trees_isomorphic") {
  auto t = caterpillar("a", "b", "c");
  CHECK(trees_isomorphic(t, t));
  CHECK_FALSE(trees_isomorphic(t, caterpillar("a", "b", "a")));
  // same tree, vertices numbered differently
  auto renumbered = make_tree({"z2", "z1", "c", "y", "b", "x2", "a", "x1"},
                              {{2, 0}, {2, 1}, {2, 4}, {4, 3}, {4, 6}, {6, 5}, {6, 7}});
  CHECK(trees_isomorphic(t, renumbered));
  // leaf labels matter
  auto swapped = make_tree({"a", "b", "c", "x1", "y", "x2", "z1", "z2"},
                           {{0, 3}, {0, 4}, {0, 1}, {1, 5}, {1, 2}, {2, 6}, {2, 7}});
  CHECK_FALSE(trees_isomorphic(t, swapped));
  CHECK_THROWS_AS(trees_isomorphic(t, fixtures::star({"x", "y", "z"}, "a")), DomainError);
}

TEST_CASE("isomorphism agrees with equal displayed quartets plus equal encodings") {
  for (std::size_t n = 4; n <= 6; ++n) {
    std::vector<ColoredTree> trees;
    for (const auto& topo : oracle::enumerate_trees(n).topologies) {
      for (auto& t : oracle::enumerate_colorings(topo, {"a", "b"})) trees.push_back(std::move(t));
    }
    std::vector<std::vector<std::string>> quartets;
    std::vector<TernaryMap> maps;
    for (const auto& t : trees) {
      quartets.push_back(fixtures::quartet_lines(displayed_quartets(t.topology())));
      maps.push_back(encode(t));
    }
    std::size_t agreements = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        const bool same = quartets[i] == quartets[j] && maps[i] == maps[j];
        CHECK(trees_isomorphic(trees[i], trees[j]) == same);
        agreements += same;
      }
    }
    CHECK(agreements == trees.size());  // only the diagonal
  }
}

TEST_CASE("newick") {
  SUBCASE("caterpillar") {
    auto t = parse_newick("((x1,x2)a,y,(z1,z2)c)b;");
    CHECK(trees_isomorphic(t, caterpillar("a", "b", "c")));
    CHECK(write_newick(t) == "(x1,x2,(y,(z1,z2)c)b)a;");  // rooted next to the first taxon
  }
  SUBCASE("minimal tree") {
    auto t = parse_newick("(x,y,z)a;");
    CHECK(trees_isomorphic(t, fixtures::star({"x", "y", "z"}, "a")));
  }
  SUBCASE("root of degree two is suppressed") {
    auto t = parse_newick("((x1,x2)a,(y,(z1,z2)c)b)r;");
    CHECK(trees_isomorphic(t, caterpillar("a", "b", "c")));
  }
  SUBCASE("whitespace and quoted labels") {
    auto t = parse_newick(" ( 'x 1' , y ,\n 'it''s' ) 'm:1' ; ");
    CHECK(t.taxa().names() == std::vector<std::string>{"it's", "x 1", "y"});
    CHECK(write_newick(t) == "('it''s','x 1',y)'m:1';");
    CHECK(trees_isomorphic(parse_newick(write_newick(t)), t));
  }
  SUBCASE("degree-2 vertex") {
    try {
      parse_newick("((x,y)a)b;");
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("degree-2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_newick("(((x,y)a)c,z,w)b;"), ValidationError);
  }
  SUBCASE("missing interior label") {
    CHECK_THROWS_AS(parse_newick("((x1,x2),y,z)b;"), ColorError);
    CHECK_THROWS_AS(parse_newick("(x,y,z);"), ColorError);
  }
  SUBCASE("syntax errors carry a position") {
    try {
      parse_newick("(x,y,z)a");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 8);
    }
    CHECK_THROWS_AS(parse_newick("(x,y,z"), ParseError);
    CHECK_THROWS_AS(parse_newick("(x,,z)a;"), ParseError);
    CHECK_THROWS_AS(parse_newick("(x:1,y,z)a;"), ParseError);
    CHECK_THROWS_AS(parse_newick("(x,y,z)a; junk"), ParseError);
    CHECK_THROWS_AS(parse_newick("(x,y,'z)a;"), ParseError);
  }
  SUBCASE("a single leaf is not a tree") { CHECK_THROWS_AS(parse_newick("x;"), ValidationError); }
  SUBCASE("write then parse is the identity up to isomorphism") {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const auto& topo : oracle::enumerate_trees(n).topologies) {
        for (const auto& t : oracle::enumerate_colorings(topo, {"a", "b", "c"})) {
          const auto text = write_newick(t);
          auto back = parse_newick(text);
          CHECK(trees_isomorphic(back, t));
          CHECK(write_newick(back) == text);
        }
      }
    }
  }
}

TEST_CASE("dot export lists every vertex and edge") {
  auto dot = write_dot(caterpillar("a", "b", "c"));
  CHECK(dot.find("graph tree {") == 0);
  CHECK(std::count(dot.begin(), dot.end(), ';') == 8 + 7);
}
