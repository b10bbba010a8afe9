#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace symtern;
using namespace fixtures;

namespace {

// The definition taken literally: every m for which some z has
// δ(x,y,z) = m and, for all distinct u,v outside {x,y},
// δ(x,u,v) = m exactly when δ(y,u,v) = m.
std::set<Symbol> literal_m_equivalent(const TernaryMap& map, std::size_t x, std::size_t y) {
  std::set<Symbol> out;
  const std::size_t n = map.size();
  for (SymbolId m = 0; m < map.alphabet().size(); ++m) {
    bool witness = false;
    for (std::size_t z = 0; z < n; ++z)
      if (z != x && z != y && map.at(x, y, z) == m) witness = true;
    if (!witness) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v || u == x || u == y || v == x || v == y) continue;
        if ((map.at(x, u, v) == m) != (map.at(y, u, v) == m)) ok = false;
      }
    if (ok) out.insert(map.symbol(m));
  }
  return out;
}

std::vector<std::vector<std::string>> class_names(const TernaryMap& map) {
  std::vector<std::vector<std::string>> out;
  const auto classes = delta_equivalence_classes(map);
  for (const auto* c : classes.nontrivial()) out.push_back(names(map, c->members));
  return out;
}

// v(m) carries leaves a,b and two interior neighbours colored p and q, each
// with a cherry: contraction meets the vertex v twice.
ColoredTree double_visit_tree() {
  return make_tree({"m", "p", "q", "a", "b", "c", "d", "e", "f"},
                   {{0, 3}, {0, 4}, {0, 1}, {0, 2}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
}

template <class Fn>
void for_each_map(std::size_t n, std::size_t k, Fn&& fn) {
  const auto taxa = oracle::default_taxa(n);
  const SymbolAlphabet alphabet(oracle::default_symbols(k));
  std::vector<SymbolId> values(choose(n, 3), 0);
  while (true) {
    fn(TernaryMap(taxa, alphabet, values));
    std::size_t i = 0;
    while (i < values.size() && ++values[i] == k) values[i++] = 0;
    if (i == values.size()) break;
  }
}

// Consistency of one map: metric exactly when reconstruction
// succeeds, and then re-encoding gives the map back.
void check_inverse(const TernaryMap& map) {
  const bool metric = verify_metric(map).verdict;
  bool rebuilt = false;
  try {
    auto tree = reconstruct_tree(map);
    rebuilt = true;
    CHECK(encode(tree) == map);
    CHECK(is_discriminating(tree));
  } catch (const NotAMetricError&) {
  }
  if (metric != rebuilt) FAIL_CHECK("metric/reconstruct mismatch:\n" << write_triple_table(map));
}

}  // namespace

TEST_CASE("m_equivalent") {
  auto map = encode(caterpillar("a", "b", "c"));
  CHECK(m_equivalent(map, "x1", "x2") == "a");
  CHECK(m_equivalent(map, "z1", "z2") == "c");
  CHECK(m_equivalent(map, "x1", "y") == std::nullopt);
  CHECK(literal_m_equivalent(map, map.taxa().index("x1"), map.taxa().index("y")).empty());
  CHECK(m_equivalent(encode(star({"x", "y", "z", "u"}, "m")), "x", "u") == "m");
  CHECK_THROWS_AS(m_equivalent(map, "x1", "x1"), DomainError);

  SUBCASE("agrees with the literal definition on every pair of corpus encodings") {
    for (std::size_t n = 4; n <= 6; ++n) {
      for (const auto& topo : oracle::enumerate_trees(n).topologies) {
        for (const auto& t : oracle::sample_colorings(topo, {"a", "b", "c"}, 10)) {
          auto m = encode(t);
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) {
              auto lit = literal_m_equivalent(m, x, y);
              REQUIRE(lit.size() <= 1);
              auto got = m_equivalent(m, x, y);
              CHECK(got.has_value() == !lit.empty());
              if (got) CHECK(m.symbol(*got) == *lit.begin());
            }
        }
      }
    }
  }
}

TEST_CASE("m-equivalence is transitive with one symbol on every 5-taxon map satisfying Condition (3)") {
  std::size_t checked = 0;
  for_each_map(5, 3, [&](const TernaryMap& map) {
    if (!check_condition3(map).empty()) return;
    ++checked;
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = 0; y < 5; ++y)
        for (std::size_t z = 0; z < 5; ++z) {
          if (x == y || y == z || x == z) continue;
          auto m = m_equivalent(map, x, y);
          auto m2 = m_equivalent(map, y, z);
          if (m && m2) {
            CHECK(*m == *m2);
            CHECK(m_equivalent(map, x, z) == m);
          }
        }
  });
  CHECK(checked > 0);
}

TEST_CASE("delta-equivalence classes") {
  SUBCASE("caterpillar") {
    auto map = encode(caterpillar("a", "b", "c"));
    auto classes = delta_equivalence_classes(map);
    CHECK(classes.classes.size() == 3);
    auto nt = classes.nontrivial();
    REQUIRE(nt.size() == 2);
    CHECK(names(map, nt[0]->members) == std::vector<std::string>{"x1", "x2"});
    CHECK(map.symbol(*nt[0]->symbol) == "a");
    CHECK(names(map, nt[1]->members) == std::vector<std::string>{"z1", "z2"});
    CHECK(map.symbol(*nt[1]->symbol) == "c");
  }
  SUBCASE("star") {
    auto map = encode(star({"x", "y", "z", "u", "w"}, "m"));
    CHECK(class_names(map) == std::vector<std::vector<std::string>>{{"u", "w", "x", "y", "z"}});
  }
  SUBCASE("nontrivial classes are exactly the pseudo-cherries on all trees up to 6 leaves") {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const auto& topo : oracle::enumerate_trees(n).topologies) {
        const auto cherries = pseudo_cherries(topo);
        REQUIRE_FALSE(cherries.empty());
        for (const auto& t : oracle::sample_colorings(topo, {"a", "b", "c"}, 20)) {
          CHECK(class_names(encode(t)) == cherries);
        }
      }
    }
  }
}

TEST_CASE("contract_class") {
  auto tree = caterpillar("a", "b", "c");
  auto map = encode(tree);
  std::vector<std::string> cls{"x1", "x2"};
  auto step = contract_class(map, cls, "a", "@0");
  CHECK(step.members == cls);
  REQUIRE(step.reduced.has_value());
  const auto& r = *step.reduced;
  CHECK(r.taxa().names() == std::vector<std::string>{"@0", "y", "z1", "z2"});
  // expected values read off the medians of the original tree
  auto color = [&](const char* x, const char* y, const char* z) {
    return tree.color(median(tree, x, y, z));
  };
  CHECK(r.get("@0", "y", "z1") == color("x1", "y", "z1"));
  CHECK(r.get("@0", "y", "z1") == "b");
  CHECK(r.get("@0", "z1", "z2") == color("x1", "z1", "z2"));
  CHECK(r.get("@0", "z1", "z2") == "c");
  CHECK(r.get("y", "z1", "z2") == "c");

  SUBCASE("members disagreeing on an outside pair") {
    auto entries = map.entries();
    for (auto& e : entries)
      if (e.taxa == std::array<std::string, 3>{"x2", "z1", "z2"}) e.symbol = "b";
    auto broken = build_ternary(map.taxa(), map.alphabet(), entries);
    CHECK_THROWS_AS(contract_class(broken, cls, "a", "@0"), NotAMetricError);
  }
  SUBCASE("down to fewer than three taxa") {
    auto s = encode(star({"x", "y", "z"}, "a"));
    std::vector<std::string> two{"x", "y"};
    CHECK_FALSE(contract_class(s, two, "a", "@0").reduced.has_value());
  }
  SUBCASE("bad arguments") {
    std::vector<std::string> one{"x1"};
    CHECK_THROWS_AS(contract_class(map, one, "a", "@0"), SizeError);
    CHECK_THROWS_AS(contract_class(map, cls, "a", "y"), DomainError);
    CHECK_THROWS_AS(contract_class(map, cls, "q", "@0"), AlphabetError);
  }
}

TEST_CASE("reconstruct") {
  SUBCASE("caterpillar with trace") {
    auto tree = caterpillar("a", "b", "c");
    auto r = reconstruct(encode(tree));
    CHECK(trees_isomorphic(r.tree, tree));
    CHECK(r.trace == std::vector<std::string>{"CONTRACT {x1,x2} -> @0 COLOR a",
                                              "CONTRACT {@0,y} -> @1 COLOR b",
                                              "FINAL {@1,z1,z2} COLOR c"});
  }
  SUBCASE("constant map gives a star") {
    auto taxa = TaxonSet({"a", "b", "c", "d", "e"});
    auto t = reconstruct_tree(constant_map(taxa, "m"));
    CHECK(trees_isomorphic(t, star(taxa.names(), "m")));
  }
  SUBCASE("a vertex met twice during contraction") {
    auto tree = double_visit_tree();
    CHECK(trees_isomorphic(reconstruct_tree(encode(tree)), tree));
  }
  SUBCASE("K5 types") {
    for (const auto& map : {type1(), type3(), type4(), type5()}) {
      CHECK(encode(reconstruct_tree(map)) == map);
    }
    CHECK_THROWS_AS(reconstruct_tree(type2()), NotAMetricError);
  }
  SUBCASE("reserved composite prefix") {
    CHECK_THROWS_AS(reconstruct_tree(constant_map(TaxonSet({"@a", "b", "c"}), "m")),
                    DomainError);
  }
  SUBCASE("roundtrip on every coloring of every tree up to 6 leaves") {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const auto& topo : oracle::enumerate_trees(n).topologies) {
        oracle::for_each_coloring(topo, {"a", "b", "c"}, [&](const ColoredTree& t) {
          CHECK(trees_isomorphic(reconstruct_tree(encode(t)), t));
          return true;
        });
      }
    }
  }
}

TEST_CASE("inverse roundtrip") {
  SUBCASE("all maps on 4 taxa over 3 symbols") { for_each_map(4, 3, check_inverse); }
  SUBCASE("all maps on 5 taxa over 2 symbols") { for_each_map(5, 2, check_inverse); }
  SUBCASE("sampled maps on 6 taxa: encodings and single-triple perturbations") {
    std::mt19937 rng(31);
    for (const auto& topo : oracle::enumerate_trees(6).topologies) {
      for (const auto& t : oracle::sample_colorings(topo, {"a", "b", "c"}, 3)) {
        auto map = encode(t);
        check_inverse(map);
        auto values = map.raw_values();
        std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
        values[pick(rng)] = static_cast<SymbolId>((values[0] + 1) % map.alphabet().size());
        check_inverse(TernaryMap(map.taxa(), map.alphabet(), values));
      }
    }
  }
}

TEST_CASE("check_binary") {
  CHECK(check_binary(encode(caterpillar("a", "b", "c"))));
  CHECK_FALSE(check_binary(encode(star({"x", "y", "z", "u", "w"}, "a"))));
  auto quartet_tree = make_tree({"a", "b", "x", "y", "z", "u"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  CHECK(check_binary(encode(quartet_tree)));
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const auto& topo : oracle::enumerate_trees(n).topologies) {
      for (const auto& t : oracle::sample_colorings(topo, {"a", "b", "c"}, 20)) {
        CHECK(check_binary(encode(t)) == topo.is_binary());
      }
    }
  }
}
