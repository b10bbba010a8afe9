#include "symtern/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "symtern/checks.hpp"
#include "symtern/oracle.hpp"
#include "symtern/quartets.hpp"
#include "symtern/reconstruct.hpp"
#include "symtern/tree.hpp"

namespace symtern {

namespace {

constexpr std::size_t kColoringCap = 500;

struct CorpusTree {
  ColoredTree tree;
  TernaryMap map;
};

// n = 4, 5: every discriminating coloring over {a,b,c}; n = 6: at most
// kColoringCap colorings per topology.
std::vector<CorpusTree> build_corpus() {
  std::vector<CorpusTree> corpus;
  const std::vector<Symbol> symbols{"a", "b", "c"};
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const auto& topo : oracle::enumerate_trees(n).topologies) {
      auto colorings = n < 6 ? oracle::enumerate_colorings(topo, symbols)
                             : oracle::sample_colorings(topo, symbols, kColoringCap);
      for (auto& t : colorings) {
        TernaryMap map = encode(t);
        corpus.push_back({std::move(t), std::move(map)});
      }
    }
  }
  return corpus;
}

std::vector<std::vector<std::string>> class_names(const TernaryMap& map) {
  std::vector<std::vector<std::string>> out;
  const auto classes = delta_equivalence_classes(map);
  for (const auto* c : classes.nontrivial()) {
    std::vector<std::string> names;
    for (std::size_t i : c->members) names.push_back(map.taxa().name(i));
    out.push_back(std::move(names));
  }
  return out;
}

// Per-triple symbol strings; equal keys mean equal maps on the same taxa.
std::vector<std::string> map_key(const TernaryMap& map) {
  std::vector<std::string> key;
  for (SymbolId v : map.raw_values()) key.push_back(map.symbol(v));
  return key;
}

TernaryMap type2_fixture() {
  TaxonSet taxa({"u", "w", "x", "y", "z"});
  std::vector<TripleEntry> entries;
  auto add = [&](const char* t, const char* s) {
    entries.push_back({{std::string(1, t[0]), std::string(1, t[1]), std::string(1, t[2])}, s});
  };
  for (const char* t : {"zuw", "xuw", "xyw", "xyz", "yzu"}) add(t, "a");
  for (const char* t : {"yuw", "yzw", "xzw", "xzu", "xyu"}) add(t, "b");
  return build_ternary(taxa, SymbolAlphabet({"a", "b"}), entries);
}

class Runner {
 public:
  explicit Runner(const std::function<void(const CriterionResult&)>& report) : report_(report) {}

  template <class Fn>
  void run(int id, std::string name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, std::move(name), false, "", 0.0};
    try {
      std::tie(r.pass, r.detail) = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("unexpected error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ &= r.pass;
    report_(r);
  }

  bool all() const { return all_; }

 private:
  const std::function<void(const CriterionResult&)>& report_;
  bool all_ = true;
};

using Outcome = std::pair<bool, std::string>;

// Runs `check` over the corpus; reports the first failing tree.
template <class Fn>
Outcome over_corpus(const std::vector<CorpusTree>& corpus, Fn&& check) {
  for (const auto& c : corpus) {
    if (!check(c)) return {false, "counterexample " + write_newick(c.tree)};
  }
  return {true, std::to_string(corpus.size()) + " trees"};
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2fs", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " " +
         r.name + ": " + r.detail + " (" + seconds + ")";
}

bool run_acceptance(const std::function<void(const CriterionResult&)>& report) {
  const auto corpus = build_corpus();
  Runner runner(report);

  runner.run(1, "bijection-forward", [&] {
    return over_corpus(corpus, [](const CorpusTree& c) { return verify_metric(c.map).verdict; });
  });

  runner.run(2, "bijection-inverse", [&] {
    std::size_t brute = 0;
    auto out = over_corpus(corpus, [&](const CorpusTree& c) {
      if (!trees_isomorphic(reconstruct_tree(c.map), c.tree)) return false;
      if (c.map.size() > 5) return true;
      ++brute;
      auto found = oracle::brute_force_reconstruct(c.map);
      return found && trees_isomorphic(*found, c.tree);
    });
    if (out.first) out.second += ", " + std::to_string(brute) + " cross-checked by brute force";
    return out;
  });

  runner.run(3, "quartet-equivalence", [&] {
    return over_corpus(corpus, [](const CorpusTree& c) {
      return generate_quartets(c.map) == displayed_quartets(c.tree.topology());
    });
  });

  runner.run(4, "binary-characterization", [&] {
    std::size_t binary = 0;
    auto out = over_corpus(corpus, [&](const CorpusTree& c) {
      binary += c.tree.topology().is_binary();
      return check_binary(c.map) == c.tree.topology().is_binary();
    });
    if (out.first) out.second += ", " + std::to_string(binary) + " binary";
    return out;
  });

  runner.run(5, "pseudo-cherries", [&] {
    return over_corpus(corpus, [](const CorpusTree& c) {
      return class_names(c.map) == pseudo_cherries(c.tree.topology());
    });
  });

  runner.run(6, "five-type-exhaustiveness", [&] {
    std::size_t counts[6] = {};
    auto out = over_corpus(corpus, [&](const CorpusTree& c) {
      bool ok = true;
      for_each_subset(c.map.size(), 5, [&](std::span<const std::size_t> s) {
        const K5Type t = classify_k5(c.map, s);
        ++counts[static_cast<int>(t)];
        ok = t != K5Type::Type2 && t != K5Type::Invalid;
        return ok;
      });
      return ok;
    });
    if (out.first) {
      std::ostringstream detail;
      detail << out.second << ", 5-subsets by type:";
      for (int t = 0; t < 5; ++t) detail << " " << (t + 1) << "=" << counts[t];
      out.second = detail.str();
    }
    return out;
  });

  runner.run(7, "type2-negative", [&]() -> Outcome {
    const TernaryMap map = type2_fixture();
    const auto metric = verify_metric(map);
    bool witness4 = false;
    for (const auto& v : metric.violations) witness4 |= v.condition == '4';
    if (metric.verdict || !witness4) return {false, "verify_metric gave no Condition (4) witness"};
    try {
      reconstruct_tree(map);
      return {false, "reconstruct_tree accepted the map"};
    } catch (const NotAMetricError&) {
    }
    QuartetSystem expected(map.taxa());
    expected.insert("y", "w", "z", "u");
    expected.insert("x", "u", "y", "z");
    expected.insert("x", "z", "u", "w");
    expected.insert("x", "y", "z", "w");
    expected.insert("x", "w", "y", "u");
    const auto q = generate_quartets(map);
    if (!(q == expected)) return {false, "generated quartets differ:\n" + write_quartets(q)};
    if (is_saturated(q)) return {false, "generated quartets are saturated"};
    return {true, "rejected by Condition (4) and reconstruction; 5 quartets, not saturated"};
  });

  runner.run(8, "fig6-witness", [&]() -> Outcome {
    const auto start = std::chrono::steady_clock::now();
    const auto witness = oracle::find_fig6_like();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!witness) return {false, "search exhausted without a witness"};
    const auto& map = *witness;
    if (!check_condition3(map).empty()) return {false, "witness violates Condition (3)"};
    if (!check_star(map).empty()) return {false, "witness violates Condition (*)"};
    if (check_condition4(map).empty()) return {false, "witness satisfies Condition (4)"};
    const auto q = generate_quartets(map);
    const auto overloaded = q.overloaded_subsets();
    std::size_t two = 0;
    for (const auto& s : overloaded) {
      std::size_t on = 0;
      for (const auto& quartet : q.members()) on += quartet.support() == s;
      two += on == 2;
    }
    if (two < 2) return {false, "fewer than two 4-sets carry two quartets"};
    if (seconds > 60.0) return {false, "search took longer than 60 s"};
    return {true, std::to_string(two) + " overloaded 4-sets"};
  });

  runner.run(9, "smallest-scale-completeness", [&]() -> Outcome {
    const auto taxa = oracle::default_taxa(4);
    const SymbolAlphabet ab({"a", "b"});
    std::set<std::vector<std::string>> image;
    for (const auto& topo : oracle::enumerate_trees(taxa).topologies) {
      for (const auto& t : oracle::enumerate_colorings(topo, ab.symbols())) image.insert(map_key(encode(t)));
    }
    std::set<std::vector<std::string>> accepted;
    std::size_t total = 0;
    for (unsigned bits = 0; bits < 16; ++bits, ++total) {
      std::vector<SymbolId> values(4);
      for (std::size_t i = 0; i < 4; ++i) values[i] = (bits >> i) & 1u;
      const TernaryMap map(taxa, ab, values);
      if (verify_metric(map).verdict) accepted.insert(map_key(map));
    }
    const std::string counts = std::to_string(accepted.size()) + " of " + std::to_string(total) +
                               " maps accepted, image of encode has " +
                               std::to_string(image.size());
    return {accepted == image, counts};
  });

  runner.run(10, "predicate-soundness", [&] {
    return over_corpus(corpus, [](const CorpusTree& c) {
      const auto q = displayed_quartets(c.tree.topology());
      if (!is_thin(q) || !is_transitive(q) || !is_saturated(q)) return false;
      return !c.tree.topology().is_binary() || is_complete(q);
    });
  });

  return runner.all();
}

}  // namespace symtern
