#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtern/core.hpp"

namespace symtern {

/// Value counts of a map over the 3-subsets of a 4- or 5-subset of taxa.
struct PartitionProfile {
  std::vector<std::size_t> subset;                      // sorted taxon indices
  std::vector<std::pair<SymbolId, std::size_t>> counts;  // by symbol id, counts > 0

  std::size_t distinct() const noexcept { return counts.size(); }
  // Exactly two values, one on n triples and the other on m (in either order).
  bool is_partitioned(std::size_t n, std::size_t m) const noexcept;
};

// Throws SizeError unless |subset| is 4 or 5.
PartitionProfile partition_profile(const TernaryMap& map, std::span<const std::size_t> subset);
PartitionProfile partition_profile(const TernaryMap& map, std::span<const std::string> subset);

// "a:3,b:1" with symbols in alphabet order.
std::string format_profile(const TernaryMap& map, const PartitionProfile& profile);

using Subset = std::vector<std::size_t>;

// 4-subsets with three or more values, or two values split 1-3.
std::vector<Subset> check_condition3(const TernaryMap& map, bool fail_fast = false);
// 5-subsets that are 5-5 partitioned.
std::vector<Subset> check_condition4(const TernaryMap& map, bool fail_fast = false);

enum class K5Type { Type1, Type2, Type3, Type4, Type5, Invalid };

const char* to_string(K5Type t) noexcept;

// Edge {a,b} of K5 on `subset` is colored δ(subset \ {a,b}); the type follows
// from the per-color degree sequences.
K5Type classify_k5(const TernaryMap& map, std::span<const std::size_t> subset);

enum class StarMode {
  Strict,  // the exact resolver pattern of the quartet generation rule
  Loose,   // any fifth taxon that makes the 5-set 4-6 partitioned
};

// Constant 4-subsets without a resolving fifth taxon (Condition (*)).
std::vector<Subset> check_star(const TernaryMap& map, StarMode mode = StarMode::Strict,
                               bool fail_fast = false);

struct Violation {
  char condition;  // '1'..'4' or '*'
  std::vector<std::string> subset;
  std::string detail;
};

struct MetricReport {
  bool verdict = true;                 // Conditions (1)-(4)
  std::optional<bool> fully_resolved;  // set when Condition (*) was checked
  std::vector<Violation> violations;
};

struct VerifyOptions {
  bool fail_fast = false;
  bool check_star = false;
  StarMode star_mode = StarMode::Strict;
};

MetricReport verify_metric(const TernaryMap& map, const VerifyOptions& options = {});

// "COND <id> SUBSET <taxa...> DETAIL <profile>" per violation.
std::string format_report(const MetricReport& report);

}  // namespace symtern
