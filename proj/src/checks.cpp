#include "symtern/checks.hpp"

#include <algorithm>
#include <array>

#include "symtern/quartets.hpp"

namespace symtern {

bool PartitionProfile::is_partitioned(std::size_t n, std::size_t m) const noexcept {
  if (counts.size() != 2) return false;
  const std::size_t p = counts[0].second;
  const std::size_t q = counts[1].second;
  return (p == n && q == m) || (p == m && q == n);
}

PartitionProfile partition_profile(const TernaryMap& map, std::span<const std::size_t> subset) {
  if (subset.size() != 4 && subset.size() != 5) {
    throw SizeError("partition profiles are defined for 4- and 5-subsets, got " +
                    std::to_string(subset.size()));
  }
  PartitionProfile p;
  p.subset.assign(subset.begin(), subset.end());
  std::sort(p.subset.begin(), p.subset.end());
  if (std::adjacent_find(p.subset.begin(), p.subset.end()) != p.subset.end()) {
    throw DomainError("profile subset repeats a taxon");
  }
  for (std::size_t t : p.subset)
    if (t >= map.size()) throw DomainError("taxon index out of range");
  const auto& s = p.subset;
  for (std::size_t k = 2; k < s.size(); ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        SymbolId v = map.at(s[i], s[j], s[k]);
        auto it = std::find_if(p.counts.begin(), p.counts.end(),
                               [v](const auto& c) { return c.first == v; });
        if (it == p.counts.end())
          p.counts.emplace_back(v, 1);
        else
          ++it->second;
      }
  std::sort(p.counts.begin(), p.counts.end());
  return p;
}

PartitionProfile partition_profile(const TernaryMap& map, std::span<const std::string> subset) {
  std::vector<std::size_t> idx;
  for (const auto& s : subset) idx.push_back(map.taxa().index(s));
  return partition_profile(map, idx);
}

std::string format_profile(const TernaryMap& map, const PartitionProfile& profile) {
  std::string out;
  for (const auto& [sym, count] : profile.counts) {
    if (!out.empty()) out += ",";
    out += map.symbol(sym) + ":" + std::to_string(count);
  }
  return out;
}

std::vector<Subset> check_condition3(const TernaryMap& map, bool fail_fast) {
  std::vector<Subset> out;
  for_each_subset(map.size(), 4, [&](std::span<const std::size_t> s) {
    auto p = partition_profile(map, s);
    if (p.distinct() >= 3 || (p.distinct() == 2 && !p.is_partitioned(2, 2))) {
      out.emplace_back(s.begin(), s.end());
      return !fail_fast;
    }
    return true;
  });
  return out;
}

std::vector<Subset> check_condition4(const TernaryMap& map, bool fail_fast) {
  std::vector<Subset> out;
  for_each_subset(map.size(), 5, [&](std::span<const std::size_t> s) {
    if (partition_profile(map, s).is_partitioned(5, 5)) {
      out.emplace_back(s.begin(), s.end());
      return !fail_fast;
    }
    return true;
  });
  return out;
}

const char* to_string(K5Type t) noexcept {
  switch (t) {
    case K5Type::Type1: return "Type1";
    case K5Type::Type2: return "Type2";
    case K5Type::Type3: return "Type3";
    case K5Type::Type4: return "Type4";
    case K5Type::Type5: return "Type5";
    case K5Type::Invalid: return "Invalid";
  }
  return "Invalid";
}

K5Type classify_k5(const TernaryMap& map, std::span<const std::size_t> subset) {
  if (subset.size() != 5) throw SizeError("classify_k5 needs a 5-subset");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (subset[i] == subset[j]) throw DomainError("classify_k5 subset repeats a taxon");

  struct ColorClass {
    SymbolId symbol;
    std::size_t edges = 0;
    std::array<int, 5> degree{};
  };
  std::vector<ColorClass> classes;
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) {
      std::array<std::size_t, 3> rest{};
      std::size_t r = 0;
      for (std::size_t c = 0; c < 5; ++c)
        if (c != a && c != b) rest[r++] = subset[c];
      SymbolId v = map.at(rest[0], rest[1], rest[2]);
      auto it = std::find_if(classes.begin(), classes.end(),
                             [v](const auto& c) { return c.symbol == v; });
      if (it == classes.end()) {
        classes.push_back({v});
        it = classes.end() - 1;
      }
      ++it->edges;
      ++it->degree[a];
      ++it->degree[b];
    }
  }
  for (const auto& c : classes)
    for (int d : c.degree)
      if (d % 2 != 0) return K5Type::Invalid;

  // Degree multiset of each class, sorted, classes ordered by edge count.
  std::vector<std::array<int, 5>> shapes;
  for (const auto& c : classes) {
    auto d = c.degree;
    std::sort(d.begin(), d.end());
    shapes.push_back(d);
  }
  std::sort(shapes.begin(), shapes.end(), [](const auto& x, const auto& y) {
    int sx = 0, sy = 0;
    for (int d : x) sx += d;
    for (int d : y) sy += d;
    return sx != sy ? sx < sy : x < y;
  });
  using D = std::array<int, 5>;
  const D triangle{0, 0, 2, 2, 2}, four_cycle{0, 2, 2, 2, 2}, five_cycle{2, 2, 2, 2, 2};
  const D four_cycle_complement{2, 2, 2, 2, 4}, triangle_complement{2, 2, 2, 4, 4};
  const D complete{4, 4, 4, 4, 4};
  if (shapes.size() == 1 && shapes[0] == complete) return K5Type::Type5;
  if (shapes.size() == 2) {
    if (shapes[0] == five_cycle && shapes[1] == five_cycle) return K5Type::Type2;
    if (shapes[0] == four_cycle && shapes[1] == four_cycle_complement) return K5Type::Type3;
    if (shapes[0] == triangle && shapes[1] == triangle_complement) return K5Type::Type4;
  }
  if (shapes.size() == 3 && shapes[0] == triangle && shapes[1] == triangle &&
      shapes[2] == four_cycle) {
    return K5Type::Type1;
  }
  return K5Type::Invalid;
}

std::vector<Subset> check_star(const TernaryMap& map, StarMode mode, bool fail_fast) {
  std::vector<Subset> out;
  const std::size_t n = map.size();
  for_each_subset(n, 4, [&](std::span<const std::size_t> s) {
    if (partition_profile(map, s).distinct() != 1) return true;
    const std::size_t w = s[0], x = s[1], y = s[2], z = s[3];
    bool resolved = false;
    for (std::size_t e = 0; e < n && !resolved; ++e) {
      if (e == w || e == x || e == y || e == z) continue;
      if (mode == StarMode::Strict) {
        resolved = resolves(map, w, x, y, z, e) || resolves(map, w, y, x, z, e) ||
                   resolves(map, w, z, x, y, e);
      } else {
        const std::array<std::size_t, 5> five{w, x, y, z, e};
        resolved = partition_profile(map, five).is_partitioned(4, 6);
      }
    }
    if (!resolved) {
      out.emplace_back(s.begin(), s.end());
      return !fail_fast;
    }
    return true;
  });
  return out;
}

namespace {

std::vector<std::string> names_of(const TernaryMap& map, const Subset& s) {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(map.taxa().name(i));
  return out;
}

}  // namespace

MetricReport verify_metric(const TernaryMap& map, const VerifyOptions& options) {
  MetricReport report;
  for (const auto& s : check_condition3(map, options.fail_fast)) {
    report.violations.push_back(
        {'3', names_of(map, s), format_profile(map, partition_profile(map, s))});
  }
  if (!(options.fail_fast && !report.violations.empty())) {
    for (const auto& s : check_condition4(map, options.fail_fast)) {
      report.violations.push_back(
          {'4', names_of(map, s), format_profile(map, partition_profile(map, s))});
    }
  }
  report.verdict = report.violations.empty();
  if (options.check_star) {
    auto star = check_star(map, options.star_mode, options.fail_fast);
    report.fully_resolved = star.empty();
    for (const auto& s : star) {
      report.violations.push_back(
          {'*', names_of(map, s), format_profile(map, partition_profile(map, s)) + ";unresolved"});
    }
  }
  return report;
}

std::string format_report(const MetricReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    out += "COND ";
    out += v.condition;
    out += " SUBSET";
    for (const auto& t : v.subset) out += " " + t;
    out += " DETAIL " + v.detail + "\n";
  }
  out += report.verdict ? "RESULT metric\n" : "RESULT not-a-metric\n";
  if (report.fully_resolved) {
    out += *report.fully_resolved ? "RESULT fully-resolved\n" : "RESULT not-fully-resolved\n";
  }
  return out;
}

}  // namespace symtern
