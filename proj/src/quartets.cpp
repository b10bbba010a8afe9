#include "symtern/quartets.hpp"

#include <algorithm>
#include <map>

namespace symtern {

Quartet::Quartet(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) {
    throw DomainError("a quartet needs four distinct taxa");
  }
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (c < a) {
    std::swap(a, c);
    std::swap(b, d);
  }
  t_ = {a, b, c, d};
}

std::array<std::size_t, 4> Quartet::support() const {
  auto s = t_;
  std::sort(s.begin(), s.end());
  return s;
}

void QuartetSystem::insert(const Quartet& q) {
  for (std::size_t t : q.taxa()) {
    if (t >= taxa_.size()) throw DomainError("quartet taxon index out of range");
  }
  keys_.insert(q.key());
}

void QuartetSystem::insert(std::string_view a, std::string_view b, std::string_view c,
                           std::string_view d) {
  insert(Quartet(taxa_.index(a), taxa_.index(b), taxa_.index(c), taxa_.index(d)));
}

std::vector<Quartet> QuartetSystem::members() const {
  std::vector<Quartet> out;
  out.reserve(keys_.size());
  for (std::uint64_t k : keys_) {
    out.emplace_back(k >> 48, (k >> 32) & 0xFFFF, (k >> 16) & 0xFFFF, k & 0xFFFF);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<std::size_t, 4>> QuartetSystem::overloaded_subsets() const {
  std::map<std::array<std::size_t, 4>, int> per_set;
  for (const auto& q : members()) ++per_set[q.support()];
  std::vector<std::array<std::size_t, 4>> out;
  for (const auto& [s, count] : per_set)
    if (count > 1) out.push_back(s);
  return out;
}

std::string QuartetSystem::format(const Quartet& q) const {
  return taxa_.name(q.a()) + " " + taxa_.name(q.b()) + " | " + taxa_.name(q.c()) + " " +
         taxa_.name(q.d());
}

std::string write_quartets(const QuartetSystem& q) {
  std::string out;
  for (const auto& m : q.members()) out += q.format(m) + "\n";
  return out;
}

bool is_thin(const QuartetSystem& q) { return q.overloaded_subsets().empty(); }

bool is_complete(const QuartetSystem& q) {
  if (!is_thin(q)) return false;
  return q.size() == choose(q.taxa().size(), 4);
}

bool is_transitive(const QuartetSystem& q) {
  const std::size_t n = q.taxa().size();
  // For each ab|ce in Q and each d: ab|de in Q implies ab|cd in Q.
  for (const auto& m : q.members()) {
    const auto& t = m.taxa();
    const std::array<std::array<std::size_t, 4>, 4> views = {{
        {t[0], t[1], t[2], t[3]},
        {t[0], t[1], t[3], t[2]},
        {t[2], t[3], t[0], t[1]},
        {t[2], t[3], t[1], t[0]},
    }};
    for (const auto& [a, b, c, e] : views) {
      for (std::size_t d = 0; d < n; ++d) {
        if (d == a || d == b || d == c || d == e) continue;
        if (q.contains(a, b, d, e) && !q.contains(a, b, c, d)) return false;
      }
    }
  }
  return true;
}

bool is_saturated(const QuartetSystem& q) {
  const std::size_t n = q.taxa().size();
  for (const auto& m : q.members()) {
    const auto& t = m.taxa();
    // all eight presentations of the same quartet
    const std::array<std::array<std::size_t, 4>, 8> views = {{
        {t[0], t[1], t[2], t[3]},
        {t[1], t[0], t[2], t[3]},
        {t[0], t[1], t[3], t[2]},
        {t[1], t[0], t[3], t[2]},
        {t[2], t[3], t[0], t[1]},
        {t[3], t[2], t[0], t[1]},
        {t[2], t[3], t[1], t[0]},
        {t[3], t[2], t[1], t[0]},
    }};
    for (const auto& [a, b, c, d] : views) {
      for (std::size_t e = 0; e < n; ++e) {
        if (e == a || e == b || e == c || e == d) continue;
        if (!q.contains(a, e, c, d) && !q.contains(a, b, c, e)) return false;
      }
    }
  }
  return true;
}

bool resolves(const TernaryMap& map, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
              std::size_t e) {
  const SymbolId same = map.at(x, y, z);
  if (same == kEmptySymbol || e == x || e == y || e == z || e == u) return false;
  if (map.at(x, y, u) != same || map.at(x, z, u) != same || map.at(y, z, u) != same) return false;
  if (map.at(x, y, e) != same || map.at(z, u, e) != same) return false;
  const SymbolId other = map.at(x, u, e);
  return other != same && map.at(x, z, e) == other && map.at(y, z, e) == other &&
         map.at(y, u, e) == other;
}

QuartetSystem generate_quartets(const TernaryMap& map) {
  QuartetSystem out(map.taxa());
  const std::size_t n = map.size();
  for_each_subset(n, 4, [&](std::span<const std::size_t> s) {
    const std::size_t w = s[0], x = s[1], y = s[2], z = s[3];
    // triples of the 4-set, each named by the taxon it omits
    const std::array<SymbolId, 4> without = {map.at(x, y, z), map.at(w, y, z), map.at(w, x, z),
                                             map.at(w, x, y)};
    const std::array<std::size_t, 4> taxon = {w, x, y, z};
    std::size_t distinct = 1;
    for (int i = 1; i < 4; ++i) {
      bool fresh = true;
      for (int j = 0; j < i; ++j) fresh = fresh && without[i] != without[j];
      if (fresh) ++distinct;
    }
    if (distinct == 2) {
      // 2-2 rule: xy|zu when the two triples omitting x and y agree, and so do
      // the two omitting z and u.
      int partner = -1;
      int equal_to_first = 0;
      for (int i = 1; i < 4; ++i) {
        if (without[i] == without[0]) {
          partner = i;
          ++equal_to_first;
        }
      }
      if (equal_to_first == 1) {
        std::array<std::size_t, 2> rest{};
        int r = 0;
        for (int j = 1; j < 4; ++j)
          if (j != partner) rest[r++] = taxon[j];
        out.insert(Quartet(taxon[0], taxon[partner], rest[0], rest[1]));
      }
    } else if (distinct == 1) {
      const std::array<std::array<std::size_t, 4>, 3> pairings = {{
          {w, x, y, z},
          {w, y, x, z},
          {w, z, x, y},
      }};
      for (const auto& [a, b, c, d] : pairings) {
        for (std::size_t e = 0; e < n; ++e) {
          if (resolves(map, a, b, c, d, e)) {
            out.insert(Quartet(a, b, c, d));
            break;
          }
        }
      }
    }
    return true;
  });
  return out;
}

}  // namespace symtern
