#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "symtern/core.hpp"

namespace symtern {

/// A quartet ab|cd over taxon indices.
///
/// Canonical form: each pair sorted, and the pair holding the smallest of the
/// four taxa comes first. Equal quartets therefore compare equal field-wise.
class Quartet {
 public:
  Quartet(std::size_t a, std::size_t b, std::size_t c, std::size_t d);

  // a(), b() form the first pair, c(), d() the second.
  std::size_t a() const noexcept { return t_[0]; }
  std::size_t b() const noexcept { return t_[1]; }
  std::size_t c() const noexcept { return t_[2]; }
  std::size_t d() const noexcept { return t_[3]; }
  const std::array<std::size_t, 4>& taxa() const noexcept { return t_; }
  std::array<std::size_t, 4> support() const;  // the four taxa, sorted

  std::uint64_t key() const noexcept {
    return (std::uint64_t{t_[0]} << 48) | (std::uint64_t{t_[1]} << 32) |
           (std::uint64_t{t_[2]} << 16) | std::uint64_t{t_[3]};
  }

  auto operator<=>(const Quartet&) const = default;

 private:
  std::array<std::size_t, 4> t_;
};

/// Set of quartets on a fixed TaxonSet with constant-time membership.
class QuartetSystem {
 public:
  explicit QuartetSystem(TaxonSet taxa) : taxa_(std::move(taxa)) {}

  const TaxonSet& taxa() const noexcept { return taxa_; }
  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }

  void insert(const Quartet& q);
  // Convenience for names, e.g. insert("x", "y", "z", "u") for xy|zu.
  void insert(std::string_view a, std::string_view b, std::string_view c, std::string_view d);

  bool contains(const Quartet& q) const { return keys_.count(q.key()) != 0; }
  bool contains(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return contains(Quartet(a, b, c, d));
  }

  // Sorted canonical list.
  std::vector<Quartet> members() const;

  // 4-subsets (sorted indices) that carry two or more quartets.
  std::vector<std::array<std::size_t, 4>> overloaded_subsets() const;

  std::string format(const Quartet& q) const;  // "a b | c d"

  bool operator==(const QuartetSystem& other) const {
    return taxa_ == other.taxa_ && keys_ == other.keys_;
  }

 private:
  TaxonSet taxa_;
  std::unordered_set<std::uint64_t> keys_;
};

// Serialises one quartet per line in canonical order.
std::string write_quartets(const QuartetSystem& q);

bool is_thin(const QuartetSystem& q);
bool is_transitive(const QuartetSystem& q);
bool is_saturated(const QuartetSystem& q);
bool is_complete(const QuartetSystem& q);

// True iff e resolves x,y,z,u towards xy|zu: the six triples
// {x,y,e},{x,y,z},{x,y,u},{x,z,u},{z,u,e},{y,z,u} share one value and
// {x,u,e},{x,z,e},{y,z,e},{y,u,e} share another.
bool resolves(const TernaryMap& map, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
              std::size_t e);

// All quartets generated by the map: the 2-2 rule on two-valued 4-subsets and
// the resolver rule on constant ones. On maps violating Condition (4) the
// result can be non-thin; see QuartetSystem::overloaded_subsets.
QuartetSystem generate_quartets(const TernaryMap& map);

}  // namespace symtern
