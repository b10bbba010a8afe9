#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symtern/error.hpp"

namespace symtern {

using Symbol = std::string;

// Symbols are referred to by their position in a SymbolAlphabet.
using SymbolId = std::uint16_t;
// The empty symbol (written ⊙): never stored, returned for repeated arguments.
inline constexpr SymbolId kEmptySymbol = 0xFFFF;
inline constexpr std::string_view kEmptySymbolText = "⊙";

/// Ordered set of distinct taxon names, n >= 3.
///
/// Names are kept in lexicographic order so that every 3-subset has a unique
/// canonical form (sorted indices).
class TaxonSet {
 public:
  explicit TaxonSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  // Throws LookupError for unknown names.
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const TaxonSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Non-empty finite set M of opaque color names. ⊙ is never a member.
class SymbolAlphabet {
 public:
  explicit SymbolAlphabet(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol& symbol(SymbolId id) const { return symbols_.at(id); }
  std::optional<SymbolId> find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol).has_value(); }

  bool operator==(const SymbolAlphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

// Position of the 3-subset {i,j,k} (i<j<k) in colex order.
constexpr std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) noexcept {
  return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

constexpr std::size_t choose(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls fn(span) for every k-subset of {0..n-1}, in lexicographic order of
// sorted index tuples. Stops early when fn returns false.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(std::span<const std::size_t>)>& fn);

struct TripleEntry {
  std::array<std::string, 3> taxa;
  // nullopt stands for ⊙, which is rejected for distinct taxa.
  std::optional<Symbol> symbol;
};

/// Symmetric map from the 3-subsets of a TaxonSet into an alphabet.
///
/// Storage is one SymbolId per canonical 3-subset, so symmetry holds by
/// construction; arguments with a repeat read back as ⊙ and are not stored.
class TernaryMap {
 public:
  // Direct construction from colex-ordered values; used by the library
  // itself. Prefer build_ternary for external input.
  TernaryMap(TaxonSet taxa, SymbolAlphabet alphabet, std::vector<SymbolId> values);

  const TaxonSet& taxa() const noexcept { return taxa_; }
  const SymbolAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return taxa_.size(); }

  // Index-based lookup, arguments in any order.
  SymbolId at(std::size_t x, std::size_t y, std::size_t z) const noexcept {
    if (x == y || y == z || x == z) return kEmptySymbol;
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return values_[triple_index(x, y, z)];
  }

  // Name-based lookup; nullopt is ⊙. Throws LookupError for unknown names.
  std::optional<Symbol> get(std::string_view x, std::string_view y, std::string_view z) const;

  const Symbol& symbol(SymbolId id) const { return alphabet_.symbol(id); }
  std::string symbol_text(SymbolId id) const {
    return id == kEmptySymbol ? std::string(kEmptySymbolText) : alphabet_.symbol(id);
  }

  // Restriction to a subset of at least three taxa (by name or by index).
  TernaryMap restrict(std::span<const std::string> subset) const;
  TernaryMap restrict_indices(std::span<const std::size_t> subset) const;

  // One entry per canonical 3-subset, in colex order.
  std::vector<TripleEntry> entries() const;

  const std::vector<SymbolId>& raw_values() const noexcept { return values_; }

  // Same taxa and the same symbol on every 3-subset. The declared alphabets
  // may differ in unused symbols.
  bool operator==(const TernaryMap& other) const;

 private:
  TaxonSet taxa_;
  SymbolAlphabet alphabet_;
  std::vector<SymbolId> values_;
};

// Builds a map from unordered entries. Throws CompletenessError,
// ConflictError, AlphabetError, DomainError or LookupError.
TernaryMap build_ternary(const TaxonSet& taxa, const SymbolAlphabet& alphabet,
                         std::span<const TripleEntry> entries);

// Constant map, mostly for tests and fixtures.
TernaryMap constant_map(const TaxonSet& taxa, const Symbol& value);

}  // namespace symtern
