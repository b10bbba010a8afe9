#include "symtern/core.hpp"

#include <algorithm>
#include <set>

namespace symtern {

TaxonSet::TaxonSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  if (names_.size() < 3) {
    throw SizeError("a taxa set needs at least 3 taxa, got " + std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("empty taxon name");
    if (i > 0 && names_[i] == names_[i - 1]) {
      throw DomainError("duplicate taxon '" + names_[i] + "'");
    }
    index_.emplace(names_[i], i);
  }
}

std::optional<std::size_t> TaxonSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TaxonSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw LookupError(std::string(name));
}

SymbolAlphabet::SymbolAlphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
  if (symbols_.empty()) throw DomainError("symbol alphabet must not be empty");
  if (symbols_.size() >= kEmptySymbol) throw SizeError("symbol alphabet too large");
  for (const auto& s : symbols_) {
    if (s.empty()) throw DomainError("empty symbol name");
    if (s == kEmptySymbolText) throw DomainError("the empty symbol cannot be a member of M");
  }
}

std::optional<SymbolId> SymbolAlphabet::find(std::string_view symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return static_cast<SymbolId>(it - symbols_.begin());
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    // advance to next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

TernaryMap::TernaryMap(TaxonSet taxa, SymbolAlphabet alphabet, std::vector<SymbolId> values)
    : taxa_(std::move(taxa)), alphabet_(std::move(alphabet)), values_(std::move(values)) {
  if (values_.size() != choose(taxa_.size(), 3)) {
    throw SizeError("expected " + std::to_string(choose(taxa_.size(), 3)) + " values, got " +
                    std::to_string(values_.size()));
  }
  for (SymbolId v : values_) {
    if (v == kEmptySymbol) throw DomainError("the empty symbol cannot be stored for distinct taxa");
    if (v >= alphabet_.size()) throw AlphabetError("symbol id out of range");
  }
}

std::optional<Symbol> TernaryMap::get(std::string_view x, std::string_view y,
                                      std::string_view z) const {
  SymbolId id = at(taxa_.index(x), taxa_.index(y), taxa_.index(z));
  if (id == kEmptySymbol) return std::nullopt;
  return alphabet_.symbol(id);
}

TernaryMap TernaryMap::restrict_indices(std::span<const std::size_t> subset) const {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("restriction subset contains a repeated taxon");
  }
  if (sorted.size() < 3) throw SizeError("restriction needs at least 3 taxa");
  std::vector<std::string> names;
  for (std::size_t i : sorted) names.push_back(taxa_.name(i));
  // names sorted by index are also sorted lexicographically
  std::vector<SymbolId> values(choose(sorted.size(), 3));
  for (std::size_t c = 2; c < sorted.size(); ++c)
    for (std::size_t b = 1; b < c; ++b)
      for (std::size_t a = 0; a < b; ++a)
        values[triple_index(a, b, c)] = at(sorted[a], sorted[b], sorted[c]);
  return TernaryMap(TaxonSet(std::move(names)), alphabet_, std::move(values));
}

TernaryMap TernaryMap::restrict(std::span<const std::string> subset) const {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& s : subset) idx.push_back(taxa_.index(s));
  return restrict_indices(idx);
}

std::vector<TripleEntry> TernaryMap::entries() const {
  std::vector<TripleEntry> out;
  out.reserve(values_.size());
  const std::size_t n = taxa_.size();
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        out.push_back({{taxa_.name(i), taxa_.name(j), taxa_.name(k)},
                       alphabet_.symbol(values_[triple_index(i, j, k)])});
  return out;
}

bool TernaryMap::operator==(const TernaryMap& other) const {
  if (!(taxa_ == other.taxa_)) return false;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (alphabet_.symbol(values_[t]) != other.alphabet_.symbol(other.values_[t])) return false;
  }
  return true;
}

TernaryMap build_ternary(const TaxonSet& taxa, const SymbolAlphabet& alphabet,
                         std::span<const TripleEntry> entries) {
  std::vector<SymbolId> values(choose(taxa.size(), 3), kEmptySymbol);
  for (const auto& e : entries) {
    std::array<std::size_t, 3> idx{};
    for (int p = 0; p < 3; ++p) idx[p] = taxa.index(e.taxa[p]);
    std::sort(idx.begin(), idx.end());
    if (idx[0] == idx[1] || idx[1] == idx[2]) {
      throw DomainError("entry " + e.taxa[0] + " " + e.taxa[1] + " " + e.taxa[2] +
                        " repeats a taxon");
    }
    if (!e.symbol) {
      throw DomainError("the empty symbol given for distinct taxa " + e.taxa[0] + " " +
                        e.taxa[1] + " " + e.taxa[2]);
    }
    auto id = alphabet.find(*e.symbol);
    if (!id) throw AlphabetError("symbol '" + *e.symbol + "' is not in the alphabet");
    SymbolId& slot = values[triple_index(idx[0], idx[1], idx[2])];
    if (slot != kEmptySymbol && slot != *id) {
      throw ConflictError("conflicting values '" + alphabet.symbol(slot) + "' and '" +
                          *e.symbol + "' for {" + taxa.name(idx[0]) + "," + taxa.name(idx[1]) +
                          "," + taxa.name(idx[2]) + "}");
    }
    slot = *id;
  }
  std::vector<std::vector<std::string>> missing;
  const std::size_t n = taxa.size();
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (values[triple_index(i, j, k)] == kEmptySymbol)
          missing.push_back({taxa.name(i), taxa.name(j), taxa.name(k)});
  if (!missing.empty()) {
    std::string msg = std::to_string(missing.size()) + " of " +
                      std::to_string(values.size()) + " triples missing:";
    for (std::size_t m = 0; m < missing.size() && m < 10; ++m) {
      msg += " {" + missing[m][0] + "," + missing[m][1] + "," + missing[m][2] + "}";
    }
    if (missing.size() > 10) msg += " ...";
    throw CompletenessError(msg, std::move(missing));
  }
  return TernaryMap(taxa, alphabet, std::move(values));
}

TernaryMap constant_map(const TaxonSet& taxa, const Symbol& value) {
  return TernaryMap(taxa, SymbolAlphabet({value}),
                    std::vector<SymbolId>(choose(taxa.size(), 3), 0));
}

}  // namespace symtern
