#include "symtern/table.hpp"

#include <sstream>
#include <vector>

namespace symtern {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

TernaryMap read_triple_table(std::string_view text) {
  std::optional<TaxonSet> taxa;
  std::optional<SymbolAlphabet> alphabet;
  std::vector<TripleEntry> entries;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = tokens(line);
    if (tok.empty()) continue;

    if (!taxa) {
      if (tok[0] != "taxa:") throw ParseError("expected 'taxa:' header", line_no);
      try {
        taxa.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const Error& e) {
        throw ParseError(std::string("bad taxa header: ") + e.what(), line_no);
      }
      continue;
    }
    if (!alphabet) {
      if (tok[0] != "symbols:") throw ParseError("expected 'symbols:' header", line_no);
      try {
        alphabet.emplace(std::vector<Symbol>(tok.begin() + 1, tok.end()));
      } catch (const Error& e) {
        throw ParseError(std::string("bad symbols header: ") + e.what(), line_no);
      }
      continue;
    }
    if (tok.size() != 4) {
      throw ParseError("expected 'x y z symbol', got " + std::to_string(tok.size()) + " fields",
                       line_no);
    }
    TripleEntry e{{tok[0], tok[1], tok[2]}, tok[3]};
    if (tok[3] == kEmptySymbolText) e.symbol.reset();
    entries.push_back(std::move(e));
  }
  if (!taxa) throw ParseError("missing 'taxa:' header", line_no);
  if (!alphabet) throw ParseError("missing 'symbols:' header", line_no);
  return build_ternary(*taxa, *alphabet, entries);
}

std::string write_triple_table(const TernaryMap& map) {
  std::string out = "taxa:";
  for (const auto& t : map.taxa().names()) out += " " + t;
  out += "\nsymbols:";
  for (const auto& s : map.alphabet().symbols()) out += " " + s;
  out += "\n";
  for (const auto& e : map.entries()) {
    out += e.taxa[0] + " " + e.taxa[1] + " " + e.taxa[2] + " " + *e.symbol + "\n";
  }
  return out;
}

}  // namespace symtern
