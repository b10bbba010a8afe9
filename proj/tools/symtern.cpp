// symtern: command-line front end.
//
// Exit codes: 0 success / true, 1 semantic failure (not a metric, not
// binary), 2 invalid input object or usage, 3 file-format error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "symtern/symtern.hpp"

namespace {

using namespace symtern;

enum Exit : int { kOk = 0, kSemantic = 1, kInvalid = 2, kFormat = 3 };

struct Failure {
  Exit code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kFormat, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TernaryMap load_table(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return read_triple_table(text);
  } catch (const Error& e) {
    // Any defect in the table file, structural or content, is a format error.
    throw Failure{kFormat, path + ": " + e.what()};
  }
}

ColoredTree load_tree(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_newick(text);
  } catch (const ParseError& e) {
    throw Failure{kFormat, path + ": " + e.what()};
  } catch (const Error& e) {
    throw Failure{kInvalid, path + ": " + e.what()};
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{kFormat, "cannot write '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_encode(const std::string& input, bool require_discriminating, Output& out) {
  const ColoredTree tree = load_tree(input);
  if (require_discriminating && !is_discriminating(tree)) {
    throw Failure{kInvalid, input + ": adjacent interior vertices share a color"};
  }
  out.stream() << write_triple_table(encode(tree));
  return kOk;
}

int cmd_verify(const std::string& input, const VerifyOptions& options, Output& out) {
  const MetricReport report = verify_metric(load_table(input), options);
  out.stream() << format_report(report);
  return report.verdict ? kOk : kSemantic;
}

int cmd_reconstruct(const std::string& input, bool trace, bool dot, Output& out) {
  const TernaryMap map = load_table(input);
  try {
    const Reconstruction r = reconstruct(map);
    if (trace)
      for (const auto& line : r.trace) std::cerr << line << "\n";
    out.stream() << (dot ? write_dot(r.tree) : write_newick(r.tree) + "\n");
    return kOk;
  } catch (const NotAMetricError& e) {
    throw Failure{kSemantic, std::string("not a symbolic ternary metric: ") + e.what()};
  } catch (const DomainError& e) {
    throw Failure{kInvalid, e.what()};
  }
}

void require_condition3(const TernaryMap& map) {
  const auto bad = check_condition3(map, true);
  if (bad.empty()) return;
  std::string subset;
  for (std::size_t i : bad.front()) subset += " " + map.taxa().name(i);
  throw Failure{kSemantic, "Condition (3) fails on" + subset};
}

int cmd_quartets(const std::string& input, Output& out) {
  const TernaryMap map = load_table(input);
  require_condition3(map);
  out.stream() << write_quartets(generate_quartets(map));
  return kOk;
}

int cmd_check_binary(const std::string& input, const VerifyOptions& options, Output& out) {
  VerifyOptions o = options;
  o.check_star = true;
  const MetricReport report = verify_metric(load_table(input), o);
  out.stream() << format_report(report);
  return report.verdict && *report.fully_resolved ? kOk : kSemantic;
}

int cmd_selftest(Output& out) {
  const bool ok = run_acceptance(
      [&](const CriterionResult& r) { out.stream() << format_result(r) << std::endl; });
  return ok ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic ternary metrics and symbolically dated phylogenetic trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "symtern 0.1.0");

  std::string output;
  app.add_option("--output,-o", output, "Write results to this file instead of stdout");

  std::string input;
  bool fail_fast = false, star = false, strict_star = true, trace = false, dot = false,
       require_discriminating = false;

  auto* encode_cmd = app.add_subcommand("encode", "Newick tree -> triple table");
  encode_cmd->add_option("newick", input, "Newick file ('-' for stdin)")->required();
  encode_cmd->add_flag("--require-discriminating", require_discriminating,
                       "Reject trees with equally colored adjacent vertices");

  auto* verify_cmd = app.add_subcommand("verify", "Check Conditions (1)-(4) on a triple table");
  verify_cmd->add_option("table", input, "Triple table ('-' for stdin)")->required();
  verify_cmd->add_flag("--fail-fast", fail_fast, "Stop at the first violation");
  verify_cmd->add_flag("--star", star, "Also check Condition (*)");
  verify_cmd->add_flag("--strict-star,!--loose-star", strict_star,
                       "Resolver pattern for Condition (*): strict (default) or any 4-6 split");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Triple table -> Newick tree");
  reconstruct_cmd->add_option("table", input, "Triple table ('-' for stdin)")->required();
  reconstruct_cmd->add_flag("--trace", trace, "Print contraction steps on stderr");
  reconstruct_cmd->add_flag("--dot", dot, "Write Graphviz DOT instead of Newick");

  auto* quartets_cmd = app.add_subcommand("quartets", "Quartets generated by a triple table");
  quartets_cmd->add_option("table", input, "Triple table ('-' for stdin)")->required();

  auto* binary_cmd = app.add_subcommand("check-binary", "Exit 0 iff the table is fully resolved");
  binary_cmd->add_option("table", input, "Triple table ('-' for stdin)")->required();
  binary_cmd->add_flag("--fail-fast", fail_fast, "Stop at the first violation");
  binary_cmd->add_flag("--strict-star,!--loose-star", strict_star,
                       "Resolver pattern for Condition (*)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  for (auto* sub : {encode_cmd, verify_cmd, reconstruct_cmd, quartets_cmd, binary_cmd, selftest_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  VerifyOptions options;
  options.fail_fast = fail_fast;
  options.check_star = star;
  options.star_mode = strict_star ? StarMode::Strict : StarMode::Loose;

  try {
    Output out(output);
    if (*encode_cmd) return cmd_encode(input, require_discriminating, out);
    if (*verify_cmd) return cmd_verify(input, options, out);
    if (*reconstruct_cmd) return cmd_reconstruct(input, trace, dot, out);
    if (*quartets_cmd) return cmd_quartets(input, out);
    if (*binary_cmd) return cmd_check_binary(input, options, out);
    return cmd_selftest(out);
  } catch (const Failure& f) {
    std::cerr << "symtern: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "symtern: " << e.what() << "\n";
    return kInvalid;
  }
}
