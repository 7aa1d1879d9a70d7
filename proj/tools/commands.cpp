#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gallai/coloring.hpp"
#include "gallai/constructor.hpp"
#include "gallai/document.hpp"
#include "gallai/feasibility.hpp"
#include "gallai/oracle.hpp"
#include "gallai/sequence.hpp"

namespace gallai::cli {

namespace {

struct Options {
  bool quiet = false;
  bool allow_large = false;
  std::string sequence;
  std::string output;
  std::string dot;
  std::string input;
  std::string kind;
  std::size_t size = 0;
};

// Thrown inside command handlers to end with a usage-class exit.
struct UsageFailure {
  std::string message;
};

template <typename Range>
std::string join(const Range& values) {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

void print_slack_table(std::ostream& out, const ColorDegreeSequence& seq,
                       const FeasibilityReport& report) {
  out << "sequence " << seq.to_string() << " (n = " << seq.size() << ")\n";
  out << "     k  d[k-1]  slack\n";
  for (std::size_t k = 1; k <= report.n; ++k) {
    const std::size_t prev = k >= 2 ? seq[k - 2] : 0;
    std::ostringstream row;
    row.width(6);
    row << k;
    row.width(8);
    row << prev;
    out << row.str() << "  " << report.slacks[k - 1].str() << '\n';
  }
  if (report.feasible) {
    out << "feasible\n";
  } else {
    out << "infeasible: first violation at k = " << *report.first_violation
        << '\n';
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageFailure{"cannot write " + path};
  file << text;
  if (!file) throw UsageFailure{"failed writing " + path};
}

void emit_coloring(const Options& opt, const EdgeColoring& coloring) {
  write_text_file(opt.output, write_document(coloring));
  if (!opt.dot.empty()) write_text_file(opt.dot, write_dot(coloring));
}

void require_vertex_budget(const Options& opt, std::size_t n) {
  if (n > kMaxDefaultVertices && !opt.allow_large) {
    throw UsageFailure{"n = " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxDefaultVertices) +
                       "; pass --allow-large to proceed"};
  }
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto seq = ColorDegreeSequence::parse(opt.sequence);
  const auto report = check_sequence(seq);
  if (!opt.quiet) print_slack_table(out, seq, report);
  return report.feasible ? kExitOk : kExitNegative;
}

int cmd_construct(const Options& opt, std::ostream& out) {
  const auto seq = ColorDegreeSequence::parse(opt.sequence);
  require_vertex_budget(opt, seq.size());
  EdgeColoring coloring(1);
  try {
    coloring = realize(seq);
  } catch (const InfeasibleSequence& e) {
    if (!opt.quiet) print_slack_table(out, seq, e.report());
    return kExitNegative;
  }
  emit_coloring(opt, coloring);
  if (!opt.quiet) {
    out << "wrote " << opt.output << " (n = " << coloring.size() << ", "
        << distinct_color_count(coloring) << " colors)\n";
    out << "degrees " << join(sorted_color_degrees(coloring)) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto coloring = read_document_file(opt.input);
  const auto witness = find_rainbow_triangle(coloring);
  const auto degrees = color_degrees(coloring);
  auto sorted = degrees;
  std::sort(sorted.begin(), sorted.end());

  if (!opt.quiet) {
    out << "n " << coloring.size() << '\n';
    out << "colors " << distinct_color_count(coloring) << '\n';
    out << "degrees " << join(degrees) << '\n';
    out << "sorted " << join(sorted) << '\n';
  }
  if (witness) {
    if (!opt.quiet) {
      out << "rainbow triangle (" << witness->i << ", " << witness->j << ", "
          << witness->k << ") colors " << witness->color_ij << ", "
          << witness->color_ik << ", " << witness->color_jk << '\n';
      out << "not gallai\n";
    }
    return kExitNegative;
  }
  const auto report = check_sequence(ColorDegreeSequence(sorted));
  if (!report.feasible) {
    err << "internal error: Gallai coloring whose degrees fail the suffix "
           "inequality at k = "
        << *report.first_violation << '\n';
  }
  if (!opt.quiet) {
    out << "suffix inequalities " << (report.feasible ? "hold" : "FAIL")
        << '\n';
    out << "gallai\n";
  }
  return kExitOk;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  EdgeColoring coloring(1);
  if (opt.kind == "chain") {
    if (opt.size == 0) throw UsageFailure{"chain size must be positive"};
    require_vertex_budget(opt, opt.size);
    coloring = chain_coloring(opt.size);
  } else {
    coloring = uniform_coloring(opt.size);
  }
  emit_coloring(opt, coloring);
  if (!opt.quiet) {
    out << "wrote " << opt.output << " (n = " << coloring.size() << ", "
        << distinct_color_count(coloring) << " colors)\n";
    out << "degrees " << join(sorted_color_degrees(coloring)) << '\n';
  }
  return kExitOk;
}

int cmd_crosscheck(const Options& opt, std::ostream& out) {
  if (opt.size == 0) throw UsageFailure{"n must be positive"};
  if (opt.size > kMaxDefaultCrosscheck && !opt.allow_large) {
    throw UsageFailure{"crosscheck above n = " +
                       std::to_string(kMaxDefaultCrosscheck) +
                       " needs --allow-large"};
  }
  const auto result = crosscheck(opt.size);
  if (!opt.quiet) {
    out << "n = " << result.n << ": " << result.coloring_count
        << " Gallai colorings, " << result.realizable.size()
        << " realizable sequences, " << result.feasible.size()
        << " feasible sequences\n";
    for (const auto& seq : result.realizable_only) {
      out << "realizable but infeasible: " << seq.to_string() << '\n';
    }
    for (const auto& seq : result.feasible_only) {
      out << "feasible but not realized: " << seq.to_string() << '\n';
    }
    out << (result.equal() ? "equal" : "MISMATCH") << '\n';
  }
  return result.equal() ? kExitOk : kExitNegative;
}

int cmd_partition(const Options& opt, std::ostream& out) {
  const auto coloring = read_document_file(opt.input);
  if (coloring.size() < 2 || coloring.size() > kMaxPartitionSize) {
    throw UsageFailure{"partition search supports 2 <= n <= " +
                       std::to_string(kMaxPartitionSize)};
  }
  if (const auto w = find_rainbow_triangle(coloring)) {
    if (!opt.quiet) {
      out << "rainbow triangle (" << w->i << ", " << w->j << ", " << w->k
          << ")\nnot gallai\n";
    }
    return kExitNegative;
  }
  const auto partition = brute_force_gallai_partition(coloring);
  if (!opt.quiet) {
    out << "parts " << partition.parts.size() << '\n';
    for (std::size_t p = 0; p < partition.parts.size(); ++p) {
      out << "  part " << p << ": " << join(partition.parts[p]) << '\n';
    }
    out << "cross colors " << join(partition.cross_colors) << '\n';
    for (const auto& [parts, color] : partition.part_pair_color) {
      out << "  part " << parts.first << " -- part " << parts.second
          << ": color " << color << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Color degree sequences of rainbow-triangle-free colorings"};
  app.name("gallai");
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--quiet,-q", opt.quiet, "Only report through the exit code");
  app.add_flag("--allow-large", opt.allow_large, "Lift default size guards");

  auto* check = app.add_subcommand("check", "Test a degree sequence");
  check->add_option("sequence", opt.sequence, "e.g. 1,2,2")->required();

  auto* construct =
      app.add_subcommand("construct", "Build a coloring with given degrees");
  construct->add_option("sequence", opt.sequence, "e.g. 1,2,2")->required();
  construct->add_option("--output,-o", opt.output, "Coloring document path")
      ->required();
  construct->add_option("--dot", opt.dot, "Graphviz export path");

  auto* verify = app.add_subcommand("verify", "Check a coloring document");
  verify->add_option("input", opt.input, "Coloring document")->required();

  auto* generate = app.add_subcommand("generate", "Write an extremal coloring");
  generate->add_option("kind", opt.kind, "chain or uniform")
      ->required()
      ->check(CLI::IsMember({"chain", "uniform"}));
  generate->add_option("size", opt.size, "chain: n, uniform: bits d")
      ->required();
  generate->add_option("--output,-o", opt.output, "Coloring document path")
      ->required();
  generate->add_option("--dot", opt.dot, "Graphviz export path");

  auto* cross =
      app.add_subcommand("crosscheck", "Compare enumerated sequences with the feasibility test");
  cross->add_option("n", opt.size, "Number of vertices")->required();

  auto* partition =
      app.add_subcommand("partition", "Find a Gallai partition by search");
  partition->add_option("input", opt.input, "Coloring document")->required();

  for (auto* sub : {check, construct, verify, generate, cross, partition}) {
    sub->add_flag("--quiet,-q", opt.quiet, "Only report through the exit code");
    sub->add_flag("--allow-large", opt.allow_large, "Lift default size guards");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (construct->parsed()) return cmd_construct(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (generate->parsed()) return cmd_generate(opt, out);
    if (cross->parsed()) return cmd_crosscheck(opt, out);
    if (partition->parsed()) return cmd_partition(opt, out);
  } catch (const UsageFailure& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gallai::cli
