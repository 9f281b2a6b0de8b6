#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ctx/criteria.hpp"
#include "ctx/error.hpp"
#include "ctx/oracle.hpp"
#include "ctx/report_json.hpp"
#include "ctx/system_io.hpp"

namespace ctx::cli {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

System read_system(const std::string& path, Io& io) {
  if (path == "-") return parse_system(io.in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Parse, "cannot open \"" + path + "\"");
  return parse_system(file);
}

void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Parse, "cannot write \"" + path + "\"");
  file << text;
}

int size_cap_from_env() {
  const char* raw = std::getenv("CTX_SIZE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSizeCapExponent;
  const std::string text(raw);
  if (!std::ranges::all_of(text, [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 2)
    throw Error(ErrorKind::Domain, "CTX_SIZE_CAP must be a small nonnegative integer exponent, got \"" + text + "\"");
  return std::stoi(text);
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Invalid: return kValidation;
    case ErrorKind::ModeMismatch: return kModeMismatch;
    case ErrorKind::ShapeMismatch: return kShapeMismatch;
    case ErrorKind::Parse:
    case ErrorKind::SizeCap:
    case ErrorKind::Domain: return kUsage;
  }
  return kUsage;
}

int cmd_validate(const std::string& input, Io& io) {
  const System sys = read_system(input, io);
  const auto violations = validate(sys);
  for (const auto& v : violations) io.err << "violation: " << v << '\n';
  if (!violations.empty()) return kValidation;
  io.err << "ok: " << sys.contents.size() << " contents, " << sys.contexts.size() << " contexts\n";
  return kOk;
}

int cmd_analyze(const std::string& input, const std::string& mode_name, const std::string& output,
                bool certificate, Io& io) {
  const Mode mode = mode_name == "traditional" ? Mode::Traditional : Mode::CbD;
  const System sys = read_system(input, io);
  AnalysisOptions options;
  options.size_cap_exponent = size_cap_from_env();
  const auto report = analyze(sys, mode, options);
  write_output(output, to_json(report, certificate), io);
  return report.decision == Decision::Noncontextual ? kOk : kContextual;
}

int cmd_chsh(const std::string& input, const std::string& output, Io& io) {
  const System sys = read_system(input, io);
  const auto report = chsh_criterion(sys);
  write_output(output, to_json(report), io);
  return report.decision == Decision::Noncontextual ? kOk : kContextual;
}

int cmd_generate(std::uint64_t seed, int rank, bool consistent, bool near_boundary, const std::string& output,
                 Io& io) {
  const System sys = random_system(seed, CyclicShape{rank, near_boundary}, consistent);
  write_output(output, serialize_system(sys), io);
  return kOk;
}

int cmd_crosscheck(std::uint64_t seed, std::size_t count, const std::string& shape_name, unsigned threads,
                   const std::string& output, Io& io) {
  const auto shape = CorpusShape::parse(shape_name);
  const auto report = run_corpus(seed, count, shape, threads);
  write_output(output, to_json(report), io);
  for (const auto& d : report.disagreements)
    io.err << "disagreement #" << d.index << " [" << d.kind << "]: " << d.detail << '\n';
  return report.passed() ? kOk : kValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Exact contextuality analysis of systems of dichotomous random variables", "ctx"};
  app.require_subcommand(1, 1);

  std::string input = "-";
  std::string output = "-";

  auto* validate_cmd = app.add_subcommand("validate", "Check a system document against its invariants");
  validate_cmd->add_option("input", input, "System document, '-' for standard input");

  std::string mode = "cbd";
  bool certificate = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide contextuality by exact LP feasibility");
  analyze_cmd->add_option("input", input, "System document, '-' for standard input");
  analyze_cmd->add_option("--mode", mode, "traditional or cbd")
      ->check(CLI::IsMember({"traditional", "cbd"}))
      ->capture_default_str();
  analyze_cmd->add_option("--out", output, "Report path, '-' for standard output");
  analyze_cmd->add_flag("--certificate", certificate, "Include every witness entry in the report");

  auto* chsh_cmd = app.add_subcommand("chsh", "Closed-form criterion for rank-4 cyclic systems");
  chsh_cmd->add_option("input", input, "System document, '-' for standard input");
  chsh_cmd->add_option("--out", output, "Report path, '-' for standard output");

  std::uint64_t seed = 1;
  int rank = 4;
  bool consistent = false;
  bool near_boundary = false;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a seeded random rank-n cyclic system");
  generate_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  generate_cmd->add_option("--rank", rank, "Cycle length n >= 2")->capture_default_str();
  generate_cmd->add_flag("--consistent", consistent, "Equal marginals for each content across its contexts");
  generate_cmd->add_flag("--near-boundary", near_boundary, "Steer correlations to the noncontextuality bound");
  generate_cmd->add_option("--out", output, "Document path, '-' for standard output");

  std::size_t count = 100;
  std::string shape = "rank4-consistent";
  unsigned threads = 0;
  auto* crosscheck_cmd = app.add_subcommand("crosscheck", "Compare exact LP, float LP, and closed-form deciders");
  crosscheck_cmd->add_option("--seed", seed, "Corpus seed")->capture_default_str();
  crosscheck_cmd->add_option("--count", count, "Corpus size")->capture_default_str();
  crosscheck_cmd->add_option("--shape", shape, "rank<n>-consistent or rank<n>-inconsistent")->capture_default_str();
  crosscheck_cmd->add_option("--threads", threads, "Worker threads, 0 = hardware concurrency");
  crosscheck_cmd->add_option("--out", output, "Report path, '-' for standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(input, io);
    if (*analyze_cmd) return cmd_analyze(input, mode, output, certificate, io);
    if (*chsh_cmd) return cmd_chsh(input, output, io);
    if (*generate_cmd) return cmd_generate(seed, rank, consistent, near_boundary, output, io);
    if (*crosscheck_cmd) {
      if (count == 0) throw Error(ErrorKind::Domain, "--count must be at least 1");
      return cmd_crosscheck(seed, count, shape, threads, output, io);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace ctx::cli
