#include "cyclefst/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cyclefst/errors.hpp"
#include "cyclefst/harness.hpp"
#include "cyclefst/permutation.hpp"
#include "cyclefst/script.hpp"

namespace cyclefst::cli {

namespace {

std::uint64_t parse_unsigned(std::string_view text, std::size_t line,
                             std::size_t column) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, column,
                     "expected a non-negative integer, got '" +
                         std::string(text) + "'");
  }
  return value;
}

// Sends the timed report to $CYCLEFST_REPORT when set, else to `fallback`.
void write_report(const std::string& text, std::ostream& fallback,
                  std::ostream& err) {
  if (const char* path = std::getenv("CYCLEFST_REPORT"); path && *path) {
    std::ofstream file(path);
    if (file) {
      file << text;
      return;
    }
    err << "warning: cannot write report file " << path << '\n';
  }
  fallback << text;
}

}  // namespace

Permutation parse_permutation_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(1, 0, "missing header line");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (!header.starts_with("n=")) {
    throw ParseError(1, 1, "expected header 'n=<count>'");
  }
  const std::uint64_t n = parse_unsigned(std::string_view(header).substr(2), 1, 3);
  if (n == 0 || n > static_cast<std::uint64_t>(INT32_MAX)) {
    throw ParseError(1, 3, "n must be in 1.." + std::to_string(INT32_MAX));
  }

  std::string body;
  if (!std::getline(in, body)) throw ParseError(2, 0, "missing values line");
  Permutation values;
  values.reserve(n);
  std::vector<std::size_t> columns;
  columns.reserve(n);
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
    }
    if (pos >= body.size()) break;
    const std::size_t start = pos;
    while (pos < body.size() && !std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
    }
    const std::uint64_t v =
        parse_unsigned(std::string_view(body).substr(start, pos - start), 2,
                       start + 1);
    if (values.size() == n) {
      throw ParseError(2, start + 1, "more than n=" + std::to_string(n) +
                                         " values");
    }
    if (v < 1 || v > n) {
      throw ParseError(2, start + 1, "value " + std::to_string(v) +
                                         " outside 1.." + std::to_string(n));
    }
    values.push_back(static_cast<Element>(v));
    columns.push_back(start + 1);
  }
  if (values.size() != n) {
    throw ParseError(2, 0, "expected " + std::to_string(n) + " values, got " +
                               std::to_string(values.size()));
  }
  try {
    validate_permutation(values);
  } catch (const ValidationError& e) {
    throw ParseError(2, columns[e.position() - 1], e.what());
  }
  for (std::string rest; std::getline(in, rest);) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(3, 0, "unexpected content after the values line");
    }
  }
  return values;
}

std::string format_permutation_file(const Permutation& p) {
  std::string out = "n=" + std::to_string(p.size()) + "\n";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(p[k]);
  }
  out += '\n';
  return out;
}

int run(std::istream& perm_in, std::istream& script_in, ImplKind impl,
        std::ostream& out, std::ostream& err) {
  Permutation perm;
  std::vector<ScriptLine> script;
  try {
    perm = parse_permutation_file(perm_in);
  } catch (const ParseError& e) {
    err << "error: permutation file: " << e.what() << '\n';
    return kExitParseError;
  }
  try {
    script = parse_script(script_in, perm.size());
  } catch (const ParseError& e) {
    err << "error: script: " << e.what() << '\n';
    return kExitParseError;
  }

  auto store = make_store(impl, perm);
  for (const ScriptLine& line : script) {
    try {
      out << execute(*store, line.command) << '\n';
    } catch (const OutOfRangeError& e) {
      err << "error: script line " << line.line << ": " << e.what() << '\n';
      return kExitDomainError;
    } catch (const ArgumentError& e) {
      err << "error: script line " << line.line << ": " << e.what() << '\n';
      return kExitDomainError;
    } catch (const DomainError& e) {
      err << "error: script line " << line.line << ": " << e.what() << '\n';
      return kExitDomainError;
    }
  }
  return kExitOk;
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream perm(options.perm_path);
  if (!perm) {
    err << "error: cannot open permutation file " << options.perm_path << '\n';
    return kExitParseError;
  }
  std::ifstream script(options.script_path);
  if (!script) {
    err << "error: cannot open script file " << options.script_path << '\n';
    return kExitParseError;
  }
  return run(perm, script, options.impl, out, err);
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err) {
  const auto mix = named_mix(options.mix);
  if (!mix) {
    err << "error: unknown mix '" << options.mix << "'\n";
    return kExitParseError;
  }
  OpScript script;
  try {
    script = generate(options.seed, options.n, options.length, *mix);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  const StoreFactory tested = [&options](std::span<const Element> p) {
    auto store = make_store(options.impl, p);
    if (options.corrupt_at) {
      store = make_corrupted_store(std::move(store), *options.corrupt_at);
    }
    return store;
  };
  const StoreFactory reference = [&options](std::span<const Element> p) {
    return make_store(options.reference, p);
  };

  auto first = tested(script.initial);
  auto second = reference(script.initial);
  const RunReport report = run_differential(script, *first, *second);
  out << "mix=" << mix->name << '\n' << report.to_text(false);
  if (std::getenv("CYCLEFST_REPORT")) {
    write_report(report.to_text(true), err, err);
  }
  if (report.passed()) return kExitOk;

  const auto prefix = shrink_to_failing_prefix(script, tested, reference);
  const std::size_t length = prefix.value_or(script.ops.size());
  out << "minimal_failing_prefix=" << length << '\n';
  err << "divergence at op " << report.divergence->op_index << " ("
      << format_command(report.divergence->command) << ")\n"
      << "replay: cyclefst fuzz --seed " << options.seed << " --n "
      << options.n << " --len " << length << " --mix " << options.mix
      << " --impl " << impl_name(options.impl) << '\n';
  if (!options.dump_prefix.empty()) {
    OpScript minimal = script;
    minimal.ops.resize(length);
    std::ofstream(options.dump_prefix + ".perm")
        << format_permutation_file(script.initial);
    std::ofstream(options.dump_prefix + ".script") << minimal.to_text();
    err << "wrote " << options.dump_prefix << ".perm and "
        << options.dump_prefix << ".script; replay with: cyclefst run --perm "
        << options.dump_prefix << ".perm --script " << options.dump_prefix
        << ".script\n";
  }
  return kExitFailure;
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& timing, std::ostream& err) {
  const auto mix = named_mix(options.mix);
  if (!mix) {
    err << "error: unknown mix '" << options.mix << "'\n";
    return kExitParseError;
  }
  ScalingOptions scaling;
  scaling.sizes = options.sizes;
  scaling.mix = *mix;
  scaling.seed = options.seed;
  scaling.reps = options.reps;
  scaling.ops_per_size = options.ops_per_size;
  scaling.queries_per_class = options.queries_per_class;
  const ScalingReport report = measure_scaling(scaling);
  out << report.summary();
  write_report(report.timing_table(), timing, err);
  return report.passed() ? kExitOk : kExitFailure;
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t end = std::min(csv.find(',', start), csv.size());
    const std::uint64_t v =
        parse_unsigned(std::string_view(csv).substr(start, end - start), 1,
                       start + 1);
    if (v == 0 || v > static_cast<std::uint64_t>(INT32_MAX)) {
      throw ParseError(1, start + 1, "size must be in 1.." +
                                         std::to_string(INT32_MAX));
    }
    sizes.push_back(static_cast<std::size_t>(v));
    start = end + 1;
  }
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    if (sizes[k] < sizes[k - 1]) {
      throw ParseError(1, 0, "sizes must be sorted ascending");
    }
  }
  return sizes;
}

int main(int argc, char** argv) {
  CLI::App app{"Dynamic permutations as a forest of splay trees"};
  app.require_subcommand(1);

  const std::map<std::string, ImplKind> impls = {
      {"fst", ImplKind::kFst},
      {"oneline", ImplKind::kOneLine},
      {"oneline-inv", ImplKind::kOneLineInverse}};

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Execute a script on a permutation");
  run_cmd->add_option("--perm", run_opts.perm_path, "Permutation file")
      ->required();
  run_cmd->add_option("--script", run_opts.script_path, "Script file")
      ->required();
  run_cmd->add_option("--impl", run_opts.impl, "Implementation")
      ->transform(CLI::CheckedTransformer(impls, CLI::ignore_case));

  FuzzOptions fuzz_opts;
  auto* fuzz_cmd =
      app.add_subcommand("fuzz", "Differential run against a reference oracle");
  fuzz_cmd->add_option("--seed", fuzz_opts.seed, "RNG seed");
  fuzz_cmd->add_option("--n", fuzz_opts.n, "Permutation size")
      ->check(CLI::Range(1u, static_cast<std::uint32_t>(INT32_MAX)));
  fuzz_cmd->add_option("--len", fuzz_opts.length, "Script length");
  fuzz_cmd->add_option("--mix", fuzz_opts.mix, "Operation mix")
      ->check(CLI::IsMember(mix_names()));
  fuzz_cmd->add_option("--impl", fuzz_opts.impl, "Implementation under test")
      ->transform(CLI::CheckedTransformer(impls, CLI::ignore_case));
  fuzz_cmd->add_option("--reference", fuzz_opts.reference, "Reference")
      ->transform(CLI::CheckedTransformer(impls, CLI::ignore_case));
  fuzz_cmd->add_option("--corrupt-at", fuzz_opts.corrupt_at,
                       "Debug: corrupt the tested implementation's k-th call");
  fuzz_cmd->add_option("--dump", fuzz_opts.dump_prefix,
                       "Write the minimal failing case to PREFIX.{perm,script}");

  BenchOptions bench_opts;
  std::string sizes_csv = "1000,10000,100000,200000,400000";
  auto* bench_cmd =
      app.add_subcommand("bench", "Scaling and per-operation timing report");
  bench_cmd->add_option("--sizes", sizes_csv, "Comma-separated sizes");
  bench_cmd->add_option("--mix", bench_opts.mix, "Operation mix")
      ->check(CLI::IsMember(mix_names()));
  bench_cmd->add_option("--seed", bench_opts.seed, "RNG seed");
  bench_cmd->add_option("--reps", bench_opts.reps, "Build repetitions")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--ops", bench_opts.ops_per_size,
                        "Ops per size for rotation counts (default 10n)");
  bench_cmd->add_option("--queries", bench_opts.queries_per_class,
                        "Commands per operation class in the timing table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  if (*run_cmd) return cmd_run(run_opts, std::cout, std::cerr);
  if (*fuzz_cmd) return cmd_fuzz(fuzz_opts, std::cout, std::cerr);
  try {
    bench_opts.sizes = parse_sizes(sizes_csv);
  } catch (const ParseError& e) {
    std::cerr << "error: --sizes: " << e.what() << '\n';
    return kExitParseError;
  }
  return cmd_bench(bench_opts, std::cout, std::cerr, std::cerr);
}

}  // namespace cyclefst::cli
