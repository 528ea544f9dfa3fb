#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclefst/permutation_store.hpp"
#include "cyclefst/types.hpp"

namespace cyclefst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitDomainError = 3;

// Permutation file: a header line "n=<count>" and a second line holding the
// n values of the one-line notation. Throws ParseError with line/column.
Permutation parse_permutation_file(std::istream& in);

std::string format_permutation_file(const Permutation& p);

struct RunOptions {
  std::string perm_path;
  std::string script_path;
  ImplKind impl = ImplKind::kFst;
};

// Parses both inputs in full before executing anything. Prints one line per
// command to `out`; diagnostics go to `err`. Exit 2 on parse errors, 3 on a
// command the permutation cannot satisfy (reported with its line number).
int run(std::istream& perm, std::istream& script, ImplKind impl,
        std::ostream& out, std::ostream& err);
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::uint32_t n = 512;
  std::uint32_t length = 100000;
  std::string mix = "uniform";
  ImplKind impl = ImplKind::kFst;
  ImplKind reference = ImplKind::kOneLineInverse;
  // Debug: corrupt the call with this index in the tested implementation.
  std::optional<std::uint64_t> corrupt_at;
  // When set and the run diverges, writes <prefix>.perm and <prefix>.script
  // holding the minimal failing prefix.
  std::string dump_prefix;
};

// Differential run against the reference. Exit 0 iff no divergence; 1 with
// replay instructions otherwise.
int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::string mix = "mixed";
  std::uint64_t seed = 1;
  unsigned reps = 5;
  std::size_t ops_per_size = 0;
  std::size_t queries_per_class = 1000;
};

// Scaling report: deterministic summary on `out`, timing table on `timing`.
// Exit 1 if any assertion fails.
int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& timing, std::ostream& err);

// Parses "1000,2000,..." (positive integers). Throws ParseError.
std::vector<std::size_t> parse_sizes(const std::string& csv);

// Full command-line entry point.
int main(int argc, char** argv);

}  // namespace cyclefst::cli
