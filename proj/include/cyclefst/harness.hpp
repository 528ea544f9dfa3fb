#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclefst/permutation_store.hpp"
#include "cyclefst/script.hpp"

namespace cyclefst {

// Result of one command as text, or "error <kind>" with kind one of
// out-of-range, argument, domain. Two stores agree on a command iff these
// strings are equal.
std::string outcome_of(PermutationStore& store, const Command& cmd);

struct Divergence {
  std::uint64_t op_index = 0;
  Command command;
  // "result" or "one-line".
  std::string kind;
  std::string expected;  // second implementation
  std::string actual;    // first implementation
};

struct OpClassStats {
  std::uint64_t count = 0;
  double seconds_first = 0.0;
  double seconds_second = 0.0;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string first_impl;
  std::string second_impl;
  std::uint64_t ops_executed = 0;
  std::uint64_t checks = 0;
  std::array<OpClassStats, kOpClassCount> per_class{};
  std::optional<Instrumentation> instrumentation;  // first implementation
  std::vector<double> potential_samples;           // first implementation
  std::optional<Divergence> divergence;

  bool passed() const { return !divergence.has_value(); }

  // key=value lines. Timings are omitted unless requested, so the text is
  // stable across reruns with the same seed.
  std::string to_text(bool with_timings = false) const;
};

struct DifferentialOptions {
  // Compare to_one_line() after every update.
  bool compare_one_line = true;
  // Potential samples taken at start, every `potential_every` ops, and at
  // the end. Zero means start and end only.
  std::size_t potential_every = 0;
  bool stop_at_first_divergence = true;
};

// Runs `script.ops` on both stores (already built from the same
// permutation), comparing every outcome and, after each update, the
// one-line notation. Divergence is reported, never thrown.
RunReport run_differential(const OpScript& script, PermutationStore& first,
                           PermutationStore& second,
                           const DifferentialOptions& options = {});

using StoreFactory =
    std::function<std::unique_ptr<PermutationStore>(std::span<const Element>)>;

// Smallest prefix length of `script.ops` on which fresh stores from the two
// factories diverge, found by bisection. Returns nullopt if the full script
// does not diverge.
std::optional<std::size_t> shrink_to_failing_prefix(
    const OpScript& script, const StoreFactory& first,
    const StoreFactory& second);

// Wall-clock seconds to run `commands` on `store`, discarding outcomes
// (including out-of-range, argument and domain errors).
double time_commands(PermutationStore& store, std::span<const Command> commands);

struct ScalingOptions {
  std::vector<std::size_t> sizes;
  OpMix mix;
  unsigned reps = 5;
  std::uint64_t seed = 1;
  // Ops per size for the rotation measurement; zero means 10 * n.
  std::size_t ops_per_size = 0;
  // Commands per operation class in the per-implementation timing table;
  // zero skips the table.
  std::size_t queries_per_class = 1000;
  // Sizes below this are reported but exempt from the build-time ratio
  // check, whose timings are too short to be meaningful.
  std::size_t timing_floor = 100000;
};

struct ScalingRow {
  std::size_t n = 0;
  double build_seconds = 0.0;  // median over reps
  double potential_after_build = 0.0;
  double potential_bound = 0.0;  // 2n + 10 log2(n)^2
  std::uint64_t ops = 0;
  double rotations_per_op = 0.0;
  double rotation_constant = 0.0;  // rotations_per_op / log2 n
  // rotations / (n + sum over splays of log2 tree size)
  double amortized_constant = 0.0;
  // Seconds per command, indexed [impl][op class]; impls fst, oneline,
  // oneline-inv. Empty when the table is skipped.
  std::vector<std::array<double, kOpClassCount>> seconds_per_op;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  // Depends on wall-clock time; reported with the timings.
  bool timing = false;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  std::vector<Check> checks;

  bool passed() const;
  // Deterministic part: sizes, potentials, rotation statistics and the
  // checks that do not depend on timing.
  std::string summary() const;
  // Wall-clock timings, one line per size and implementation, followed by
  // the timing checks.
  std::string timing_table() const;
};

// Single-cycle permutation per size: median build time, potential after
// build, rotations per op over a generated script, and optionally the
// per-operation timing table for the FST and both oracles. Asserts the
// potential bound, rotations per op <= 10 log2 n, and build-time growth
// within [0.75, 1.25] times the size ratio between consecutive sizes above
// the timing floor.
ScalingReport measure_scaling(const ScalingOptions& options);

}  // namespace cyclefst
