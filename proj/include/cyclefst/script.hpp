#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclefst/permutation_store.hpp"
#include "cyclefst/types.hpp"

namespace cyclefst {

enum class OpClass : std::uint8_t {
  kApply,
  kInverse,
  kPower,
  kCycles,
  kSize,
  kSame,
  kDist,
  kTransposeAt,
  kTransposeVal,
  kFlip,
  kOneLine,
};
inline constexpr std::size_t kOpClassCount = 11;

// Script keyword: "apply", "inverse", "power", "cycles", "size", "same",
// "dist", "transpose-at", "transpose-val", "flip", "oneline".
std::string_view op_keyword(OpClass op);
std::optional<OpClass> parse_op_keyword(std::string_view word);
std::size_t op_arity(OpClass op);
bool is_update(OpClass op);

struct Command {
  OpClass op = OpClass::kCycles;
  // Element arguments; for power, `second` is the exponent.
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend bool operator==(const Command&, const Command&) = default;
};

std::string format_command(const Command& cmd);

// Parses one script line. Arguments are range-checked against 1..n (the
// power exponent is any signed 64-bit value). Throws ParseError tagged with
// `line_number`.
Command parse_command(std::string_view line, std::size_t n,
                      std::size_t line_number);

struct ScriptLine {
  std::size_t line = 0;
  Command command;
};

// Whole script file: blank lines and lines starting with '#' are skipped.
std::vector<ScriptLine> parse_script(std::istream& in, std::size_t n);

// Executes one command and renders its result as a single output line:
// queries print their value (`inf` for an infinite distance, `true`/`false`
// for same-cycle), updates print `ok <num_cycles>`, `oneline` prints the
// current one-line notation.
std::string execute(PermutationStore& store, const Command& cmd);

// Relative weights per operation class.
struct OpMix {
  std::string name;
  std::array<std::uint32_t, kOpClassCount> weights{};

  std::uint32_t weight(OpClass op) const {
    return weights[static_cast<std::size_t>(op)];
  }
};

// Named mixes: "uniform" (every class), "mixed" (every class but oneline),
// "queries", "updates", "transpose", "flip".
std::optional<OpMix> named_mix(std::string_view name);
std::vector<std::string> mix_names();

// Weight 1 on `op` only; named after its keyword.
OpMix single_op_mix(OpClass op);

struct OpScript {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  OpMix mix;
  Permutation initial;
  std::vector<Command> ops;

  // Header comment line followed by one command per line.
  std::string to_text() const;
};

// Deterministic in (seed, n, length, mix). The initial permutation is a
// uniform random permutation of 1..n drawn from the same stream; transposes
// never pick i = j. Throws ArgumentError for a zero-weight mix, or when n < 2
// leaves only transposes.
OpScript generate(std::uint64_t seed, std::size_t n, std::size_t length,
                  const OpMix& mix);

}  // namespace cyclefst
