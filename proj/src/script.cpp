#include "cyclefst/script.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "cyclefst/errors.hpp"
#include "cyclefst/random.hpp"

namespace cyclefst {

namespace {

constexpr std::array<std::string_view, kOpClassCount> kKeywords = {
    "apply", "inverse",      "power",         "cycles", "size",   "same",
    "dist",  "transpose-at", "transpose-val", "flip",   "oneline"};

constexpr std::array<std::size_t, kOpClassCount> kArity = {1, 1, 2, 0, 1, 2,
                                                           2, 2, 2, 2, 0};

OpClass op_at(std::size_t index) { return static_cast<OpClass>(index); }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r') {
      ++pos;
    }
    tokens.push_back({line.substr(start, pos - start), start + 1});
  }
  return tokens;
}

std::int64_t parse_integer(const Token& tok, std::size_t line_number) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (!tok.text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_number, tok.column,
                     "integer '" + std::string(tok.text) + "' out of range");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line_number, tok.column,
                     "expected an integer, got '" + std::string(tok.text) +
                         "'");
  }
  return value;
}

std::int64_t parse_element(const Token& tok, std::size_t n,
                           std::size_t line_number) {
  const std::int64_t v = parse_integer(tok, line_number);
  if (v < 1 || static_cast<std::uint64_t>(v) > n) {
    throw ParseError(line_number, tok.column,
                     "element " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
  }
  return v;
}

Element as_element(std::int64_t v) { return static_cast<Element>(v); }

}  // namespace

std::string_view op_keyword(OpClass op) {
  return kKeywords[static_cast<std::size_t>(op)];
}

std::optional<OpClass> parse_op_keyword(std::string_view word) {
  for (std::size_t k = 0; k < kOpClassCount; ++k) {
    if (kKeywords[k] == word) return op_at(k);
  }
  return std::nullopt;
}

std::size_t op_arity(OpClass op) { return kArity[static_cast<std::size_t>(op)]; }

bool is_update(OpClass op) {
  return op == OpClass::kTransposeAt || op == OpClass::kTransposeVal ||
         op == OpClass::kFlip;
}

std::string format_command(const Command& cmd) {
  std::string out(op_keyword(cmd.op));
  const std::size_t arity = op_arity(cmd.op);
  if (arity >= 1) out += ' ' + std::to_string(cmd.first);
  if (arity >= 2) out += ' ' + std::to_string(cmd.second);
  return out;
}

Command parse_command(std::string_view line, std::size_t n,
                      std::size_t line_number) {
  const std::vector<Token> tokens = tokenize(line);
  if (tokens.empty()) throw ParseError(line_number, 0, "empty command");
  const auto op = parse_op_keyword(tokens[0].text);
  if (!op) {
    throw ParseError(line_number, tokens[0].column,
                     "unknown command '" + std::string(tokens[0].text) + "'");
  }
  const std::size_t arity = op_arity(*op);
  if (tokens.size() != arity + 1) {
    throw ParseError(line_number, 0,
                     "'" + std::string(tokens[0].text) + "' takes " +
                         std::to_string(arity) + " argument(s), got " +
                         std::to_string(tokens.size() - 1));
  }
  Command cmd{*op, 0, 0};
  if (arity >= 1) cmd.first = parse_element(tokens[1], n, line_number);
  if (arity >= 2) {
    cmd.second = *op == OpClass::kPower
                     ? parse_integer(tokens[2], line_number)
                     : parse_element(tokens[2], n, line_number);
  }
  return cmd;
}

std::vector<ScriptLine> parse_script(std::istream& in, std::size_t n) {
  std::vector<ScriptLine> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty() || tokens[0].text.starts_with('#')) continue;
    lines.push_back({number, parse_command(text, n, number)});
  }
  return lines;
}

std::string execute(PermutationStore& store, const Command& cmd) {
  const Element a = as_element(cmd.first);
  const Element b = as_element(cmd.second);
  const auto updated = [&store] {
    return "ok " + std::to_string(store.num_cycles());
  };
  switch (cmd.op) {
    case OpClass::kApply:
      return std::to_string(store.apply(a));
    case OpClass::kInverse:
      return std::to_string(store.inverse(a));
    case OpClass::kPower:
      return std::to_string(store.power(a, cmd.second));
    case OpClass::kCycles:
      return std::to_string(store.num_cycles());
    case OpClass::kSize:
      return std::to_string(store.cycle_size(a));
    case OpClass::kSame:
      return store.same_cycle(a, b) ? "true" : "false";
    case OpClass::kDist:
      return store.distance(a, b).to_string();
    case OpClass::kTransposeAt:
      store.transpose_at(a, b);
      return updated();
    case OpClass::kTransposeVal:
      store.transpose_values(a, b);
      return updated();
    case OpClass::kFlip:
      store.flip(a, b);
      return updated();
    case OpClass::kOneLine: {
      std::string out;
      for (Element v : store.to_one_line()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
      }
      return out;
    }
  }
  return {};
}

std::optional<OpMix> named_mix(std::string_view name) {
  OpMix mix;
  mix.name = std::string(name);
  const auto set = [&mix](std::initializer_list<OpClass> ops) {
    for (OpClass op : ops) mix.weights[static_cast<std::size_t>(op)] = 1;
  };
  if (name == "uniform") {
    mix.weights.fill(1);
  } else if (name == "mixed") {
    mix.weights.fill(1);
    mix.weights[static_cast<std::size_t>(OpClass::kOneLine)] = 0;
  } else if (name == "queries") {
    set({OpClass::kApply, OpClass::kInverse, OpClass::kPower, OpClass::kCycles,
         OpClass::kSize, OpClass::kSame, OpClass::kDist});
  } else if (name == "updates") {
    set({OpClass::kTransposeAt, OpClass::kTransposeVal, OpClass::kFlip});
  } else if (name == "transpose") {
    set({OpClass::kTransposeAt});
  } else if (name == "flip") {
    set({OpClass::kFlip});
  } else {
    return std::nullopt;
  }
  return mix;
}

std::vector<std::string> mix_names() {
  return {"uniform", "mixed", "queries", "updates", "transpose", "flip"};
}

OpMix single_op_mix(OpClass op) {
  OpMix mix;
  mix.name = std::string(op_keyword(op));
  mix.weights[static_cast<std::size_t>(op)] = 1;
  return mix;
}

std::string OpScript::to_text() const {
  std::ostringstream out;
  out << "# cyclefst-script seed=" << seed << " n=" << n
      << " len=" << ops.size() << " mix=" << mix.name << " weights=";
  for (std::size_t k = 0; k < kOpClassCount; ++k) {
    out << (k ? "," : "") << mix.weights[k];
  }
  out << '\n';
  for (const Command& cmd : ops) out << format_command(cmd) << '\n';
  return out.str();
}

OpScript generate(std::uint64_t seed, std::size_t n, std::size_t length,
                  const OpMix& mix) {
  if (n == 0) throw ArgumentError("script size n must be positive");
  std::array<std::uint64_t, kOpClassCount> weights{};
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < kOpClassCount; ++k) {
    weights[k] = mix.weights[k];
    // A transposition needs two distinct elements.
    if (n < 2 && (op_at(k) == OpClass::kTransposeAt ||
                  op_at(k) == OpClass::kTransposeVal)) {
      weights[k] = 0;
    }
    total += weights[k];
  }
  if (total == 0) {
    throw ArgumentError("operation mix '" + mix.name +
                        "' has zero total weight for n = " + std::to_string(n));
  }

  OpScript script;
  script.seed = seed;
  script.n = n;
  script.mix = mix;
  Rng rng(seed);
  script.initial = random_permutation(n, rng);
  script.ops.reserve(length);

  const auto n64 = static_cast<std::int64_t>(n);
  const auto element = [&rng, n64] { return rng.between(1, n64); };
  for (std::size_t step = 0; step < length; ++step) {
    std::uint64_t pick = rng.below(total);
    std::size_t k = 0;
    while (pick >= weights[k]) pick -= weights[k++];
    Command cmd{op_at(k), 0, 0};
    const std::size_t arity = op_arity(cmd.op);
    if (arity >= 1) cmd.first = element();
    if (cmd.op == OpClass::kPower) {
      // Mostly small exponents; occasionally anything in the signed range.
      cmd.second = rng.below(10) == 0
                       ? static_cast<std::int64_t>(rng.next())
                       : rng.between(-2 * n64, 2 * n64);
    } else if (cmd.op == OpClass::kTransposeAt ||
               cmd.op == OpClass::kTransposeVal) {
      // Uniform over the n - 1 elements other than `first`.
      const std::int64_t other = rng.between(1, n64 - 1);
      cmd.second = other >= cmd.first ? other + 1 : other;
    } else if (arity >= 2) {
      cmd.second = element();
    }
    script.ops.push_back(cmd);
  }
  return script;
}

}  // namespace cyclefst
