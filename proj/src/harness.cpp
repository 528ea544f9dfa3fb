#include "cyclefst/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cyclefst/errors.hpp"
#include "cyclefst/fst.hpp"
#include "cyclefst/random.hpp"

namespace cyclefst {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_one_line(const Permutation& p) {
  std::string out;
  for (Element v : p) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

std::string outcome_of(PermutationStore& store, const Command& cmd) {
  try {
    return execute(store, cmd);
  } catch (const OutOfRangeError&) {
    return "error out-of-range";
  } catch (const ArgumentError&) {
    return "error argument";
  } catch (const DomainError&) {
    return "error domain";
  }
}

RunReport run_differential(const OpScript& script, PermutationStore& first,
                           PermutationStore& second,
                           const DifferentialOptions& options) {
  RunReport report;
  report.seed = script.seed;
  report.n = script.n;
  report.first_impl = std::string(first.name());
  report.second_impl = std::string(second.name());

  const auto sample_potential = [&] {
    if (auto phi = first.potential()) report.potential_samples.push_back(*phi);
  };
  sample_potential();

  for (std::size_t index = 0; index < script.ops.size(); ++index) {
    const Command& cmd = script.ops[index];
    OpClassStats& stats = report.per_class[static_cast<std::size_t>(cmd.op)];

    auto start = Clock::now();
    const std::string got = outcome_of(first, cmd);
    stats.seconds_first += seconds_since(start);
    start = Clock::now();
    const std::string want = outcome_of(second, cmd);
    stats.seconds_second += seconds_since(start);
    ++stats.count;
    ++report.ops_executed;
    ++report.checks;

    std::optional<Divergence> diverged;
    if (got != want) {
      diverged = Divergence{index, cmd, "result", want, got};
    } else if (options.compare_one_line && is_update(cmd.op)) {
      ++report.checks;
      const Permutation a = first.to_one_line();
      const Permutation b = second.to_one_line();
      if (a != b) {
        diverged =
            Divergence{index, cmd, "one-line", join_one_line(b), join_one_line(a)};
      }
    }
    if (diverged && !report.divergence) report.divergence = diverged;
    if (report.divergence && options.stop_at_first_divergence) break;

    if (options.potential_every != 0 &&
        (index + 1) % options.potential_every == 0) {
      sample_potential();
    }
  }
  sample_potential();
  report.instrumentation = first.instrumentation();
  return report;
}

std::string RunReport::to_text(bool with_timings) const {
  std::ostringstream out;
  out << "seed=" << seed << '\n'
      << "n=" << n << '\n'
      << "impl=" << first_impl << '\n'
      << "reference=" << second_impl << '\n'
      << "ops=" << ops_executed << '\n'
      << "checks=" << checks << '\n';
  for (std::size_t k = 0; k < kOpClassCount; ++k) {
    const OpClassStats& s = per_class[k];
    if (s.count == 0) continue;
    const auto op = op_keyword(static_cast<OpClass>(k));
    out << "count." << op << '=' << s.count << '\n';
    if (with_timings) {
      out << "seconds." << op << '=' << fixed(s.seconds_first, 6) << ','
          << fixed(s.seconds_second, 6) << '\n';
    }
  }
  if (instrumentation) {
    out << "rotations=" << instrumentation->rotations << '\n'
        << "splays=" << instrumentation->splays << '\n'
        << "fixes=" << instrumentation->fixes << '\n';
  }
  if (!potential_samples.empty()) {
    out << "potential=";
    for (std::size_t k = 0; k < potential_samples.size(); ++k) {
      out << (k ? "," : "") << fixed(potential_samples[k], 3);
    }
    out << '\n';
  }
  if (divergence) {
    out << "divergence.op_index=" << divergence->op_index << '\n'
        << "divergence.command=" << format_command(divergence->command) << '\n'
        << "divergence.kind=" << divergence->kind << '\n'
        << "divergence.expected=" << divergence->expected << '\n'
        << "divergence.actual=" << divergence->actual << '\n';
  }
  out << "result=" << (passed() ? "pass" : "fail") << '\n';
  return out.str();
}

std::optional<std::size_t> shrink_to_failing_prefix(
    const OpScript& script, const StoreFactory& first,
    const StoreFactory& second) {
  const auto diverges = [&](std::size_t length) {
    OpScript prefix = script;
    prefix.ops.resize(length);
    auto a = first(script.initial);
    auto b = second(script.initial);
    return !run_differential(prefix, *a, *b).passed();
  };
  std::size_t hi = script.ops.size();
  if (!diverges(hi)) return std::nullopt;
  // Invariant: prefix `hi` diverges, prefix `lo` does not.
  std::size_t lo = 0;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (diverges(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double time_commands(PermutationStore& store,
                     std::span<const Command> commands) {
  const auto start = Clock::now();
  for (const Command& cmd : commands) {
    outcome_of(store, cmd);
  }
  return seconds_since(start);
}

bool ScalingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

std::string ScalingReport::summary() const {
  std::ostringstream out;
  out << "n potential bound ops rotations/op c=rot/(op*log2n) "
         "c_amortized\n";
  for (const ScalingRow& row : rows) {
    out << row.n << ' ' << fixed(row.potential_after_build, 1) << ' '
        << fixed(row.potential_bound, 1) << ' ' << row.ops << ' '
        << fixed(row.rotations_per_op, 3) << ' '
        << fixed(row.rotation_constant, 3) << ' '
        << fixed(row.amortized_constant, 3) << '\n';
  }
  for (const Check& check : checks) {
    if (check.timing) continue;
    out << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
        << check.detail << '\n';
  }
  return out.str();
}

std::string ScalingReport::timing_table() const {
  static constexpr std::array<std::string_view, 3> kImpls = {
      "fst", "oneline", "oneline-inv"};
  std::ostringstream out;
  out << "n build_ms";
  out << " impl";
  for (std::size_t k = 0; k < kOpClassCount; ++k) {
    out << ' ' << op_keyword(static_cast<OpClass>(k)) << "_us";
  }
  out << '\n';
  for (const ScalingRow& row : rows) {
    if (row.seconds_per_op.empty()) {
      out << row.n << ' ' << fixed(row.build_seconds * 1e3, 3) << " -\n";
      continue;
    }
    for (std::size_t impl = 0; impl < row.seconds_per_op.size(); ++impl) {
      out << row.n << ' ' << fixed(row.build_seconds * 1e3, 3) << ' '
          << kImpls[impl];
      for (double s : row.seconds_per_op[impl]) out << ' ' << fixed(s * 1e6, 3);
      out << '\n';
    }
  }
  for (const Check& check : checks) {
    if (!check.timing) continue;
    out << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
        << check.detail << '\n';
  }
  return out.str();
}

ScalingReport measure_scaling(const ScalingOptions& options) {
  ScalingReport report;
  Rng rng(options.seed);
  OpMix mix = options.mix;
  // Whole-permutation dumps would dominate the rotation run.
  mix.weights[static_cast<std::size_t>(OpClass::kOneLine)] = 0;

  for (std::size_t n : options.sizes) {
    ScalingRow row;
    row.n = n;
    const Permutation perm = random_cyclic_permutation(n, rng);

    std::vector<double> builds;
    for (unsigned rep = 0; rep < std::max(1u, options.reps); ++rep) {
      const auto start = Clock::now();
      FstPermutation fst(perm);
      builds.push_back(seconds_since(start));
      if (rep == 0) row.potential_after_build = fst.potential();
    }
    row.build_seconds = median(builds);
    const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
    row.potential_bound = 2.0 * static_cast<double>(n) + 10.0 * lg * lg;

    const std::size_t length =
        options.ops_per_size ? options.ops_per_size : 10 * n;
    const OpScript script = generate(options.seed + n, n, length, mix);
    auto fst = make_store(ImplKind::kFst, perm);
    time_commands(*fst, script.ops);
    const Instrumentation stats = *fst->instrumentation();
    row.ops = script.ops.size();
    row.rotations_per_op =
        row.ops ? static_cast<double>(stats.rotations) / row.ops : 0.0;
    row.rotation_constant = lg > 0 ? row.rotations_per_op / lg : 0.0;
    row.amortized_constant = static_cast<double>(stats.rotations) /
                             (static_cast<double>(n) + stats.log_work);

    if (options.queries_per_class > 0) {
      for (ImplKind kind : {ImplKind::kFst, ImplKind::kOneLine,
                            ImplKind::kOneLineInverse}) {
        auto store = make_store(kind, perm);
        std::array<double, kOpClassCount> per_op{};
        for (std::size_t k = 0; k < kOpClassCount; ++k) {
          const OpClass op = static_cast<OpClass>(k);
          if (op == OpClass::kOneLine) continue;
          const OpScript batch = generate(options.seed + k, n,
                                          options.queries_per_class,
                                          single_op_mix(op));
          if (batch.ops.empty()) continue;
          per_op[k] = time_commands(*store, batch.ops) / batch.ops.size();
        }
        row.seconds_per_op.push_back(per_op);
      }
    }
    report.rows.push_back(std::move(row));
  }

  for (const ScalingRow& row : report.rows) {
    const std::string at = " (n=" + std::to_string(row.n) + ")";
    report.checks.push_back(
        {"build potential <= 2n + 10 log2(n)^2" + at,
         row.potential_after_build <= row.potential_bound,
         fixed(row.potential_after_build, 1) + " <= " +
             fixed(row.potential_bound, 1)});
    if (row.n >= 2 && row.ops > 0) {
      const double limit = 10.0 * std::log2(static_cast<double>(row.n));
      report.checks.push_back({"rotations per op <= 10 log2 n" + at,
                               row.rotations_per_op <= limit,
                               fixed(row.rotations_per_op, 3) + " <= " +
                                   fixed(limit, 3) + ", c = " +
                                   fixed(row.rotation_constant, 3)});
    }
  }
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    const ScalingRow& a = report.rows[k - 1];
    const ScalingRow& b = report.rows[k];
    if (a.n < options.timing_floor || b.n < options.timing_floor) continue;
    const double size_ratio = static_cast<double>(b.n) / a.n;
    const double time_ratio = b.build_seconds / a.build_seconds;
    report.checks.push_back(
        {"build time ratio n=" + std::to_string(a.n) + "->" +
             std::to_string(b.n),
         time_ratio >= 0.75 * size_ratio && time_ratio <= 1.25 * size_ratio,
         fixed(time_ratio, 3) + " in [" + fixed(0.75 * size_ratio, 3) + ", " +
             fixed(1.25 * size_ratio, 3) + "]",
         true});
  }
  return report;
}

}  // namespace cyclefst
