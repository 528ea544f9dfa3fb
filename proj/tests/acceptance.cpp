// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "cyclefst/errors.hpp"
#include "cyclefst/fst.hpp"
#include "cyclefst/harness.hpp"
#include "cyclefst/oracle.hpp"
#include "cyclefst/permutation.hpp"
#include "cyclefst/random.hpp"

using namespace cyclefst;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

Outcome goldens() {
  const Permutation example = {1, 3, 6, 4, 2, 8, 11, 5, 10, 7, 9};
  FstPermutation fst(example);
  std::multiset<std::size_t> sizes;
  for (const auto& c : cycle_decomposition(fst.to_one_line())) {
    sizes.insert(fst.cycle_size(c.front()));
  }
  const bool built = fst.num_cycles() == 4 &&
                     sizes == std::multiset<std::size_t>{1, 5, 1, 4} &&
                     fst.apply(6) == 8;

  FstPermutation t(Permutation{8, 2, 5, 3, 1, 7, 9, 4, 6});
  t.transpose_at(1, 4);
  const bool split = t.to_one_line() == Permutation{3, 2, 5, 8, 1, 7, 9, 4, 6};
  t.transpose_at(3, 6);
  const bool join = t.to_one_line() == Permutation{3, 2, 7, 8, 1, 5, 9, 4, 6};
  return {built && split && join,
          std::string("build/apply ") + (built ? "ok" : "wrong") + ", split " +
              (split ? "ok" : "wrong") + ", join " + (join ? "ok" : "wrong")};
}

Outcome differential_fuzz() {
  std::uint64_t runs = 0, divergences = 0, checks = 0;
  std::string first_failure;
  for (std::size_t n : {8, 64, 512}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const OpScript script = generate(seed, n, 100000, *named_mix("uniform"));
      auto fst = make_store(ImplKind::kFst, script.initial);
      auto oracle = make_store(ImplKind::kOneLineInverse, script.initial);
      const RunReport report = run_differential(script, *fst, *oracle);
      ++runs;
      checks += report.checks;
      if (!report.passed()) {
        ++divergences;
        if (first_failure.empty()) {
          first_failure = ", first at n=" + std::to_string(n) +
                          " seed=" + std::to_string(seed) + " op " +
                          std::to_string(report.divergence->op_index);
        }
      }
    }
  }
  return {divergences == 0, std::to_string(runs) + " runs, " +
                                std::to_string(checks) + " checks, " +
                                std::to_string(divergences) + " divergences" +
                                first_failure};
}

// Every operation with every argument combination (illegal ones included,
// compared by error kind) on a fresh build of every permutation of n <= 6.
Outcome exhaustive_sweep() {
  std::uint64_t cases = 0, mismatches = 0;
  std::string first_failure;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Command> commands;
    const auto e = static_cast<std::int64_t>(n);
    commands.push_back({OpClass::kCycles, 0, 0});
    commands.push_back({OpClass::kOneLine, 0, 0});
    for (std::int64_t i = 1; i <= e; ++i) {
      commands.push_back({OpClass::kApply, i, 0});
      commands.push_back({OpClass::kInverse, i, 0});
      commands.push_back({OpClass::kSize, i, 0});
      for (std::int64_t k = -2 * e - 1; k <= 2 * e + 1; ++k) {
        commands.push_back({OpClass::kPower, i, k});
      }
      commands.push_back(
          {OpClass::kPower, i, std::numeric_limits<std::int64_t>::min()});
      commands.push_back(
          {OpClass::kPower, i, std::numeric_limits<std::int64_t>::max()});
      for (std::int64_t j = 1; j <= e; ++j) {
        for (OpClass op : {OpClass::kSame, OpClass::kDist,
                           OpClass::kTransposeAt, OpClass::kTransposeVal,
                           OpClass::kFlip}) {
          commands.push_back({op, i, j});
        }
      }
    }

    Permutation p = identity_permutation(n);
    do {
      for (const Command& cmd : commands) {
        auto fst = make_store(ImplKind::kFst, p);
        auto oracle = make_store(ImplKind::kOneLineInverse, p);
        const std::string got = outcome_of(*fst, cmd);
        const std::string want = outcome_of(*oracle, cmd);
        ++cases;
        if (got != want || fst->to_one_line() != oracle->to_one_line()) {
          ++mismatches;
          if (first_failure.empty()) {
            first_failure = ", first: " + format_command(cmd);
          }
        }
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return {mismatches == 0, std::to_string(cases) + " cases, " +
                               std::to_string(mismatches) + " mismatches" +
                               first_failure};
}

Outcome potential_bound() {
  Rng rng(2);
  bool ok = true;
  std::string detail;
  for (std::size_t r : {std::size_t{1} << 8, std::size_t{1} << 12,
                        std::size_t{1} << 16}) {
    const FstPermutation fst(random_cyclic_permutation(r, rng));
    const double lg = std::log2(static_cast<double>(r));
    const double bound = 2.0 * static_cast<double>(r) + 10.0 * lg * lg;
    const double phi = fst.potential();
    ok = ok && fst.num_cycles() == 1 && phi <= bound;
    detail += (detail.empty() ? "" : ", ") + std::string("r=") +
              std::to_string(r) + ": " + fmt("%.1f", phi) + " <= " +
              fmt("%.1f", bound);
  }
  return {ok, detail};
}

std::vector<double> median_build_times(
    const std::vector<Permutation>& inputs) {
  std::vector<double> medians;
  for (const Permutation& p : inputs) {
    std::vector<double> times;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      const FstPermutation fst(p);
      times.push_back(seconds_since(start));
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[2]);
  }
  return medians;
}

Outcome build_linearity() {
  const std::vector<std::size_t> sizes = {100000, 200000, 400000};
  Rng rng(3);
  std::vector<Permutation> random_cycles, shifts;
  for (std::size_t n : sizes) {
    random_cycles.push_back(random_cyclic_permutation(n, rng));
    Permutation shift(n);
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = static_cast<Element>((i + 1) % n + 1);
    }
    shifts.push_back(std::move(shift));
  }
  const std::vector<double> medians = median_build_times(random_cycles);
  std::string detail = "random cycle";
  bool ok = true;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    detail += " n=" + std::to_string(sizes[k]) + fmt(" %.3f ms", medians[k] * 1e3);
  }
  for (std::size_t k = 1; k < medians.size(); ++k) {
    const double ratio = medians[k] / medians[k - 1];
    ok = ok && ratio >= 1.5 && ratio <= 2.5;
    detail += fmt(", ratio %.3f", ratio);
  }
  // Reference only: i -> i+1 has the same work but sequential memory access.
  const std::vector<double> local = median_build_times(shifts);
  detail += "; shift cycle ratios";
  for (std::size_t k = 1; k < local.size(); ++k) {
    detail += fmt(" %.3f", local[k] / local[k - 1]);
  }
  return {ok, detail};
}

Outcome rotation_bound() {
  const std::size_t n = 100000;
  Rng rng(4);
  const Permutation p = random_cyclic_permutation(n, rng);
  const OpScript script = generate(4, n, 1000000, *named_mix("mixed"));
  auto fst = make_store(ImplKind::kFst, p);
  time_commands(*fst, script.ops);
  const Instrumentation stats = *fst->instrumentation();
  const double lg = std::log2(static_cast<double>(n));
  const double per_op =
      static_cast<double>(stats.rotations) / static_cast<double>(script.ops.size());
  const double amortized = static_cast<double>(stats.rotations) /
                           (static_cast<double>(n) + stats.log_work);
  return {per_op <= 10.0 * lg,
          fmt("%.3f rotations/op", per_op) + " <= " + fmt("%.3f", 10.0 * lg) +
              ", fitted c = rotations/(op*log2 n) = " + fmt("%.3f", per_op / lg) +
              ", rotations/(n + sum log2 s) = " + fmt("%.3f", amortized)};
}

Outcome dist_speedup() {
  const std::size_t n = 100000;
  Rng rng(5);
  const Permutation p = random_cyclic_permutation(n, rng);
  const OpScript batch = generate(5, n, 10000, single_op_mix(OpClass::kDist));
  double seconds[3];
  std::vector<std::string> answers[3];
  const ImplKind kinds[3] = {ImplKind::kFst, ImplKind::kOneLine,
                             ImplKind::kOneLineInverse};
  for (int k = 0; k < 3; ++k) {
    auto store = make_store(kinds[k], p);
    answers[k].reserve(batch.ops.size());
    const auto start = Clock::now();
    for (const Command& cmd : batch.ops) answers[k].push_back(outcome_of(*store, cmd));
    seconds[k] = seconds_since(start);
  }
  const double vs_oneline = seconds[1] / seconds[0];
  const double vs_inverse = seconds[2] / seconds[0];
  const bool agree = answers[0] == answers[1] && answers[0] == answers[2];
  return {agree && vs_oneline >= 5.0 && vs_inverse >= 5.0,
          fmt("fst %.4f s", seconds[0]) + fmt(", oneline %.3f s", seconds[1]) +
              fmt(", oneline-inv %.3f s", seconds[2]) +
              fmt(", speedups %.1fx", vs_oneline) + fmt(" / %.1fx", vs_inverse) +
              (agree ? "" : ", answers differ")};
}

Outcome flip_suite() {
  const std::size_t n = 256;
  Rng rng(6);
  std::uint64_t flips = 0, wrong = 0, not_restored = 0;
  while (flips < 10000) {
    const Permutation start = random_permutation(n, rng);
    FstPermutation fst(start);
    OneLinePlusInverseOracle oracle(start);
    for (int step = 0; step < 100 && flips < 10000; ++step, ++flips) {
      const auto i = static_cast<Element>(rng.between(1, n));
      const auto k = static_cast<std::int64_t>(rng.below(oracle.cycle_size(i)));
      const Element j = oracle.power(i, k);
      const Permutation before = fst.to_one_line();
      fst.flip(i, j);
      oracle.flip(i, j);
      if (fst.to_one_line() != oracle.to_one_line()) ++wrong;
      // After the flip the segment runs j..i.
      fst.flip(j, i);
      if (fst.to_one_line() != before) ++not_restored;
      fst.flip(i, j);
    }
    fst.forest().check_invariants();
  }
  return {wrong == 0 && not_restored == 0,
          std::to_string(flips) + " flips, " + std::to_string(wrong) +
              " mismatches, " + std::to_string(not_restored) +
              " involution failures"};
}

Outcome transposition_laws() {
  const std::size_t n = 1000;
  Rng rng(7);
  const Permutation start = random_permutation(n, rng);
  FstPermutation fst(start);
  OneLinePlusInverseOracle oracle(start);
  std::uint64_t bad_count = 0, not_restored = 0, wrong = 0, splits = 0;
  for (int step = 0; step < 10000; ++step) {
    const auto i = static_cast<Element>(rng.between(1, n));
    auto j = static_cast<Element>(rng.between(1, n - 1));
    if (j >= i) ++j;
    const Permutation before = fst.to_one_line();
    const std::size_t cycles = fst.num_cycles();
    fst.transpose_at(i, j);
    const std::size_t after = fst.num_cycles();
    if (after != cycles + 1 && after + 1 != cycles) ++bad_count;
    splits += after > cycles;
    fst.transpose_at(i, j);
    if (fst.to_one_line() != before || fst.num_cycles() != cycles) {
      ++not_restored;
    }
    fst.transpose_at(i, j);
    oracle.transpose_at(i, j);
    if (fst.to_one_line() != oracle.to_one_line()) ++wrong;
  }
  return {bad_count == 0 && not_restored == 0 && wrong == 0,
          "10000 transpositions (" + std::to_string(splits) + " splits), " +
              std::to_string(bad_count) + " count violations, " +
              std::to_string(not_restored) + " involution failures, " +
              std::to_string(wrong) + " oracle mismatches"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden examples", 1.0, goldens},
      {2, "differential fuzz n in {8,64,512}, seeds 1-10, 1e5 ops", 60.0,
       differential_fuzz},
      {3, "exhaustive sweep n <= 6", 30.0, exhaustive_sweep},
      {4, "build potential <= 2r + 10 log2(r)^2", 5.0, potential_bound},
      {5, "build time ratios in [1.5, 2.5]", 30.0, build_linearity},
      {6, "mean rotations per op <= 10 log2 n", 300.0, rotation_bound},
      {7, "dist batch >= 5x faster than both oracles", 120.0, dist_speedup},
      {8, "flip suite", 30.0, flip_suite},
      {9, "transposition involution and cycle count", 10.0,
       transposition_laws},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    const bool in_budget = elapsed < c.budget_seconds;
    const bool passed = outcome.passed && in_budget;
    failures += !passed;
    std::printf("%s %d %s: %s [%.2f s, budget %.0f s%s]\n",
                passed ? "PASS" : "FAIL", c.number, c.name,
                outcome.detail.c_str(), elapsed, c.budget_seconds,
                in_budget ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
