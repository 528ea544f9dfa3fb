#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cyclefst/splay_forest.hpp"
#include "cyclefst/types.hpp"

namespace cyclefst {

// Runtime-polymorphic view of a dynamic permutation, shared by the FST and
// the reference oracles so that the CLI and the differential harness can
// drive any of them.
class PermutationStore {
 public:
  virtual ~PermutationStore() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t size() const = 0;

  virtual Element apply(Element i) = 0;
  virtual Element inverse(Element j) = 0;
  virtual Element power(Element i, std::int64_t k) = 0;
  virtual std::size_t num_cycles() = 0;
  virtual std::size_t cycle_size(Element i) = 0;
  virtual bool same_cycle(Element i, Element j) = 0;
  virtual Distance distance(Element i, Element j) = 0;
  virtual void transpose_at(Element i, Element j) = 0;
  virtual void transpose_values(Element i, Element j) = 0;
  virtual void flip(Element i, Element j) = 0;
  virtual Permutation to_one_line() = 0;

  // Splay counters, for implementations that have them.
  virtual std::optional<Instrumentation> instrumentation() const {
    return std::nullopt;
  }
  virtual std::optional<double> potential() const { return std::nullopt; }
};

enum class ImplKind { kFst, kOneLine, kOneLineInverse };

// "fst", "oneline", "oneline-inv".
std::string_view impl_name(ImplKind kind);
std::optional<ImplKind> parse_impl(std::string_view name);

std::unique_ptr<PermutationStore> make_store(ImplKind kind,
                                             std::span<const Element> one_line);

// Wraps a store and perturbs the answer of its `fault_at`-th call (0-based,
// counting every call) so that harness self-tests can check divergence
// detection.
std::unique_ptr<PermutationStore> make_corrupted_store(
    std::unique_ptr<PermutationStore> inner, std::uint64_t fault_at);

}  // namespace cyclefst
