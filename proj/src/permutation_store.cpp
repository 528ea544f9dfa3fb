#include "cyclefst/permutation_store.hpp"

#include <utility>

#include "cyclefst/fst.hpp"
#include "cyclefst/oracle.hpp"

namespace cyclefst {

namespace {

template <typename Impl>
class StoreModel final : public PermutationStore {
 public:
  StoreModel(std::string_view name, std::span<const Element> one_line)
      : name_(name), impl_(one_line) {}

  std::string_view name() const override { return name_; }
  std::size_t size() const override { return impl_.size(); }
  Element apply(Element i) override { return impl_.apply(i); }
  Element inverse(Element j) override { return impl_.inverse(j); }
  Element power(Element i, std::int64_t k) override {
    return impl_.power(i, k);
  }
  std::size_t num_cycles() override { return impl_.num_cycles(); }
  std::size_t cycle_size(Element i) override { return impl_.cycle_size(i); }
  bool same_cycle(Element i, Element j) override {
    return impl_.same_cycle(i, j);
  }
  Distance distance(Element i, Element j) override {
    return impl_.distance(i, j);
  }
  void transpose_at(Element i, Element j) override {
    impl_.transpose_at(i, j);
  }
  void transpose_values(Element i, Element j) override {
    impl_.transpose_values(i, j);
  }
  void flip(Element i, Element j) override { impl_.flip(i, j); }
  Permutation to_one_line() override { return impl_.to_one_line(); }

  std::optional<Instrumentation> instrumentation() const override {
    if constexpr (requires { impl_.instrumentation(); }) {
      return impl_.instrumentation();
    } else {
      return std::nullopt;
    }
  }
  std::optional<double> potential() const override {
    if constexpr (requires { impl_.potential(); }) {
      return impl_.potential();
    } else {
      return std::nullopt;
    }
  }

 private:
  std::string_view name_;
  Impl impl_;
};

class CorruptedStore final : public PermutationStore {
 public:
  CorruptedStore(std::unique_ptr<PermutationStore> inner, std::uint64_t at)
      : inner_(std::move(inner)), fault_at_(at) {}

  std::string_view name() const override { return inner_->name(); }
  std::size_t size() const override { return inner_->size(); }

  Element apply(Element i) override { return nudge(inner_->apply(i)); }
  Element inverse(Element j) override { return nudge(inner_->inverse(j)); }
  Element power(Element i, std::int64_t k) override {
    return nudge(inner_->power(i, k));
  }
  std::size_t num_cycles() override {
    return tick() ? inner_->num_cycles() + 1 : inner_->num_cycles();
  }
  std::size_t cycle_size(Element i) override {
    return tick() ? inner_->cycle_size(i) + 1 : inner_->cycle_size(i);
  }
  bool same_cycle(Element i, Element j) override {
    return tick() != inner_->same_cycle(i, j);
  }
  Distance distance(Element i, Element j) override {
    const Distance d = inner_->distance(i, j);
    if (!tick()) return d;
    return d.is_infinite() ? Distance(0) : Distance::infinite();
  }
  void transpose_at(Element i, Element j) override {
    // A faulty update skips the mutation entirely.
    if (!tick()) inner_->transpose_at(i, j);
  }
  void transpose_values(Element i, Element j) override {
    if (!tick()) inner_->transpose_values(i, j);
  }
  void flip(Element i, Element j) override {
    if (!tick()) inner_->flip(i, j);
  }
  Permutation to_one_line() override { return inner_->to_one_line(); }

  std::optional<Instrumentation> instrumentation() const override {
    return inner_->instrumentation();
  }
  std::optional<double> potential() const override {
    return inner_->potential();
  }

 private:
  bool tick() { return calls_++ == fault_at_; }
  Element nudge(Element v) {
    if (!tick()) return v;
    const auto n = static_cast<Element>(size());
    return v % n + 1;
  }

  std::unique_ptr<PermutationStore> inner_;
  std::uint64_t fault_at_;
  std::uint64_t calls_ = 0;
};

}  // namespace

std::string_view impl_name(ImplKind kind) {
  switch (kind) {
    case ImplKind::kFst:
      return "fst";
    case ImplKind::kOneLine:
      return "oneline";
    case ImplKind::kOneLineInverse:
      return "oneline-inv";
  }
  return "unknown";
}

std::optional<ImplKind> parse_impl(std::string_view name) {
  for (ImplKind kind :
       {ImplKind::kFst, ImplKind::kOneLine, ImplKind::kOneLineInverse}) {
    if (impl_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::unique_ptr<PermutationStore> make_store(
    ImplKind kind, std::span<const Element> one_line) {
  switch (kind) {
    case ImplKind::kFst:
      return std::make_unique<StoreModel<FstPermutation>>(impl_name(kind),
                                                          one_line);
    case ImplKind::kOneLine:
      return std::make_unique<StoreModel<OneLineOracle>>(impl_name(kind),
                                                         one_line);
    case ImplKind::kOneLineInverse:
      return std::make_unique<StoreModel<OneLinePlusInverseOracle>>(
          impl_name(kind), one_line);
  }
  return nullptr;
}

std::unique_ptr<PermutationStore> make_corrupted_store(
    std::unique_ptr<PermutationStore> inner, std::uint64_t fault_at) {
  return std::make_unique<CorruptedStore>(std::move(inner), fault_at);
}

}  // namespace cyclefst
