#pragma once

#include "rtint/lie.hpp"
#include "rtint/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rtint {

struct FoldResult {
  int sign = 1;
  Weight weight;
};

/// Dot-action fold into the dominant chamber by simple reflections. Empty when
/// x + rho is orthogonal to some simple root (x is fixed by a dot reflection).
std::optional<FoldResult> finite_fold(const RootSystem& rs, Weight x);

/// Fold a root-lattice weight into the alcove C_r under the affine dot action.
/// Empty on any wall. Throws ArithmeticError after `max_steps` reflections.
std::optional<FoldResult> affine_fold(const RootSystem& rs, Weight x, int r, int max_steps = 100000);

/// -w_0(lambda): plain-action fold of -lambda.
Weight dual_label(const RootSystem& rs, const Weight& lambda);

/// Multiplicities N_{lambda mu}^nu in the semisimple quotient, by the
/// Kac-Walton sum over the character of the smaller factor.
std::map<Weight, long> fusion(const RootSystem& rs, int r, const Weight& lambda, const Weight& mu);

/// Full fusion tensor over alcove_labels(rs, r). Construction verifies unit,
/// commutativity, associativity, duality and closure, and throws
/// ArithmeticError if any of them fails.
class FusionTable {
 public:
  FusionTable(RootSystem rs, int r);
  /// Rebuild from stored entries (cache path); verified like a fresh table.
  static FusionTable from_entries(RootSystem rs, int r, std::vector<Weight> labels, std::vector<long> entries);

  const RootSystem& root_system() const noexcept { return rs_; }
  int r() const noexcept { return r_; }
  const std::vector<Weight>& labels() const noexcept { return labels_; }
  size_t size() const noexcept { return labels_.size(); }
  /// Index of a label; throws HypothesisError if absent.
  size_t index_of(const Weight& w) const;
  std::optional<size_t> find(const Weight& w) const;

  long N(size_t i, size_t j, size_t k) const { return entries_[(i * size() + j) * size() + k]; }
  const std::vector<long>& entries() const noexcept { return entries_; }
  size_t dual(size_t i) const { return duals_.at(i); }

  Report verify() const;

 private:
  FusionTable(RootSystem rs, int r, std::vector<Weight> labels, std::vector<long> entries);
  void finish();

  RootSystem rs_;
  int r_;
  std::vector<Weight> labels_;
  std::map<Weight, size_t> index_;
  std::vector<long> entries_;
  std::vector<size_t> duals_;
};

FusionTable fusion_table(const RootSystem& rs, int r);

}  // namespace rtint
