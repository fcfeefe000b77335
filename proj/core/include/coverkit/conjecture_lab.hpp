#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coverkit/hypergraph.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

/// Largest candidate-edge count C(n, l) the enumeration accepts.
inline constexpr std::size_t kLabMaxCandidates = 24;

struct UniformRegularModel {
  CoverageModel model;
  std::int64_t degree;
  std::int64_t ell;
  /// Bit i set iff the i-th l-subset of [n] (lexicographic order) is an edge.
  std::uint64_t edges_mask;
};

/// Every covering, l-uniform, regular edge set over [n], labeled, sorted by
/// edges_mask.
std::vector<UniformRegularModel> enumerate_uniform_regular(std::int64_t n, std::int64_t ell);

struct LabEntry {
  std::uint64_t edges_mask;
  std::int64_t degree;
  std::size_t n_edges;
  Rational expectation;
};

/// Enumerates and evaluates every model. Throws ConsistencyError if any
/// expectation exceeds universal_upper(n, l).
std::vector<LabEntry> evaluate_uniform_regular(std::int64_t n, std::int64_t ell);

struct PairViolation {
  std::uint64_t smaller_mask;
  std::uint64_t larger_mask;
  Rational smaller_expectation;
  Rational larger_expectation;
};

struct MonotonicityReport {
  std::size_t nested_pairs = 0;
  std::vector<PairViolation> nested_violations;
  std::size_t cardinality_pairs = 0;        // pairs with strictly fewer edges
  std::size_t cardinality_violations = 0;   // of those, the smaller has larger E
  std::vector<PairViolation> cardinality_examples;  // first few, by mask order
};

struct BatchMaxReport {
  Rational batch_expectation;
  Rational max_expectation;
  std::uint64_t argmax_mask = 0;
  std::vector<std::uint64_t> exceeding;  // masks with E above the batch value
  bool holds() const { return exceeding.empty(); }
};

struct LowerReport {
  Rational bound;  // floor(n/l) H_floor(n/l)
  Rational min_expectation;
  std::uint64_t argmin_mask = 0;
  std::vector<std::uint64_t> below;  // masks with E under the bound
  /// When l | n: whether every disjoint partition (degree 1) attains the bound.
  std::optional<bool> partition_attains;
  bool holds() const { return below.empty(); }
};

MonotonicityReport test_conjecture_monotonicity(const std::vector<LabEntry>& entries);
BatchMaxReport test_conjecture_batch_max(std::int64_t n, std::int64_t ell, const std::vector<LabEntry>& entries);
LowerReport test_conjecture_lower(std::int64_t n, std::int64_t ell, const std::vector<LabEntry>& entries);

MonotonicityReport test_conjecture_monotonicity(std::int64_t n, std::int64_t ell);
BatchMaxReport test_conjecture_batch_max(std::int64_t n, std::int64_t ell);
LowerReport test_conjecture_lower(std::int64_t n, std::int64_t ell);

struct LabReport {
  std::int64_t n;
  std::int64_t ell;
  double universal_upper;
  std::vector<LabEntry> entries;
  MonotonicityReport monotonicity;
  BatchMaxReport batch_max;
  LowerReport lower;
};

LabReport run_lab(std::int64_t n, std::int64_t ell);

/// Per-model verdict lines: edges_bitmask,degree,num/den,verdicts
/// with verdicts joined by '|'.
void write_verdicts(std::ostream& out, const LabReport& report);

}  // namespace coverkit
