#pragma once

#include <cstdint>
#include <vector>

#include "coverkit/bitset.hpp"
#include "coverkit/hypergraph.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

/// Batch draws: a uniformly random ell-subset of [n] per draw.
class BatchParams {
 public:
  BatchParams(std::int64_t n, std::int64_t ell);
  std::int64_t n() const { return n_; }
  std::int64_t ell() const { return ell_; }

 private:
  std::int64_t n_;
  std::int64_t ell_;
};

/// Partial coverage target: see at least k distinct items of a fixed m-subset.
class PartialTarget {
 public:
  PartialTarget(std::int64_t m, std::int64_t k);
  std::int64_t m() const { return m_; }
  std::int64_t k() const { return k_; }

 private:
  std::int64_t m_;
  std::int64_t k_;
};

/// Required multiplicity per item; entries of 0 place no demand on that item.
class DemandVector {
 public:
  explicit DemandVector(std::vector<std::int64_t> demand);
  /// (m, m, ..., m) on n items.
  static DemandVector uniform(std::int64_t n, std::int64_t m);

  const std::vector<std::int64_t>& values() const { return demand_; }
  std::size_t size() const { return demand_.size(); }

 private:
  std::vector<std::int64_t> demand_;
};

struct RationalBounds {
  Rational lower;
  Rational upper;
};

/// Exact E[T] for full coverage under batch draws (Polya's alternating sum).
Rational polya_expected(const BatchParams& p);

/// Exact E[Z_k(A)], |A| = m: draws until k distinct items of A are seen.
Rational stadje_expected(const BatchParams& p, const PartialTarget& target);

/// Harmonic-ratio bracket on E[Z_k(A)]. Requires ell < n.
///   lower = (H_m - H_{m-k}) / (H_n - H_{n-ell})
///   upper = (H_m - H_{m-k} - 1/n) / (H_n - H_{n-ell}) + 1
RationalBounds sandwich_bounds(const BatchParams& p, const PartialTarget& target);

/// Transfers a single-draw expectation of any coverage task to ell-subset
/// draws:
///   lower = e_single / (n (H_n - H_{n-ell}))
///   upper = (e_single - 1/n) / (n (H_n - H_{n-ell})) + 1
/// Requires e_single >= 1 and ell < n.
RationalBounds normalization_bounds(const Rational& e_single, std::int64_t n, std::int64_t ell);

/// n (log n + (m - 1) log log n + gamma): single-draw time to see every item m
/// times, leading terms. Requires n >= 3.
double dixie_asymptotic(std::int64_t n, std::int64_t m);

/// (n / ell)(log n + 1): bound on E[T] over every uniform ell-regular model.
double universal_upper(std::int64_t n, std::int64_t ell);

/// All ell-subsets of [n] in lexicographic order of their sorted elements.
std::vector<BitSet> all_subsets_of_size(std::int64_t n, std::int64_t ell);

/// The batch hypergraph (all ell-subsets as edges). Throws CapacityError when
/// C(n, ell) exceeds caps.max_model_edges.
CoverageModel build_batch_model(const BatchParams& p, const EnumerationCaps& caps = {});

}  // namespace coverkit
