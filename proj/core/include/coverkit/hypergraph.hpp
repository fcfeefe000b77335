#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coverkit/bitset.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

/// Limits on the brute-force oracles. Both are exponential in their bound.
struct EnumerationCaps {
  std::size_t max_edges = 22;     // recovery_profile scans 2^edges subsets
  std::size_t max_vertices = 20;  // expected_coverage_ie scans 2^vertices subsets
  std::size_t max_model_edges = std::size_t{1} << 16;  // largest explicit model a builder emits
  std::size_t workers = 0;        // 0 = default_worker_count()
};

/// A covering hypergraph: every draw picks one of the edges uniformly.
///
/// Invariants (checked on construction): at least one vertex, every edge is
/// non-empty and lives in the vertex universe, the edges are pairwise
/// distinct as sets, and their union is the whole vertex set.
class CoverageModel {
 public:
  CoverageModel(std::size_t n_vertices, std::vector<BitSet> edges);

  static CoverageModel from_lists(std::size_t n_vertices,
                                  const std::vector<std::vector<std::size_t>>& edges);

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<BitSet>& edges() const { return edges_; }
  const BitSet& edge(std::size_t i) const { return edges_.at(i); }

  /// Number of edges containing vertex v.
  std::size_t degree(std::size_t v) const;
  std::size_t max_edge_size() const;

 private:
  std::size_t n_vertices_;
  std::vector<BitSet> edges_;
};

/// Everything the recovery-set expectation formula needs: the edge count N,
/// the largest non-recovery subset size M, and alpha[s] = number of size-s
/// recovery sets for s = 0..M.
struct RecoveryProfile {
  std::size_t n_edges = 0;
  std::size_t max_non_recovery = 0;
  std::vector<BigInt> alpha;

  /// Throws InputError unless the profile is internally consistent
  /// (alpha length, alpha(s) <= C(N,s), upward closure).
  void validate() const;

  friend bool operator==(const RecoveryProfile&, const RecoveryProfile&) = default;
};

/// True iff the union of the selected edges is the full vertex set.
bool is_recovery_set(const CoverageModel& model, std::span<const std::size_t> edge_indices);

/// Counts recovery sets of every size by enumerating all 2^N edge subsets.
/// Throws CapacityError when N exceeds caps.max_edges.
RecoveryProfile recovery_profile(const CoverageModel& model, const EnumerationCaps& caps = {});

/// E[T] = N (H_N - H_{N-M-1}) - sum_{s=0}^{M} alpha(s) / C(N-1, s).
Rational expected_coverage_exact(const RecoveryProfile& profile);

/// Independent route: E[T] = sum over non-empty vertex sets S of
/// (-1)^{|S|+1} N / deg(S), deg(S) = number of edges meeting S.
/// Throws CapacityError when the vertex count exceeds caps.max_vertices.
Rational expected_coverage_ie(const CoverageModel& model, const EnumerationCaps& caps = {});

/// Singletons on n vertices.
CoverageModel coupon_collector_model(std::size_t n);

/// Vertices {0,1}^d (as integers), one edge per center: the radius-t Hamming ball.
CoverageModel build_hamming_model(unsigned d, unsigned t, const EnumerationCaps& caps = {});

}  // namespace coverkit
