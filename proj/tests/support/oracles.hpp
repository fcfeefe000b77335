#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coverkit/coverkit.hpp"

namespace coverkit::oracle {

/// E[T] by first-step analysis over covered-vertex sets (n_vertices <= 20).
Rational markov_expectation(const CoverageModel& model);

/// Size-indexed recovery-set counts by direct union over every edge subset
/// (n_edges <= 20). Entry s counts the size-s recovery sets, s = 0..N.
std::vector<BigInt> naive_recovery_counts(const CoverageModel& model);

/// Size-s subsets of cyclic window starts that contain start 0 and cover Z_n.
BigInt naive_anchored_cyclic(std::int64_t n, std::int64_t ell, std::int64_t s);

/// Expected draws to absorption of the layered middle-position chain,
/// from state (i, k), solved by direct first-step recursion.
Rational layered_chain_expectation(std::int64_t n, std::int64_t ell, std::int64_t i, int k);

/// Expected batch draws to see k distinct items of a fixed m-subset, by an
/// absorbing chain over |seen items of the subset|.
Rational partial_target_chain(std::int64_t n, std::int64_t ell, std::int64_t m, std::int64_t k);

/// Random covering model: every vertex lies in some edge, edges distinct.
CoverageModel random_covering_model(std::mt19937_64& rng, std::size_t n_vertices, std::size_t n_edges);

}  // namespace coverkit::oracle
