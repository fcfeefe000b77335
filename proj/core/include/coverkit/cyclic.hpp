#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coverkit/hypergraph.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

/// Cyclic windows on Z_n: n windows {i, ..., i + ell - 1} mod n.
class CyclicParams {
 public:
  CyclicParams(std::int64_t n, std::int64_t ell);
  std::int64_t n() const { return n_; }
  std::int64_t ell() const { return ell_; }

 private:
  std::int64_t n_;
  std::int64_t ell_;
};

/// Cyclic windows whose starts are restricted to multiples of d, d | ell | n.
class DeltaDParams {
 public:
  DeltaDParams(std::int64_t n, std::int64_t ell, std::int64_t d);
  std::int64_t n() const { return n_; }
  std::int64_t ell() const { return ell_; }
  std::int64_t d() const { return d_; }

 private:
  std::int64_t n_;
  std::int64_t ell_;
  std::int64_t d_;
};

/// Size-s cyclic recovery sets whose start set contains 0:
/// [x^{n-s}] (1 + x + ... + x^{ell-1})^s. Requires 1 <= s <= n.
BigInt beta_cyclic(const CyclicParams& p, std::int64_t s);

/// All size-s cyclic recovery sets, n * beta(s) / s. Throws ConsistencyError
/// if s does not divide n * beta(s).
BigInt alpha_cyclic(const CyclicParams& p, std::int64_t s);

/// Exact E[T] for cyclic windows; ell == n returns 1.
Rational expected_cyclic(const CyclicParams& p);

/// The ell = 2 specialisation, with alpha(s) = C(s-1, n-s-1) + C(s, n-s).
/// Requires n >= 2.
Rational expected_cyclic_l2(std::int64_t n);

/// The Delta-d model is the cyclic model on (n/d, ell/d).
Rational expected_delta_d(const DeltaDParams& p);

/// (d, E[T_d]) for every divisor d of ell, in increasing d. Each value must not
/// exceed expected_cyclic(n, ell); a violation throws ConsistencyError.
/// Requires ell | n.
std::vector<std::pair<std::int64_t, Rational>> check_delta_monotonicity(std::int64_t n,
                                                                        std::int64_t ell);

/// floor(n/ell) * H_{floor(n/ell)}: covering ell-spaced representatives is a
/// coupon collector problem.
Rational cyclic_lower_bound(const CyclicParams& p);

/// Explicit cyclic window hypergraph (a single edge when ell == n).
CoverageModel cyclic_model(const CyclicParams& p);

/// Explicit Delta-d hypergraph on [n].
CoverageModel delta_d_model(const DeltaDParams& p);

}  // namespace coverkit
