#pragma once

#include <cstdint>

#include "coverkit/hypergraph.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

/// Non-cyclic windows on [n]: the n - ell + 1 intervals [i, i + ell - 1].
class WindowsParams {
 public:
  WindowsParams(std::int64_t n, std::int64_t ell);

  std::int64_t n() const { return n_; }
  std::int64_t ell() const { return ell_; }
  /// Number of windows, n - ell + 1.
  std::int64_t window_count() const { return n_ - ell_ + 1; }

 private:
  std::int64_t n_;
  std::int64_t ell_;
};

/// Number of size-s recovery sets among the windows (0 <= s <= n - ell).
/// A recovery set must contain both extreme windows; the count is the
/// coefficient of x^{n-ell-s+1} in (1 + x + ... + x^{ell-1})^{s-1}.
BigInt alpha_windows(const WindowsParams& p, std::int64_t s);

/// Exact E[T] via the recovery-set formula with the closed-form alpha.
/// ell == n is the single-window model and returns 1.
Rational expected_windows(const WindowsParams& p);

/// The rearranged closed form 3/2 (n-ell+1) + double alternating sum.
/// Requires n > ell.
Rational expected_windows_altform(const WindowsParams& p);

/// 3/2 (n - ell + 1); requires n/2 <= ell < n.
Rational expected_windows_large(const WindowsParams& p);

/// 3/2 (n-ell+1) + (n-ell+1)(6n - 10 ell) / (ell (ell+1) (ell+2) (ell+3));
/// requires n/3 <= ell < n/2.
Rational expected_windows_third(const WindowsParams& p);

/// Expected remaining draws of the layered chain used for n/3 <= ell < n/2:
/// `uncovered_middle` contiguous middle positions are still unseen and
/// `extremes_seen` of the two extreme windows have been drawn.
Rational markov_middle_expectation(const WindowsParams& p, std::int64_t uncovered_middle,
                                   int extremes_seen);

struct WindowsBounds {
  Rational lower;
  double upper;
};

/// lower = max{3/2 (n-ell+1), m H_m} with m = floor((n-ell+1)/ell);
/// upper = 3/2 (n-ell+1) + E[arc coverage time at a = ell/(n-ell+1)]
/// (the arc term vanishes when the middle is empty). Requires ell < n.
WindowsBounds windows_bounds(const WindowsParams& p);

/// E[T] - 3/2 (n - ell + 1), for ell >= n / c with c > 1.
Rational large_ell_residual(const WindowsParams& p, const Rational& c);

/// Explicit window hypergraph, for cross-checking against the core oracles.
CoverageModel windows_model(const WindowsParams& p);

}  // namespace coverkit
